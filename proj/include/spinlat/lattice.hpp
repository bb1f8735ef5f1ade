#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "spinlat/linalg.hpp"
#include "spinlat/rational.hpp"

namespace spinlat {

using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;

/// Even integral lattice given by its Gram matrix.
struct Lattice {
    IntMat gram;

    Lattice() = default;
    explicit Lattice(IntMat g) : gram(std::move(g)) { validate(); }

    std::size_t rank() const { return gram.size(); }

    void validate() const {
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (gram[i].size() != gram.size())
                throw std::invalid_argument("Gram matrix must be square");
            if (gram[i][i] % 2 != 0)
                throw std::invalid_argument("lattice must be even (even diagonal)");
            for (std::size_t j = 0; j < gram.size(); ++j)
                if (gram[i][j] != gram[j][i])
                    throw std::invalid_argument("Gram matrix must be symmetric");
        }
    }

    Rat inner(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
        Rat s(0);
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) s += u[i] * Rat(gram[i][j]) * v[j];
        return s;
    }
};

/// Hyperbolic plane U = [[0,1],[1,0]].
inline Lattice make_u() { return Lattice({{Int(0), Int(1)}, {Int(1), Int(0)}}); }

/// Rank-one lattice [2n], n nonzero.
inline Lattice make_rank1(const Int& two_n) {
    if (two_n == 0) throw std::invalid_argument("rank1 lattice must be nondegenerate");
    return Lattice({{two_n}});
}

/// Standard positive-definite E8 Gram matrix (Cartan matrix of E8).
inline Lattice make_e8() {
    // Branch node 0; arms 0-1, 0-2-3, 0-4-5-6-7.
    IntMat g(8, IntVec(8, Int(0)));
    for (int i = 0; i < 8; ++i) g[i][i] = 2;
    auto edge = [&](int a, int b) { g[a][b] = -1; g[b][a] = -1; };
    edge(0, 1);
    edge(0, 2); edge(2, 3);
    edge(0, 4); edge(4, 5); edge(5, 6); edge(6, 7);
    return Lattice(g);
}

inline Lattice make_standard(const std::string& name, const Int& param = Int(0)) {
    if (name == "U") return make_u();
    if (name == "E8") return make_e8();
    if (name == "rank1") return make_rank1(param);
    throw std::invalid_argument("unknown lattice name: " + name);
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
    std::size_t n = a.rank(), m = b.rank();
    IntMat g(n + m, IntVec(n + m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = a.gram[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram[i][j];
    return Lattice(g);
}

inline Lattice negate(const Lattice& a) {
    IntMat g = a.gram;
    for (auto& row : g)
        for (auto& x : row) x = -x;
    return Lattice(g);
}

/// U + U + U + E8 + E8; e, f are indices 0, 1 of the first hyperbolic copy.
inline Lattice make_k3_lattice() {
    Lattice u = make_u(), e8 = make_e8();
    return direct_sum(direct_sum(direct_sum(direct_sum(u, u), u), e8), e8);
}

struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
};

/// Exact inertia by congruence diagonalization over Q.
inline Signature signature(const Lattice& a) {
    std::size_t n = a.rank();
    Mat<Rat> m(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a.gram[i][j]);
    Inertia in = sym_inertia(std::move(m));
    return Signature{in.positive, in.negative, in.zero};
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_int(IntMat m) {
    std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Integer kernel of a single linear functional w (as row vector): returns
/// (r-1) x r basis when w != 0, via a unimodular column reduction.
inline IntMat kernel_of_functional(const IntVec& w) {
    std::size_t r = w.size();
    IntMat v(r, IntVec(r, Int(0)));  // columns of V, stored row-major as V[i][j]
    for (std::size_t i = 0; i < r; ++i) v[i][i] = 1;
    IntVec row = w;
    // Column-reduce row to (g, 0, ..., 0) with the same column ops applied to V.
    std::size_t piv = r;
    for (std::size_t j = 0; j < r; ++j)
        if (row[j] != 0) { piv = j; break; }
    if (piv == r) throw std::invalid_argument("zero functional");
    if (piv != 0) {
        std::swap(row[0], row[piv]);
        for (std::size_t i = 0; i < r; ++i) std::swap(v[i][0], v[i][piv]);
    }
    for (std::size_t j = 1; j < r; ++j) {
        while (row[j] != 0) {
            Int q = row[0] / row[j];
            row[0] -= q * row[j];
            for (std::size_t i = 0; i < r; ++i) v[i][0] -= q * v[i][j];
            std::swap(row[0], row[j]);
            for (std::size_t i = 0; i < r; ++i) std::swap(v[i][0], v[i][j]);
        }
    }
    IntMat basis(r - 1, IntVec(r));
    for (std::size_t j = 1; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) basis[j - 1][i] = v[i][j];
    return basis;
}

/// Orthogonal complement of a primitive vector v, with the restricted Gram.
inline Lattice orthogonal_complement(const Lattice& a, const IntVec& v) {
    std::size_t r = a.rank();
    if (v.size() != r) throw std::invalid_argument("vector size mismatch");
    bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (zero) throw std::invalid_argument("vector must be nonzero");
    Int g(0);
    for (const auto& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g != 1) throw std::invalid_argument("vector must be primitive");
    IntVec w(r, Int(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) w[i] += a.gram[i][j] * v[j];
    IntMat basis = kernel_of_functional(w);
    std::size_t k = basis.size();
    IntMat ng(k, IntVec(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Int s(0);
            for (std::size_t p = 0; p < r; ++p)
                for (std::size_t q = 0; q < r; ++q) s += basis[i][p] * a.gram[p][q] * basis[j][q];
            ng[i][j] = s;
        }
    return Lattice(ng);
}

/// L_{2d} = (e - d f)^perp in U^3 + E8^2 (psi convention, signature (19,2)).
inline Lattice make_l2d(const Int& d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    Lattice amb = make_k3_lattice();
    IntVec v(22, Int(0));
    v[0] = 1;
    v[1] = -d;
    return orthogonal_complement(amb, v);
}

/// Smith normal form: returns D (diagonal entries), with unimodular U, Uinv, V
/// such that U * A * V = D and Uinv = U^{-1}.
struct SmithResult {
    IntVec diag;
    IntMat u, uinv, v;
};

inline SmithResult smith_normal_form(IntMat a) {
    std::size_t n = a.size();
    SmithResult res;
    res.u = IntMat(n, IntVec(n, Int(0)));
    res.uinv = IntMat(n, IntVec(n, Int(0)));
    res.v = IntMat(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) res.u[i][i] = res.uinv[i][i] = res.v[i][i] = 1;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(res.uinv[k][i], res.uinv[k][j]);
    };
    auto row_add = [&](std::size_t i, std::size_t j, const Int& c) {  // row i += c * row j
        for (std::size_t k = 0; k < n; ++k) a[i][k] += c * a[j][k];
        for (std::size_t k = 0; k < n; ++k) res.u[i][k] += c * res.u[j][k];
        for (std::size_t k = 0; k < n; ++k) res.uinv[k][j] -= c * res.uinv[k][i];
    };
    auto row_neg = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) a[i][k] = -a[i][k];
        for (std::size_t k = 0; k < n; ++k) res.u[i][k] = -res.u[i][k];
        for (std::size_t k = 0; k < n; ++k) res.uinv[k][i] = -res.uinv[k][i];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
        for (std::size_t k = 0; k < n; ++k) std::swap(res.v[k][i], res.v[k][j]);
    };
    auto col_add = [&](std::size_t i, std::size_t j, const Int& c) {  // col i += c * col j
        for (std::size_t k = 0; k < n; ++k) a[k][i] += c * a[k][j];
        for (std::size_t k = 0; k < n; ++k) res.v[k][i] += c * res.v[k][j];
    };
    auto col_neg = [&](std::size_t i) {
        for (std::size_t k = 0; k < n; ++k) a[k][i] = -a[k][i];
        for (std::size_t k = 0; k < n; ++k) res.v[k][i] = -res.v[k][i];
    };

    for (std::size_t t = 0; t < n; ++t) {
        // find a nonzero pivot in the remaining block
        std::size_t pi = n, pj = n;
        for (std::size_t i = t; i < n && pi == n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == n) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                row_add(i, t, -q);
                if (a[i][t] != 0) { row_swap(t, i); again = true; }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_add(j, t, -q);
                if (a[t][j] != 0) { col_swap(t, j); again = true; }
            }
        }
        if (a[t][t] < 0) row_neg(t);
    }
    // enforce divisibility d1 | d2 | ...
    for (std::size_t t = 0; t + 1 < n; ++t) {
        for (std::size_t s = t + 1; s < n; ++s) {
            if (a[s][s] % a[t][t] == 0) continue;
            // fold a[s][s] into the pivot position and re-reduce
            col_add(t, s, Int(1));
            bool again = true;
            while (again) {
                again = false;
                if (a[s][t] != 0) {
                    Int q = a[s][t] / a[t][t];
                    row_add(s, t, -q);
                    if (a[s][t] != 0) { row_swap(t, s); again = true; }
                }
                if (a[t][s] != 0) {
                    Int q = a[t][s] / a[t][t];
                    col_add(s, t, -q);
                    if (a[t][s] != 0) { col_swap(t, s); again = true; }
                }
            }
            if (a[t][t] < 0) row_neg(t);
            if (a[s][s] < 0) row_neg(s);
        }
    }
    res.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.diag[i] = a[i][i];
    return res;
}

enum class PairingConvention { Psi, Borcherds };

/// Finite quadratic form on the discriminant group M^dual / M.
struct DiscriminantForm {
    std::vector<Int> cyclic_orders;            // invariant factors > 1, ascending
    std::vector<std::vector<Rat>> generators;  // dual vectors in lattice coordinates
    PairingConvention convention = PairingConvention::Psi;
    Mat<Rat> gram_q;  // ambient Gram with convention sign applied, as rationals

    Int group_order() const {
        Int o(1);
        for (const auto& d : cyclic_orders) o *= d;
        return o;
    }

    std::vector<Rat> element(const std::vector<Int>& exps) const {
        std::size_t r = gram_q.size();
        std::vector<Rat> v(r, Rat(0));
        for (std::size_t g = 0; g < generators.size(); ++g)
            for (std::size_t i = 0; i < r; ++i) v[i] += Rat(exps[g]) * generators[g][i];
        return v;
    }

    /// b(x, y) = (x, y) mod Z.
    Rat b_value(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
        Rat s(0);
        std::size_t r = gram_q.size();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s += x[i] * gram_q[i][j] * y[j];
        return rat_mod1(s);
    }

    /// q(x) = (x, x)/2 mod Z.
    Rat q_value(const std::vector<Rat>& x) const {
        Rat s(0);
        std::size_t r = gram_q.size();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) s += x[i] * gram_q[i][j] * x[j];
        return rat_mod1(s / 2);
    }
};

/// Discriminant group and form. The Borcherds convention applies
/// (x, y) = -psi(x, y) before computing q and b. For a cyclic group the
/// generator is normalized to the unit multiple with the smallest q value
/// in [0, 1); for L_{2d} in the psi convention this pins q(gen) = 1/(4d).
inline DiscriminantForm discriminant_form(const Lattice& a, PairingConvention conv) {
    std::size_t r = a.rank();
    Int det = det_int(a.gram);
    if (det == 0) throw std::invalid_argument("degenerate Gram matrix");
    SmithResult snf = smith_normal_form(a.gram);

    DiscriminantForm df;
    df.convention = conv;
    df.gram_q = Mat<Rat>(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            df.gram_q[i][j] = conv == PairingConvention::Borcherds ? Rat(-a.gram[i][j])
                                                                   : Rat(a.gram[i][j]);

    // Solve G * gamma = x over Q for each generator x = Uinv * e_t with d_t > 1.
    Mat<Rat> gq(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gq[i][j] = Rat(a.gram[i][j]);
    for (std::size_t t = 0; t < r; ++t) {
        Int d = snf.diag[t];
        if (d <= 1) continue;
        df.cyclic_orders.push_back(d);
        std::vector<Rat> x(r);
        for (std::size_t i = 0; i < r; ++i) x[i] = Rat(snf.uinv[i][t]);
        auto sol = solve(gq, x);
        if (!sol) throw std::logic_error("dual generator solve failed");
        df.generators.push_back(*sol);
    }
    std::sort(df.cyclic_orders.begin(), df.cyclic_orders.end());

    // Canonical generator for cyclic groups: smallest q among unit multiples.
    if (df.cyclic_orders.size() == 1) {
        Int n = df.cyclic_orders[0];
        std::vector<Rat> best = df.generators[0];
        Rat bestq = df.q_value(best);
        for (Int k = 2; k < n; ++k) {
            if (boost::multiprecision::gcd(k, n) != 1) continue;
            std::vector<Rat> cand(r);
            for (std::size_t i = 0; i < r; ++i) cand[i] = Rat(k) * df.generators[0][i];
            Rat q = df.q_value(cand);
            if (q < bestq) { bestq = q; best = cand; }
        }
        df.generators[0] = best;
    }
    return df;
}

}  // namespace spinlat
