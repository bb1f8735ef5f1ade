#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <memory>
#include <vector>

#include "spinlat/fp.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/linalg.hpp"

namespace spinlat {

/// Quadratic space over an exact field K: Gram matrix of the symmetric
/// bilinear form psi, with q(v) = psi(v, v).
template <class K>
struct QuadSpace {
    Mat<K> gram;

    std::size_t rank() const { return gram.size(); }

    K psi(const std::vector<K>& u, const std::vector<K>& v) const {
        K s(0);
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) s += u[i] * gram[i][j] * v[j];
        return s;
    }

    friend bool operator==(const QuadSpace& a, const QuadSpace& b) { return a.gram == b.gram; }
};

inline std::shared_ptr<const QuadSpace<Rat>> quad_space_q(const Lattice& lat) {
    auto qs = std::make_shared<QuadSpace<Rat>>();
    std::size_t r = lat.rank();
    qs->gram = Mat<Rat>(r, std::vector<Rat>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) qs->gram[i][j] = Rat(lat.gram[i][j]);
    return qs;
}

inline std::shared_ptr<const QuadSpace<Fp>> quad_space_fp(const Lattice& lat, int64_t p) {
    if (p < 5) throw std::invalid_argument("prime field characteristic must be >= 5");
    auto qs = std::make_shared<QuadSpace<Fp>>();
    std::size_t r = lat.rank();
    qs->gram = Mat<Fp>(r, std::vector<Fp>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            qs->gram[i][j] = Fp(lat.gram[i][j].convert_to<int64_t>(), p);
    return qs;
}

/// Element of Cl(M, q) in the canonical basis of strictly increasing
/// monomials, indexed by subset bitmask. Sparse; zero coefficients are
/// never stored. Immutable value semantics.
template <class K>
class CliffordElement {
  public:
    using Base = std::shared_ptr<const QuadSpace<K>>;
    using Terms = std::map<uint32_t, K>;

    CliffordElement() = default;
    CliffordElement(Base base, Terms terms) : base_(std::move(base)), terms_(std::move(terms)) {
        prune();
    }

    static CliffordElement scalar(Base base, K c) {
        Terms t;
        if (!(c == K(0))) t[0] = std::move(c);
        return CliffordElement(std::move(base), std::move(t));
    }
    static CliffordElement one(Base base) { return scalar(std::move(base), K(1)); }
    static CliffordElement zero(Base base) { return CliffordElement(std::move(base), {}); }
    static CliffordElement basis_vector(Base base, std::size_t i) {
        Terms t;
        t[uint32_t(1) << i] = K(1);
        return CliffordElement(std::move(base), std::move(t));
    }
    static CliffordElement vector(Base base, const std::vector<K>& coords) {
        Terms t;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (!(coords[i] == K(0))) t[uint32_t(1) << i] = coords[i];
        return CliffordElement(std::move(base), std::move(t));
    }
    static CliffordElement monomial(Base base, uint32_t mask, K c = K(1)) {
        Terms t;
        if (!(c == K(0))) t[mask] = std::move(c);
        return CliffordElement(std::move(base), std::move(t));
    }

    const Base& base() const { return base_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coefficient(uint32_t mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? K(0) : it->second;
    }

    /// True iff every term has even grade.
    bool is_even() const {
        for (const auto& [m, c] : terms_)
            if (std::popcount(m) % 2 != 0) return false;
        return true;
    }

    friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
        a.check_base(b);
        Terms t = a.terms_;
        for (const auto& [m, c] : b.terms_) add_term(t, m, c);
        return CliffordElement(a.base_ ? a.base_ : b.base_, std::move(t));
    }
    friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
        return a + (-b);
    }
    CliffordElement operator-() const {
        Terms t;
        for (const auto& [m, c] : terms_) t[m] = -c;
        return CliffordElement(base_, std::move(t));
    }
    friend CliffordElement operator*(const CliffordElement& a, const K& s) {
        Terms t;
        for (const auto& [m, c] : a.terms_) {
            K v = c * s;
            if (!(v == K(0))) t[m] = v;
        }
        return CliffordElement(a.base_, std::move(t));
    }
    friend CliffordElement operator*(const K& s, const CliffordElement& a) { return a * s; }

    /// Clifford product, normalizing with e_j e_i = -e_i e_j + 2 psi(e_i, e_j)
    /// for j > i and e_i e_i = psi(e_i, e_i).
    friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
        a.check_base(b);
        const Base& base = a.base_ ? a.base_ : b.base_;
        Terms out;
        for (const auto& [mb, cb] : b.terms_) {
            for (const auto& [ma, ca] : a.terms_) {
                Terms cur;
                cur[ma] = ca * cb;
                uint32_t rest = mb;
                while (rest) {
                    uint32_t i = static_cast<uint32_t>(std::countr_zero(rest));
                    rest &= rest - 1;
                    Terms next;
                    for (const auto& [mk, cv] : cur) mul_mono_vec(*base, mk, i, cv, next);
                    cur = std::move(next);
                }
                for (const auto& [m, c] : cur) add_term(out, m, c);
            }
        }
        return CliffordElement(base, std::move(out));
    }

    CliffordElement& operator+=(const CliffordElement& o) { return *this = *this + o; }
    CliffordElement& operator-=(const CliffordElement& o) { return *this = *this - o; }
    CliffordElement& operator*=(const CliffordElement& o) { return *this = *this * o; }

    friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
        a.check_base(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const CliffordElement& a, const CliffordElement& b) {
        return !(a == b);
    }

  private:
    Base base_;
    Terms terms_;

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == K(0)) it = terms_.erase(it);
            else ++it;
        }
    }

    void check_base(const CliffordElement& o) const {
        if (base_ && o.base_ && !(*base_ == *o.base_))
            throw std::invalid_argument("Clifford elements over different base Gram matrices");
    }

    static void add_term(Terms& t, uint32_t m, const K& c) {
        auto it = t.find(m);
        if (it == t.end()) {
            if (!(c == K(0))) t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == K(0)) t.erase(it);
        }
    }

    /// (canonical monomial `mask`) * e_i, accumulated into `out` scaled by c.
    static void mul_mono_vec(const QuadSpace<K>& qs, uint32_t mask, uint32_t i, const K& c,
                             Terms& out) {
        if (c == K(0)) return;
        if (mask == 0) {
            add_term(out, uint32_t(1) << i, c);
            return;
        }
        uint32_t m = 31 - static_cast<uint32_t>(std::countl_zero(mask));
        if (m < i) {
            add_term(out, mask | (uint32_t(1) << i), c);
            return;
        }
        if (m == i) {
            add_term(out, mask ^ (uint32_t(1) << m), c * qs.gram[i][i]);
            return;
        }
        // e_m e_i = -e_i e_m + 2 psi(e_m, e_i); the prefix has indices < m,
        // so appending e_m afterwards is a plain bit set.
        Terms sub;
        mul_mono_vec(qs, mask ^ (uint32_t(1) << m), i, c, sub);
        for (const auto& [k, v] : sub) add_term(out, k | (uint32_t(1) << m), -v);
        K twice = qs.gram[m][i] + qs.gram[m][i];
        add_term(out, mask ^ (uint32_t(1) << m), c * twice);
    }
};

/// Reversion anti-automorphism: reverses each monomial and renormalizes.
/// Fixes vectors; iota(xy) = iota(y) iota(x).
template <class K>
CliffordElement<K> reversion(const CliffordElement<K>& x) {
    auto base = x.base();
    CliffordElement<K> out = CliffordElement<K>::zero(base);
    for (const auto& [mask, c] : x.terms()) {
        CliffordElement<K> acc = CliffordElement<K>::scalar(base, c);
        for (uint32_t m = mask; m;) {
            uint32_t i = 31 - static_cast<uint32_t>(std::countl_zero(m));
            m ^= uint32_t(1) << i;
            acc = acc * CliffordElement<K>::basis_vector(base, i);
        }
        out += acc;
    }
    return out;
}

/// Spinor norm Nm(g) = iota(g) g.
template <class K>
CliffordElement<K> spinor_norm(const CliffordElement<K>& g) {
    return reversion(g) * g;
}

/// Trace of left multiplication by x on the full 2^r-dimensional algebra.
template <class K>
K trace_left_mult(const CliffordElement<K>& x) {
    std::size_t r = x.base()->rank();
    if (r > 16) throw std::invalid_argument("trace_left_mult limited to rank <= 16");
    K tr(0);
    for (uint32_t t = 0; t < (uint32_t(1) << r); ++t) {
        CliffordElement<K> prod = x * CliffordElement<K>::monomial(x.base(), t);
        tr += prod.coefficient(t);
    }
    return tr;
}

template <class K>
struct IdealMembership {
    bool member = false;
    CliffordElement<K> witness;  // z with xi = omega * z, when member
};

/// Exact membership test xi in omega * Cl, by solving omega * z = xi over
/// the 2^r-dimensional algebra.
template <class K>
IdealMembership<K> left_ideal_membership(const CliffordElement<K>& xi,
                                         const CliffordElement<K>& omega) {
    auto base = xi.base() ? xi.base() : omega.base();
    std::size_t r = base->rank();
    if (r > 12) throw std::invalid_argument("left_ideal_membership limited to rank <= 12");
    std::size_t n = std::size_t(1) << r;
    Mat<K> a(n, std::vector<K>(n, K(0)));
    for (uint32_t col = 0; col < n; ++col) {
        CliffordElement<K> img = omega * CliffordElement<K>::monomial(base, col);
        for (const auto& [m, c] : img.terms()) a[m][col] = c;
    }
    std::vector<K> b(n, K(0));
    for (const auto& [m, c] : xi.terms()) b[m] = c;
    auto sol = solve(a, b);
    IdealMembership<K> res;
    if (!sol) return res;
    res.member = true;
    typename CliffordElement<K>::Terms t;
    for (uint32_t m = 0; m < n; ++m)
        if (!((*sol)[m] == K(0))) t[m] = (*sol)[m];
    res.witness = CliffordElement<K>(base, std::move(t));
    return res;
}

/// Dimension of the kernel of the degree <= 2 tensor map
/// k + M + M@M -> Cl(M); equals r(r+1)/2 (the symmetric relations).
template <class K>
std::size_t degree2_relation_kernel_dim(const std::shared_ptr<const QuadSpace<K>>& base) {
    std::size_t r = base->rank();
    if (r > 8) throw std::invalid_argument("degree2_relation_kernel_dim limited to rank <= 8");
    std::size_t n = std::size_t(1) << r;
    std::size_t dom = 1 + r + r * r;
    Mat<K> rows;
    rows.reserve(dom);
    auto push = [&](const CliffordElement<K>& e) {
        std::vector<K> row(n, K(0));
        for (const auto& [m, c] : e.terms()) row[m] = c;
        rows.push_back(std::move(row));
    };
    push(CliffordElement<K>::one(base));
    for (std::size_t i = 0; i < r; ++i) push(CliffordElement<K>::basis_vector(base, i));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            push(CliffordElement<K>::basis_vector(base, i) *
                 CliffordElement<K>::basis_vector(base, j));
    return dom - mat_rank(std::move(rows));
}

/// Even-subset masks of {0..r-1}, the canonical basis of Cl_+.
inline std::vector<uint32_t> even_masks(std::size_t r) {
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < (uint32_t(1) << r); ++m)
        if (std::popcount(m) % 2 == 0) out.push_back(m);
    return out;
}

inline std::vector<uint32_t> odd_masks(std::size_t r) {
    std::vector<uint32_t> out;
    for (uint32_t m = 0; m < (uint32_t(1) << r); ++m)
        if (std::popcount(m) % 2 == 1) out.push_back(m);
    return out;
}

}  // namespace spinlat
