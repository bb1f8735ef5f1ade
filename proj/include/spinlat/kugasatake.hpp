#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spinlat/clifford.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/linalg.hpp"

namespace spinlat {

/// Period data omega = x + iy: x, y orthogonal with equal negative norm c.
struct PeriodPoint {
    Lattice base;
    std::vector<Rat> x, y;
    Rat c;
};

inline PeriodPoint make_period(const Lattice& base, std::vector<Rat> x, std::vector<Rat> y) {
    auto qs = quad_space_q(base);
    Rat xx = qs->psi(x, x), yy = qs->psi(y, y), xy = qs->psi(x, y);
    if (xy != 0)
        throw std::invalid_argument("period vectors not orthogonal: psi(x,y) = " + rat_str(xy));
    if (xx != yy)
        throw std::invalid_argument("period norms differ: psi(x,x) = " + rat_str(xx) +
                                    ", psi(y,y) = " + rat_str(yy));
    if (!(xx < 0))
        throw std::invalid_argument("period norm not negative: psi(x,x) = " + rat_str(xx));
    return PeriodPoint{base, std::move(x), std::move(y), xx};
}

/// Matrix of an even Clifford element acting by left multiplication on the
/// even part, in the even-mask basis.
template <class K>
Mat<K> left_mult_on_even(const CliffordElement<K>& a) {
    std::size_t r = a.base()->rank();
    auto basis = even_masks(r);
    std::vector<std::size_t> pos(std::size_t(1) << r, SIZE_MAX);
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    Mat<K> m(basis.size(), std::vector<K>(basis.size(), K(0)));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        CliffordElement<K> img = a * CliffordElement<K>::monomial(a.base(), basis[j]);
        for (const auto& [mask, coeff] : img.terms()) {
            if (pos[mask] == SIZE_MAX)
                throw std::logic_error("left multiplication by an even element left the even part");
            m[pos[mask]][j] = coeff;
        }
    }
    return m;
}

/// J = (1/|c|) L_{x y} on the even part; J^2 = -I since (xy)^2 = -c^2.
inline Mat<Rat> complex_structure(const PeriodPoint& p) {
    if (p.base.rank() > 10) throw std::invalid_argument("complex_structure limited to rank <= 10");
    auto qs = quad_space_q(p.base);
    auto xy = CliffordElement<Rat>::vector(qs, p.x) * CliffordElement<Rat>::vector(qs, p.y);
    Mat<Rat> j = left_mult_on_even(xy);
    Rat inv = Rat(1) / rat_abs(p.c);
    for (auto& row : j)
        for (auto& e : row) e *= inv;
    return j;
}

/// B(a, b) = Tr(iota(a) b v1 v2) on the even part, in the even-mask basis.
inline Mat<Rat> ks_pairing(const Lattice& base, const std::vector<Rat>& v1,
                           const std::vector<Rat>& v2) {
    if (base.rank() > 10) throw std::invalid_argument("ks_pairing limited to rank <= 10");
    auto qs = quad_space_q(base);
    if (qs->psi(v1, v2) != 0) throw std::invalid_argument("ks_pairing requires psi(v1,v2) = 0");
    if (qs->psi(v1, v1) != -2 || qs->psi(v2, v2) != -2)
        throw std::invalid_argument("ks_pairing requires psi(v_i,v_i) = -2");
    auto vv = CliffordElement<Rat>::vector(qs, v1) * CliffordElement<Rat>::vector(qs, v2);
    auto basis = even_masks(base.rank());
    std::size_t n = basis.size();
    Mat<Rat> b(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto left = reversion(CliffordElement<Rat>::monomial(qs, basis[i]));
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] =
                trace_left_mult(left * CliffordElement<Rat>::monomial(qs, basis[j]) * vv);
    }
    return b;
}

struct PolarizationReport {
    bool antisymmetric = false;
    bool j_invariant = false;   // B(Ja, Jb) = B(a, b)
    bool symmetric = false;     // S(a,b) = B(a, Jb) symmetric
    Inertia inertia;            // of S
    int definite_sign = 0;      // +1, -1, or 0 when indefinite/degenerate
};

inline PolarizationReport polarization_report(const PeriodPoint& p, const std::vector<Rat>& v1,
                                              const std::vector<Rat>& v2) {
    Mat<Rat> j = complex_structure(p);
    Mat<Rat> b = ks_pairing(p.base, v1, v2);
    std::size_t n = b.size();
    PolarizationReport rep;
    rep.antisymmetric = true;
    for (std::size_t i = 0; i < n && rep.antisymmetric; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (b[i][k] != -b[k][i]) { rep.antisymmetric = false; break; }
    Mat<Rat> jt(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) jt[i][k] = j[k][i];
    rep.j_invariant = mat_mul(jt, mat_mul(b, j)) == b;
    Mat<Rat> s = mat_mul(b, j);
    rep.symmetric = true;
    for (std::size_t i = 0; i < n && rep.symmetric; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (s[i][k] != s[k][i]) { rep.symmetric = false; break; }
    rep.inertia = sym_inertia(s);
    if (rep.inertia.zero == 0 && rep.inertia.negative == 0) rep.definite_sign = 1;
    else if (rep.inertia.zero == 0 && rep.inertia.positive == 0) rep.definite_sign = -1;
    return rep;
}

struct DegreeExponents {
    Int two_exponent;          // a in d' = 2^a d^b
    Int d_exponent;            // b
    std::vector<int64_t> primes;  // primes dividing d' = {2} U primes(d)
};

inline DegreeExponents ks_degree_exponents(int64_t d) {
    if (d < 1) throw std::invalid_argument("ks_degree_exponents requires d >= 1");
    DegreeExponents e;
    e.two_exponent = Int(3) * int_pow(Int(2), 18);
    e.d_exponent = int_pow(Int(2), 19);
    e.primes.push_back(2);
    int64_t m = d;
    while (m % 2 == 0) m /= 2;
    for (int64_t p = 3; p * p <= m; p += 2)
        if (m % p == 0) {
            e.primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) e.primes.push_back(m);
    return e;
}

}  // namespace spinlat
