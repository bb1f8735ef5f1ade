#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "spinlat/rational.hpp"

namespace spinlat {

/// sigma_k(n) = sum of d^k over positive divisors d of n.
inline Int sigma_power(unsigned k, int64_t n) {
    if (n <= 0) throw std::invalid_argument("sigma_power requires n >= 1");
    Int s = 0;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        s += int_pow(Int(d), k);
        int64_t e = n / d;
        if (e != d) s += int_pow(Int(e), k);
    }
    return s;
}

/// Scalar q-expansion with integer exponents, truncated at `precision`
/// (coefficients are stored/valid for exponents <= precision).
struct ScalarQSeries {
    int64_t precision = 0;
    std::map<int64_t, Rat> coeffs;

    Rat coefficient(int64_t n) const {
        if (n > precision)
            throw std::out_of_range("coefficient query beyond series precision");
        auto it = coeffs.find(n);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
};

/// Weight-10 Eisenstein series 1 - 264 sum sigma_9(n) q^n.
inline ScalarQSeries eisenstein_e10(int64_t precision) {
    ScalarQSeries s;
    s.precision = precision;
    s.coeffs[0] = 1;
    for (int64_t n = 1; n <= precision; ++n) s.coeffs[n] = Rat(-264 * sigma_power(9, n));
    return s;
}

/// Vector-valued q-expansion for the rank-1 discriminant group Z/2d:
/// 2d components, exponents in (1/4d)Z, truncated at rational `precision`.
struct VVQExpansion {
    int64_t d = 0;
    Rat precision = 0;
    std::vector<std::map<Rat, Rat>> components;  // size 2d, indexed by gamma

    int64_t order() const { return 2 * d; }
    Int exponent_denominator() const { return Int(4) * d; }

    int64_t canonical_gamma(int64_t gamma) const {
        int64_t m = order();
        gamma %= m;
        return gamma < 0 ? gamma + m : gamma;
    }

    Rat coefficient(const Rat& n, int64_t gamma) const {
        if (n > precision)
            throw std::out_of_range("coefficient query beyond series precision");
        const auto& comp = components[canonical_gamma(gamma)];
        auto it = comp.find(n);
        return it == comp.end() ? Rat(0) : it->second;
    }

    /// Every exponent in component gamma must be congruent to gamma^2/4d mod 1.
    bool support_check() const {
        for (int64_t g = 0; g < order(); ++g) {
            Rat want = rat_mod1(Rat(g * g, 4 * d));
            for (const auto& [e, c] : components[g]) {
                if (c == 0) continue;
                if (rat_mod1(e) != want) return false;
            }
        }
        return true;
    }

    /// c(n, gamma) == c(n, -gamma) for all stored terms.
    bool symmetry_check() const {
        for (int64_t g = 0; g < order(); ++g) {
            const auto& a = components[g];
            const auto& b = components[canonical_gamma(-g)];
            if (a != b) return false;
        }
        return true;
    }
};

/// Theta series of the rank-1 lattice <2d>: component gamma collects q^{k^2/4d}
/// over k congruent to gamma mod 2d.
inline VVQExpansion siegel_theta(int64_t d, const Rat& precision) {
    if (d < 1) throw std::invalid_argument("siegel_theta requires d >= 1");
    VVQExpansion v;
    v.d = d;
    v.precision = precision;
    v.components.resize(2 * d);
    for (int64_t k = 0;; ++k) {
        Rat e(k * k, 4 * d);
        if (e > precision) break;
        int64_t g = v.canonical_gamma(k);
        v.components[g][e] += 1;
        if (k > 0) v.components[v.canonical_gamma(-k)][e] += 1;
    }
    return v;
}

/// Product of a scalar series with a vector-valued expansion. The result is
/// valid to the minimum of the two precisions; terms beyond are dropped.
inline VVQExpansion mul_scalar_vv(const ScalarQSeries& s, const VVQExpansion& v) {
    VVQExpansion out;
    out.d = v.d;
    out.precision = std::min(Rat(s.precision), v.precision);
    out.components.resize(v.components.size());
    for (std::size_t g = 0; g < v.components.size(); ++g) {
        for (const auto& [ev, cv] : v.components[g]) {
            if (cv == 0) continue;
            for (const auto& [es, cs] : s.coeffs) {
                Rat e = ev + es;
                if (e > out.precision) break;  // s.coeffs ascending
                out.components[g][e] += cs * cv;
            }
        }
    }
    return out;
}

}  // namespace spinlat
