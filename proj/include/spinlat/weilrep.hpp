#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinlat/cyclotomic.hpp"
#include "spinlat/qseries.hpp"

namespace spinlat {

/// Square matrix of cyclotomic numbers; entries for the representation on
/// Z/2d live in the conductor-8d field.
using WeilMatrix = std::vector<std::vector<CycNum>>;

inline WeilMatrix wmat_identity(std::size_t n) {
    WeilMatrix m(n, std::vector<CycNum>(n, CycNum(Rat(0))));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNum(Rat(1));
    return m;
}

inline WeilMatrix wmat_mul(const WeilMatrix& a, const WeilMatrix& b) {
    std::size_t n = a.size();
    WeilMatrix c(n, std::vector<CycNum>(n, CycNum(Rat(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

inline bool wmat_equal(const WeilMatrix& a, const WeilMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

inline WeilMatrix wmat_conj_transpose(const WeilMatrix& a) {
    std::size_t n = a.size();
    WeilMatrix c(n, std::vector<CycNum>(n, CycNum(Rat(0))));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c[i][j] = a[j][i].conj();
    return c;
}

inline bool wmat_unitary(const WeilMatrix& a) {
    return wmat_equal(wmat_mul(a, wmat_conj_transpose(a)), wmat_identity(a.size()));
}

inline WeilMatrix wmat_pow(WeilMatrix a, uint64_t e) {
    WeilMatrix r = wmat_identity(a.size());
    while (e) {
        if (e & 1) r = wmat_mul(r, a);
        a = wmat_mul(a, a);
        e >>= 1;
    }
    return r;
}

/// T acts diagonally: entry e(gamma^2 / 4d) at index gamma.
inline WeilMatrix rho_t(int64_t d) {
    if (d < 1) throw std::invalid_argument("rho_t requires d >= 1");
    uint64_t cond = 8 * uint64_t(d);
    std::size_t m = std::size_t(2 * d);
    WeilMatrix t(m, std::vector<CycNum>(m, CycNum(Rat(0))));
    for (std::size_t g = 0; g < m; ++g)
        t[g][g] = CycNum::root_of_unity(cond, (2 * uint64_t(g) * uint64_t(g)) % cond);
    return t;
}

/// S for a lattice of signature (2, n): entry (delta, gamma) is
/// zeta_8^{2-n} e(-gamma delta / 2d) / sqrt(2d). The exponent 2-n (rather
/// than n-2) is forced by (ST)^3 = S^2; it is the conjugate normalization,
/// consistent with acting through the dual representation.
/// flip_sqrt_sign negates sqrt(2d) — a deliberate negative control.
inline WeilMatrix rho_s(int64_t d, int64_t n = 19, bool flip_sqrt_sign = false) {
    if (d < 1) throw std::invalid_argument("rho_s requires d >= 1");
    uint64_t cond = 8 * uint64_t(d);
    std::size_t m = std::size_t(2 * d);
    int64_t e8 = ((2 - n) % 8 + 8) % 8;
    CycNum phase = CycNum::root_of_unity(cond, uint64_t(e8) * d % cond);
    // 1/sqrt(2d) = sqrt(2d)/(2d), keeping everything in Q(zeta_8d).
    CycNum inv_sqrt =
        sqrt_positive_integer(Int(2 * d), flip_sqrt_sign).promoted(cond) * Rat(1, 2 * d);
    WeilMatrix s(m, std::vector<CycNum>(m, CycNum(Rat(0))));
    for (std::size_t dl = 0; dl < m; ++dl)
        for (std::size_t g = 0; g < m; ++g) {
            uint64_t ex = (cond - (4 * uint64_t(g) * uint64_t(dl)) % cond) % cond;
            s[dl][g] = phase * CycNum::root_of_unity(cond, ex) * inv_sqrt;
        }
    return s;
}

/// Entrywise complex conjugate; equals inverse-transpose for unitary input.
inline WeilMatrix dual_rep(const WeilMatrix& m) {
    if (!wmat_unitary(m)) throw std::invalid_argument("dual_rep requires a unitary matrix");
    WeilMatrix c(m.size(), std::vector<CycNum>(m.size(), CycNum(Rat(0))));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) c[i][j] = m[i][j].conj();
    return c;
}

/// Evaluates a free word over {S, T, T^-1}. Tokens: "S", "T", "T^-1".
inline WeilMatrix evaluate_word(const std::vector<std::string>& word, int64_t d, int64_t n = 19) {
    WeilMatrix s = rho_s(d, n);
    WeilMatrix t = rho_t(d);
    WeilMatrix tinv = wmat_pow(t, 4 * uint64_t(d) - 1);  // T has order 4d
    WeilMatrix acc = wmat_identity(std::size_t(2 * d));
    for (const auto& tok : word) {
        if (tok == "S") acc = wmat_mul(acc, s);
        else if (tok == "T") acc = wmat_mul(acc, t);
        else if (tok == "T^-1") acc = wmat_mul(acc, tinv);
        else throw std::invalid_argument("unknown word token: " + tok);
    }
    return acc;
}

struct RelationReport {
    bool st_cubed_equals_s_squared = false;
    bool s_eighth_identity = false;
    bool t_order_divides_4d = false;
    bool s_unitary = false;

    bool all_pass() const {
        return st_cubed_equals_s_squared && s_eighth_identity && t_order_divides_4d && s_unitary;
    }
};

inline RelationReport check_relations(int64_t d, int64_t n = 19, bool flip_sqrt_sign = false) {
    WeilMatrix s = rho_s(d, n, flip_sqrt_sign);
    WeilMatrix t = rho_t(d);
    WeilMatrix id = wmat_identity(std::size_t(2 * d));
    RelationReport r;
    r.st_cubed_equals_s_squared = wmat_equal(wmat_pow(wmat_mul(s, t), 3), wmat_mul(s, s));
    r.s_eighth_identity = wmat_equal(wmat_pow(s, 8), id);
    r.t_order_divides_4d = wmat_equal(wmat_pow(t, 4 * uint64_t(d)), id);
    r.s_unitary = wmat_unitary(s);
    return r;
}

/// Coefficient support forced by tau -> tau + 1: n = gamma^2/4d (mod 1).
inline bool t_equivariance_check(const VVQExpansion& f) {
    return f.support_check();
}

}  // namespace spinlat
