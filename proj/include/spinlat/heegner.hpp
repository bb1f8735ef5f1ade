#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spinlat/linalg.hpp"
#include "spinlat/qseries.hpp"

namespace spinlat {

/// Index (n, gamma) of a divisor class, n a nonpositive rational and gamma a
/// residue mod 2d. Classes at gamma and -gamma coincide; canonical_gamma
/// picks the representative in {0,...,d}.
struct HeegnerInvariant {
    Rat n;
    int64_t gamma = 0;
    int64_t d = 1;

    int64_t canonical_gamma() const {
        int64_t m = 2 * d;
        int64_t g = ((gamma % m) + m) % m;
        return g > d ? m - g : g;
    }
};

/// Rank-2 lattice with Gram [[2d, a], [a, 2b]]; negative discriminant.
struct Rank2Lattice {
    int64_t d = 1;
    int64_t a = 0;
    int64_t b = 0;

    int64_t disc() const { return 4 * d * b - a * a; }
};

inline HeegnerInvariant rank2_invariants(const Rank2Lattice& lat) {
    if (lat.disc() >= 0)
        throw std::invalid_argument("rank-2 lattice must have negative discriminant");
    HeegnerInvariant h;
    h.d = lat.d;
    h.n = Rat(lat.b) - Rat(lat.a * lat.a, 4 * lat.d);
    int64_t m = 2 * lat.d;
    h.gamma = ((lat.a % m) + m) % m;
    return h;
}

/// Lattices [[2d, k], [k, 0]] containing an isotropic class.
inline Rank2Lattice elliptic_family(int64_t d, int64_t k) {
    if (d < 1 || k < 1) throw std::invalid_argument("elliptic_family requires d, k >= 1");
    return Rank2Lattice{d, k, 0};
}

/// A class (n, gamma) carries a divisor iff -n = gamma^2/4d mod Z and n < 0,
/// or (n, gamma) = (0, 0).
inline bool admissible(int64_t d, const Rat& n, int64_t gamma) {
    if (n > 0) throw std::invalid_argument("admissible requires n <= 0");
    int64_t m = 2 * d;
    int64_t g = ((gamma % m) + m) % m;
    if (n == 0) return g == 0;
    return rat_mod1(-n - Rat(g * g, 4 * d)) == 0;
}

struct ScanRow {
    Rat n;
    Rat coefficient;
    Rat bound;        // 264 (n - d/4)^9 - 1, the asserted lower bound
    Rat bound_exact;  // 264 (n - d/4)^9, without the unit of slack
    bool pass = false;
};

/// Scans the product coefficients at component gamma over exponents
/// n in (d/4, n_max] congruent to gamma^2/4d mod 1, asserting the
/// nonvanishing lower bound on |c|.
inline std::vector<ScanRow> effective_scan(const VVQExpansion& f, int64_t gamma, const Rat& n_max) {
    int64_t d = f.d;
    if (n_max > f.precision)
        throw std::out_of_range("scan range exceeds series precision");
    int64_t g = f.canonical_gamma(gamma);
    Rat frac = rat_mod1(Rat(g * g, 4 * d));
    Rat quarter_d(d, 4);
    std::vector<ScanRow> rows;
    // smallest integer t with frac + t > d/4
    Rat start = quarter_d - frac;
    Int t0 = rat_floor(start) + 1;
    if (Rat(t0) + frac <= quarter_d) ++t0;
    for (Int t = t0;; ++t) {
        Rat n = Rat(t) + frac;
        if (n > n_max) break;
        ScanRow row;
        row.n = n;
        row.coefficient = f.coefficient(n, g);
        row.bound_exact = Rat(264) * rat_pow(n - quarter_d, 9);
        row.bound = row.bound_exact - 1;
        row.pass = row.coefficient != 0 && rat_abs(row.coefficient) >= row.bound;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Expresses the coefficient-extraction functional at `query` as a rational
/// combination of the functionals at `targets`, on the span of `forms`.
inline std::optional<std::vector<Rat>> span_test(const std::vector<VVQExpansion>& forms,
                                                 const std::vector<std::pair<Rat, int64_t>>& targets,
                                                 const std::pair<Rat, int64_t>& query) {
    std::size_t nf = forms.size(), nt = targets.size();
    // solve (A^T) c = q where A[i][j] = e_{target_i}(form_j)
    Mat<Rat> at(nf, std::vector<Rat>(nt));
    std::vector<Rat> q(nf);
    for (std::size_t j = 0; j < nf; ++j) {
        for (std::size_t i = 0; i < nt; ++i)
            at[j][i] = forms[j].coefficient(targets[i].first, targets[i].second);
        q[j] = forms[j].coefficient(query.first, query.second);
    }
    return solve(at, q);
}

}  // namespace spinlat
