#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "spinlat/rational.hpp"

namespace spinlat {

/// Dense exact linear algebra over an arbitrary field K (Rat, Fp, ...).
/// Matrices are row-major vector<vector<K>>.

template <class K>
using Mat = std::vector<std::vector<K>>;

template <class K>
Mat<K> mat_identity(std::size_t n) {
    Mat<K> m(n, std::vector<K>(n, K(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = K(1);
    return m;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat<K> c(n, std::vector<K>(m, K(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == K(0)) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

/// In-place reduced row echelon form; returns rank.
template <class K>
std::size_t rref(Mat<K>& m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == K(0)) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        K inv = K(1) / m[rank][c];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][c] == K(0)) continue;
            K f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

template <class K>
std::size_t mat_rank(Mat<K> m) {
    return rref(m);
}

/// Solves A x = b (A: n x m). Returns one solution if consistent.
template <class K>
std::optional<std::vector<K>> solve(const Mat<K>& a, const std::vector<K>& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Mat<K> aug(rows, std::vector<K>(cols + 1, K(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    rref(aug);
    std::vector<K> x(cols, K(0));
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t lead = cols + 1;
        for (std::size_t j = 0; j <= cols; ++j)
            if (aug[i][j] != K(0)) { lead = j; break; }
        if (lead == cols) return std::nullopt;  // 0 = nonzero
        if (lead < cols) x[lead] = aug[i][cols];
    }
    return x;
}

/// Basis of the null space of A (columns are the unknowns).
template <class K>
Mat<K> kernel_basis(Mat<K> a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    std::size_t rank = rref(a);
    std::vector<std::size_t> lead_of_col(cols, SIZE_MAX);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] != K(0)) { is_pivot[j] = true; lead_of_col[j] = i; break; }
    Mat<K> ker;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(cols, K(0));
        v[f] = K(1);
        for (std::size_t j = 0; j < cols; ++j)
            if (is_pivot[j]) v[j] = -a[lead_of_col[j]][f];
        ker.push_back(std::move(v));
    }
    return ker;
}

/// True iff v lies in the row space of rows.
template <class K>
bool in_row_space(const Mat<K>& rows, const std::vector<K>& v) {
    Mat<K> m = rows;
    std::size_t r0 = mat_rank(m);
    m = rows;
    m.push_back(v);
    return mat_rank(m) == r0;
}

/// True iff the two row spaces coincide.
template <class K>
bool same_row_space(const Mat<K>& a, const Mat<K>& b) {
    std::size_t ra = mat_rank(a), rb = mat_rank(b);
    if (ra != rb) return false;
    Mat<K> u = a;
    u.insert(u.end(), b.begin(), b.end());
    return mat_rank(u) == ra;
}

struct Inertia {
    std::size_t positive = 0, negative = 0, zero = 0;
};

/// Exact inertia of a symmetric rational matrix by congruence diagonalization.
inline Inertia sym_inertia(Mat<Rat> a) {
    Inertia res;
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            bool found = false;
            for (std::size_t j = i + 1; j < n && !found; ++j) {
                if (a[j][j] != 0) {
                    for (std::size_t k = 0; k < n; ++k) std::swap(a[i][k], a[j][k]);
                    for (std::size_t k = 0; k < n; ++k) std::swap(a[k][i], a[k][j]);
                    found = true;
                }
            }
            if (!found) {
                for (std::size_t j = i + 1; j < n && !found; ++j) {
                    if (a[i][j] != 0) {
                        for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
                        for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
                        found = true;
                    }
                }
            }
            if (!found) {
                ++res.zero;
                continue;
            }
        }
        Rat p = a[i][i];
        if (p > 0) ++res.positive; else ++res.negative;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[i][j] == 0) continue;
            Rat f = a[i][j] / p;
            for (std::size_t k = 0; k < n; ++k) a[j][k] -= f * a[i][k];
            for (std::size_t k = 0; k < n; ++k) a[k][j] -= f * a[k][i];
        }
    }
    return res;
}

}  // namespace spinlat
