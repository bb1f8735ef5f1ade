#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "spinlat/clifford.hpp"
#include "spinlat/linalg.hpp"

namespace spinlat {

/// Three-step filtered quadratic space: F^1 = span(omega) with omega
/// isotropic, F^0 = omega-perp, F^{-1} = everything.
template <class K>
struct FilteredQuadraticSpace {
    std::shared_ptr<const QuadSpace<K>> base;
    std::vector<K> omega;
};

template <class K>
FilteredQuadraticSpace<K> make_filtered_space(std::shared_ptr<const QuadSpace<K>> base,
                                              std::vector<K> omega) {
    bool nonzero = false;
    for (const auto& c : omega)
        if (!(c == K(0))) nonzero = true;
    if (!nonzero) throw std::invalid_argument("omega must be nonzero");
    if (!(base->psi(omega, omega) == K(0)))
        throw std::invalid_argument("omega must be isotropic");
    return FilteredQuadraticSpace<K>{std::move(base), std::move(omega)};
}

/// Basis of F^0 = omega-perp (contains omega itself).
template <class K>
Mat<K> f0_basis(const FilteredQuadraticSpace<K>& s) {
    std::size_t r = s.base->rank();
    Mat<K> functional(1, std::vector<K>(r, K(0)));
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i)
            functional[0][j] += s.omega[i] * s.base->gram[i][j];
    return kernel_basis(functional);
}

namespace detail {

/// Coordinates of an even Clifford element in the even-mask basis.
template <class K>
std::vector<K> even_coords(const CliffordElement<K>& e, const std::vector<std::size_t>& pos,
                           std::size_t dim) {
    std::vector<K> v(dim, K(0));
    for (const auto& [mask, c] : e.terms()) {
        if (pos[mask] == SIZE_MAX) throw std::logic_error("element not in the even part");
        v[pos[mask]] = c;
    }
    return v;
}

}  // namespace detail

template <class K>
struct CliffordFiltration {
    std::vector<uint32_t> basis_masks;  // even-mask basis of Cl_+
    Mat<K> fil1;                        // rows: basis of Fil^1
    Mat<K> fil0;                        // rows: basis of Fil^0
    std::size_t clplus_dim = 0;
    bool fil2_zero = false;
    bool graded_degrees_ok = false;  // chain Fil^1 < Fil^0 < Cl_+ strict at each step
};

/// Quotient filtration on the even Clifford algebra. Fil^1 is computed as
/// (omega Cl) intersect Cl_+, i.e. the kernel of left multiplication by
/// omega on Cl_+ (the two agree; both are asserted). Fil^0 is the span of
/// even words of nonnegative total degree, for generator degrees
/// omega -> 1, omega-perp -> 0, complement -> -1.
template <class K>
CliffordFiltration<K> induced_filtration(const FilteredQuadraticSpace<K>& s) {
    std::size_t r = s.base->rank();
    if (r > 10) throw std::invalid_argument("induced_filtration limited to rank <= 10");
    auto basis = even_masks(r);
    std::size_t dim = basis.size();
    std::vector<std::size_t> pos(std::size_t(1) << r, SIZE_MAX);
    for (std::size_t i = 0; i < dim; ++i) pos[basis[i]] = i;

    auto omega_el = CliffordElement<K>::vector(s.base, s.omega);

    // Fil^1 via kernel of L_omega : Cl_+ -> Cl_- (rows: odd masks).
    auto odd = odd_masks(r);
    std::vector<std::size_t> opos(std::size_t(1) << r, SIZE_MAX);
    for (std::size_t i = 0; i < odd.size(); ++i) opos[odd[i]] = i;
    Mat<K> lmat(odd.size(), std::vector<K>(dim, K(0)));
    for (std::size_t j = 0; j < dim; ++j) {
        auto img = omega_el * CliffordElement<K>::monomial(s.base, basis[j]);
        for (const auto& [mask, c] : img.terms()) lmat[opos[mask]][j] = c;
    }
    Mat<K> fil1 = kernel_basis(lmat);

    // Cross-check: omega * (odd monomials) spans the same subspace.
    Mat<K> ideal_even;
    for (uint32_t m : odd) {
        auto img = omega_el * CliffordElement<K>::monomial(s.base, m);
        ideal_even.push_back(detail::even_coords(img, pos, dim));
    }
    if (!same_row_space(fil1, ideal_even))
        throw std::logic_error("kernel of L_omega differs from (omega Cl) intersect Cl_+");

    // Graded generators: omega (degree 1), a completion of omega inside
    // omega-perp (degree 0), one complement vector (degree -1).
    Mat<K> f0 = f0_basis(s);
    std::vector<std::pair<CliffordElement<K>, int>> gens;
    gens.emplace_back(omega_el, 1);
    {
        // drop one f0 row to avoid double-counting omega's line
        Mat<K> chosen{std::vector<K>(s.omega)};
        for (const auto& row : f0) {
            if (chosen.size() == f0.size()) break;
            if (in_row_space(chosen, row)) continue;
            chosen.push_back(row);
            gens.emplace_back(CliffordElement<K>::vector(s.base, row), 0);
        }
    }
    {
        std::vector<K> delta;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<K> e(r, K(0));
            e[i] = K(1);
            if (!in_row_space(f0, e)) {
                delta = std::move(e);
                break;
            }
        }
        if (delta.empty()) throw std::logic_error("omega-perp has no complement");
        gens.emplace_back(CliffordElement<K>::vector(s.base, delta), -1);
    }

    // Word spans by total degree, words up to length r (longer words reduce).
    // spans[deg + r] holds coordinate rows of even words of that degree.
    std::vector<Mat<K>> even_spans(2 * r + 1), cur;
    auto add_row = [](Mat<K>& sp, std::vector<K> row) {
        if (!in_row_space(sp, row)) sp.push_back(std::move(row));
    };
    auto full_coords = [&](const CliffordElement<K>& el) {
        std::vector<K> v(std::size_t(1) << r, K(0));
        for (const auto& [mask, c] : el.terms()) v[mask] = c;
        return v;
    };
    std::map<int, std::vector<CliffordElement<K>>> frontier;
    frontier[0].push_back(CliffordElement<K>::one(s.base));
    add_row(even_spans[r], detail::even_coords(frontier[0][0], pos, dim));
    for (std::size_t len = 1; len <= r; ++len) {
        std::map<int, std::vector<CliffordElement<K>>> next;
        // within a degree class only the span matters (products are
        // bilinear), so the frontier is pruned to spanning subsets
        std::map<int, Mat<K>> spans;
        for (const auto& [deg, elems] : frontier)
            for (const auto& el : elems)
                for (const auto& [gen, gdeg] : gens) {
                    auto prod = el * gen;
                    if (prod.is_zero()) continue;
                    auto& sp = spans[deg + gdeg];
                    auto row = full_coords(prod);
                    if (in_row_space(sp, row)) continue;
                    sp.push_back(std::move(row));
                    next[deg + gdeg].push_back(prod);
                }
        for (auto& [deg, elems] : next) {
            if (len % 2 != 0) continue;
            for (const auto& el : elems)
                add_row(even_spans[std::size_t(deg + int(r))],
                        detail::even_coords(el, pos, dim));
        }
        frontier = std::move(next);
    }

    auto span_at_least = [&](int k) {
        Mat<K> acc;
        for (int deg = int(r); deg >= k; --deg)
            for (const auto& row : even_spans[std::size_t(deg + int(r))]) add_row(acc, row);
        return acc;
    };

    CliffordFiltration<K> out;
    out.basis_masks = basis;
    out.clplus_dim = dim;
    out.fil1 = std::move(fil1);
    out.fil2_zero = span_at_least(2).empty();
    Mat<K> fil0 = span_at_least(0);
    // the chain must close: Fil^1 sits inside Fil^0
    for (const auto& row : out.fil1) add_row(fil0, std::vector<K>(row));
    out.fil0 = std::move(fil0);
    out.graded_degrees_ok = out.fil2_zero && mat_rank(out.fil1) < mat_rank(out.fil0) &&
                            mat_rank(out.fil0) < dim;
    return out;
}

template <class K>
struct PspReport {
    std::size_t kernel_dim = 0;
    std::size_t image_dim = 0;
    bool equal_to_fil1 = false;  // kernel = image = Fil^1 as subspaces
};

/// The map x -> omega x v on Cl_+, for anisotropic v.
template <class K>
PspReport<K> psp_map_check(const FilteredQuadraticSpace<K>& s, const std::vector<K>& v) {
    if (s.base->psi(v, v) == K(0))
        throw std::invalid_argument("psp_map_check requires an anisotropic v");
    std::size_t r = s.base->rank();
    auto basis = even_masks(r);
    std::size_t dim = basis.size();
    std::vector<std::size_t> pos(std::size_t(1) << r, SIZE_MAX);
    for (std::size_t i = 0; i < dim; ++i) pos[basis[i]] = i;
    auto omega_el = CliffordElement<K>::vector(s.base, s.omega);
    auto v_el = CliffordElement<K>::vector(s.base, v);
    Mat<K> cols(dim, std::vector<K>(dim, K(0)));
    Mat<K> image_rows;
    for (std::size_t j = 0; j < dim; ++j) {
        auto img = omega_el * CliffordElement<K>::monomial(s.base, basis[j]) * v_el;
        auto coords = detail::even_coords(img, pos, dim);
        for (std::size_t i = 0; i < dim; ++i) cols[i][j] = coords[i];
        image_rows.push_back(std::move(coords));
    }
    Mat<K> ker = kernel_basis(cols);
    auto fil = induced_filtration(s);
    PspReport<K> rep;
    rep.kernel_dim = ker.size();
    rep.image_dim = mat_rank(image_rows);
    rep.equal_to_fil1 =
        same_row_space(ker, fil.fil1) && same_row_space(image_rows, fil.fil1);
    return rep;
}

struct DivisibilityDemo {
    bool omega_eta2_in_fil1 = false;     // omega eta_2 lands in Fil^1
    bool product_outside_ideal = false;  // eta_1 eta_2 not in omega Cl
    bool fil1_inside_ideal = false;      // Fil^1 subset of omega Cl
};

/// The algebraic core of the divisibility contradiction: omega eta_2 is
/// divisible by omega, but eta_1 eta_2 is not.
template <class K>
DivisibilityDemo ks_divisibility_demo(const FilteredQuadraticSpace<K>& s,
                                      const std::vector<K>& eta1, const std::vector<K>& eta2) {
    if (!(s.base->psi(s.omega, eta1) == K(0)) || !(s.base->psi(s.omega, eta2) == K(0)))
        throw std::invalid_argument("eta vectors must lie in omega-perp");
    Mat<K> triple{s.omega, eta1, eta2};
    if (mat_rank(triple) != 3)
        throw std::invalid_argument("omega, eta1, eta2 must be linearly independent");
    std::size_t r = s.base->rank();
    auto basis = even_masks(r);
    std::vector<std::size_t> pos(std::size_t(1) << r, SIZE_MAX);
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    auto omega_el = CliffordElement<K>::vector(s.base, s.omega);
    auto e1 = CliffordElement<K>::vector(s.base, eta1);
    auto e2 = CliffordElement<K>::vector(s.base, eta2);
    auto fil = induced_filtration(s);
    DivisibilityDemo demo;
    demo.omega_eta2_in_fil1 =
        in_row_space(fil.fil1, detail::even_coords(omega_el * e2, pos, basis.size()));
    demo.product_outside_ideal = !left_ideal_membership(e1 * e2, omega_el).member;
    demo.fil1_inside_ideal = true;
    for (const auto& row : fil.fil1) {
        typename CliffordElement<K>::Terms t;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!(row[i] == K(0))) t[basis[i]] = row[i];
        CliffordElement<K> el(s.base, std::move(t));
        if (!left_ideal_membership(el, omega_el).member) demo.fil1_inside_ideal = false;
    }
    return demo;
}

}  // namespace spinlat
