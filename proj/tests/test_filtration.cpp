#include <catch2/catch_amalgamated.hpp>

#include "spinlat/filtration.hpp"

using namespace spinlat;

namespace {

Lattice rank4() { return direct_sum(make_u(), make_u()); }
Lattice rank5() { return direct_sum(direct_sum(make_u(), make_u()), make_rank1(Int(2))); }
Lattice rank6() { return direct_sum(direct_sum(make_u(), make_u()), make_u()); }

template <class K>
std::vector<K> e_vec(std::size_t r, std::size_t i) {
    std::vector<K> v(r, K(0));
    v[i] = K(1);
    return v;
}

template <class K>
void check_dims(std::shared_ptr<const QuadSpace<K>> qs) {
    std::size_t r = qs->rank();
    auto s = make_filtered_space(qs, e_vec<K>(r, 0));  // omega = e of the first U
    auto fil = induced_filtration(s);
    CHECK(fil.clplus_dim == (std::size_t(1) << (r - 1)));
    CHECK(fil.fil1.size() == (std::size_t(1) << (r - 2)));
    CHECK(fil.fil2_zero);
    CHECK(fil.graded_degrees_ok);
    // chain: Fil^1 inside Fil^0 inside Cl_+
    for (const auto& row : fil.fil1) CHECK(in_row_space(fil.fil0, row));
    CHECK(mat_rank(fil.fil0) < fil.clplus_dim);
}

}  // namespace

TEST_CASE("filtered space validation") {
    auto qs = quad_space_q(rank4());
    CHECK_THROWS_AS(make_filtered_space(qs, std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(0)}),
                    std::invalid_argument);
    // non-isotropic omega rejected
    CHECK_THROWS_AS(make_filtered_space(qs, std::vector<Rat>{Rat(1), Rat(1), Rat(0), Rat(0)}),
                    std::invalid_argument);
}

TEST_CASE("filtration dimensions over Q, ranks 4-6") {
    check_dims<Rat>(quad_space_q(rank4()));
    check_dims<Rat>(quad_space_q(rank5()));
    check_dims<Rat>(quad_space_q(rank6()));
}

TEST_CASE("filtration dimensions over prime fields") {
    for (int64_t p : {5, 7}) {
        check_dims<Fp>(quad_space_fp(rank4(), p));
        check_dims<Fp>(quad_space_fp(rank5(), p));
        check_dims<Fp>(quad_space_fp(rank6(), p));
    }
}

TEST_CASE("prime fields below 5 are rejected") {
    CHECK_THROWS_AS(quad_space_fp(rank4(), 3), std::invalid_argument);
    CHECK_THROWS_AS(quad_space_fp(rank4(), 2), std::invalid_argument);
}

TEST_CASE("exact-sequence map: kernel = image = Fil^1") {
    auto qs = quad_space_q(rank4());
    auto s = make_filtered_space(qs, e_vec<Rat>(4, 0));
    std::vector<Rat> v = {Rat(0), Rat(0), Rat(1), Rat(-1)};  // psi(v,v) = -2
    auto rep = psp_map_check(s, v);
    CHECK(rep.kernel_dim == 4);
    CHECK(rep.image_dim == 4);
    CHECK(rep.equal_to_fil1);
    // isotropic v rejected
    CHECK_THROWS_AS(psp_map_check(s, e_vec<Rat>(4, 2)), std::invalid_argument);
}

TEST_CASE("exact-sequence map over F5 matches") {
    auto qs = quad_space_fp(rank4(), 5);
    auto s = make_filtered_space(qs, e_vec<Fp>(4, 0));
    std::vector<Fp> v = {Fp(0, 5), Fp(0, 5), Fp(1, 5), Fp(-1, 5)};
    auto rep = psp_map_check(s, v);
    CHECK(rep.kernel_dim == 4);
    CHECK(rep.image_dim == 4);
    CHECK(rep.equal_to_fil1);
}

TEST_CASE("exact-sequence map at rank 6") {
    auto qs = quad_space_q(rank6());
    auto s = make_filtered_space(qs, e_vec<Rat>(6, 0));
    std::vector<Rat> v = {Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0), Rat(0)};
    auto rep = psp_map_check(s, v);
    CHECK(rep.kernel_dim == 16);
    CHECK(rep.image_dim == 16);
    CHECK(rep.equal_to_fil1);
}

TEST_CASE("divisibility demo on the frozen triple") {
    // U + U + U, omega = e1, eta1 = e2, eta2 = f2 + e3
    auto run = [](auto qs, auto lift) {
        using K = decltype(lift(0));
        std::vector<K> omega = {lift(1), lift(0), lift(0), lift(0), lift(0), lift(0)};
        std::vector<K> eta1 = {lift(0), lift(0), lift(1), lift(0), lift(0), lift(0)};
        std::vector<K> eta2 = {lift(0), lift(0), lift(0), lift(1), lift(1), lift(0)};
        auto s = make_filtered_space(qs, omega);
        return ks_divisibility_demo(s, eta1, eta2);
    };
    auto demo_q = run(quad_space_q(rank6()), [](int v) { return Rat(v); });
    CHECK(demo_q.omega_eta2_in_fil1);
    CHECK(demo_q.product_outside_ideal);
    CHECK(demo_q.fil1_inside_ideal);
    auto demo_p = run(quad_space_fp(rank6(), 5), [](int v) { return Fp(v, 5); });
    CHECK(demo_p.omega_eta2_in_fil1);
    CHECK(demo_p.product_outside_ideal);
    CHECK(demo_p.fil1_inside_ideal);
}

TEST_CASE("divisibility demo rejects dependent triples") {
    auto qs = quad_space_q(rank6());
    auto s = make_filtered_space(qs, e_vec<Rat>(6, 0));
    auto eta1 = e_vec<Rat>(6, 2);
    CHECK_THROWS_AS(ks_divisibility_demo(s, eta1, eta1), std::invalid_argument);
    // eta outside omega-perp rejected
    CHECK_THROWS_AS(ks_divisibility_demo(s, e_vec<Rat>(6, 1), e_vec<Rat>(6, 2)),
                    std::invalid_argument);
}
