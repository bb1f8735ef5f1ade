#include <catch2/catch_amalgamated.hpp>

#include "spinlat/weilrep.hpp"

using namespace spinlat;

TEST_CASE("diagonal generator d=1,2") {
    auto t1 = rho_t(1);
    CHECK(t1[0][0] == CycNum(Rat(1)));
    CHECK(t1[1][1] == CycNum::root_of_unity(4, 1));
    CHECK(t1[0][1].is_zero());
    auto t2 = rho_t(2);
    CHECK(t2[0][0] == CycNum(Rat(1)));
    CHECK(t2[1][1] == CycNum::root_of_unity(8, 1));
    CHECK(t2[2][2] == CycNum::root_of_unity(2, 1));
    CHECK(t2[3][3] == CycNum::root_of_unity(8, 1));
}

TEST_CASE("S-matrix d=1 in closed form") {
    // entry = zeta_8^{2-19} e(-gamma delta / 2) / sqrt 2; the 2-n exponent is
    // forced by (ST)^3 = S^2 (the n-2 normalization fails it).
    auto s = rho_s(1, 19);
    auto inv_sqrt2 = sqrt_positive_integer(Int(2)) * Rat(1, 2);
    auto phase = CycNum::root_of_unity(8, -1);
    CHECK(s[0][0] == phase * inv_sqrt2);
    CHECK(s[0][1] == phase * inv_sqrt2);
    CHECK(s[1][0] == phase * inv_sqrt2);
    CHECK(s[1][1] == -(phase * inv_sqrt2));
}

TEST_CASE("S is symmetric with constant first row") {
    for (int64_t d : {1, 2, 3}) {
        auto s = rho_s(d);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(s[0][i] == s[0][0]);
            for (std::size_t j = 0; j < i; ++j) CHECK(s[i][j] == s[j][i]);
        }
    }
}

TEST_CASE("S entries have modulus 1/sqrt(2d)") {
    for (int64_t d : {1, 2, 3}) {
        auto s = rho_s(d);
        long double want = 1.0L / std::sqrt(2.0L * d);
        for (const auto& row : s)
            for (const auto& e : row)
                CHECK(std::abs(std::abs(e.to_complex()) - want) < 1e-10L);
    }
}

TEST_CASE("defining relations hold for d = 1..5") {
    for (int64_t d = 1; d <= 5; ++d) {
        auto rep = check_relations(d, 19);
        CHECK(rep.st_cubed_equals_s_squared);
        CHECK(rep.s_eighth_identity);
        CHECK(rep.t_order_divides_4d);
        CHECK(rep.s_unitary);
        CHECK(rep.all_pass());
    }
}

TEST_CASE("negative control: wrong square-root sign breaks (ST)^3 = S^2") {
    for (int64_t d : {1, 2}) {
        auto rep = check_relations(d, 19, /*flip_sqrt_sign=*/true);
        CHECK_FALSE(rep.st_cubed_equals_s_squared);
    }
}

TEST_CASE("word evaluation") {
    auto id = evaluate_word({}, 1);
    CHECK(wmat_equal(id, wmat_identity(2)));
    CHECK(wmat_equal(evaluate_word({"T", "T^-1"}, 2), wmat_identity(4)));
    auto st3 = evaluate_word({"S", "T", "S", "T", "S", "T"}, 1);
    CHECK(wmat_equal(st3, evaluate_word({"S", "S"}, 1)));
    CHECK_THROWS_AS(evaluate_word({"X"}, 1), std::invalid_argument);
}

TEST_CASE("dual representation") {
    auto t = rho_t(2);
    auto dual = dual_rep(t);
    for (std::size_t g = 0; g < 4; ++g) CHECK(dual[g][g] == t[g][g].conj());
    auto s = rho_s(3);
    CHECK(wmat_equal(dual_rep(dual_rep(s)), s));
    // non-unitary input rejected
    WeilMatrix bad = wmat_identity(2);
    bad[0][0] = CycNum(Rat(2));
    CHECK_THROWS_AS(dual_rep(bad), std::invalid_argument);
}

TEST_CASE("T-equivariance of coefficient support") {
    CHECK(t_equivariance_check(siegel_theta(1, Rat(10))));
    CHECK(t_equivariance_check(mul_scalar_vv(eisenstein_e10(10), siegel_theta(1, Rat(10)))));
    VVQExpansion shifted;
    shifted.d = 1;
    shifted.precision = 2;
    shifted.components.resize(2);
    shifted.components[0][Rat(1, 8)] = 1;
    CHECK_FALSE(t_equivariance_check(shifted));
}
