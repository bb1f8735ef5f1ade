#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "spinlat/json_io.hpp"

using namespace spinlat;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(SPINLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

}  // namespace

TEST_CASE("eisenstein emits the pinned coefficients") {
    auto res = run_cli("eisenstein --nmax 2");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    json want = json::array({json::array({"0", "1"}), json::array({"1", "-264"}),
                             json::array({"2", "-135432"})});
    CHECK(j.at("coeffs") == want);
}

TEST_CASE("repeated invocations are byte-identical") {
    auto a = run_cli("theta --d 2 --precision 9/2");
    auto b = run_cli("theta --d 2 --precision 9/2");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
}

TEST_CASE("theta output round-trips through the reader") {
    auto res = run_cli("theta --d 1 --precision 8");
    REQUIRE(res.exit_code == 0);
    auto v = vv_from_json(json::parse(res.out));
    CHECK(v.d == 1);
    CHECK(v.coefficient(Rat(1, 4), 1) == 2);
    CHECK(v.support_check());
}

TEST_CASE("weilrep check passes for d=1") {
    auto res = run_cli("weilrep check --d 1");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("negative_control_fails") == true);
}

TEST_CASE("heegner invariants pinned output") {
    auto res = run_cli("heegner invariants --d 1 --a 1 --b 0");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("n") == "-1/4");
    CHECK(j.at("gamma") == 1);
}

TEST_CASE("lattice info on the rank-21 complement") {
    auto res = run_cli("lattice info --name L4");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("rank") == 21);
    CHECK(j.at("signature") == json::array({19, 2}));
    CHECK(j.at("disc_group") == json::array({"4"}));
    CHECK(j.at("disc_q_generator") == "1/8");
}

TEST_CASE("borcherds scan all-pass at small range") {
    auto res = run_cli("borcherds-scan --d 1 --nmax 6");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("all_pass") == true);
}

TEST_CASE("span test via files") {
    auto theta_out = run_cli("theta --d 1 --precision 8");
    REQUIRE(theta_out.exit_code == 0);
    std::string path = "cli_roundtrip_form.json";
    {
        // wrap into the product form the span test expects
        auto v = vv_from_json(json::parse(theta_out.out));
        auto f = mul_scalar_vv(eisenstein_e10(8), v);
        std::ofstream out(path);
        out << vv_to_json(f).dump();
    }
    auto res = run_cli("heegner span-test --forms " + path + " --target 1/4,1 --query 0,0");
    std::remove(path.c_str());
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("solvable") == true);
    CHECK(j.at("coefficients") == json::array({"1/2"}));
}

TEST_CASE("kuga-satake verify on the frozen configuration") {
    auto res = run_cli("kuga-satake verify --lattice U+U --x 1,-1,0,0 --y 0,0,1,-1 "
                       "--v1 1,-1,0,0 --v2 0,0,1,-1");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("j_squared_is_minus_identity") == true);
    CHECK(j.at("definite_sign") == -1);
}

TEST_CASE("filtration check over F5") {
    auto res = run_cli("filtration check --lattice U+U --field Fp --p 5 --omega 1,0,0,0 --v 0,0,1,-1");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("fil1_dim") == 4);
    CHECK(j.at("psp_equal_to_fil1") == true);
}

TEST_CASE("clifford selftest") {
    auto res = run_cli("clifford selftest");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("degree2_kernel_dim_rank4") == 10);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("nonsense").exit_code == 1);
    CHECK(run_cli("eisenstein").exit_code == 1);            // missing --nmax
    CHECK(run_cli("lattice info --name bogus").exit_code == 1);
}
