// Command-line front end: every computation, machine-readable output.
// Exit codes: 0 success, 1 usage error, 2 internal assertion failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "spinlat/clifford.hpp"
#include "spinlat/filtration.hpp"
#include "spinlat/heegner.hpp"
#include "spinlat/json_io.hpp"
#include "spinlat/kugasatake.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/qseries.hpp"
#include "spinlat/weilrep.hpp"

using namespace spinlat;

namespace {

std::vector<Rat> parse_vec(const std::string& s) {
    std::vector<Rat> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(rat_parse(tok));
    return v;
}

Lattice load_lattice(const std::string& spec_str) {
    // builtin names, or a JSON file path
    if (spec_str == "U") return make_u();
    if (spec_str == "U+U") return direct_sum(make_u(), make_u());
    if (spec_str == "U+U+U") return direct_sum(direct_sum(make_u(), make_u()), make_u());
    if (spec_str == "E8") return make_e8();
    if (spec_str == "K3") return make_k3_lattice();
    if (spec_str.rfind("L", 0) == 0 && spec_str.size() > 1 &&
        spec_str.find_first_not_of("0123456789", 1) == std::string::npos) {
        Int two_d(spec_str.substr(1));
        if (two_d % 2 != 0) throw std::invalid_argument("L<2d> needs an even index");
        return make_l2d(two_d / 2);
    }
    std::ifstream in(spec_str);
    if (!in) throw std::invalid_argument("cannot open lattice file: " + spec_str);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + spec_str + ": " + e.what());
    }
    return lattice_from_json(j);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_lattice_info(const std::string& lat_spec) {
    Lattice lat = load_lattice(lat_spec);
    Signature sig = signature(lat);
    json out;
    out["rank"] = lat.rank();
    out["signature"] = json::array({sig.positive, sig.negative});
    out["det"] = det_int(lat.gram).str();
    if (sig.zero == 0) {
        auto df = discriminant_form(lat, PairingConvention::Psi);
        json orders = json::array();
        for (const auto& o : df.cyclic_orders) orders.push_back(o.str());
        out["disc_group"] = orders;
        if (df.cyclic_orders.size() == 1)
            out["disc_q_generator"] = rat_str(df.q_value(df.generators[0]));
    }
    emit(out);
    return 0;
}

int cmd_eisenstein(int64_t nmax) {
    ScalarQSeries s = eisenstein_e10(nmax);
    json coeffs = json::array();
    for (const auto& [n, c] : s.coeffs)
        coeffs.push_back(json::array({std::to_string(n), rat_str(c)}));
    emit(json{{"coeffs", coeffs}});
    return 0;
}

int cmd_theta(int64_t d, const std::string& prec) {
    emit(vv_to_json(siegel_theta(d, rat_parse(prec))));
    return 0;
}

int cmd_borcherds_scan(int64_t d, const std::string& nmax_str) {
    Rat nmax = rat_parse(nmax_str);
    auto f = mul_scalar_vv(eisenstein_e10(rat_floor(nmax).convert_to<int64_t>() + 1),
                           siegel_theta(d, nmax + 1));
    bool all_pass = true;
    json rows = json::array();
    for (int64_t g = 0; g <= d; ++g) {
        for (const auto& row : effective_scan(f, g, nmax)) {
            rows.push_back(json{{"gamma", g},
                                {"n", rat_str(row.n)},
                                {"coefficient", rat_str(row.coefficient)},
                                {"bound", rat_str(row.bound)},
                                {"pass", row.pass}});
            all_pass = all_pass && row.pass;
        }
    }
    emit(json{{"d", d}, {"rows", rows}, {"all_pass", all_pass}});
    return all_pass ? 0 : 2;
}

int cmd_heegner_invariants(int64_t d, int64_t a, int64_t b) {
    auto h = rank2_invariants(Rank2Lattice{d, a, b});
    emit(json{{"n", rat_str(h.n)}, {"gamma", h.gamma}});
    return 0;
}

int cmd_heegner_scan(int64_t d, int64_t gamma, const std::string& nmax_str) {
    Rat nmax = rat_parse(nmax_str);
    auto f = mul_scalar_vv(eisenstein_e10(rat_floor(nmax).convert_to<int64_t>() + 1),
                           siegel_theta(d, nmax + 1));
    bool all_pass = true;
    json rows = json::array();
    for (const auto& row : effective_scan(f, gamma, nmax)) {
        rows.push_back(json{{"n", rat_str(row.n)},
                            {"coefficient", rat_str(row.coefficient)},
                            {"bound", rat_str(row.bound)},
                            {"pass", row.pass}});
        all_pass = all_pass && row.pass;
    }
    emit(json{{"d", d}, {"gamma", gamma}, {"rows", rows}, {"all_pass", all_pass}});
    return all_pass ? 0 : 2;
}

std::pair<Rat, int64_t> parse_index(const std::string& s) {
    auto pos = s.find(',');
    if (pos == std::string::npos) throw std::invalid_argument("index must be \"n,gamma\"");
    return {rat_parse(s.substr(0, pos)), std::stoll(s.substr(pos + 1))};
}

int cmd_span_test(const std::string& forms_path, const std::vector<std::string>& target_strs,
                  const std::string& query_str) {
    std::ifstream in(forms_path);
    if (!in) throw std::invalid_argument("cannot open forms file: " + forms_path);
    json j = json::parse(in);
    std::vector<VVQExpansion> forms;
    if (j.is_array())
        for (const auto& e : j) forms.push_back(vv_from_json(e));
    else
        forms.push_back(vv_from_json(j));
    std::vector<std::pair<Rat, int64_t>> targets;
    for (const auto& t : target_strs) targets.push_back(parse_index(t));
    auto sol = span_test(forms, targets, parse_index(query_str));
    json out;
    out["solvable"] = bool(sol);
    if (sol) {
        json cs = json::array();
        for (const auto& c : *sol) cs.push_back(rat_str(c));
        out["coefficients"] = cs;
    }
    emit(out);
    return 0;
}

int cmd_weilrep_check(int64_t d, int64_t n) {
    auto rep = check_relations(d, n);
    auto neg = check_relations(d, n, /*flip_sqrt_sign=*/true);
    json out{{"d", d},
             {"signature_n", n},
             {"st_cubed_equals_s_squared", rep.st_cubed_equals_s_squared},
             {"s_eighth_identity", rep.s_eighth_identity},
             {"t_order_divides_4d", rep.t_order_divides_4d},
             {"s_unitary", rep.s_unitary},
             {"negative_control_fails", !neg.st_cubed_equals_s_squared},
             {"all_pass", rep.all_pass() && !neg.st_cubed_equals_s_squared}};
    emit(out);
    return out["all_pass"].get<bool>() ? 0 : 2;
}

int cmd_kuga_satake(const std::string& lat_spec, const std::string& xs, const std::string& ys,
                    const std::string& v1s, const std::string& v2s) {
    Lattice lat = load_lattice(lat_spec);
    auto p = make_period(lat, parse_vec(xs), parse_vec(ys));
    auto v1 = parse_vec(v1s), v2 = parse_vec(v2s);
    Mat<Rat> jm = complex_structure(p);
    std::size_t n = jm.size();
    Mat<Rat> j2 = mat_mul(jm, jm);
    bool j_squares = true;
    for (std::size_t i = 0; i < n && j_squares; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (j2[i][k] != (i == k ? Rat(-1) : Rat(0))) { j_squares = false; break; }
    auto rep = polarization_report(p, v1, v2);
    json out{{"dim", n},
             {"j_squared_is_minus_identity", j_squares},
             {"antisymmetric", rep.antisymmetric},
             {"j_invariant", rep.j_invariant},
             {"symmetric", rep.symmetric},
             {"inertia", json::array({rep.inertia.positive, rep.inertia.negative, rep.inertia.zero})},
             {"definite_sign", rep.definite_sign}};
    bool ok = j_squares && rep.antisymmetric && rep.j_invariant && rep.symmetric;
    out["all_pass"] = ok;
    emit(out);
    return ok ? 0 : 2;
}

template <class K>
int run_filtration(std::shared_ptr<const QuadSpace<K>> qs, const std::vector<Rat>& omega_q,
                   const std::vector<Rat>& v_q, auto lift) {
    std::vector<K> omega, v;
    for (const auto& c : omega_q) omega.push_back(lift(c));
    auto s = make_filtered_space(std::move(qs), omega);
    auto fil = induced_filtration(s);
    json out{{"clplus_dim", fil.clplus_dim},
             {"fil1_dim", fil.fil1.size()},
             {"fil0_dim", fil.fil0.size()},
             {"fil2_zero", fil.fil2_zero},
             {"graded_degrees_ok", fil.graded_degrees_ok}};
    bool ok = fil.fil2_zero && fil.graded_degrees_ok;
    if (!v_q.empty()) {
        for (const auto& c : v_q) v.push_back(lift(c));
        auto rep = psp_map_check(s, v);
        out["psp_kernel_dim"] = rep.kernel_dim;
        out["psp_image_dim"] = rep.image_dim;
        out["psp_equal_to_fil1"] = rep.equal_to_fil1;
        ok = ok && rep.equal_to_fil1;
    }
    out["all_pass"] = ok;
    emit(out);
    return ok ? 0 : 2;
}

int cmd_filtration(const std::string& lat_spec, const std::string& field, int64_t p,
                   const std::string& omega_s, const std::string& v_s) {
    Lattice lat = load_lattice(lat_spec);
    auto omega = parse_vec(omega_s);
    std::vector<Rat> v = v_s.empty() ? std::vector<Rat>{} : parse_vec(v_s);
    if (field == "Q")
        return run_filtration<Rat>(quad_space_q(lat), omega, v, [](const Rat& c) { return c; });
    if (field == "Fp") {
        if (p < 5) throw CLI::ValidationError("--p must be a prime >= 5");
        return run_filtration<Fp>(quad_space_fp(lat, p), omega, v, [p](const Rat& c) {
            if (!is_integer(c)) throw std::invalid_argument("Fp vectors must be integral");
            return Fp(rat_num(c).convert_to<int64_t>(), p);
        });
    }
    throw CLI::ValidationError("--field must be Q or Fp");
}

template <class K>
bool clifford_selftest_field(std::shared_ptr<const QuadSpace<K>> qs, auto rand_scalar) {
    std::size_t r = qs->rank();
    std::mt19937 rng(12345);
    auto rand_el = [&]() {
        typename CliffordElement<K>::Terms t;
        for (uint32_t m = 0; m < (uint32_t(1) << r); ++m)
            if (rng() % 3 == 0) t[m] = rand_scalar(rng);
        return CliffordElement<K>(qs, std::move(t));
    };
    for (int it = 0; it < 25; ++it) {
        auto a = rand_el(), b = rand_el(), c = rand_el();
        if (!((a * b) * c == a * (b * c))) return false;
        if (!(reversion(a * b) == reversion(b) * reversion(a))) return false;
    }
    // vw + wv = 2 psi(v, w) on basis vectors
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto vi = CliffordElement<K>::basis_vector(qs, i);
            auto vj = CliffordElement<K>::basis_vector(qs, j);
            K twice = qs->gram[i][j] + qs->gram[i][j];
            if (!(vi * vj + vj * vi == CliffordElement<K>::scalar(qs, twice))) return false;
        }
    return true;
}

int cmd_clifford_selftest() {
    json out;
    bool ok = true;
    for (const auto& lat :
         {make_u(), direct_sum(make_u(), make_u()), direct_sum(direct_sum(make_u(), make_u()), make_u())}) {
        bool q_ok = clifford_selftest_field<Rat>(
            quad_space_q(lat), [](std::mt19937& g) { return Rat(int64_t(g() % 19) - 9); });
        bool p_ok = clifford_selftest_field<Fp>(
            quad_space_fp(lat, 5), [](std::mt19937& g) { return Fp(int64_t(g() % 5), 5); });
        ok = ok && q_ok && p_ok;
    }
    out["associativity_reversion_anticommutation"] = ok;
    std::size_t kdim = degree2_relation_kernel_dim(quad_space_q(direct_sum(make_u(), make_u())));
    out["degree2_kernel_dim_rank4"] = kdim;
    ok = ok && kdim == 10;
    out["all_pass"] = ok;
    emit(out);
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice / Clifford / vector-valued q-series toolkit"};
    app.require_subcommand(1);

    std::string lat_spec = "U+U", field = "Q", omega_s, v_s, prec = "10", nmax_s = "10";
    std::string xs, ys, v1s, v2s, forms_path, query_str;
    std::vector<std::string> target_strs;
    int64_t d = 1, n_sig = 19, a_par = 0, b_par = 0, gamma = 0, p = 5, nmax_i = 10;

    auto* lat_cmd = app.add_subcommand("lattice", "lattice diagnostics");
    auto* lat_info = lat_cmd->add_subcommand("info", "rank, signature, determinant, discriminant group");
    lat_info->add_option("--name,--file", lat_spec, "builtin name (U, U+U, U+U+U, E8, K3, L<2d>) or JSON file");

    auto* eis = app.add_subcommand("eisenstein", "weight-10 Eisenstein q-expansion");
    eis->add_option("--nmax", nmax_i, "truncation exponent")->required();
    eis->add_option("--output", field, "json (default)");

    auto* th = app.add_subcommand("theta", "rank-1 theta series");
    th->add_option("--d", d)->required();
    th->add_option("--precision", prec, "rational exponent cutoff");

    auto* bs = app.add_subcommand("borcherds-scan", "effective nonvanishing scan over all residues");
    bs->add_option("--d", d)->required();
    bs->add_option("--nmax", nmax_s)->required();

    auto* hg = app.add_subcommand("heegner", "divisor-class bookkeeping");
    auto* hg_inv = hg->add_subcommand("invariants", "(n, gamma) of a rank-2 lattice");
    hg_inv->add_option("--d", d)->required();
    hg_inv->add_option("--a", a_par)->required();
    hg_inv->add_option("--b", b_par)->required();
    auto* hg_scan = hg->add_subcommand("scan", "effective nonvanishing scan at one residue");
    hg_scan->add_option("--d", d)->required();
    hg_scan->add_option("--gamma", gamma)->required();
    hg_scan->add_option("--nmax", nmax_s)->required();
    auto* hg_span = hg->add_subcommand("span-test", "functional span test");
    hg_span->add_option("--forms", forms_path, "JSON file of vector-valued expansions")->required();
    hg_span->add_option("--target", target_strs, "target index \"n,gamma\" (repeatable)")->required();
    hg_span->add_option("--query", query_str, "query index \"n,gamma\"")->required();

    auto* wr = app.add_subcommand("weilrep", "metaplectic relation checks");
    auto* wr_check = wr->add_subcommand("check", "verify the defining relations");
    wr_check->add_option("--d", d)->required();
    wr_check->add_option("--n", n_sig, "signature parameter (default 19)");

    auto* ks = app.add_subcommand("kuga-satake", "complex structure and pairing diagnostics");
    auto* ks_verify = ks->add_subcommand("verify", "J^2 = -I, pairing symmetry, inertia");
    ks_verify->add_option("--lattice", lat_spec, "builtin name or JSON file");
    ks_verify->add_option("--x", xs)->required();
    ks_verify->add_option("--y", ys)->required();
    ks_verify->add_option("--v1", v1s)->required();
    ks_verify->add_option("--v2", v2s)->required();

    auto* fil = app.add_subcommand("filtration", "filtered even Clifford algebra");
    auto* fil_check = fil->add_subcommand("check", "filtration dimensions and the exact-sequence map");
    fil_check->add_option("--lattice", lat_spec, "builtin name or JSON file");
    fil_check->add_option("--field", field, "Q or Fp");
    fil_check->add_option("--p", p, "characteristic for Fp (>= 5)");
    fil_check->add_option("--omega", omega_s, "isotropic vector")->required();
    fil_check->add_option("--v", v_s, "anisotropic vector for the exact-sequence map");

    auto* cl = app.add_subcommand("clifford", "Clifford algebra self-tests");
    cl->add_subcommand("selftest", "associativity, reversion, relation kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (lat_info->parsed()) return cmd_lattice_info(lat_spec);
        if (eis->parsed()) return cmd_eisenstein(nmax_i);
        if (th->parsed()) return cmd_theta(d, prec);
        if (bs->parsed()) return cmd_borcherds_scan(d, nmax_s);
        if (hg_inv->parsed()) return cmd_heegner_invariants(d, a_par, b_par);
        if (hg_scan->parsed()) return cmd_heegner_scan(d, gamma, nmax_s);
        if (hg_span->parsed()) return cmd_span_test(forms_path, target_strs, query_str);
        if (wr_check->parsed()) return cmd_weilrep_check(d, n_sig);
        if (ks_verify->parsed()) return cmd_kuga_satake(lat_spec, xs, ys, v1s, v2s);
        if (fil_check->parsed()) return cmd_filtration(lat_spec, field, p, omega_s, v_s);
        if (cl->parsed()) return cmd_clifford_selftest();
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
    std::cerr << "no subcommand\n";
    return 1;
}
