#pragma once

#include <nlohmann/json.hpp>

#include "spinlat/cyclotomic.hpp"
#include "spinlat/lattice.hpp"
#include "spinlat/qseries.hpp"

// Header expects nlohmann/json.hpp on the include path (vendored copy is
// exposed as <nlohmann/json.hpp> by the build).

namespace spinlat {

using json = nlohmann::json;

/// Rationals travel as strings "p" or "p/q" in lowest terms.
inline json rat_to_json(const Rat& r) { return rat_str(r); }

inline Rat rat_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
    return rat_parse(j.get<std::string>());
}

inline json lattice_to_json(const Lattice& lat) {
    json rows = json::array();
    for (const auto& row : lat.gram) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.str());
        rows.push_back(std::move(r));
    }
    return json{{"gram", rows}};
}

inline Lattice lattice_from_json(const json& j) {
    if (!j.contains("gram")) throw std::invalid_argument("lattice JSON must contain \"gram\"");
    Lattice lat;
    for (const auto& row : j.at("gram")) {
        std::vector<Int> r;
        for (const auto& e : row) {
            if (e.is_number_integer()) r.emplace_back(e.get<int64_t>());
            else r.emplace_back(Int(e.get<std::string>()));
        }
        lat.gram.push_back(std::move(r));
    }
    lat.validate();
    return lat;
}

inline json cyc_to_json(const CycNum& c) {
    json coeffs = json::array();
    for (const auto& q : c.coeffs()) coeffs.push_back(rat_str(q));
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

inline json scalar_series_to_json(const ScalarQSeries& s) {
    json coeffs = json::array();
    for (const auto& [n, c] : s.coeffs) coeffs.push_back(json::array({std::to_string(n), rat_str(c)}));
    return json{{"precision", std::to_string(s.precision)}, {"coeffs", coeffs}};
}

inline json vv_to_json(const VVQExpansion& v) {
    json comps = json::array();
    for (int64_t g = 0; g < v.order(); ++g) {
        json terms = json::array();
        for (const auto& [e, c] : v.components[g])
            if (c != 0) terms.push_back(json::array({rat_str(e), rat_str(c)}));
        comps.push_back(json{{"gamma", g}, {"terms", terms}});
    }
    return json{{"d", v.d},
                {"precision", rat_str(v.precision)},
                {"components", comps}};
}

inline VVQExpansion vv_from_json(const json& j) {
    VVQExpansion v;
    v.d = j.at("d").get<int64_t>();
    v.precision = rat_from_json(j.at("precision"));
    v.components.resize(std::size_t(2 * v.d));
    for (const auto& comp : j.at("components")) {
        int64_t g = comp.at("gamma").get<int64_t>();
        auto& dest = v.components[std::size_t(v.canonical_gamma(g))];
        for (const auto& term : comp.at("terms"))
            dest[rat_from_json(term.at(0))] = rat_from_json(term.at(1));
    }
    return v;
}

}  // namespace spinlat
