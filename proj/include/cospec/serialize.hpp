#pragma once

#include <string>

#include <json.hpp>

#include "cospec/charpoly.hpp"
#include "cospec/search.hpp"
#include "cospec/spectra.hpp"

namespace cospec {

using json = nlohmann::json;

inline json spectrum_to_json(const Spectrum& s) {
    json groups = json::array();
    for (const auto& [value, mult] : s.groups) groups.push_back({value, mult});
    return {{"values", s.values}, {"groups", groups}};
}

/// Exact coefficients as decimal strings, constant term first.
inline json charpoly_to_json(const CharPoly& cp) {
    json arr = json::array();
    for (const auto& c : cp.coeffs) arr.push_back(c.str());
    return arr;
}

inline json main_angles_to_json(const MainAngles& ma) {
    json arr = json::array();
    for (std::size_t i = 0; i < ma.mu.size(); ++i) arr.push_back({ma.mu[i], ma.beta[i]});
    return arr;
}

inline json count_report_to_json(const CountReport& r) {
    return {{"c3", r.n_c3}, {"c4", r.n_c4}, {"c5", r.n_c5}, {"c3_star", r.n_c3_star}};
}

inline json search_report_to_json(const SearchReport& r) {
    return {{"target_g6", r.target_g6},
            {"target_charpoly", charpoly_to_json(r.target_charpoly)},
            {"classes_scanned", r.classes_scanned},
            {"mates", r.mates},
            {"ds_within_scope", r.ds_within_scope()},
            {"elapsed_seconds", r.elapsed_seconds},
            {"audit", r.audit}};
}

/// CSV of (canonical graph6, characteristic polynomial) pairs for external
/// auditing; the polynomial in its text form.
inline std::string mates_to_csv(const SearchReport& r) {
    std::string out = "canonical_g6,charpoly\n";
    out += r.target_g6 + "," + poly_to_text(r.target_charpoly) + "\n";
    for (const auto& g6 : r.mates)
        out += g6 + "," + poly_to_text(char_poly(graph6_decode(g6))) + "\n";
    return out;
}

} // namespace cospec
