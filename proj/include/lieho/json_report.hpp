#pragma once

// Machine-readable reports; schema shipped at schemas/report.v1.json.
// Partitions serialize as descending part arrays, rationals as strings.

#include "lieho/homology.hpp"

#include <json.hpp>

namespace lieho {

using json = nlohmann::json;

inline json to_json(const Partition& p) { return json(p.parts()); }

inline json to_json(const HomologyReport& h) {
    json dec = json::array();
    for (const auto& e : h.entries)
        dec.push_back({{"lambda", to_json(e.lambda)}, {"mu", to_json(e.mu)}, {"mult", e.mult}});
    return {{"r", h.r},       {"n", h.n},           {"which", h.which},
            {"dim", h.dim},   {"decomposition", dec}, {"elapsed_ms", h.ms}};
}

inline json to_json(const CheckReport& r) {
    json checks = json::array();
    for (const auto& i : r.items)
        checks.push_back({{"name", i.name},
                          {"status", i.pass ? "pass" : "fail"},
                          {"detail", i.detail}});
    json data = json::object();
    for (const auto& [k, v] : r.data) data[k] = v;
    json hom = json::array();
    for (const auto& h : r.homology) hom.push_back(to_json(h));
    json out = {{"name", r.name},
                {"status", r.pass() ? "pass" : "fail"},
                {"checks", checks},
                {"data", data},
                {"elapsed_ms", r.ms}};
    if (!hom.empty()) out["homology"] = hom;
    if (r.not_applicable) out["not_applicable"] = true;
    return out;
}

struct ReportDocument {
    std::string command;
    json inputs = json::object();
    std::vector<CheckReport> results;
    std::vector<HomologyReport> homology;
    double total_ms = 0;

    bool pass() const {
        for (const auto& r : results)
            if (!r.pass()) return false;
        return true;
    }

    json to_json_doc() const {
        json results_j = json::array();
        for (const auto& r : results) results_j.push_back(to_json(r));
        for (const auto& h : homology) results_j.push_back(to_json(h));
        return {{"command", command},
                {"inputs", inputs},
                {"results", results_j},
                {"status", pass() ? "pass" : "fail"},
                {"timings", {{"total_ms", total_ms}}}};
    }
};

// CSV rendering of decompositions: columns lambda,mu,mult with partitions in
// dotted form ("-" for the empty partition).
inline std::string decomposition_csv(const std::vector<DecompEntry>& entries) {
    std::string out = "lambda,mu,mult\n";
    for (const auto& e : entries)
        out += e.lambda.str_dotted() + "," + e.mu.str_dotted() + "," + std::to_string(e.mult) + "\n";
    return out;
}

}  // namespace lieho
