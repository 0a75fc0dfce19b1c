// lieho command line front end: run verification suites, compute homology
// bimodule decompositions, decompose multilinear characters.
//
// Exit codes: 0 success (all checks pass), 1 mathematical mismatch or failed
// check, 2 usage error.

#include "lieho/json_report.hpp"
#include "lieho/properties.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace lieho;

struct RRange {
    int lo = 1, hi = 4;
    bool explicit_range = false;
};

bool parse_rrange(const std::string& s, RRange& out) {
    out.explicit_range = true;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            out.lo = out.hi = std::stoi(s);
        } else {
            out.lo = std::stoi(s.substr(0, dots));
            out.hi = std::stoi(s.substr(dots + 2));
        }
    } catch (...) {
        return false;
    }
    return out.lo >= 0 && out.hi >= out.lo;
}

void emit(const std::string& text, const std::string& outfile) {
    if (outfile.empty()) {
        std::cout << text << std::endl;
    } else {
        std::ofstream f(outfile);
        if (!f) throw std::runtime_error("cannot open output file " + outfile);
        f << text << std::endl;
    }
}

int run_verify(const std::string& scope, RRange rr, bool deep, const std::string& outfile) {
    static const std::vector<std::string> known{"theorem",   "identities", "r3",       "inductive",
                                                "differential", "intersect", "smalln", "r1chain",
                                                "euler",     "conjugate",  "properties", "all"};
    if (std::find(known.begin(), known.end(), scope) == known.end()) {
        std::cerr << "unknown scope '" << scope << "'\n";
        return 2;
    }
    auto in_scope = [&](const char* s) { return scope == s || scope == "all"; };

    ReportDocument doc;
    doc.command = "verify";
    doc.inputs = {{"scope", scope}, {"r", {rr.lo, rr.hi}}, {"deep", deep}};
    Stopwatch sw;

    if (in_scope("theorem")) {
        int hi = rr.hi;
        if (deep && !rr.explicit_range) hi = 5;
        for (int r = rr.lo; r <= hi; ++r)
            doc.results.push_back(verify_theorem(r, /*adbar_route=*/r <= 4));
    }
    if (in_scope("identities")) doc.results.push_back(verify_identity_suite());
    if (in_scope("r3")) doc.results.push_back(verify_r3_case());
    if (in_scope("inductive")) {
        int lo = rr.explicit_range ? rr.lo : 4;
        int hi = rr.explicit_range ? rr.hi : (deep ? 5 : 4);
        for (int r = std::max(lo, 3); r <= hi; ++r) doc.results.push_back(verify_inductive_step(r));
        if (rr.explicit_range && rr.lo < 3) throw DimensionError("inductive scope needs r >= 3");
    }
    if (in_scope("differential")) doc.results.push_back(differential_suite());
    if (in_scope("intersect")) doc.results.push_back(intersection_suite());
    if (in_scope("smalln")) doc.results.push_back(low_weight_suite(6));
    if (in_scope("r1chain")) doc.results.push_back(r1_chain_suite(6));
    if (in_scope("euler")) doc.results.push_back(euler_suite(4));
    if (in_scope("conjugate")) doc.results.push_back(conjugate_translation_check(4));
    if (in_scope("properties")) doc.results.push_back(property_suite());

    doc.total_ms = sw.ms();
    emit(doc.to_json_doc().dump(2), outfile);
    return doc.pass() ? 0 : 1;
}

int run_homology(int r, int n, const std::string& which, const std::string& format,
                 const std::string& outfile) {
    if (r < 0 || n < 0) {
        std::cerr << "r and n must be nonnegative\n";
        return 2;
    }
    if (which != "h1" && which != "h0" && which != "both") {
        std::cerr << "--which must be h1, h0 or both\n";
        return 2;
    }
    if (format != "json" && format != "csv") {
        std::cerr << "--format must be json or csv\n";
        return 2;
    }
    ReportDocument doc;
    doc.command = "homology";
    doc.inputs = {{"r", r}, {"n", n}, {"which", which}};
    Stopwatch sw;
    if (which == "h1" || which == "both") doc.homology.push_back(h1_bimodule(r, n));
    if (which == "h0" || which == "both") doc.homology.push_back(h0_bimodule(r, n));
    doc.total_ms = sw.ms();
    if (format == "csv") {
        std::string out;
        for (const auto& h : doc.homology) out += decomposition_csv(h.entries);
        emit(out, outfile);
    } else {
        emit(doc.to_json_doc().dump(2), outfile);
    }
    return 0;
}

int run_character(const std::string& shape_str, int n, const std::string& format,
                  const std::string& outfile) {
    FunctorShape shape;
    try {
        shape = FunctorShape::parse(shape_str);
    } catch (const Error& e) {
        std::cerr << "shape parse error: " << e.what() << "\n";
        return 2;
    }
    if (n >= 0 && n != shape.total_degree()) {
        std::cerr << "--n disagrees with the total degree " << shape.total_degree() << "\n";
        return 2;
    }
    if (format != "json" && format != "csv") {
        std::cerr << "--format must be json or csv\n";
        return 2;
    }
    Stopwatch sw;
    auto dec = decompose(shape_character(shape));
    std::vector<DecompEntry> entries;
    for (const auto& [lam, mult] : dec) entries.push_back({lam, Partition(), mult});
    if (format == "csv") {
        emit(decomposition_csv(entries), outfile);
        return 0;
    }
    json dec_j = json::array();
    for (const auto& [lam, mult] : dec) dec_j.push_back({{"lambda", to_json(lam)}, {"mult", mult}});
    json doc = {{"command", "character"},
                {"inputs", {{"shape", shape.str()}, {"n", shape.total_degree()}}},
                {"results",
                 json::array({json{{"name", "character " + shape.str()},
                                   {"status", "pass"},
                                   {"dim", MLBasis(shape).dim()},
                                   {"decomposition", dec_j}}})},
                {"status", "pass"},
                {"timings", {{"total_ms", sw.ms()}}}};
    emit(doc.dump(2), outfile);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "lieho: exact computation of H_1(Lie(V); Lie(V)^r) in low multilinear weight,\n"
        "with symmetric-group bimodule decompositions over the rationals.\n"
        "Internal parallelism is capped by the LIEHO_THREADS environment variable."};
    app.require_subcommand(1);

    bool seed_order = false;
    app.add_flag("--seed-order", seed_order,
                 "rejected: all computations are deterministic, there is nothing to seed");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string scope = "all";
    std::string rtext;
    bool deep = false;
    std::string outfile;
    verify->add_option("--scope", scope,
                       "theorem|identities|r3|inductive|differential|intersect|smalln|"
                       "r1chain|euler|conjugate|properties|all");
    verify->add_option("--r", rtext, "r or a..b (default 1..4 for theorem, 4 for inductive)");
    verify->add_flag("--deep", deep, "include the larger r=5 eliminations");
    verify->add_option("--out", outfile, "write the JSON report to a file");

    auto* homology = app.add_subcommand("homology", "bimodule decomposition of H0/H1");
    int hr = -1, hn = -1;
    std::string which = "both", hformat = "json", houtfile;
    homology->add_option("--r", hr, "number of adjoint tensor factors")->required();
    homology->add_option("--n", hn, "multilinear weight")->required();
    homology->add_option("--which", which, "h1|h0|both");
    homology->add_option("--format", hformat, "json|csv (csv columns: lambda,mu,mult)");
    homology->add_option("--out", houtfile, "write the report to a file");

    auto* character = app.add_subcommand("character", "decompose a multilinear component");
    std::string shape_str, cformat = "json", coutfile;
    int cn = -1;
    character->add_option("--shape", shape_str,
                          "shape word, e.g. L3*T1*T1 (Lk wedge, Gk divided, Tk bare letters)")
        ->required();
    character->add_option("--n", cn, "expected total degree (validated)");
    character->add_option("--format", cformat, "json|csv");
    character->add_option("--out", coutfile, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (seed_order) {
        std::cerr << "--seed-order is rejected: all computations are deterministic; "
                     "no randomness exists to seed\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            RRange rr;
            if (!rtext.empty() && !parse_rrange(rtext, rr)) {
                std::cerr << "bad --r range '" << rtext << "'\n";
                return 2;
            }
            return run_verify(scope, rr, deep, outfile);
        }
        if (homology->parsed()) return run_homology(hr, hn, which, hformat, houtfile);
        if (character->parsed()) return run_character(shape_str, cn, cformat, coutfile);
    } catch (const DimensionError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
