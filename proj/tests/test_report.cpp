#include "lieho/json_report.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lieho;

TEST_CASE("report document round trip") {
    ReportDocument doc;
    doc.command = "verify";
    doc.inputs = {{"scope", "theorem"}, {"r", {2, 2}}, {"deep", false}};
    doc.results.push_back(verify_theorem(2));
    doc.total_ms = doc.results[0].ms;

    json j = doc.to_json_doc();
    CHECK(j["status"] == "pass");
    CHECK(j["command"] == "verify");

    // Re-read and re-validate: the parsed document equals the emitted one.
    std::string text = j.dump(2);
    json back = json::parse(text);
    CHECK(back == j);
    CHECK(back["results"].is_array());
    for (const auto& r : back["results"]) {
        CHECK(r.contains("name"));
        CHECK(r.contains("status"));
        CHECK((r["status"] == "pass" || r["status"] == "fail"));
    }
}

TEST_CASE("homology report serialization") {
    HomologyReport h = h1_bimodule(2, 3);
    json j = to_json(h);
    CHECK(j["r"] == 2);
    CHECK(j["n"] == 3);
    CHECK(j["which"] == "h1");
    CHECK(j["dim"] == 1);
    REQUIRE(j["decomposition"].size() == 1);
    CHECK(j["decomposition"][0]["lambda"] == json::array({3}));
    CHECK(j["decomposition"][0]["mu"] == json::array({2}));
    CHECK(j["decomposition"][0]["mult"] == 1);
}

TEST_CASE("csv rendering") {
    HomologyReport h = h1_bimodule(2, 3);
    CHECK(decomposition_csv(h.entries) == "lambda,mu,mult\n3,2,1\n");

    std::vector<DecompEntry> entries{{Partition({3, 1, 1}), Partition(), 2}};
    CHECK(decomposition_csv(entries) == "lambda,mu,mult\n3.1.1,-,2\n");
}

TEST_CASE("failing checks surface in the document status") {
    ReportDocument doc;
    doc.command = "verify";
    CheckReport bad;
    bad.name = "synthetic";
    bad.add("always fails", false, "by construction");
    doc.results.push_back(bad);
    CHECK(!doc.pass());
    CHECK(doc.to_json_doc()["status"] == "fail");
}
