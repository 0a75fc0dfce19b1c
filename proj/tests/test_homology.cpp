#include "lieho/homology.hpp"
#include "lieho/properties.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lieho;

TEST_CASE("H1 in low weights") {
    // n <= r vanishes.
    for (int r = 0; r <= 3; ++r)
        for (int n = 0; n <= r; ++n) CHECK(h1_bimodule(r, n).dim == 0);

    // n = r+1 is the one-dimensional divided power.
    HomologyReport h23 = h1_bimodule(2, 3);
    REQUIRE(h23.dim == 1);
    REQUIRE(h23.entries.size() == 1);
    CHECK(h23.entries[0].lambda == Partition({3}));
    CHECK(h23.entries[0].mu == Partition({2}));
    CHECK(h23.entries[0].mult == 1);

    // r=1, n=3: Lambda^3 x sgn_1.
    HomologyReport h13 = h1_bimodule(1, 3);
    REQUIRE(h13.entries.size() == 1);
    CHECK(h13.entries[0].lambda == Partition({1, 1, 1}));
    CHECK(h13.entries[0].mu == Partition({1}));

    // r=1, n=4: dimension (n-2)! = 2.
    CHECK(h1_bimodule(1, 4).dim == 2);

    // r=0: H1 is V, concentrated in weight 1.
    CHECK(h1_bimodule(0, 1).dim == 1);
    CHECK(h1_bimodule(0, 2).dim == 0);
}

TEST_CASE("H0 with the dual-route consistency check") {
    HomologyReport h00 = h0_bimodule(0, 0);
    CHECK(h00.dim == 1);

    HomologyReport h11 = h0_bimodule(1, 1);
    REQUIRE(h11.dim == 1);
    REQUIRE(h11.entries.size() == 1);
    CHECK(h11.entries[0].lambda == Partition({1}));
    CHECK(h11.entries[0].mu == Partition({1}));

    // r=2, n=2: the adjoint map has empty domain, so H0 is all of
    // (Lie (x) Lie)^[2], of dimension 2.
    HomologyReport h22 = h0_bimodule(2, 2);
    CHECK(h22.dim == 2);

    // Larger mixed case; the ConsistencyError guard inside is the test.
    CHECK_NOTHROW(h0_bimodule(2, 4));
    CHECK_NOTHROW(h0_bimodule(3, 4));
}

TEST_CASE("main theorem for r = 0..3") {
    for (int r = 0; r <= 3; ++r) {
        CheckReport rep = verify_theorem(r);
        INFO(rep.name);
        CHECK(rep.pass());
    }
}

TEST_CASE("r=3 constant suite") {
    CheckReport rep = verify_r3_case();
    for (const auto& item : rep.items) {
        INFO(item.name << " " << item.detail);
        CHECK(item.pass);
    }
    CHECK(rep.data.at("trace20") == "0");
    CHECK(rep.data.at("blockTrace") == "-1/2");
    CHECK(rep.data.at("blockDet") == "1");
}

TEST_CASE("inductive step") {
    CHECK_THROWS_AS(verify_inductive_step(2), DimensionError);
    CheckReport r3 = verify_inductive_step(3);
    CHECK(r3.not_applicable);
    CHECK(r3.pass());
    CHECK(r3.data.count("note") == 1);

    CheckReport r4 = verify_inductive_step(4);
    for (const auto& item : r4.items) {
        INFO(item.name << " " << item.detail);
        CHECK(item.pass);
    }
}

TEST_CASE("lower bound families") {
    CHECK_THROWS_AS(lower_bound_check(1), DimensionError);
    for (int r = 2; r <= 3; ++r) {
        CheckReport rep = lower_bound_check(r);
        for (const auto& item : rep.items) {
            INFO(rep.name << ": " << item.name << " " << item.detail);
            CHECK(item.pass);
        }
    }
}

TEST_CASE("Euler relation for small r") {
    CheckReport rep = euler_suite(2);
    for (const auto& item : rep.items) {
        INFO(item.name);
        CHECK(item.pass);
    }
}

TEST_CASE("conjugate partition translation") {
    CheckReport rep = conjugate_translation_check(4);
    for (const auto& item : rep.items) {
        INFO(item.name << " " << item.detail);
        CHECK(item.pass);
    }
}

TEST_CASE("identity suite passes") {
    CheckReport rep = verify_identity_suite();
    for (const auto& item : rep.items) {
        INFO(item.name << " " << item.detail);
        CHECK(item.pass);
    }
}

TEST_CASE("property suite passes") {
    CheckReport rep = property_suite();
    for (const auto& item : rep.items) {
        INFO(item.name << " " << item.detail);
        CHECK(item.pass);
    }
}
