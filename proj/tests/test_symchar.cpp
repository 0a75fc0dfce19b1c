#include "lieho/symchar.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lieho;

TEST_CASE("irreducible character values") {
    // Trivial and sign rows.
    for (const auto& mu : partitions_of(5)) {
        CHECK(irr_char(Partition({5}), mu) == 1);
        int sgn = (5 - mu.length()) % 2 == 0 ? 1 : -1;
        CHECK(irr_char(Partition({1, 1, 1, 1, 1}), mu) == sgn);
    }
    CHECK(irr_char(Partition({3, 1, 1}), Partition({1, 1, 1, 1, 1})) == 6);
    CHECK_THROWS_AS(irr_char(Partition({2, 1}), Partition({2})), DimensionError);
}

TEST_CASE("standard character value on a 3-cycle via fixed points") {
    // The permutation module on 3 letters has character #fixed points; the
    // standard 2-dimensional summand has character (#fix - 1).
    Permutation c3 = Permutation::class_representative(Partition({3}));
    int fixed = 0;
    for (int i = 0; i < 3; ++i)
        if (c3(i) == i) ++fixed;
    CHECK(irr_char(Partition({2, 1}), Partition({3})) == fixed - 1);
    CHECK(irr_char(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("inner products and orthonormality") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                Rational ip = inner(ClassFunction::irreducible(lam), ClassFunction::irreducible(mu));
                CHECK(ip == (lam == mu ? Rational(1) : Rational(0)));
            }
    CHECK(inner(ClassFunction::trivial(4), ClassFunction::sign_cf(4)) == Rational(0));
}

TEST_CASE("regular representation decomposes with hook multiplicities") {
    ClassFunction reg = ClassFunction::regular(5);
    for (const auto& [lam, mult] : decompose(reg)) CHECK(mpz_class(mult) == hook_dimension(lam));
    CHECK(inner(reg, ClassFunction::irreducible(Partition({3, 1, 1}))) == Rational(6));
}

TEST_CASE("decompose validates genuine characters") {
    ClassFunction zero(4);
    CHECK(decompose(zero).empty());

    // chi_(2,2) - chi_(4) is a virtual character, not a character.
    ClassFunction bad = ClassFunction::irreducible(Partition({2, 2}));
    bad -= ClassFunction::irreducible(Partition({4}));
    CHECK_THROWS_AS(decompose(bad), NotACharacterError);

    // A non-integral class function.
    ClassFunction frac(3);
    frac.v[0] = Rational(1, 2);
    CHECK_THROWS_AS(decompose(frac), NotACharacterError);
}

TEST_CASE("decompose of the 20-dimensional induced module") {
    ClassFunction chi = induce_outer(
        induce_outer(ClassFunction::sign_cf(3), ClassFunction::trivial(1)), ClassFunction::trivial(1));
    auto dec = decompose(chi);
    REQUIRE(dec.size() == 4);
    CHECK(dec[0] == std::make_pair(Partition({3, 1, 1}), 1L));
    CHECK(dec[1] == std::make_pair(Partition({2, 2, 1}), 1L));
    CHECK(dec[2] == std::make_pair(Partition({2, 1, 1, 1}), 2L));
    CHECK(dec[3] == std::make_pair(Partition({1, 1, 1, 1, 1}), 1L));
}

TEST_CASE("induction product") {
    // Regular representation of S2.
    ClassFunction reg2 = induce_outer(ClassFunction::irreducible(Partition({1})),
                                      ClassFunction::irreducible(Partition({1})));
    ClassFunction expect2 = ClassFunction::irreducible(Partition({2}));
    expect2 += ClassFunction::irreducible(Partition({1, 1}));
    CHECK(reg2 == expect2);

    // sgn_n x triv_1 adds one box: column or new corner.
    for (int n = 2; n <= 5; ++n) {
        ClassFunction ind = induce_outer(ClassFunction::sign_cf(n), ClassFunction::trivial(1));
        std::vector<int> col(static_cast<std::size_t>(n + 1), 1);
        std::vector<int> hook{2};
        for (int i = 0; i < n - 1; ++i) hook.push_back(1);
        ClassFunction expect = ClassFunction::irreducible(Partition(col));
        expect += ClassFunction::irreducible(Partition(hook));
        CHECK(ind == expect);
    }

    ClassFunction ind = induce_outer(ClassFunction::irreducible(Partition({2, 1, 1})),
                                     ClassFunction::irreducible(Partition({1})));
    ClassFunction expect = ClassFunction::irreducible(Partition({3, 1, 1}));
    expect += ClassFunction::irreducible(Partition({2, 2, 1}));
    expect += ClassFunction::irreducible(Partition({2, 1, 1, 1}));
    CHECK(ind == expect);
}

TEST_CASE("bimodule class functions") {
    BimoduleClassFunction zero(4, 2);
    CHECK(decompose_bimodule(zero).empty());

    BimoduleClassFunction f = BimoduleClassFunction::outer(
        ClassFunction::irreducible(Partition({2, 1})), ClassFunction::sign_cf(2));
    f += BimoduleClassFunction::outer(ClassFunction::trivial(3), ClassFunction::trivial(2));
    auto dec = decompose_bimodule(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].lambda == Partition({3}));
    CHECK(dec[0].mu == Partition({2}));
    CHECK(dec[0].mult == 1);
    CHECK(dec[1].lambda == Partition({2, 1}));
    CHECK(dec[1].mu == Partition({1, 1}));
    CHECK(dec[1].mult == 1);
}

TEST_CASE("degenerate degrees") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    ClassFunction triv0 = ClassFunction::trivial(0);
    CHECK(inner(triv0, triv0) == Rational(1));
    CHECK(decompose(triv0).size() == 1);
}
