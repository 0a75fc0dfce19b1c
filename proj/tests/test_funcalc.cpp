#include "lieho/funcalc.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lieho;

TEST_CASE("shape grammar") {
    FunctorShape sh = FunctorShape::parse("L3*T1*T1");
    CHECK(sh.size() == 3);
    CHECK(sh.total_degree() == 5);
    CHECK(sh.str() == "L3*T1*T1");
    CHECK(FunctorShape::parse("T2") == FunctorShape::parse("T1*T1"));
    CHECK(FunctorShape::parse("G1") == FunctorShape::parse("L1"));
    CHECK(FunctorShape::parse("G4").str() == "G4");
    CHECK_THROWS_AS(FunctorShape::parse("L3 *T1"), Error);
    CHECK_THROWS_AS(FunctorShape::parse("X2"), Error);
    CHECK_THROWS_AS(FunctorShape::parse("L"), Error);
    CHECK_THROWS_AS(FunctorShape::parse("L3*"), Error);
}

TEST_CASE("multilinear basis enumeration") {
    CHECK(MLBasis(FunctorShape::parse("L3*T1")).dim() == 4);
    CHECK(MLBasis(FunctorShape::parse("G3")).dim() == 1);
    CHECK(MLBasis(FunctorShape::parse("G4")).dim() == 1);
    CHECK(MLBasis(FunctorShape::parse("L2*L2")).dim() == 6);
    CHECK(MLBasis(FunctorShape::parse("L3*G2")).dim() == 10);

    // Round trip of rank and unrank.
    MLBasis b(FunctorShape::parse("L2*G2*T1"));
    for (std::size_t i = 0; i < b.dim(); ++i) CHECK(b.index(b.element(i)) == i);
}

TEST_CASE("letter action") {
    FunctorShape l2 = FunctorShape::parse("L2");
    CHECK(letter_action(l2, Permutation::identity(2)) == SparseMat::identity(1));
    SparseMat sw = letter_action(l2, Permutation::transposition(2, 0, 1));
    CHECK(sw.to_dense().at(0, 0) == Rational(-1));

    FunctorShape g2 = FunctorShape::parse("G2");
    SparseMat swg = letter_action(g2, Permutation::transposition(2, 0, 1));
    CHECK(swg.to_dense().at(0, 0) == Rational(1));

    CHECK_THROWS_AS(letter_action(l2, Permutation::identity(3)), DimensionError);
}

TEST_CASE("slot action") {
    FunctorShape tt = FunctorShape::parse("T1*T1");
    // Basis {0 (x) 1, 1 (x) 0}; the swap exchanges them without sign.
    SparseMat sw = slot_action(tt, Permutation::transposition(2, 0, 1));
    QMatrix m = sw.to_dense();
    CHECK(m.at(0, 1) == Rational(1));
    CHECK(m.at(1, 0) == Rational(1));
    CHECK(m.at(0, 0).is_zero());

    FunctorShape ll = FunctorShape::parse("L2*L2");
    SparseMat swl = slot_action(ll, Permutation::transposition(2, 0, 1));
    // Enumeration oracle: no letter split is fixed by the swap, so trace 0.
    MLBasis b(ll);
    Rational expected;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        MLElem e = b.element(i);
        if (e[0] == e[1]) expected += 1;  // never happens: disjoint blocks
    }
    CHECK(swl.trace() == expected);
    CHECK(swl.trace() == Rational(0));

    // Kind mismatch is rejected.
    CHECK_THROWS_AS(slot_action(FunctorShape::parse("L2*T1"), Permutation::transposition(2, 0, 1)),
                    DimensionError);
}

TEST_CASE("wedge coproduct matches the unshuffle formula") {
    // psi_{3,1} on x^y^z^w = xyz (x) w - xyw (x) z + xzw (x) y - yzw (x) x.
    LocalMap psi = local_wedge_coproduct(3, 1);
    MLBasis cod(psi.cod);
    QMatrix m = psi.m.to_dense();
    REQUIRE(m.cols() == 1);
    CHECK(m.at(cod.index({{0, 1, 2}, {3}}), 0) == Rational(1));
    CHECK(m.at(cod.index({{0, 1, 3}, {2}}), 0) == Rational(-1));
    CHECK(m.at(cod.index({{0, 2, 3}, {1}}), 0) == Rational(1));
    CHECK(m.at(cod.index({{1, 2, 3}, {0}}), 0) == Rational(-1));

    // mu . psi = 4 Id on L4.
    LocalMap mu = local_wedge_product(3, 1);
    QMatrix comp = mu.m.to_dense() * m;
    CHECK(comp.at(0, 0) == Rational(4));
}

TEST_CASE("divided power coproduct and tensor expansion") {
    LocalMap split = local_gamma_coproduct(1, 1);
    MLBasis cod(split.cod);
    QMatrix m = split.m.to_dense();
    CHECK(m.at(cod.index({{0}, {1}}), 0) == Rational(1));
    CHECK(m.at(cod.index({{1}, {0}}), 0) == Rational(1));

    LocalMap full = local_gamma_to_tensor(3);
    QMatrix f = full.m.to_dense();
    REQUIRE(f.rows() == 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(f.at(i, 0) == Rational(1));
}

TEST_CASE("de Rham differential") {
    // (a,b) = (1,1): x (x) y -> x^y; kernel dim 1 (the symmetric tensor).
    ShapedMap d11 = de_rham_d(1, 1);
    QMatrix m = d11.m.to_dense();
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 2);
    CHECK(m.at(0, 0) == Rational(1));   // 0 (x) 1 -> 0^1
    CHECK(m.at(0, 1) == Rational(-1));  // 1 (x) 0 -> -0^1
    KernelResult k11 = kernel_basis(d11.m);
    CHECK(k11.dim() == 1);
    CHECK(k11.rank == 1);  // surjective: zero cokernel

    // (a,b) = (3,2) on five letters: a 5x10 matrix of rank 4.
    ShapedMap d32 = de_rham_d(3, 2);
    CHECK(d32.m.rows() == 5);
    CHECK(d32.m.cols() == 10);
    KernelResult k32 = kernel_basis(d32.m);
    CHECK(k32.rank == 4);
    CHECK(k32.dim() == 6);

    Subspace ker = Subspace::from_span(10, k32.basis);
    CHECK(subrep_character(d32.dom, ker) == ClassFunction::irreducible(Partition({3, 1, 1})));

    // d . d = 0.
    ShapedMap d43 = de_rham_d(4, 1);
    ShapedMap d32b = de_rham_d(3, 2);
    CHECK(d43.m.mul_sparse(d32b.m).is_zero());

    CHECK_THROWS_AS(de_rham_d(2, 0), DimensionError);
}

TEST_CASE("kernel of d embeds the hook Schur functor") {
    for (int r = 3; r <= 4; ++r) {
        ShapedMap d = de_rham_d(3, r - 1);
        KernelResult k = kernel_basis(d.m);
        CHECK(k.dim() == static_cast<std::size_t>(r * (r + 1) / 2));
        Subspace ker = Subspace::from_span(MLBasis(d.dom).dim(), k.basis);
        CHECK(subrep_character(d.dom, ker) == ClassFunction::irreducible(Partition({r, 1, 1})));
    }
}

TEST_CASE("subrep characters") {
    FunctorShape sh = FunctorShape::parse("L3*T1");
    MLBasis b(sh);
    Subspace full = Subspace::from_span(b.dim(), QMatrix::identity(b.dim()));
    auto dec = decompose(subrep_character(sh, full));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0] == std::make_pair(Partition({2, 1, 1}), 1L));
    CHECK(dec[1] == std::make_pair(Partition({1, 1, 1, 1}), 1L));

    Subspace zero = Subspace::from_span(b.dim(), QMatrix(b.dim(), 0));
    CHECK(subrep_character(sh, zero).is_zero());

    // A single basis vector is not invariant.
    QMatrix one(b.dim(), 1);
    one.at(0, 0) = 1;
    Subspace line = Subspace::from_span(b.dim(), one);
    CHECK_THROWS_AS(subrep_character(sh, line), NotInvariantError);
}

TEST_CASE("bimodule character of the full shape space") {
    FunctorShape sh = FunctorShape::parse("L2*L2");
    MLBasis b(sh);
    Subspace full = Subspace::from_span(b.dim(), QMatrix::identity(b.dim()));
    BimoduleClassFunction chi = subrep_bimodule_character(sh, full, {0, 1});
    auto dec = decompose_bimodule(chi);
    // Lambda^4 x triv + S_(2,2) x triv + S_(2,1,1) x sgn.
    REQUIRE(dec.size() == 3);
    CHECK(dec[0].lambda == Partition({2, 2}));
    CHECK(dec[0].mu == Partition({2}));
    CHECK(dec[1].lambda == Partition({2, 1, 1}));
    CHECK(dec[1].mu == Partition({1, 1}));
    CHECK(dec[2].lambda == Partition({1, 1, 1, 1}));
    CHECK(dec[2].mu == Partition({2}));
}

TEST_CASE("intersection of subspaces") {
    FunctorShape sh = FunctorShape::parse("L3*T1");
    MLBasis b(sh);
    ShapedMap psi = apply_local(shape_of({L(4)}), {0}, {0, 1}, local_wedge_coproduct(3, 1));
    Subspace s = Subspace::from_span(b.dim(), psi.m.to_dense());
    CHECK(intersect(s, s) == s);

    Subspace other = Subspace::from_span(5, QMatrix(5, 0));
    CHECK_THROWS_AS(intersect(s, other), AmbientMismatchError);
}

TEST_CASE("dimension bookkeeping across decompositions") {
    for (const char* ss : {"L3*T1", "L2*L2", "L3*G2", "G2*G2", "L2*T1*T1"}) {
        FunctorShape sh = FunctorShape::parse(ss);
        mpz_class total = 0;
        for (const auto& [lam, mult] : decompose(shape_character(sh)))
            total += mpz_class(mult) * hook_dimension(lam);
        CHECK(total == mpz_class(MLBasis(sh).dim()));
    }
}
