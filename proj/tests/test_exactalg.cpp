#include "lieho/exactalg.hpp"
#include "lieho/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace lieho;

TEST_CASE("rational canonical form") {
    Rational a(2, 4);
    CHECK(a.num() == 1);
    CHECK(a.den() == 2);
    Rational b(-3, -6);
    CHECK(b == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(3, -4).den() == 4);
    CHECK(Rational(3, -4).num() == -3);
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(8, 4).str() == "2");
}

TEST_CASE("permutation operations") {
    Permutation id = Permutation::identity(5);
    CHECK(id.sign() == 1);
    CHECK(Permutation::transposition(4, 1, 3).sign() == -1);
    // (1 2 3)(4 5) in cycle notation has type (3,2).
    Permutation p = Permutation::cycle(5, {0, 1, 2}) * Permutation::cycle(5, {3, 4});
    CHECK(p.cycle_type() == Partition({3, 2}));
    CHECK(p.sign() == -1);
    Permutation q = Permutation::cycle(5, {0, 3, 2});
    CHECK((p * q).sign() == p.sign() * q.sign());
    CHECK((p * p.inverse()) == id);
    CHECK(Permutation::class_representative(Partition({3, 2})).cycle_type() == Partition({3, 2}));
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
}

TEST_CASE("partitions in reverse lexicographic order") {
    const auto& p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));

    // Independent count by the Euler recurrence p(n) = sum over k of
    // (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)].
    std::vector<long> pn{1};
    for (int n = 1; n <= 10; ++n) {
        long total = 0;
        for (int k = 1;; ++k) {
            long g1 = n - k * (3 * k - 1) / 2;
            long g2 = n - k * (3 * k + 1) / 2;
            if (g1 < 0 && g2 < 0) break;
            long term = (g1 >= 0 ? pn[g1] : 0) + (g2 >= 0 ? pn[g2] : 0);
            total += (k % 2 == 1) ? term : -term;
        }
        pn.push_back(total);
    }
    for (int n = 0; n <= 10; ++n) CHECK(partitions_of(n).size() == static_cast<std::size_t>(pn[n]));
}

TEST_CASE("hook dimensions and conjugates") {
    CHECK(hook_dimension(Partition({3, 1, 1})) == 6);
    CHECK(hook_dimension(Partition({5})) == 1);
    CHECK(hook_dimension(Partition({2, 1})) == 2);
    for (int n = 1; n <= 8; ++n) {
        mpz_class sum = 0;
        for (const auto& lam : partitions_of(n)) sum += hook_dimension(lam) * hook_dimension(lam);
        CHECK(sum == factorial_z(n));
    }
    for (int r = 2; r <= 6; ++r) {
        std::vector<int> hook{3};
        for (int i = 0; i < r - 1; ++i) hook.push_back(1);
        CHECK(Partition({r, 1, 1}).conjugate() == Partition(hook));
    }
    for (const auto& lam : partitions_of(6)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("kernel of simple matrices") {
    SparseMat zero(2, 2);
    KernelResult kz = kernel_basis(zero);
    CHECK(kz.dim() == 2);
    CHECK(kz.rank == 0);
    CHECK(kz.basis == QMatrix::identity(2));

    KernelResult ki = kernel_basis(SparseMat::identity(2));
    CHECK(ki.dim() == 0);
    CHECK(ki.rank == 2);
}

TEST_CASE("kernel properties on random sparse matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-5, 5);
    std::uniform_int_distribution<int> dims(1, 14);
    std::uniform_int_distribution<int> keep(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = dims(rng), c = dims(rng);
        SparseMat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (keep(rng) == 0) m.add(i, j, Rational(val(rng), 1 + (trial % 3)));
        KernelResult k = kernel_basis(m);
        CHECK(k.rank + k.dim() == c);
        if (k.dim() > 0) {
            CHECK(m.mul_dense(k.basis).is_zero());
            CHECK(rank_of(k.basis) == k.dim());
        }
        // The canonical form is idempotent.
        CHECK(rcef(k.basis) == k.basis);
    }
}

TEST_CASE("solve in span") {
    QMatrix b = QMatrix::identity(3);
    QMatrix w(3, 2);
    w.at(0, 0) = 5;
    w.at(2, 1) = Rational(-1, 2);
    CHECK(solve_in_span(b, w) == w);

    QMatrix col(2, 1);
    col.at(0, 0) = 1;
    col.at(1, 0) = 1;
    QMatrix target(2, 1);
    target.at(0, 0) = 2;
    target.at(1, 0) = 2;
    QMatrix c = solve_in_span(col, target);
    CHECK(c.rows() == 1);
    CHECK(c.at(0, 0) == Rational(2));

    QMatrix outside(2, 1);
    outside.at(0, 0) = 1;
    outside.at(1, 0) = 3;
    CHECK_THROWS_AS(solve_in_span(col, outside), NotInSpanError);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix basis(7, 3);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 3; ++j) basis.at(i, j) = val(rng);
        if (rank_of(basis) != 3) continue;
        CHECK(solve_in_span(basis, basis) == QMatrix::identity(3));
    }
}

TEST_CASE("intersection of spans") {
    // Two planes in Q^3 meeting in a line.
    QMatrix a(3, 2), b(3, 2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 1;  // span{e0, e1}
    b.at(1, 0) = 1;
    b.at(2, 1) = 1;  // span{e1, e2}
    QMatrix meet = intersect_spans(a, b);
    REQUIRE(meet.cols() == 1);
    CHECK(meet.at(1, 0) == Rational(1));
    CHECK(meet.at(0, 0).is_zero());
}

TEST_CASE("characteristic polynomial and determinant") {
    QMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(0, 1) = 1;
    m.at(1, 0) = -1;
    m.at(1, 1) = 3;
    auto cp = charpoly(m);  // x^2 - 5x + 7
    REQUIRE(cp.size() == 3);
    CHECK(cp[2] == Rational(1));
    CHECK(cp[1] == Rational(-5));
    CHECK(cp[0] == Rational(7));
    CHECK(det(m) == Rational(7));
    CHECK(det(QMatrix::identity(4)) == Rational(1));
}
