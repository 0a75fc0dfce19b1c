#pragma once

// Standalone property suites: structural invariants checked on enumerated
// and pseudo-randomly sampled inputs (fixed seeds; the library itself has no
// randomness).

#include "lieho/homology.hpp"

#include <random>

namespace lieho {

namespace detail {

inline Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

// Partitions obtained from lam by adding a horizontal strip of b boxes.
inline std::vector<Partition> pieri_horizontal(const Partition& lam, int b) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(lam.weight() + b)) {
        bool ok = true;
        const auto& m = mu.parts();
        const auto& l = lam.parts();
        std::size_t rows = std::max(m.size(), l.size());
        auto lp = [&](std::size_t i) { return i < l.size() ? l[i] : 0; };
        auto mp = [&](std::size_t i) { return i < m.size() ? m[i] : 0; };
        for (std::size_t i = 0; i < rows && ok; ++i) {
            if (mp(i) < lp(i)) ok = false;
            if (mp(i + 1) > lp(i)) ok = false;
        }
        if (ok) out.push_back(mu);
    }
    return out;
}

inline std::vector<Partition> pieri_vertical(const Partition& lam, int b) {
    std::vector<Partition> out;
    for (const Partition& mu : partitions_of(lam.weight() + b)) {
        bool ok = true;
        const auto& m = mu.parts();
        const auto& l = lam.parts();
        std::size_t rows = std::max(m.size(), l.size());
        auto lp = [&](std::size_t i) { return i < l.size() ? l[i] : 0; };
        auto mp = [&](std::size_t i) { return i < m.size() ? m[i] : 0; };
        for (std::size_t i = 0; i < rows && ok; ++i) {
            int diff = mp(i) - lp(i);
            if (diff < 0 || diff > 1) ok = false;
        }
        if (ok) out.push_back(mu);
    }
    return out;
}

}  // namespace detail

inline CheckReport property_suite() {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "property suite";
    std::mt19937 rng(20240915);

    // letter_action is a group homomorphism, and commutes with slot moves.
    {
        const char* shapes[] = {"L2*T1", "L3*T1", "L2*L2", "G3*T1",  "L3*G2",
                                "G2*G2", "L4*T1", "L2*G2", "T1*T1*T1"};
        bool hom = true, comm = true;
        for (const char* ss : shapes) {
            FunctorShape sh = FunctorShape::parse(ss);
            int n = sh.total_degree();
            for (int t = 0; t < 6; ++t) {
                Permutation s = detail::random_permutation(n, rng);
                Permutation r = detail::random_permutation(n, rng);
                if (!(letter_action(sh, s * r) == letter_action(sh, s).mul_sparse(letter_action(sh, r))))
                    hom = false;
            }
            // Slot permutations preserving the shape commute with letters.
            std::vector<int> img(sh.size());
            std::iota(img.begin(), img.end(), 0);
            std::sort(img.begin(), img.end());
            do {
                Permutation pi{std::vector<int>(img)};
                bool preserves = true;
                for (std::size_t p = 0; p < sh.size(); ++p)
                    if (!(sh.slots[pi(static_cast<int>(p))] == sh.slots[p])) preserves = false;
                if (!preserves) continue;
                SparseMat pm = slot_action(sh, pi);
                for (int t = 0; t < 2; ++t) {
                    Permutation s = detail::random_permutation(n, rng);
                    SparseMat lm = letter_action(sh, s);
                    if (!(lm.mul_sparse(pm) == pm.mul_sparse(lm))) comm = false;
                }
            } while (std::next_permutation(img.begin(), img.end()));
        }
        rep.add("letter_action is a homomorphism on sampled shapes", hom);
        rep.add("letter and slot actions commute", comm);
    }

    // The sign bookkeeping of the slot swap on L2*L2: no fixed letter splits,
    // trace zero, consistent with the equivariant decomposition.
    {
        FunctorShape sh = FunctorShape::parse("L2*L2");
        SparseMat sw2 = slot_action(sh, Permutation::transposition(2, 0, 1));
        rep.add("slot swap on L2*L2 has trace 0 (enumeration oracle)", sw2.trace() == Rational(0));
    }

    // Character table orthogonality for n <= 8.
    {
        bool rows = true, cols = true;
        for (int n = 1; n <= 8; ++n) {
            const auto& parts = partitions_of(n);
            std::vector<std::vector<long>> table(parts.size(), std::vector<long>(parts.size()));
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t j = 0; j < parts.size(); ++j)
                    table[i][j] = static_cast<long>(irr_char(parts[i], parts[j]));
            mpz_class nf = factorial_z(n);
            for (std::size_t i = 0; i < parts.size(); ++i)
                for (std::size_t i2 = i; i2 < parts.size(); ++i2) {
                    mpz_class s = 0;
                    for (std::size_t j = 0; j < parts.size(); ++j)
                        s += class_size(parts[j]) * table[i][j] * table[i2][j];
                    if (s != (i == i2 ? nf : mpz_class(0))) rows = false;
                }
            for (std::size_t j = 0; j < parts.size(); ++j)
                for (std::size_t j2 = j; j2 < parts.size(); ++j2) {
                    mpz_class s = 0;
                    for (std::size_t i = 0; i < parts.size(); ++i) s += table[i][j] * table[i][j2];
                    if (s != (j == j2 ? z_of(parts[j]) : mpz_class(0))) cols = false;
                }
        }
        rep.add("character table row orthogonality (n <= 8)", rows);
        rep.add("character table column orthogonality (n <= 8)", cols);
    }

    // Sum of squared dimensions, conjugation, sign multiplicativity.
    {
        bool burnside = true;
        for (int n = 1; n <= 8; ++n) {
            mpz_class s = 0;
            for (const auto& lam : partitions_of(n)) s += hook_dimension(lam) * hook_dimension(lam);
            if (s != factorial_z(n)) burnside = false;
        }
        rep.add("sum of squared hook dimensions is n!", burnside);
        bool conj = true;
        for (const auto& lam : partitions_of(7))
            if (!(lam.conjugate().conjugate() == lam)) conj = false;
        rep.add("conjugation is an involution", conj);
        bool sgn = true;
        for (int t = 0; t < 20; ++t) {
            Permutation p = detail::random_permutation(6, rng);
            Permutation q = detail::random_permutation(6, rng);
            if ((p * q).sign() != p.sign() * q.sign()) sgn = false;
        }
        rep.add("sign is multiplicative", sgn);
    }

    // decompose recovers chosen multiplicities; dimension bookkeeping is
    // validated inside decompose on every call.
    {
        std::vector<std::pair<Partition, long>> chosen{{Partition({4, 1}), 2},
                                                       {Partition({3, 2}), 1},
                                                       {Partition({2, 2, 1}), 3},
                                                       {Partition({1, 1, 1, 1, 1}), 1}};
        ClassFunction f(5);
        for (const auto& [lam, mult] : chosen)
            for (long t = 0; t < mult; ++t) f += ClassFunction::irreducible(lam);
        auto dec = decompose(f);
        std::sort(chosen.begin(), chosen.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        rep.add("decompose recovers chosen multiplicities", dec == chosen);
    }

    // Induction product against the Pieri rule, a+b <= 8.
    {
        bool ok = true;
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; a + b <= 8; ++b)
                for (const Partition& lam : partitions_of(a)) {
                    {
                        ClassFunction ind = induce_outer(ClassFunction::irreducible(lam),
                                                         ClassFunction::trivial(b));
                        ClassFunction expect(a + b);
                        for (const auto& mu : detail::pieri_horizontal(lam, b))
                            expect += ClassFunction::irreducible(mu);
                        if (!(ind == expect)) ok = false;
                    }
                    {
                        ClassFunction ind = induce_outer(ClassFunction::irreducible(lam),
                                                         ClassFunction::sign_cf(b));
                        ClassFunction expect(a + b);
                        for (const auto& mu : detail::pieri_vertical(lam, b))
                            expect += ClassFunction::irreducible(mu);
                        if (!(ind == expect)) ok = false;
                    }
                }
        rep.add("induction product matches the Pieri rule (a+b <= 8)", ok);
    }

    // Exact kernels of random sparse matrices.
    {
        bool ok = true;
        std::uniform_int_distribution<int> val(-3, 3);
        std::uniform_int_distribution<int> dim(1, 12);
        for (int t = 0; t < 25; ++t) {
            std::size_t r = dim(rng), c = dim(rng);
            SparseMat m(r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    int v = val(rng);
                    if (t % 3 != 0 && std::uniform_int_distribution<int>(0, 2)(rng)) continue;
                    if (v) m.add(i, j, v);
                }
            KernelResult k = kernel_basis(m);
            if (k.rank + k.dim() != c) ok = false;
            if (k.dim() > 0 && !m.mul_dense(k.basis).is_zero()) ok = false;
            if (rank_of(k.basis) != k.dim()) ok = false;
        }
        rep.add("kernel bases are exact annihilators of full rank", ok);
    }

    // solve_in_span(B, B) is the identity.
    {
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            std::size_t r = 8, c = 4;
            QMatrix b(r, c);
            std::uniform_int_distribution<int> val(-4, 4);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) b.at(i, j) = val(rng);
            if (rank_of(b) != c) continue;
            if (!(solve_in_span(b, b) == QMatrix::identity(c))) ok = false;
        }
        rep.add("solve_in_span(B, B) is the identity", ok);
    }

    // Dimension bookkeeping on a full multilinear decomposition.
    {
        FunctorShape sh = FunctorShape::parse("L3*G2");
        auto dec = decompose(shape_character(sh));
        mpz_class total = 0;
        for (const auto& [lam, mult] : dec) total += mpz_class(mult) * hook_dimension(lam);
        rep.add("dimension bookkeeping on L3*G2", total == mpz_class(MLBasis(sh).dim()));
    }

    rep.ms = sw.ms();
    return rep;
}

}  // namespace lieho
