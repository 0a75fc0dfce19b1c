#pragma once

// Characters of symmetric groups and of products of two symmetric groups:
// irreducible character values (Murnaghan-Nakayama), inner products,
// decomposition into irreducibles with validation, and the induction
// product of class functions.

#include "lieho/exactalg.hpp"

#include <mutex>

namespace lieho {

// Order of the centralizer of the class with cycle type mu.
inline mpz_class z_of(const Partition& mu) {
    mpz_class z = 1;
    int run = 0, prev = 0;
    auto flush = [&]() {
        for (int i = 2; i <= run; ++i) z *= i;
        run = 0;
    };
    for (int p : mu.parts()) {
        z *= p;
        if (p == prev) {
            ++run;
        } else {
            flush();
            run = 1;
            prev = p;
        }
    }
    flush();
    return z;
}

inline mpz_class class_size(const Partition& mu) { return factorial_z(mu.weight()) / z_of(mu); }

namespace detail {

// Murnaghan-Nakayama on beta sets.  A partition (l_1 >= ... >= l_k) is coded
// as the set {l_i + k - i}; removing a border strip of length t replaces
// some element b by b - t, with sign (-1)^(number of elements jumped over).
// `beta` is kept sorted ascending; the empty partition is {0, 1, ..., k-1}.
// Memoized on (beta, remaining cycle lengths).
using MnMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, long long>;

inline long long mn_char(std::vector<int> beta, const std::vector<int>& mu, std::size_t mi,
                         MnMemo& memo) {
    if (mi == mu.size()) {
        for (std::size_t j = 0; j < beta.size(); ++j)
            if (beta[j] != static_cast<int>(j)) return 0;
        return 1;
    }
    auto key = std::make_pair(std::move(beta), std::vector<int>(mu.begin() + mi, mu.end()));
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const std::vector<int>& bs = key.first;

    const int t = mu[mi];
    long long total = 0;
    for (std::size_t i = 0; i < bs.size(); ++i) {
        int b = bs[i];
        int target = b - t;
        if (target < 0) continue;
        if (std::binary_search(bs.begin(), bs.end(), target)) continue;
        int height = 0;
        for (int x : bs)
            if (x > target && x < b) ++height;
        std::vector<int> nb = bs;
        nb[i] = target;
        std::sort(nb.begin(), nb.end());
        long long sub = mn_char(std::move(nb), mu, mi + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

// Value of the irreducible character chi_lambda on the class of cycle type mu.
inline long long irr_char(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight()) throw DimensionError("irr_char: weight mismatch");
    static std::map<int, detail::MnMemo> memos;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& memo = memos[lam.weight()];
    std::vector<int> beta(lam.parts());
    int k = lam.length();
    for (int i = 0; i < k; ++i) beta[i] += k - 1 - i;
    std::sort(beta.begin(), beta.end());
    return detail::mn_char(std::move(beta), mu.parts(), 0, memo);
}

// ---------------------------------------------------------------------------
// Class functions

// Rational-valued function on the conjugacy classes of S_n, stored by the
// index of the cycle type in partitions_of(n).
struct ClassFunction {
    int n = 0;
    std::vector<Rational> v;

    ClassFunction() = default;
    explicit ClassFunction(int deg) : n(deg), v(partitions_of(deg).size()) {}

    static ClassFunction irreducible(const Partition& lam) {
        ClassFunction f(lam.weight());
        const auto& cls = partitions_of(lam.weight());
        for (std::size_t i = 0; i < cls.size(); ++i) f.v[i] = Rational(irr_char(lam, cls[i]));
        return f;
    }
    static ClassFunction trivial(int n) { return irreducible(Partition(std::vector<int>(n > 0 ? 1 : 0, n))); }
    static ClassFunction sign_cf(int n) { return irreducible(Partition(std::vector<int>(n, 1))); }
    static ClassFunction regular(int n) {
        ClassFunction f(n);
        f.v[partition_index(Partition(std::vector<int>(n, 1)))] = Rational(factorial_z(n));
        return f;
    }

    const Rational& value(const Partition& mu) const { return v[partition_index(mu)]; }
    Rational& value(const Partition& mu) { return v[partition_index(mu)]; }
    Rational dim() const { return v[partitions_of(n).size() - 1]; }  // value on (1^n), the last class

    ClassFunction& operator+=(const ClassFunction& o) {
        if (n != o.n) throw DimensionError("ClassFunction: degree mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }
    ClassFunction& operator-=(const ClassFunction& o) {
        if (n != o.n) throw DimensionError("ClassFunction: degree mismatch");
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.n == b.n && a.v == b.v;
    }
    bool is_zero() const {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
};

inline Rational inner(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw DimensionError("inner: degree mismatch");
    const auto& cls = partitions_of(f.n);
    Rational s;
    for (std::size_t i = 0; i < cls.size(); ++i) s += Rational(class_size(cls[i])) * f.v[i] * g.v[i];
    return s / Rational(factorial_z(f.n));
}

// Multiplicities <chi, chi_lambda>; validates that they are nonnegative
// integers and that dimensions add up (a genuine character).
inline std::vector<std::pair<Partition, long>> decompose(const ClassFunction& f) {
    const auto& parts = partitions_of(f.n);
    std::vector<std::pair<Partition, long>> out;
    Rational dimsum;
    for (const auto& lam : parts) {
        Rational m = inner(f, ClassFunction::irreducible(lam));
        if (!m.is_integer() || m.sign() < 0)
            throw NotACharacterError("decompose: multiplicity of " + lam.str() + " is " + m.str());
        if (m.is_zero()) continue;
        long mult = static_cast<long>(m.num().get_si());
        out.emplace_back(lam, mult);
        dimsum += m * Rational(hook_dimension(lam));
    }
    if (dimsum != f.dim())
        throw NotACharacterError("decompose: dimension bookkeeping failed");
    return out;
}

// ---------------------------------------------------------------------------
// Bimodule class functions (class functions on S_a x S_b)

struct BimoduleClassFunction {
    int a = 0, b = 0;
    std::vector<std::vector<Rational>> v;  // v[i][j], i over classes of S_a, j over S_b

    BimoduleClassFunction() = default;
    BimoduleClassFunction(int a_, int b_)
        : a(a_), b(b_), v(partitions_of(a_).size(), std::vector<Rational>(partitions_of(b_).size())) {}

    Rational& value(const Partition& la, const Partition& mu) {
        return v[partition_index(la)][partition_index(mu)];
    }
    const Rational& value(const Partition& la, const Partition& mu) const {
        return v[partition_index(la)][partition_index(mu)];
    }
    Rational dim() const { return v.back().back(); }

    static BimoduleClassFunction outer(const ClassFunction& f, const ClassFunction& g) {
        BimoduleClassFunction r(f.n, g.n);
        for (std::size_t i = 0; i < f.v.size(); ++i)
            for (std::size_t j = 0; j < g.v.size(); ++j) r.v[i][j] = f.v[i] * g.v[j];
        return r;
    }

    BimoduleClassFunction& operator+=(const BimoduleClassFunction& o) {
        if (a != o.a || b != o.b) throw DimensionError("BimoduleClassFunction: degree mismatch");
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v[i].size(); ++j) v[i][j] += o.v[i][j];
        return *this;
    }
    BimoduleClassFunction& operator-=(const BimoduleClassFunction& o) {
        if (a != o.a || b != o.b) throw DimensionError("BimoduleClassFunction: degree mismatch");
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v[i].size(); ++j) v[i][j] -= o.v[i][j];
        return *this;
    }
    friend BimoduleClassFunction operator+(BimoduleClassFunction x, const BimoduleClassFunction& y) {
        return x += y;
    }
    friend BimoduleClassFunction operator-(BimoduleClassFunction x, const BimoduleClassFunction& y) {
        return x -= y;
    }
    friend bool operator==(const BimoduleClassFunction& x, const BimoduleClassFunction& y) {
        return x.a == y.a && x.b == y.b && x.v == y.v;
    }
};

struct BimoduleDecomposition {
    Partition lambda, mu;
    long mult;
};

inline std::vector<BimoduleDecomposition> decompose_bimodule(const BimoduleClassFunction& f) {
    const auto& pa = partitions_of(f.a);
    const auto& pb = partitions_of(f.b);
    const Rational order = Rational(mpz_class(factorial_z(f.a) * factorial_z(f.b)));
    std::vector<BimoduleDecomposition> out;
    Rational dimsum;
    for (const auto& la : pa)
        for (const auto& mu : pb) {
            Rational m;
            for (std::size_t i = 0; i < pa.size(); ++i)
                for (std::size_t j = 0; j < pb.size(); ++j)
                    m += Rational(mpz_class(class_size(pa[i]) * class_size(pb[j]))) * f.v[i][j] *
                         Rational(irr_char(la, pa[i]) * irr_char(mu, pb[j]));
            m /= order;
            if (!m.is_integer() || m.sign() < 0)
                throw NotACharacterError("decompose_bimodule: multiplicity of " + la.str() + "x" +
                                         mu.str() + " is " + m.str());
            if (m.is_zero()) continue;
            long mult = static_cast<long>(m.num().get_si());
            out.push_back({la, mu, mult});
            dimsum += m * Rational(mpz_class(hook_dimension(la) * hook_dimension(mu)));
        }
    if (dimsum != f.dim())
        throw NotACharacterError("decompose_bimodule: dimension bookkeeping failed");
    return out;
}

// ---------------------------------------------------------------------------
// Induction product

// Character of (M boxtimes N) induced from S_a x S_b to S_{a+b}.  On the
// class nu, sum over splittings of the multiset of parts of nu into a part
// of weight a and its complement; the index is a product of binomials.
inline ClassFunction induce_outer(const ClassFunction& f, const ClassFunction& g) {
    const int a = f.n, b = g.n;
    ClassFunction out(a + b);
    const auto& classes = partitions_of(a + b);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const auto& nu = classes[ci].parts();
        // Group the parts of nu by value.
        std::vector<std::pair<int, int>> groups;  // (part value, multiplicity)
        for (int p : nu) {
            if (!groups.empty() && groups.back().first == p)
                ++groups.back().second;
            else
                groups.emplace_back(p, 1);
        }
        Rational total;
        std::vector<int> take(groups.size(), 0);
        auto rec = [&](auto&& self, std::size_t gi, int weight) -> void {
            if (weight > a) return;
            if (gi == groups.size()) {
                if (weight != a) return;
                std::vector<int> mu1, mu2;
                Rational coeff(1);
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    coeff *= Rational(binomial_z(groups[i].second, take[i]));
                    for (int t = 0; t < take[i]; ++t) mu1.push_back(groups[i].first);
                    for (int t = 0; t < groups[i].second - take[i]; ++t) mu2.push_back(groups[i].first);
                }
                total += coeff * f.value(Partition(std::move(mu1))) * g.value(Partition(std::move(mu2)));
                return;
            }
            for (int t = 0; t <= groups[gi].second; ++t) {
                take[gi] = t;
                self(self, gi + 1, weight + t * groups[gi].first);
            }
        };
        rec(rec, 0, 0);
        out.v[ci] = total;
    }
    return out;
}

}  // namespace lieho
