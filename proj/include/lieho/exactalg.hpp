#pragma once

// Exact rational arithmetic, matrices, permutations and partitions.
// Everything downstream is linear algebra over these types; no floating
// point is used anywhere in the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lieho {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct DimensionError : Error {
    explicit DimensionError(const std::string& m) : Error(m) {}
};
struct NotInSpanError : Error {
    explicit NotInSpanError(const std::string& m) : Error(m) {}
};
struct NotACharacterError : Error {
    explicit NotACharacterError(const std::string& m) : Error(m) {}
};
struct NotInvariantError : Error {
    explicit NotInvariantError(const std::string& m) : Error(m) {}
};
struct AmbientMismatchError : Error {
    explicit AmbientMismatchError(const std::string& m) : Error(m) {}
};
struct SolveMismatchError : Error {
    explicit SolveMismatchError(const std::string& m) : Error(m) {}
};
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& m) : Error(m) {}
};

// ---------------------------------------------------------------------------
// Rational

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonical form is maintained by construction).
class Rational {
    mpq_class v_;

public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}            // NOLINT: implicit by design
    Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT
    Rational(int n) : v_(n) {}             // NOLINT
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational inv() const {
        if (is_zero()) throw Error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    // "a" for integers, "a/b" otherwise.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
};

inline mpz_class factorial_z(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

inline mpz_class binomial_z(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// Small binomials used for basis ranking; n stays well inside 64 bits here.
inline std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    if (k > n - k) k = n - k;
    for (int i = 0; i < k; ++i) r = r * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    return r;
}

// ---------------------------------------------------------------------------
// Partition

// Weakly decreasing sequence of positive integers.  Indexes both irreducible
// symmetric group modules and conjugacy classes (cycle types).
class Partition {
    std::vector<int> parts_;

public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw Error("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("Partition: parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }
    // Descending lexicographic; this is the enumeration order of partitions_of.
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ > b.parts_; }

    Partition conjugate() const {
        std::vector<int> c;
        for (int j = 1; parts_.empty() ? false : j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j) ++cnt;
            c.push_back(cnt);
        }
        return Partition(std::move(c));
    }

    // "3.1.1" (empty partition prints as "-").
    std::string str_dotted() const {
        if (parts_.empty()) return "-";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(parts_[i]);
        }
        return s;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }
};

// All partitions of n, in reverse-lexicographic order: (n) first, (1^n) last.
inline const std::vector<Partition>& partitions_of(int n) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex* mtx = new std::mutex;
    std::lock_guard<std::mutex> lock(*mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n < 0) throw Error("partitions_of: negative n");
    rec(rec, n, n == 0 ? 1 : n);
    return cache.emplace(n, std::move(out)).first->second;
}

inline std::size_t partition_index(const Partition& p) {
    const auto& all = partitions_of(p.weight());
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == p) return i;
    throw Error("partition_index: not found (corrupt partition?)");
}

// Number of standard Young tableaux, by the hook length formula.
inline mpz_class hook_dimension(const Partition& lam) {
    const auto& p = lam.parts();
    Partition conj = lam.conjugate();
    const auto& q = conj.parts();
    mpz_class hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            long arm = p[i] - j - 1;
            long leg = q[j] - static_cast<long>(i) - 1;
            hooks *= (arm + leg + 1);
        }
    mpz_class f = factorial_z(lam.weight());
    if (!mpz_divisible_p(f.get_mpz_t(), hooks.get_mpz_t()))
        throw Error("hook_dimension: non-integral (bug)");
    return f / hooks;
}

// ---------------------------------------------------------------------------
// Permutation

// Bijection of {0, ..., n-1} (letters are 0-based throughout the library;
// the CLI and reports print 1-based cycles only).
class Permutation {
    std::vector<int> img_;

public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<char> seen(img_.size(), 0);
        for (int x : img_) {
            if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
                throw Error("Permutation: images are not a bijection");
            seen[x] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Permutation(std::move(v));
    }
    static Permutation transposition(int n, int i, int j) {
        Permutation p = identity(n);
        std::swap(p.img_[i], p.img_[j]);
        return p;
    }
    static Permutation cycle(int n, const std::vector<int>& c) {
        Permutation p = identity(n);
        for (std::size_t i = 0; i < c.size(); ++i) p.img_[c[i]] = c[(i + 1) % c.size()];
        return p;
    }
    // Canonical class representative: cycles on consecutive integers,
    // largest cycle first, e.g. (3,2) in S_5 -> (0 1 2)(3 4).
    static Permutation class_representative(const Partition& type) {
        int n = type.weight();
        Permutation p = identity(n);
        int pos = 0;
        for (int len : type.parts()) {
            for (int i = 0; i < len; ++i) p.img_[pos + i] = pos + (i + 1) % len;
            pos += len;
        }
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    // (p*q)(x) = p(q(x)).
    friend Permutation operator*(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size()) throw DimensionError("Permutation: degree mismatch in composition");
        std::vector<int> v(p.size());
        for (int i = 0; i < p.size(); ++i) v[i] = p.img_[q.img_[i]];
        return Permutation(std::move(v));
    }
    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 0; i < size(); ++i) v[img_[i]] = i;
        return Permutation(std::move(v));
    }
    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

    int sign() const {
        std::vector<char> seen(img_.size(), 0);
        int s = 1;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    Partition cycle_type() const {
        std::vector<char> seen(img_.size(), 0);
        std::vector<int> lens;
        for (int i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return Partition(std::move(lens));
    }
};

// Sign of the permutation that sorts `w` increasingly; entries are distinct.
inline int sort_sign(const std::vector<int>& w) {
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Matrices

class SparseMat;

// Dense matrix of rationals.  Used for bases, small operators and all
// canonical-form computations; large operators live in SparseMat.
class QMatrix {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;

public:
    QMatrix() = default;
    QMatrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const QMatrix& x, const QMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("QMatrix: product shape mismatch");
        QMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rational& y = o.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += x * y;
                }
            }
        return r;
    }
    QMatrix operator+(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("QMatrix: sum shape mismatch");
        QMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    QMatrix operator-(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("QMatrix: difference shape mismatch");
        QMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    QMatrix operator*(const Rational& s) const {
        QMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    QMatrix operator-() const { return *this * Rational(-1); }

    QMatrix transpose() const {
        QMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Rational trace() const {
        Rational t;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
        return t;
    }

    QMatrix columns(const std::vector<std::size_t>& idx) const {
        QMatrix r(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        return r;
    }
    QMatrix rows_subset(const std::vector<std::size_t>& idx) const {
        QMatrix r(idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
        return r;
    }
    // [this | o]
    QMatrix hstack(const QMatrix& o) const {
        if (rows_ != o.rows_) throw DimensionError("QMatrix: hstack row mismatch");
        QMatrix r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }
    QMatrix vstack(const QMatrix& o) const {
        if (cols_ != o.cols_) throw DimensionError("QMatrix: vstack col mismatch");
        QMatrix r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    SparseMat to_sparse() const;
};

// Column-major sparse matrix; the construction side of every large operator.
class SparseMat {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<std::pair<int, Rational>>> col_;  // sorted by row index

public:
    SparseMat() = default;
    SparseMat(std::size_t r, std::size_t c) : rows_(r), cols_(c), col_(c) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::pair<int, Rational>>& column(std::size_t j) const { return col_[j]; }

    // Accumulating insert; duplicate (r, c) adds coefficients.
    void add(std::size_t r, std::size_t c, const Rational& v) {
        if (v.is_zero()) return;
        auto& cl = col_[c];
        auto it = std::lower_bound(cl.begin(), cl.end(), static_cast<int>(r),
                                   [](const auto& e, int key) { return e.first < key; });
        if (it != cl.end() && it->first == static_cast<int>(r)) {
            it->second += v;
            if (it->second.is_zero()) cl.erase(it);
        } else {
            cl.insert(it, {static_cast<int>(r), v});
        }
    }

    std::size_t nnz() const {
        std::size_t t = 0;
        for (const auto& c : col_) t += c.size();
        return t;
    }

    static SparseMat identity(std::size_t n) {
        SparseMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.add(i, i, 1);
        return m;
    }

    QMatrix to_dense() const {
        QMatrix m(rows_, cols_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [r, v] : col_[j]) m.at(r, j) = v;
        return m;
    }

    QMatrix mul_dense(const QMatrix& x) const {
        if (cols_ != x.rows()) throw DimensionError("SparseMat: product shape mismatch");
        QMatrix r(rows_, x.cols());
        for (std::size_t k = 0; k < cols_; ++k)
            for (const auto& [i, v] : col_[k])
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    const Rational& y = x.at(k, j);
                    if (!y.is_zero()) r.at(i, j) += v * y;
                }
        return r;
    }

    SparseMat mul_sparse(const SparseMat& x) const {
        if (cols_ != x.rows_) throw DimensionError("SparseMat: product shape mismatch");
        SparseMat r(rows_, x.cols_);
        for (std::size_t j = 0; j < x.cols_; ++j)
            for (const auto& [k, xv] : x.col_[j])
                for (const auto& [i, v] : col_[k]) r.add(i, j, v * xv);
        return r;
    }

    SparseMat transpose() const {
        SparseMat r(cols_, rows_);
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [i, v] : col_[j]) r.col_[i].push_back({static_cast<int>(j), v});
        for (auto& c : r.col_)
            std::sort(c.begin(), c.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    }

    Rational trace() const {
        Rational t;
        for (std::size_t j = 0; j < std::min(rows_, cols_); ++j)
            for (const auto& [i, v] : col_[j])
                if (i == static_cast<int>(j)) t += v;
        return t;
    }

    bool is_zero() const { return nnz() == 0; }

    friend bool operator==(const SparseMat& a, const SparseMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_ == b.col_;
    }

    SparseMat operator-(const SparseMat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("SparseMat: difference shape mismatch");
        SparseMat r = *this;
        for (std::size_t j = 0; j < cols_; ++j)
            for (const auto& [i, v] : o.col_[j]) r.add(i, j, -v);
        return r;
    }
};

inline SparseMat QMatrix::to_sparse() const {
    SparseMat m(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) m.add(i, j, at(i, j));
    return m;
}

inline bool operator==(const Rational& a, long b) { return a == Rational(b); }

}  // namespace lieho
