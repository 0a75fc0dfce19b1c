#pragma once

// The free Lie algebra in multilinear weight and the maps built on it: the
// adjoint differential restricted to generators, and the morphisms kappa,
// kappa~, alpha, alpha_{i;j}, beta, e and delta-bar assembled from exterior
// power (co)products.
//
// Lie elements live in tensor coordinates: a multilinear weight-k component
// on a letter set S is spanned by the k! words on S, and the Lie subspace is
// spanned by left-normed brackets l(w) = [[...[w1,w2],...],wk] over words
// starting with min(S).  No Hall/Lyndon rewriting: expressing an arbitrary
// bracket in the basis is a linear solve against the expansion matrix,
// memoized by letter pattern.

#include "lieho/funcalc.hpp"

namespace lieho {

using Word = std::vector<int>;

inline std::size_t factorial_sz(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

// Lexicographic rank of w among all arrangements of its letter set.
inline std::size_t word_rank(const Word& w) {
    std::vector<int> avail(w.begin(), w.end());
    std::sort(avail.begin(), avail.end());
    std::size_t r = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto it = std::lower_bound(avail.begin(), avail.end(), w[i]);
        r += static_cast<std::size_t>(it - avail.begin()) * factorial_sz(static_cast<int>(w.size() - i - 1));
        avail.erase(it);
    }
    return r;
}

inline Word word_unrank(std::size_t r, std::vector<int> avail /*sorted*/) {
    Word w;
    for (std::size_t i = avail.size(); i-- > 0;) {
        std::size_t f = factorial_sz(static_cast<int>(i));
        std::size_t p = r / f;
        r %= f;
        w.push_back(avail[p]);
        avail.erase(avail.begin() + static_cast<long>(p));
    }
    return w;
}

// Expansion of the left-normed bracket of w in the tensor algebra;
// 2^(k-1) signed words.
inline std::vector<std::pair<Word, int>> expand_left_normed(const Word& w) {
    std::vector<std::pair<Word, int>> cur;
    cur.push_back({Word{w[0]}, 1});
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::vector<std::pair<Word, int>> next;
        next.reserve(cur.size() * 2);
        for (const auto& [u, s] : cur) {
            Word a = u;
            a.push_back(w[i]);
            next.push_back({std::move(a), s});
            Word b;
            b.reserve(u.size() + 1);
            b.push_back(w[i]);
            b.insert(b.end(), u.begin(), u.end());
            next.push_back({std::move(b), -s});
        }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Lie basis on standard letters and bracket rewriting

namespace detail {

struct LieBasisData {
    int k = 0;
    SparseMat expansion;  // k! x (k-1)!; column c = expansion of l(0, arrangement c)
    std::vector<std::size_t> pivot_rows;
    QMatrix inv;  // inverse of expansion restricted to pivot_rows
    std::map<Word, std::vector<std::pair<std::size_t, Rational>>> rewrites;
};

inline std::mutex& freelie_mutex() {
    static std::mutex m;
    return m;
}

inline LieBasisData& lie_data(int k) {
    static std::map<int, LieBasisData> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    LieBasisData d;
    d.k = k;
    const std::size_t cols = factorial_sz(k - 1);
    d.expansion = SparseMat(factorial_sz(k), cols);
    std::vector<int> rest(k - 1);
    std::iota(rest.begin(), rest.end(), 1);
    for (std::size_t c = 0; c < cols; ++c) {
        Word w{0};
        Word tail = word_unrank(c, rest);
        w.insert(w.end(), tail.begin(), tail.end());
        for (const auto& [term, sign] : expand_left_normed(w))
            d.expansion.add(word_rank(term), c, sign);
    }
    RcefBasis rc = rcef_with_pivots(d.expansion.to_dense());
    if (rc.basis.cols() != cols) throw Error("lie_data: expansion columns dependent (bug)");
    d.pivot_rows = rc.pivot_rows;
    QMatrix er = d.expansion.to_dense().rows_subset(d.pivot_rows);
    QMatrix aug = er.hstack(QMatrix::identity(cols));
    rref_inplace(aug);
    d.inv = QMatrix(cols, cols);
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) d.inv.at(i, j) = aug.at(i, cols + j);
    return cache.emplace(k, std::move(d)).first->second;
}

// Coefficients of l(std_word) in the basis {l(0, arrangement)}; std_word is
// on letters 0..k-1 and does not start with 0.
inline const std::vector<std::pair<std::size_t, Rational>>& lie_rewrite_std(const Word& std_word) {
    const int k = static_cast<int>(std_word.size());
    LieBasisData& d = lie_data(k);
    auto it = d.rewrites.find(std_word);
    if (it != d.rewrites.end()) return it->second;
    QMatrix w(factorial_sz(k), 1);
    for (const auto& [term, sign] : expand_left_normed(std_word)) {
        std::size_t r = word_rank(term);
        w.at(r, 0) += sign;
    }
    QMatrix wr = w.rows_subset(d.pivot_rows);
    QMatrix c = d.inv * wr;
    if (!(d.expansion.mul_dense(c) == w))
        throw Error("lie_rewrite: solve failed validation (bug)");
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t i = 0; i < c.rows(); ++i)
        if (!c.at(i, 0).is_zero()) out.emplace_back(i, c.at(i, 0));
    return d.rewrites.emplace(std_word, std::move(out)).first->second;
}

}  // namespace detail

// Express the left-normed bracket of an arbitrary word (distinct letters) in
// the normal basis of its letter set: words (min, arrangement).
inline std::vector<std::pair<Word, Rational>> rewrite_word_to_basis(const Word& w) {
    std::vector<int> letters(w.begin(), w.end());
    std::sort(letters.begin(), letters.end());
    if (w[0] == letters[0]) return {{w, Rational(1)}};
    Word std_word(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        std_word[i] = static_cast<int>(std::lower_bound(letters.begin(), letters.end(), w[i]) -
                                       letters.begin());
    std::vector<std::pair<Word, Rational>> out;
    {
        std::lock_guard<std::mutex> lock(detail::freelie_mutex());
        const auto& coeffs = detail::lie_rewrite_std(std_word);
        out.reserve(coeffs.size());
        std::vector<int> rest(letters.begin() + 1, letters.end());
        for (const auto& [idx, c] : coeffs) {
            Word u{letters[0]};
            Word tail = word_unrank(idx, rest);
            u.insert(u.end(), tail.begin(), tail.end());
            out.emplace_back(std::move(u), c);
        }
    }
    return out;
}

// Rank of a normal word (min first) among the basis words of its letter set.
inline std::size_t lie_word_rank(const Word& w) {
    Word tail(w.begin() + 1, w.end());
    return word_rank(tail);
}

// ---------------------------------------------------------------------------
// Public Lie basis and bracket

struct LieBasis {
    int n;
    QMatrix vectors;  // n! rows (tensor words, lex order), (n-1)! columns
};

inline LieBasis lie_basis(int n) {
    if (n < 1) throw DimensionError("lie_basis: n must be at least 1");
    std::lock_guard<std::mutex> lock(detail::freelie_mutex());
    return {n, detail::lie_data(n).expansion.to_dense()};
}

using TensorElem = std::map<Word, Rational>;

inline TensorElem tensor_of_word(const Word& w) { return {{w, Rational(1)}}; }

// Commutator u (x) v - v (x) u in tensor coordinates; letter supports must
// be disjoint.
inline TensorElem bracket(const TensorElem& u, const TensorElem& v) {
    std::vector<int> su, sv;
    for (const auto& [w, c] : u) su.insert(su.end(), w.begin(), w.end());
    for (const auto& [w, c] : v) sv.insert(sv.end(), w.begin(), w.end());
    std::sort(su.begin(), su.end());
    su.erase(std::unique(su.begin(), su.end()), su.end());
    std::sort(sv.begin(), sv.end());
    sv.erase(std::unique(sv.begin(), sv.end()), sv.end());
    std::vector<int> common;
    std::set_intersection(su.begin(), su.end(), sv.begin(), sv.end(), std::back_inserter(common));
    if (!common.empty()) throw Error("bracket: overlapping letters");
    TensorElem out;
    auto acc = [&out](Word w, const Rational& c) {
        auto [it, fresh] = out.emplace(std::move(w), c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (const auto& [wu, cu] : u)
        for (const auto& [wv, cv] : v) {
            Word a = wu;
            a.insert(a.end(), wv.begin(), wv.end());
            acc(std::move(a), cu * cv);
            Word b = wv;
            b.insert(b.end(), wu.begin(), wu.end());
            acc(std::move(b), -(cu * cv));
        }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor products of Lie components

// Multilinear component of Lie^{(x) r} on an explicit letter set.  Basis
// elements: an ordered partition of the letters into r nonempty blocks
// (the sector, grouped by block sizes) and a normal Lie word per block.
class LieProductSpace {
public:
    struct Sector {
        std::vector<int> comp;            // block sizes
        MLBasis assign;                   // letter assignments (standardized)
        std::vector<std::size_t> radix;   // (c_i - 1)! per slot
        std::size_t words = 1;            // product of radix
        std::size_t offset = 0;
    };
    struct Elem {
        std::size_t sector;
        MLElem sets;              // actual letters, each sorted
        std::vector<Word> words;  // normal words (min first), actual letters
    };

private:
    int r_ = 0;
    std::vector<int> letters_;  // sorted
    std::vector<Sector> sectors_;
    std::map<std::vector<int>, std::size_t> by_comp_;
    std::size_t dim_ = 0;

    int std_of(int letter) const {
        auto it = std::lower_bound(letters_.begin(), letters_.end(), letter);
        if (it == letters_.end() || *it != letter) throw Error("LieProductSpace: unknown letter");
        return static_cast<int>(it - letters_.begin());
    }

public:
    LieProductSpace() = default;
    LieProductSpace(int r, std::vector<int> letters,
                    const std::function<bool(const std::vector<int>&)>& comp_filter = nullptr)
        : r_(r), letters_(std::move(letters)) {
        std::sort(letters_.begin(), letters_.end());
        const int n = static_cast<int>(letters_.size());
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rest, int slots) -> void {
            if (slots == 0) {
                if (rest == 0) comps.push_back(cur);
                return;
            }
            for (int c = 1; c + (slots - 1) <= rest; ++c) {
                cur.push_back(c);
                self(self, rest - c, slots - 1);
                cur.pop_back();
            }
        };
        if (r == 0) {
            if (n == 0) {
                Sector s;
                s.assign = MLBasis(FunctorShape{});
                s.offset = 0;
                sectors_.push_back(std::move(s));
                by_comp_.emplace(std::vector<int>{}, 0);
                dim_ = 1;
            }
            return;
        }
        rec(rec, n, r);
        for (auto& comp : comps) {
            if (comp_filter && !comp_filter(comp)) continue;
            Sector s;
            s.comp = comp;
            std::vector<Slot> slots;
            for (int c : comp) slots.push_back(G(c));
            s.assign = MLBasis(FunctorShape(std::move(slots)));
            for (int c : comp) {
                s.radix.push_back(factorial_sz(c - 1));
                s.words *= s.radix.back();
            }
            s.offset = dim_;
            dim_ += s.assign.dim() * s.words;
            by_comp_.emplace(comp, sectors_.size());
            sectors_.push_back(std::move(s));
        }
    }

    int r() const { return r_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Sector>& sectors() const { return sectors_; }
    bool has_comp(const std::vector<int>& comp) const { return by_comp_.count(comp) != 0; }

    std::size_t index(const Elem& e) const {
        const Sector& s = sectors_[e.sector];
        MLElem std_sets = e.sets;
        for (auto& set : std_sets)
            for (int& x : set) x = std_of(x);
        std::size_t idx = s.assign.index(std_sets);
        for (std::size_t i = 0; i < s.radix.size(); ++i) idx = idx * s.radix[i] + lie_word_rank(e.words[i]);
        return s.offset + idx;
    }

    std::size_t index_of(const std::vector<int>& comp, const MLElem& sets,
                         const std::vector<Word>& words) const {
        auto it = by_comp_.find(comp);
        if (it == by_comp_.end()) throw Error("LieProductSpace: sector not present");
        return index({it->second, sets, words});
    }

    Elem element(std::size_t idx) const {
        std::size_t si = 0;
        while (si + 1 < sectors_.size() && sectors_[si + 1].offset <= idx) ++si;
        const Sector& s = sectors_[si];
        std::size_t rest = idx - s.offset;
        std::vector<std::size_t> wr(s.radix.size());
        for (std::size_t i = s.radix.size(); i-- > 0;) {
            wr[i] = rest % s.radix[i];
            rest /= s.radix[i];
        }
        MLElem sets = s.assign.element(rest);
        for (auto& set : sets)
            for (int& x : set) x = letters_[x];
        std::vector<Word> words(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            std::vector<int> tail(sets[i].begin() + 1, sets[i].end());
            Word w{sets[i][0]};
            Word t = word_unrank(wr[i], tail);
            w.insert(w.end(), t.begin(), t.end());
            words[i] = std::move(w);
        }
        return {si, std::move(sets), std::move(words)};
    }

    // Emit the expansion of an element with given (relabeled) sets and words
    // into `target`, taking care of per-slot normal form rewrites.
    template <typename Sink>
    static void emit(const LieProductSpace& target, const std::vector<int>& comp, MLElem sets,
                     const std::vector<Word>& words, const Rational& scale, Sink&& sink) {
        for (auto& set : sets) std::sort(set.begin(), set.end());
        std::vector<std::vector<std::pair<Word, Rational>>> per_slot(words.size());
        for (std::size_t i = 0; i < words.size(); ++i) per_slot[i] = rewrite_word_to_basis(words[i]);
        std::vector<Word> pick(words.size());
        auto rec = [&](auto&& self, std::size_t i, Rational coeff) -> void {
            if (i == per_slot.size()) {
                sink(target.index_of(comp, sets, pick), coeff);
                return;
            }
            for (const auto& [w, c] : per_slot[i]) {
                pick[i] = w;
                self(self, i + 1, coeff * c);
            }
        };
        rec(rec, 0, scale);
    }

    // sigma permutes the letter set (as global letter values).
    SparseMat letter_action(const Permutation& sigma) const {
        SparseMat m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Elem e = element(j);
            MLElem sets = e.sets;
            std::vector<Word> words = e.words;
            for (auto& set : sets)
                for (int& x : set) x = sigma(x);
            for (auto& w : words)
                for (int& x : w) x = sigma(x);
            emit(*this, sectors_[e.sector].comp, std::move(sets), words, Rational(1),
                 [&](std::size_t row, const Rational& c) { m.add(row, j, c); });
        }
        return m;
    }

    // pi permutes the r tensor slots; contents at slot p move to pi(p).
    SparseMat slot_action(const Permutation& pi) const {
        if (pi.size() != r_) throw DimensionError("LieProductSpace: slot permutation degree mismatch");
        SparseMat m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Elem e = element(j);
            const Sector& s = sectors_[e.sector];
            std::vector<int> comp(r_);
            MLElem sets(static_cast<std::size_t>(r_));
            std::vector<Word> words(static_cast<std::size_t>(r_));
            for (int p = 0; p < r_; ++p) {
                comp[pi(p)] = s.comp[p];
                sets[pi(p)] = e.sets[p];
                words[pi(p)] = e.words[p];
            }
            m.add(index_of(comp, sets, words), j, 1);
        }
        return m;
    }
};

// Multilinear component of V (x) Lie^{(x) r} on letters 0..n-1: a choice of
// letter for the V slot and a LieProductSpace element on the rest.
class VLieSpace {
    int r_ = 0, n_ = 0;
    std::vector<LieProductSpace> subs_;
    std::size_t subdim_ = 0;

public:
    VLieSpace(int r, int n) : r_(r), n_(n) {
        for (int a = 0; a < n; ++a) {
            std::vector<int> rest;
            for (int x = 0; x < n; ++x)
                if (x != a) rest.push_back(x);
            subs_.emplace_back(r, std::move(rest));
        }
        subdim_ = n > 0 ? subs_[0].dim() : 0;
    }

    int r() const { return r_; }
    int letters() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(n_) * subdim_; }
    std::size_t subdim() const { return subdim_; }
    const LieProductSpace& sub(int a) const { return subs_[a]; }
    std::size_t index(int a, std::size_t subidx) const { return static_cast<std::size_t>(a) * subdim_ + subidx; }

    SparseMat letter_action(const Permutation& sigma) const {
        SparseMat m(dim(), dim());
        for (int a = 0; a < n_; ++a) {
            const LieProductSpace& src = subs_[a];
            const LieProductSpace& dst = subs_[sigma(a)];
            for (std::size_t j = 0; j < subdim_; ++j) {
                LieProductSpace::Elem e = src.element(j);
                MLElem sets = e.sets;
                std::vector<Word> words = e.words;
                for (auto& set : sets)
                    for (int& x : set) x = sigma(x);
                for (auto& w : words)
                    for (int& x : w) x = sigma(x);
                const std::size_t col = index(a, j);
                LieProductSpace::emit(dst, src.sectors()[e.sector].comp, std::move(sets), words,
                                      Rational(1), [&](std::size_t row, const Rational& c) {
                                          m.add(index(sigma(a), row), col, c);
                                      });
            }
        }
        return m;
    }

    SparseMat slot_action(const Permutation& pi) const {
        SparseMat m(dim(), dim());
        for (int a = 0; a < n_; ++a) {
            SparseMat sub = subs_[a].slot_action(pi);
            for (std::size_t j = 0; j < subdim_; ++j)
                for (const auto& [i, v] : sub.column(j)) m.add(index(a, i), index(a, j), v);
        }
        return m;
    }
};

// ---------------------------------------------------------------------------
// The adjoint differential

struct VLieMap {
    VLieSpace dom;
    LieProductSpace cod;
    SparseMat m;
};

namespace detail {

inline VLieMap adbar_filtered(int r, int n,
                              const std::function<bool(const std::vector<int>&)>& filter) {
    if (r < 1) throw DimensionError("adbar: r must be at least 1 here");
    VLieSpace dom(r, n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    LieProductSpace cod(r, all, filter);
    SparseMat m(cod.dim(), dom.dim());
    for (int a = 0; a < n; ++a) {
        const LieProductSpace& sub = dom.sub(a);
        for (std::size_t j = 0; j < dom.subdim(); ++j) {
            LieProductSpace::Elem e = sub.element(j);
            const std::vector<int>& comp = sub.sectors()[e.sector].comp;
            const std::size_t col = dom.index(a, j);
            for (int i = 0; i < r; ++i) {
                std::vector<int> comp2 = comp;
                comp2[i] += 1;
                if (!cod.has_comp(comp2)) continue;
                MLElem sets = e.sets;
                sets[i].push_back(a);
                std::vector<Word> words = e.words;
                words[i].push_back(a);  // [v_a, l(w)] = -l(w a)
                LieProductSpace::emit(cod, comp2, std::move(sets), words, Rational(-1),
                                      [&](std::size_t row, const Rational& c) { m.add(row, col, c); });
            }
        }
    }
    return {std::move(dom), std::move(cod), std::move(m)};
}

}  // namespace detail

// Matrix of the adjoint differential V (x) Lie^{(x)r} -> Lie^{(x)r} in
// multilinear weight n.  For n <= r the domain is empty (zero columns).
inline VLieMap adbar_map(int r, int n) { return detail::adbar_filtered(r, n, nullptr); }

inline SparseMat adbar_matrix(int r, int n) { return adbar_map(r, n).m; }

// The two components of the weight r+2 adjoint differential: delta' lands in
// the sectors with a weight-3 block, delta'' in those with two weight-2
// blocks.
inline VLieMap delta_prime(int r) {
    return detail::adbar_filtered(r, r + 2, [](const std::vector<int>& c) {
        return std::count(c.begin(), c.end(), 3) == 1;
    });
}

inline VLieMap delta_doubleprime(int r) {
    return detail::adbar_filtered(r, r + 2, [](const std::vector<int>& c) {
        return std::count(c.begin(), c.end(), 2) == 2;
    });
}

// ---------------------------------------------------------------------------
// kappa, kappa~, e, alpha, beta

inline const LocalMap& kappa_local() {
    static const LocalMap k = [] {
        FunctorShape dom = shape_of({L(3), T()});
        ShapedMap split = apply_local(dom, {0}, {0, 1}, local_wedge_coproduct(2, 1));
        ShapedMap merge = apply_local(split.cod, {1, 2}, {1}, local_wedge_product(1, 1));
        return LocalMap{dom, merge.cod, merge.m.mul_sparse(split.m)};
    }();
    return k;
}

inline const LocalMap& kappa_tilde_local() {
    static const LocalMap k = [] {
        Permutation swap2 = Permutation::transposition(2, 0, 1);
        ShapedMap td = slot_permute_map(shape_of({T(), L(3)}), swap2);
        ShapedMap tc = slot_permute_map(shape_of({L(2), L(2)}), swap2);
        const LocalMap& kap = kappa_local();
        return LocalMap{td.dom, tc.cod, tc.m.mul_sparse(kap.m.mul_sparse(td.m))};
    }();
    return k;
}

inline QMatrix kappa_matrix() { return kappa_local().m.to_dense(); }
inline QMatrix kappa_tilde_matrix() { return kappa_tilde_local().m.to_dense(); }

// e = (1/4) psi mu, the projector of L3 (x) T1 onto the L4 summand.
inline QMatrix idempotent_e() {
    FunctorShape dom = shape_of({L(3), T()});
    ShapedMap mu = apply_local(dom, {0, 1}, {0}, local_wedge_product(3, 1));
    ShapedMap psi = apply_local(mu.cod, {0}, {0, 1}, local_wedge_coproduct(3, 1));
    return psi.m.mul_sparse(mu.m).to_dense() * Rational(1, 4);
}

// tau . alpha = 2e - Id as an endomorphism of L3 (x) T1.
inline QMatrix tau_alpha_matrix() {
    return idempotent_e() * Rational(2) - QMatrix::identity(4);
}

// alpha : L3 (x) T1 -> T1 (x) L3, computed two ways (via 2e - Id and by
// solving kappa = kappa~ . alpha); a mismatch means a sign convention fault.
inline QMatrix alpha_matrix() {
    QMatrix tau = slot_permute_map(shape_of({L(3), T()}), Permutation::transposition(2, 0, 1)).m.to_dense();
    QMatrix route1 = tau * tau_alpha_matrix();
    QMatrix route2 = solve_in_span(kappa_tilde_matrix(), kappa_matrix());
    if (!(route1 == route2)) throw SolveMismatchError("alpha_matrix: the two constructions disagree");
    return route1;
}

inline const LocalMap& alpha_local() {
    static const LocalMap a = [] {
        return LocalMap{shape_of({L(3), T()}), shape_of({T(), L(3)}), alpha_matrix().to_sparse()};
    }();
    return a;
}

// Shape of the i-th summand of the delta-bar domain (0-based i): T^(i) L3 T^(r-1-i).
inline FunctorShape dbar_block_shape(int r, int i) {
    std::vector<Slot> slots(static_cast<std::size_t>(r), T());
    slots[i] = L(3);
    return FunctorShape(std::move(slots));
}

// alpha_{i;j} (1-based, i < j): apply alpha at the i-th and j-th tensor
// factors of T^{i-1} L3 T^{r-i}.
inline ShapedMap alpha_ij(int r, int i, int j) {
    if (!(1 <= i && i < j && j <= r)) throw DimensionError("alpha_ij: need 1 <= i < j <= r");
    return apply_local(dbar_block_shape(r, i - 1), {i - 1, j - 1}, {i - 1, j - 1}, alpha_local());
}

// beta = (Id (x) tau) . (tau alpha (x) Id) on L3 (x) T1 (x) T1.
inline SparseMat beta_matrix() {
    FunctorShape sh = shape_of({L(3), T(), T()});
    LocalMap ta{shape_of({L(3), T()}), shape_of({L(3), T()}), tau_alpha_matrix().to_sparse()};
    ShapedMap first = apply_local(sh, {0, 1}, {0, 1}, ta);
    SparseMat swap23 = slot_action(sh, Permutation::transposition(3, 1, 2));
    return swap23.mul_sparse(first.m);
}

// ---------------------------------------------------------------------------
// Block spaces and delta-bar

// A direct sum of shape spaces carrying a letter action (block diagonal) and
// an action of S_r permuting the r tensor factor positions of every block
// (moving blocks around).
class BlockShapeSpace {
    std::vector<FunctorShape> blocks_;
    std::vector<MLBasis> bases_;
    std::vector<std::size_t> offset_;
    std::size_t dim_ = 0;
    int nletters_ = 0, r_ = 0;

public:
    BlockShapeSpace() = default;
    BlockShapeSpace(std::vector<FunctorShape> blocks, int r) : blocks_(std::move(blocks)), r_(r) {
        for (const FunctorShape& b : blocks_) {
            if (static_cast<int>(b.size()) != r_)
                throw DimensionError("BlockShapeSpace: block slot count mismatch");
            bases_.emplace_back(b);
            offset_.push_back(dim_);
            dim_ += bases_.back().dim();
        }
        nletters_ = blocks_.empty() ? 0 : blocks_[0].total_degree();
    }

    std::size_t dim() const { return dim_; }
    int letters() const { return nletters_; }
    int r() const { return r_; }
    std::size_t block_count() const { return blocks_.size(); }
    const FunctorShape& block(std::size_t b) const { return blocks_[b]; }
    const MLBasis& basis(std::size_t b) const { return bases_[b]; }
    std::size_t offset(std::size_t b) const { return offset_[b]; }

    std::size_t find_block(const FunctorShape& sh) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (blocks_[b] == sh) return b;
        throw Error("BlockShapeSpace: no such block");
    }

    SparseMat letter_action_mat(const Permutation& sigma) const {
        SparseMat m(dim_, dim_);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            SparseMat a = lieho::letter_action(blocks_[b], sigma);
            for (std::size_t j = 0; j < bases_[b].dim(); ++j)
                for (const auto& [i, v] : a.column(j)) m.add(offset_[b] + i, offset_[b] + j, v);
        }
        return m;
    }

    SparseMat slot_action_mat(const Permutation& pi) const {
        SparseMat m(dim_, dim_);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            ShapedMap moved = slot_permute_map(blocks_[b], pi);
            std::size_t tb = find_block(moved.cod);
            for (std::size_t j = 0; j < bases_[b].dim(); ++j)
                for (const auto& [i, v] : moved.m.column(j)) m.add(offset_[tb] + i, offset_[b] + j, v);
        }
        return m;
    }
};

inline BlockShapeSpace dbar_domain(int r) {
    std::vector<FunctorShape> blocks;
    for (int i = 0; i < r; ++i) blocks.push_back(dbar_block_shape(r, i));
    return BlockShapeSpace(std::move(blocks), r);
}

inline FunctorShape dbar_cod_shape(int r, int i, int j) {
    std::vector<Slot> slots(static_cast<std::size_t>(r), T());
    slots[i] = L(2);
    slots[j] = L(2);
    return FunctorShape(std::move(slots));
}

inline BlockShapeSpace dbar_codomain(int r) {
    std::vector<FunctorShape> blocks;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) blocks.push_back(dbar_cod_shape(r, i, j));
    return BlockShapeSpace(std::move(blocks), r);
}

struct BlockMap {
    BlockShapeSpace dom, cod;
    SparseMat m;
};

// delta-bar: the (i,j) target block receives kappa applied at factors (i,j)
// from block i and kappa~ applied at factors (i,j) from block j.
inline BlockMap deltabar(int r) {
    if (r < 2) throw DimensionError("deltabar: defined for r >= 2");
    BlockShapeSpace dom = dbar_domain(r);
    BlockShapeSpace cod = dbar_codomain(r);
    SparseMat m(cod.dim(), dom.dim());
    for (int b = 0; b < r; ++b) {
        const FunctorShape& src = dom.block(b);
        for (int o = 0; o < r; ++o) {
            if (o == b) continue;
            int i = std::min(b, o), j = std::max(b, o);
            ShapedMap comp = (b < o) ? apply_local(src, {i, j}, {i, j}, kappa_local())
                                     : apply_local(src, {i, j}, {i, j}, kappa_tilde_local());
            std::size_t tb = cod.find_block(comp.cod);
            for (std::size_t c = 0; c < dom.basis(b).dim(); ++c)
                for (const auto& [row, v] : comp.m.column(c))
                    m.add(cod.offset(tb) + row, dom.offset(b) + c, v);
        }
    }
    return {std::move(dom), std::move(cod), std::move(m)};
}

// The inclusion of the delta-bar domain into the V (x) Lie^{(x)r} space as
// the kernel of delta': L3 at factor i embeds by x^y^z -> x (x) [y,z] - ...
inline SparseMat embed_ker_delta_prime(int r, const BlockShapeSpace& dom, const VLieSpace& vspace) {
    SparseMat m(vspace.dim(), dom.dim());
    for (std::size_t b = 0; b < dom.block_count(); ++b) {
        const MLBasis& basis = dom.basis(b);
        int li = -1;
        for (std::size_t s = 0; s < dom.block(b).size(); ++s)
            if (dom.block(b).slots[s].degree == 3) li = static_cast<int>(s);
        for (std::size_t c = 0; c < basis.dim(); ++c) {
            MLElem e = basis.element(c);
            const std::vector<int>& w = e[li];  // x < y < z
            const int x = w[0], y = w[1], z = w[2];
            struct Term { int a; std::vector<int> pair; int sign; };
            const Term terms[3] = {{x, {y, z}, 1}, {y, {x, z}, -1}, {z, {x, y}, 1}};
            for (const Term& t : terms) {
                const LieProductSpace& sub = vspace.sub(t.a);
                std::vector<int> comp(dom.block(b).size(), 1);
                comp[li] = 2;
                MLElem sets = e;
                sets[li] = t.pair;
                std::vector<Word> words;
                for (const auto& s : sets) words.push_back(Word(s.begin(), s.end()));
                m.add(vspace.index(t.a, sub.index_of(comp, sets, words)), dom.offset(b) + c,
                      t.sign);
            }
        }
    }
    return m;
}

// Identification of the delta'' codomain (Lie sectors with two weight-2
// blocks) with the delta-bar codomain: [a,b] <-> a^b, everything else fixed.
inline SparseMat dbar_cod_identification(const LieProductSpace& lie_cod, const BlockShapeSpace& cod) {
    SparseMat m(cod.dim(), lie_cod.dim());
    for (std::size_t j = 0; j < lie_cod.dim(); ++j) {
        LieProductSpace::Elem e = lie_cod.element(j);
        const std::vector<int>& comp = lie_cod.sectors()[e.sector].comp;
        int i1 = -1, i2 = -1;
        for (std::size_t s = 0; s < comp.size(); ++s)
            if (comp[s] == 2) (i1 < 0 ? i1 : i2) = static_cast<int>(s);
        std::size_t tb = cod.find_block(dbar_cod_shape(static_cast<int>(comp.size()), i1, i2));
        m.add(cod.offset(tb) + cod.basis(tb).index(e.sets), j, 1);
    }
    return m;
}

}  // namespace lieho
