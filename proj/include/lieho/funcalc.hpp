#pragma once

// Multilinear functor calculus.  A FunctorShape is an ordered word of basic
// slots (exterior powers L^k, divided powers G^k); its multilinear component
// on n letters has a basis of assignments of {0..n-1} to the slots, one
// letter used exactly once.  Natural transformations between such functors
// become exact rational matrices on these bases.
//
// Conventions (pinned by tests against explicit formulas):
//  * wedge slot contents are stored strictly increasing; every sign is the
//    sort sign of a letter list,
//  * divided-power slots are letter sets and never carry signs,
//  * slots of degree one are all identified (L1 = G1 = T1),
//  * the wedge coproduct L^{a+b} -> L^a (x) L^b sends the sorted generator
//    to the sum of unshuffles (A, B) signed by the permutation that places
//    sorted(S) into (A..., B...).

#include "lieho/exactalg.hpp"
#include "lieho/linalg.hpp"
#include "lieho/symchar.hpp"

namespace lieho {

enum class SlotKind { Wedge, Divided };

struct Slot {
    SlotKind kind;
    int degree;
    friend bool operator==(const Slot& a, const Slot& b) {
        return a.kind == b.kind && a.degree == b.degree;
    }
};

struct FunctorShape {
    std::vector<Slot> slots;

    FunctorShape() = default;
    explicit FunctorShape(std::vector<Slot> s) : slots(std::move(s)) { canonicalize(); }

    void canonicalize() {
        std::vector<Slot> out;
        for (const Slot& s : slots) {
            if (s.degree < 0) throw Error("FunctorShape: negative degree");
            if (s.degree == 0) continue;  // unit functor, drop
            out.push_back(s.degree == 1 ? Slot{SlotKind::Wedge, 1} : s);
        }
        slots = std::move(out);
    }

    int total_degree() const {
        int t = 0;
        for (const Slot& s : slots) t += s.degree;
        return t;
    }
    std::size_t size() const { return slots.size(); }

    friend bool operator==(const FunctorShape& a, const FunctorShape& b) { return a.slots == b.slots; }

    // Grammar: `L<k>`, `G<k>`, `T<k>` joined by `*`; T<k> expands to k bare
    // letter slots; no whitespace.
    static FunctorShape parse(const std::string& text) {
        std::vector<Slot> slots;
        std::size_t i = 0;
        if (text.empty()) throw Error("shape parse: empty string");
        while (i < text.size()) {
            char c = text[i++];
            if (c != 'L' && c != 'G' && c != 'T') throw Error("shape parse: expected L, G or T");
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw Error("shape parse: missing degree");
            int k = std::stoi(text.substr(start, i - start));
            if (k < 1) throw Error("shape parse: degree must be positive");
            if (c == 'L') slots.push_back({SlotKind::Wedge, k});
            else if (c == 'G') slots.push_back({SlotKind::Divided, k});
            else
                for (int t = 0; t < k; ++t) slots.push_back({SlotKind::Wedge, 1});
            if (i < text.size()) {
                if (text[i] != '*') throw Error("shape parse: expected '*'");
                ++i;
                if (i == text.size()) throw Error("shape parse: trailing '*'");
            }
        }
        return FunctorShape(std::move(slots));
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (i) s += '*';
            if (slots[i].degree == 1) s += "T1";
            else s += (slots[i].kind == SlotKind::Wedge ? "L" : "G") + std::to_string(slots[i].degree);
        }
        return s.empty() ? "1" : s;
    }
};

inline FunctorShape shape_of(std::initializer_list<Slot> slots) {
    return FunctorShape(std::vector<Slot>(slots));
}
inline Slot L(int k) { return {SlotKind::Wedge, k}; }
inline Slot G(int k) { return {SlotKind::Divided, k}; }
inline Slot T() { return {SlotKind::Wedge, 1}; }

// ---------------------------------------------------------------------------
// Multilinear basis

using MLElem = std::vector<std::vector<int>>;  // one sorted letter list per slot

// Basis elements are ordered lexicographically in (S_1, S_2, ...); ranking
// runs slot by slot over the shrinking set of available letters.
class MLBasis {
    FunctorShape shape_;
    int n_ = 0;
    std::size_t dim_ = 1;

public:
    MLBasis() = default;
    explicit MLBasis(FunctorShape shape) : shape_(std::move(shape)) {
        n_ = shape_.total_degree();
        int avail = n_;
        for (const Slot& s : shape_.slots) {
            dim_ *= binomial_u64(avail, s.degree);
            avail -= s.degree;
        }
    }

    const FunctorShape& shape() const { return shape_; }
    int letters() const { return n_; }
    std::size_t dim() const { return dim_; }

    std::size_t index(const MLElem& e) const {
        if (e.size() != shape_.size()) throw DimensionError("MLBasis::index: slot count mismatch");
        std::vector<int> avail(n_);
        std::iota(avail.begin(), avail.end(), 0);
        std::size_t idx = 0;
        for (std::size_t s = 0; s < e.size(); ++s) {
            const int d = shape_.slots[s].degree;
            const int m = static_cast<int>(avail.size());
            if (static_cast<int>(e[s].size()) != d) throw DimensionError("MLBasis::index: slot size mismatch");
            idx *= binomial_u64(m, d);
            // Rank of the subset within d-subsets of avail, lex order.
            std::size_t r = 0;
            int prev = -1;
            for (int i = 0; i < d; ++i) {
                auto it = std::lower_bound(avail.begin(), avail.end(), e[s][i]);
                if (it == avail.end() || *it != e[s][i]) throw Error("MLBasis::index: letter not available");
                int p = static_cast<int>(it - avail.begin());
                for (int q = prev + 1; q < p; ++q) r += binomial_u64(m - q - 1, d - i - 1);
                prev = p;
            }
            idx += r;
            std::vector<int> rest;
            rest.reserve(avail.size() - d);
            std::set_difference(avail.begin(), avail.end(), e[s].begin(), e[s].end(),
                                std::back_inserter(rest));
            avail = std::move(rest);
        }
        return idx;
    }

    MLElem element(std::size_t idx) const {
        std::vector<int> avail(n_);
        std::iota(avail.begin(), avail.end(), 0);
        // Peel off per-slot ranks, most significant slot first.
        std::vector<std::size_t> radix(shape_.size()), rank(shape_.size());
        {
            int m = n_;
            for (std::size_t s = 0; s < shape_.size(); ++s) {
                radix[s] = binomial_u64(m, shape_.slots[s].degree);
                m -= shape_.slots[s].degree;
            }
        }
        for (std::size_t s = shape_.size(); s-- > 0;) {
            rank[s] = idx % radix[s];
            idx /= radix[s];
        }
        MLElem e(shape_.size());
        for (std::size_t s = 0; s < shape_.size(); ++s) {
            const int d = shape_.slots[s].degree;
            int m = static_cast<int>(avail.size());
            std::size_t r = rank[s];
            std::vector<int> chosen;
            int q = 0;
            for (int i = 0; i < d; ++i) {
                while (true) {
                    std::size_t block = binomial_u64(m - q - 1, d - i - 1);
                    if (r < block) break;
                    r -= block;
                    ++q;
                }
                chosen.push_back(avail[q]);
                ++q;
            }
            e[s] = chosen;
            std::vector<int> rest;
            std::set_difference(avail.begin(), avail.end(), chosen.begin(), chosen.end(),
                                std::back_inserter(rest));
            avail = std::move(rest);
        }
        return e;
    }
};

// ---------------------------------------------------------------------------
// Group actions

// Letter relabeling: signed permutation matrix.  Wedge slots contribute the
// sign of re-sorting their image; divided slots contribute nothing.
inline SparseMat letter_action(const FunctorShape& shape, const Permutation& sigma) {
    MLBasis basis(shape);
    if (sigma.size() != basis.letters()) throw DimensionError("letter_action: degree mismatch");
    SparseMat m(basis.dim(), basis.dim());
    std::vector<int> image;
    for (std::size_t j = 0; j < basis.dim(); ++j) {
        MLElem e = basis.element(j);
        int sign = 1;
        for (std::size_t s = 0; s < e.size(); ++s) {
            image.assign(e[s].begin(), e[s].end());
            for (int& x : image) x = sigma(x);
            if (shape.slots[s].kind == SlotKind::Wedge) sign *= sort_sign(image);
            std::sort(image.begin(), image.end());
            e[s] = image;
        }
        m.add(basis.index(e), j, sign);
    }
    return m;
}

struct ShapedMap {
    FunctorShape dom, cod;
    SparseMat m;
};

// Move whole slots: contents at position p land at position pi(p), sign-free.
inline ShapedMap slot_permute_map(const FunctorShape& shape, const Permutation& pi) {
    if (pi.size() != static_cast<int>(shape.size()))
        throw DimensionError("slot_permute_map: slot count mismatch");
    std::vector<Slot> tslots(shape.size());
    for (std::size_t p = 0; p < shape.size(); ++p) tslots[pi(static_cast<int>(p))] = shape.slots[p];
    FunctorShape target(std::move(tslots));
    MLBasis bd(shape), bc(target);
    SparseMat m(bc.dim(), bd.dim());
    for (std::size_t j = 0; j < bd.dim(); ++j) {
        MLElem e = bd.element(j);
        MLElem f(e.size());
        for (std::size_t p = 0; p < e.size(); ++p) f[pi(static_cast<int>(p))] = e[p];
        m.add(bc.index(f), j, 1);
    }
    return {shape, target, std::move(m)};
}

// Slot permutation within a single shape; pi must respect kind and degree.
inline SparseMat slot_action(const FunctorShape& shape, const Permutation& pi) {
    ShapedMap sm = slot_permute_map(shape, pi);
    if (!(sm.cod == shape)) throw DimensionError("slot_action: permutation does not preserve the shape");
    return std::move(sm.m);
}

// ---------------------------------------------------------------------------
// Structural natural transformations

// A natural map between shapes on few letters, to be grafted into larger
// shapes at designated slots.
struct LocalMap {
    FunctorShape dom, cod;
    SparseMat m;
};

inline LocalMap compose(const LocalMap& g, const LocalMap& f) {
    if (!(g.dom == f.cod)) throw DimensionError("compose: shape mismatch");
    return {f.dom, g.cod, g.m.mul_sparse(f.m)};
}

// Graft `lm` into `dom` at the designated slots.  dom_pos lists the slots
// consumed (they must match lm.dom in order); cod_pos lists the positions of
// lm.cod's slots inside the resulting shape.  Untouched slots keep their
// relative order in the remaining positions.  Letters are standardized
// order-preservingly, so no signs appear beyond those stored in lm.
inline ShapedMap apply_local(const FunctorShape& dom, const std::vector<int>& dom_pos,
                             const std::vector<int>& cod_pos, const LocalMap& lm) {
    if (dom_pos.size() != lm.dom.size() || cod_pos.size() != lm.cod.size())
        throw DimensionError("apply_local: designated slot counts do not match the local map");
    for (std::size_t i = 0; i < dom_pos.size(); ++i) {
        if (i > 0 && dom_pos[i] <= dom_pos[i - 1]) throw Error("apply_local: dom positions must increase");
        if (dom_pos[i] < 0 || dom_pos[i] >= static_cast<int>(dom.size()))
            throw Error("apply_local: dom position out of range");
        if (!(dom.slots[dom_pos[i]] == lm.dom.slots[i]))
            throw DimensionError("apply_local: designated slot does not match local domain");
    }

    const std::size_t cod_size = dom.size() - dom_pos.size() + lm.cod.size();
    std::vector<Slot> cslots(cod_size);
    std::vector<char> taken(cod_size, 0);
    for (std::size_t i = 0; i < cod_pos.size(); ++i) {
        if (i > 0 && cod_pos[i] <= cod_pos[i - 1]) throw Error("apply_local: cod positions must increase");
        if (cod_pos[i] < 0 || cod_pos[i] >= static_cast<int>(cod_size))
            throw Error("apply_local: cod position out of range");
        cslots[cod_pos[i]] = lm.cod.slots[i];
        taken[cod_pos[i]] = 1;
    }
    std::vector<int> passthrough;  // dom slots that survive, in order
    for (int p = 0; p < static_cast<int>(dom.size()); ++p)
        if (!std::binary_search(dom_pos.begin(), dom_pos.end(), p)) passthrough.push_back(p);
    std::vector<int> pass_target;  // their positions in the codomain
    for (std::size_t q = 0; q < cod_size; ++q)
        if (!taken[q]) pass_target.push_back(static_cast<int>(q));
    for (std::size_t i = 0; i < passthrough.size(); ++i)
        cslots[pass_target[i]] = dom.slots[passthrough[i]];
    FunctorShape cod{std::move(cslots)};

    MLBasis bd(dom), bc(cod), bld(lm.dom), blc(lm.cod);
    SparseMat out(bc.dim(), bd.dim());
    for (std::size_t j = 0; j < bd.dim(); ++j) {
        MLElem e = bd.element(j);
        // Letters entering the local map, standardized order-preservingly.
        std::vector<int> local_letters;
        for (int p : dom_pos)
            local_letters.insert(local_letters.end(), e[p].begin(), e[p].end());
        std::sort(local_letters.begin(), local_letters.end());
        auto std_of = [&](int x) {
            return static_cast<int>(std::lower_bound(local_letters.begin(), local_letters.end(), x) -
                                    local_letters.begin());
        };
        MLElem le(dom_pos.size());
        for (std::size_t i = 0; i < dom_pos.size(); ++i) {
            le[i] = e[dom_pos[i]];
            for (int& x : le[i]) x = std_of(x);
        }
        std::size_t lcol = bld.index(le);
        for (const auto& [lrow, coeff] : lm.m.column(lcol)) {
            MLElem lf = blc.element(lrow);
            MLElem f(cod.size());
            for (std::size_t i = 0; i < cod_pos.size(); ++i) {
                f[cod_pos[i]] = lf[i];
                for (int& x : f[cod_pos[i]]) x = local_letters[x];
            }
            for (std::size_t i = 0; i < passthrough.size(); ++i)
                f[pass_target[i]] = e[passthrough[i]];
            out.add(bc.index(f), j, coeff);
        }
    }
    return {dom, cod, std::move(out)};
}

// L^{a+b} -> L^a (x) L^b, the sum of signed unshuffles.
inline LocalMap local_wedge_coproduct(int a, int b) {
    FunctorShape dom = shape_of({L(a + b)});
    FunctorShape cod = shape_of({L(a), L(b)});
    MLBasis bd(dom), bc(cod);
    SparseMat m(bc.dim(), bd.dim());
    MLElem e = bd.element(0);
    const std::vector<int>& s = e[0];
    std::vector<char> pick(s.size(), 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    std::sort(pick.rbegin(), pick.rend());
    do {
        std::vector<int> A, B;
        for (std::size_t i = 0; i < s.size(); ++i) (pick[i] ? A : B).push_back(s[i]);
        std::vector<int> concat = A;
        concat.insert(concat.end(), B.begin(), B.end());
        m.add(bc.index({A, B}), 0, sort_sign(concat));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {dom, cod, std::move(m)};
}

// L^a (x) L^b -> L^{a+b}, merge and sort with sign.
inline LocalMap local_wedge_product(int a, int b) {
    FunctorShape dom = shape_of({L(a), L(b)});
    FunctorShape cod = shape_of({L(a + b)});
    MLBasis bd(dom), bc(cod);
    SparseMat m(bc.dim(), bd.dim());
    for (std::size_t j = 0; j < bd.dim(); ++j) {
        MLElem e = bd.element(j);
        std::vector<int> concat = e[0];
        concat.insert(concat.end(), e[1].begin(), e[1].end());
        int sign = sort_sign(concat);
        std::sort(concat.begin(), concat.end());
        m.add(bc.index({concat}), j, sign);
    }
    return {dom, cod, std::move(m)};
}

// G^{a+b} -> G^a (x) G^b, the sum of set splittings (no signs).
inline LocalMap local_gamma_coproduct(int a, int b) {
    FunctorShape dom = shape_of({G(a + b)});
    FunctorShape cod = shape_of({G(a), G(b)});
    MLBasis bd(dom), bc(cod);
    SparseMat m(bc.dim(), bd.dim());
    MLElem e = bd.element(0);
    const std::vector<int>& s = e[0];
    std::vector<char> pick(s.size(), 0);
    std::fill(pick.begin(), pick.begin() + a, 1);
    std::sort(pick.rbegin(), pick.rend());
    do {
        std::vector<int> A, B;
        for (std::size_t i = 0; i < s.size(); ++i) (pick[i] ? A : B).push_back(s[i]);
        m.add(bc.index({A, B}), 0, 1);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {dom, cod, std::move(m)};
}

// G^b -> T^b, the sum over all orderings.
inline LocalMap local_gamma_to_tensor(int b) {
    FunctorShape dom = shape_of({G(b)});
    std::vector<Slot> ts(b, T());
    FunctorShape cod{std::move(ts)};
    MLBasis bd(dom), bc(cod);
    SparseMat m(bc.dim(), bd.dim());
    MLElem e = bd.element(0);
    std::vector<int> w = e[0];
    std::sort(w.begin(), w.end());
    do {
        MLElem f(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) f[i] = {w[i]};
        m.add(bc.index(f), 0, 1);
    } while (std::next_permutation(w.begin(), w.end()));
    return {dom, cod, std::move(m)};
}

// ---------------------------------------------------------------------------
// The de Rham differential d : L^a (x) G^b -> L^{a+1} (x) G^{b-1}

// Extract one letter from the divided slot and multiply it into the wedge.
inline ShapedMap de_rham_d(int a, int b) {
    if (b < 1) throw DimensionError("de_rham_d: b must be positive");
    FunctorShape dom = shape_of({L(a), G(b)});
    if (b == 1) return apply_local(dom, {0, 1}, {0}, local_wedge_product(a, 1));
    ShapedMap split = apply_local(dom, {1}, {1, 2}, local_gamma_coproduct(1, b - 1));
    ShapedMap merge = apply_local(split.cod, {0, 1}, {0}, local_wedge_product(a, 1));
    return {dom, merge.cod, merge.m.mul_sparse(split.m)};
}

// ---------------------------------------------------------------------------
// Subspaces and their characters

struct Subspace {
    std::size_t ambient = 0;
    RcefBasis b;

    Subspace() = default;
    static Subspace from_span(std::size_t ambient_dim, const QMatrix& span) {
        if (span.rows() != ambient_dim) throw AmbientMismatchError("Subspace: ambient mismatch");
        Subspace s;
        s.ambient = ambient_dim;
        s.b = rcef_with_pivots(span);
        return s;
    }
    std::size_t dim() const { return b.basis.cols(); }
    const QMatrix& basis() const { return b.basis; }
    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.ambient == y.ambient && x.basis() == y.basis();
    }
};

inline Subspace intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw AmbientMismatchError("intersect: ambient mismatch");
    return Subspace::from_span(s1.ambient, intersect_spans(s1.basis(), s2.basis()));
}

// Character of the full multilinear component.
inline ClassFunction shape_character(const FunctorShape& shape) {
    const int n = shape.total_degree();
    ClassFunction out(n);
    const auto& classes = partitions_of(n);
    for (std::size_t i = 0; i < classes.size(); ++i)
        out.v[i] = letter_action(shape, Permutation::class_representative(classes[i])).trace();
    return out;
}

// Character of an invariant subspace; throws NotInvariantError when the
// letter action does not stabilize it.
inline ClassFunction subrep_character(const FunctorShape& shape, const Subspace& s) {
    MLBasis basis(shape);
    if (basis.dim() != s.ambient) throw AmbientMismatchError("subrep_character: ambient mismatch");
    const int n = shape.total_degree();
    ClassFunction out(n);
    const auto& classes = partitions_of(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        SparseMat act = letter_action(shape, Permutation::class_representative(classes[i]));
        QMatrix w = act.mul_dense(s.basis());
        try {
            QMatrix c = solve_against_rcef(s.b, w, /*validate=*/true);
            out.v[i] = c.trace();
        } catch (const NotInSpanError&) {
            throw NotInvariantError("subrep_character: subspace is not invariant under " +
                                    classes[i].str());
        }
    }
    return out;
}

// Bimodule character for a shape containing a family of interchangeable
// slots (equal kind and degree) at `group_pos`, acted on by a symmetric
// group of that size; letters act as usual.
inline BimoduleClassFunction subrep_bimodule_character(const FunctorShape& shape, const Subspace& s,
                                                       const std::vector<int>& group_pos) {
    MLBasis basis(shape);
    if (basis.dim() != s.ambient)
        throw AmbientMismatchError("subrep_bimodule_character: ambient mismatch");
    const int n = shape.total_degree();
    const int r = static_cast<int>(group_pos.size());
    BimoduleClassFunction out(n, r);
    const auto& lcls = partitions_of(n);
    const auto& scls = partitions_of(r);
    for (std::size_t i = 0; i < lcls.size(); ++i) {
        SparseMat lact = letter_action(shape, Permutation::class_representative(lcls[i]));
        for (std::size_t j = 0; j < scls.size(); ++j) {
            Permutation small = Permutation::class_representative(scls[j]);
            Permutation full = Permutation::identity(static_cast<int>(shape.size()));
            std::vector<int> img = full.images();
            for (int k = 0; k < r; ++k) img[group_pos[k]] = group_pos[small(k)];
            SparseMat sact = slot_action(shape, Permutation(img));
            QMatrix w = lact.mul_dense(sact.mul_dense(s.basis()));
            try {
                QMatrix c = solve_against_rcef(s.b, w, true);
                out.v[i][j] = c.trace();
            } catch (const NotInSpanError&) {
                throw NotInvariantError("subrep_bimodule_character: subspace not invariant");
            }
        }
    }
    return out;
}

}  // namespace lieho
