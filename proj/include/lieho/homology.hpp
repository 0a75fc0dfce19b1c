#pragma once

// Homology of the free Lie algebra with coefficients in tensor powers of the
// adjoint representation, in a fixed multilinear weight, as a bimodule over
// (letters) x (tensor slots); plus the named verification suites.

#include "lieho/freelie.hpp"
#include "lieho/util.hpp"

namespace lieho {

// ---------------------------------------------------------------------------
// Action spaces and bimodule characters of invariant subspaces

// Type-erased carrier of the two commuting group actions on a space.
struct ActionSpace {
    std::size_t dim = 0;
    int letters = 0;  // degree of the letter group
    int slots = 0;    // degree of the slot group
    std::function<SparseMat(const Permutation&)> letter;
    std::function<SparseMat(const Permutation&)> slot;
};

inline ActionSpace action_space(const BlockShapeSpace& s) {
    return {s.dim(), s.letters(), s.r(),
            [&s](const Permutation& p) { return s.letter_action_mat(p); },
            [&s](const Permutation& p) { return s.slot_action_mat(p); }};
}
inline ActionSpace action_space(const VLieSpace& s) {
    return {s.dim(), s.letters(), s.r(),
            [&s](const Permutation& p) { return s.letter_action(p); },
            [&s](const Permutation& p) { return s.slot_action(p); }};
}
inline ActionSpace action_space(const LieProductSpace& s) {
    return {s.dim(), static_cast<int>(s.letters().size()), s.r(),
            [&s](const Permutation& p) { return s.letter_action(p); },
            [&s](const Permutation& p) { return s.slot_action(p); }};
}

// trace of the induced action on an invariant subspace with RCEF basis B:
// sum over i of (act * B)[pivot_i, i], in O(nnz(act)) time.
inline Rational trace_against_rcef(const SparseMat& act, const RcefBasis& b) {
    std::vector<long> pivot_slot(act.rows(), -1);
    for (std::size_t i = 0; i < b.pivot_rows.size(); ++i)
        pivot_slot[b.pivot_rows[i]] = static_cast<long>(i);
    Rational tr;
    for (std::size_t k = 0; k < act.cols(); ++k)
        for (const auto& [r, v] : act.column(k)) {
            long i = pivot_slot[r];
            if (i >= 0) tr += v * b.basis.at(k, static_cast<std::size_t>(i));
        }
    return tr;
}

// Same for the transposed action (used on left kernels).
inline Rational trace_transpose_against_rcef(const SparseMat& act, const RcefBasis& b) {
    Rational tr;
    for (std::size_t i = 0; i < b.pivot_rows.size(); ++i)
        for (const auto& [k, v] : act.column(b.pivot_rows[i]))
            tr += v * b.basis.at(k, i);
    return tr;
}

// Character of the whole space: traces of the combined action, one canonical
// representative per class pair.
inline BimoduleClassFunction space_bimodule_character(const ActionSpace& sp) {
    const auto& lcls = partitions_of(sp.letters);
    const auto& scls = partitions_of(sp.slots);
    BimoduleClassFunction out(sp.letters, sp.slots);
    parallel_for(lcls.size() * scls.size(), [&](std::size_t t) {
        std::size_t i = t / scls.size(), j = t % scls.size();
        SparseMat act = sp.letter(Permutation::class_representative(lcls[i]))
                            .mul_sparse(sp.slot(Permutation::class_representative(scls[j])));
        out.v[i][j] = act.trace();
    });
    return out;
}

// Bimodule character of an invariant subspace given by an RCEF basis.
// Invariance is validated on group generators: against the defining matrix
// (subspace = ker def) when given, by an exact span solve otherwise.
inline BimoduleClassFunction subspace_bimodule_character(const ActionSpace& sp, const RcefBasis& b,
                                                         const SparseMat* def = nullptr) {
    std::vector<Permutation> lgens, sgens;
    if (sp.letters >= 2) {
        lgens.push_back(Permutation::transposition(sp.letters, 0, 1));
        std::vector<int> cyc(sp.letters);
        std::iota(cyc.begin(), cyc.end(), 0);
        lgens.push_back(Permutation::cycle(sp.letters, cyc));
    }
    if (sp.slots >= 2) {
        sgens.push_back(Permutation::transposition(sp.slots, 0, 1));
        std::vector<int> cyc(sp.slots);
        std::iota(cyc.begin(), cyc.end(), 0);
        sgens.push_back(Permutation::cycle(sp.slots, cyc));
    }
    auto check_gen = [&](const SparseMat& act) {
        QMatrix w = act.mul_dense(b.basis);
        if (def) {
            if (!def->mul_dense(w).is_zero())
                throw NotInvariantError("subspace_bimodule_character: generator leaves the kernel");
        } else {
            solve_against_rcef(b, w, /*validate=*/true);
        }
    };
    try {
        for (const auto& g : lgens) check_gen(sp.letter(g));
        for (const auto& g : sgens) check_gen(sp.slot(g));
    } catch (const NotInSpanError&) {
        throw NotInvariantError("subspace_bimodule_character: subspace is not invariant");
    }

    const auto& lcls = partitions_of(sp.letters);
    const auto& scls = partitions_of(sp.slots);
    BimoduleClassFunction out(sp.letters, sp.slots);
    parallel_for(lcls.size() * scls.size(), [&](std::size_t t) {
        std::size_t i = t / scls.size(), j = t % scls.size();
        SparseMat act = sp.letter(Permutation::class_representative(lcls[i]))
                            .mul_sparse(sp.slot(Permutation::class_representative(scls[j])));
        out.v[i][j] = trace_against_rcef(act, b);
    });
    return out;
}

// Character of the cokernel of m, computed on the dual side: coker(m) is dual
// to ker(m^T) with the inverse-transpose action, and symmetric group
// characters are self-dual.
inline BimoduleClassFunction cokernel_bimodule_character(const ActionSpace& cod, const SparseMat& m,
                                                         const RcefBasis& leftker) {
    SparseMat mt = m.transpose();
    std::vector<Permutation> lgens, sgens;
    if (cod.letters >= 2) {
        lgens.push_back(Permutation::transposition(cod.letters, 0, 1));
        std::vector<int> cyc(cod.letters);
        std::iota(cyc.begin(), cyc.end(), 0);
        lgens.push_back(Permutation::cycle(cod.letters, cyc));
    }
    if (cod.slots >= 2) {
        sgens.push_back(Permutation::transposition(cod.slots, 0, 1));
        std::vector<int> cyc(cod.slots);
        std::iota(cyc.begin(), cyc.end(), 0);
        sgens.push_back(Permutation::cycle(cod.slots, cyc));
    }
    auto check_gen = [&](const SparseMat& act) {
        QMatrix w = act.transpose().mul_dense(leftker.basis);
        if (!mt.mul_dense(w).is_zero())
            throw NotInvariantError("cokernel_bimodule_character: generator leaves the left kernel");
    };
    for (const auto& g : lgens) check_gen(cod.letter(g));
    for (const auto& g : sgens) check_gen(cod.slot(g));

    const auto& lcls = partitions_of(cod.letters);
    const auto& scls = partitions_of(cod.slots);
    BimoduleClassFunction out(cod.letters, cod.slots);
    parallel_for(lcls.size() * scls.size(), [&](std::size_t t) {
        std::size_t i = t / scls.size(), j = t % scls.size();
        Permutation sig = Permutation::class_representative(lcls[i]).inverse();
        Permutation pi = Permutation::class_representative(scls[j]).inverse();
        SparseMat act = cod.letter(sig).mul_sparse(cod.slot(pi));
        out.v[i][j] = trace_transpose_against_rcef(act, leftker);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Reports

struct DecompEntry {
    Partition lambda, mu;
    long mult;
};

inline std::vector<DecompEntry> to_entries(const std::vector<BimoduleDecomposition>& d) {
    std::vector<DecompEntry> out;
    for (const auto& e : d) out.push_back({e.lambda, e.mu, e.mult});
    return out;
}

struct HomologyReport {
    int r = 0, n = 0;
    std::string which;  // "h1" or "h0"
    std::vector<DecompEntry> entries;
    std::size_t dim = 0;
    double ms = 0;
};

struct CheckItem {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckReport {
    std::string name;
    std::vector<CheckItem> items;
    std::map<std::string, std::string> data;
    std::vector<HomologyReport> homology;
    double ms = 0;
    bool not_applicable = false;

    bool pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
    void add(const std::string& n, bool ok, const std::string& detail = "") {
        items.push_back({n, ok, detail});
    }
};

// ---------------------------------------------------------------------------
// H1 and H0

inline BimoduleClassFunction theorem_prediction(int r) {
    // Lambda^{r+2} (x) sgn_r + S_{(r,1,1)} (x) triv_r, as a bimodule character.
    std::vector<int> col(static_cast<std::size_t>(r + 2), 1);
    BimoduleClassFunction pred = BimoduleClassFunction::outer(
        ClassFunction::irreducible(Partition(col)), ClassFunction::sign_cf(r));
    pred += BimoduleClassFunction::outer(ClassFunction::irreducible(Partition({r, 1, 1})),
                                         ClassFunction::trivial(r));
    return pred;
}

inline HomologyReport h1_bimodule(int r, int n) {
    Stopwatch sw;
    HomologyReport rep;
    rep.r = r;
    rep.n = n;
    rep.which = "h1";
    if (r == 0) {
        // The complex is V -> Q in weights 1 and 0; H1 is V.
        if (n == 1) {
            rep.entries.push_back({Partition({1}), Partition(), 1});
            rep.dim = 1;
        }
        rep.ms = sw.ms();
        return rep;
    }
    VLieMap am = adbar_map(r, n);
    KernelResult k = kernel_basis(am.m);
    rep.dim = k.dim();
    if (rep.dim > 0) {
        RcefBasis b = as_rcef_basis(k.basis);
        ActionSpace sp = action_space(am.dom);
        BimoduleClassFunction chi = subspace_bimodule_character(sp, b, &am.m);
        rep.entries = to_entries(decompose_bimodule(chi));
    }
    rep.ms = sw.ms();
    return rep;
}

inline HomologyReport h0_bimodule(int r, int n) {
    Stopwatch sw;
    HomologyReport rep;
    rep.r = r;
    rep.n = n;
    rep.which = "h0";
    if (r == 0) {
        // H0 is the trivial module Q, concentrated in weight 0.
        if (n == 0) {
            rep.entries.push_back({Partition(), Partition(), 1});
            rep.dim = 1;
        }
        rep.ms = sw.ms();
        return rep;
    }
    VLieMap am = adbar_map(r, n);
    ActionSpace dom_sp = action_space(am.dom);
    ActionSpace cod_sp = action_space(am.cod);

    // Direct route: character of the cokernel computed from the left kernel.
    RcefBasis lb = left_kernel_basis(am.m);
    BimoduleClassFunction direct = cokernel_bimodule_character(cod_sp, am.m, lb);

    // Euler route: chi_H0 = chi_H1 + chi(codomain) - chi(domain).
    KernelResult k = kernel_basis(am.m);
    BimoduleClassFunction chi_h1(cod_sp.letters, cod_sp.slots);
    if (k.dim() > 0) {
        RcefBasis b = as_rcef_basis(k.basis);
        chi_h1 = subspace_bimodule_character(dom_sp, b, &am.m);
    }
    BimoduleClassFunction euler =
        chi_h1 + space_bimodule_character(cod_sp) - space_bimodule_character(dom_sp);
    if (!(direct == euler))
        throw ConsistencyError("h0_bimodule: direct and Euler characters disagree");

    rep.dim = am.cod.dim() - (am.dom.dim() - k.dim());
    rep.entries = to_entries(decompose_bimodule(direct));
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Named verification suites

inline std::string entries_str(const std::vector<DecompEntry>& es) {
    std::string s;
    for (const auto& e : es) {
        if (!s.empty()) s += " + ";
        s += e.lambda.str() + "x" + e.mu.str();
        if (e.mult != 1) s += "*" + std::to_string(e.mult);
    }
    return s.empty() ? "0" : s;
}

inline bool entries_equal(const std::vector<DecompEntry>& a, const std::vector<DecompEntry>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].lambda == b[i].lambda && a[i].mu == b[i].mu && a[i].mult == b[i].mult))
            return false;
    return true;
}

// The main theorem in weight r+2: the H1 bimodule decomposition equals the
// predicted pair of summands; for r >= 2 computed both from the adjoint
// differential and from delta-bar (the second gated by `adbar_route` since
// the adjoint matrix is the larger of the two).
inline CheckReport verify_theorem(int r, bool adbar_route = true) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "theorem r=" + std::to_string(r);
    if (r < 0) throw DimensionError("verify_theorem: r must be nonnegative");
    if (r == 0) {
        HomologyReport h = h1_bimodule(0, 2);
        rep.homology.push_back(h);
        rep.add("H1 in weight 2 vanishes", h.dim == 0, "dim = " + std::to_string(h.dim));
        rep.ms = sw.ms();
        return rep;
    }
    if (r == 1) {
        HomologyReport h = h1_bimodule(1, 3);
        rep.homology.push_back(h);
        std::vector<DecompEntry> want{{Partition({1, 1, 1}), Partition({1}), 1}};
        rep.add("H1^[3] = Lambda^3 x sgn_1", entries_equal(h.entries, want), entries_str(h.entries));
        rep.ms = sw.ms();
        return rep;
    }

    BimoduleClassFunction pred = theorem_prediction(r);
    std::vector<DecompEntry> want = to_entries(decompose_bimodule(pred));

    BlockMap dm = deltabar(r);
    KernelResult kd = kernel_basis(dm.m);
    RcefBasis bd = as_rcef_basis(kd.basis);
    ActionSpace dsp = action_space(dm.dom);
    BimoduleClassFunction chi_d = subspace_bimodule_character(dsp, bd, &dm.m);
    HomologyReport hd;
    hd.r = r;
    hd.n = r + 2;
    hd.which = "h1";
    hd.dim = kd.dim();
    hd.entries = to_entries(decompose_bimodule(chi_d));
    rep.homology.push_back(hd);
    rep.data["deltabar_kernel_dim"] = std::to_string(kd.dim());
    rep.add("ker delta-bar decomposition matches the predicted bimodule",
            chi_d == pred, entries_str(hd.entries));

    if (adbar_route) {
        HomologyReport ha = h1_bimodule(r, r + 2);
        BimoduleClassFunction chi_a(pred.a, pred.b);
        // Rebuild the character from the decomposition for the comparison.
        for (const auto& e : ha.entries)
            for (long t = 0; t < e.mult; ++t)
                chi_a += BimoduleClassFunction::outer(ClassFunction::irreducible(e.lambda),
                                                      ClassFunction::irreducible(e.mu));
        rep.add("adjoint route matches the predicted bimodule", chi_a == pred,
                entries_str(ha.entries));
        rep.add("adjoint and delta-bar routes agree", chi_a == chi_d);
        rep.add("kernel dimensions agree across routes", ha.dim == kd.dim(),
                std::to_string(ha.dim) + " vs " + std::to_string(kd.dim()));
    }
    rep.add("decomposition equals the two predicted summands", entries_equal(hd.entries, want),
            entries_str(hd.entries) + " vs " + entries_str(want));
    rep.ms = sw.ms();
    return rep;
}

// Low weights: H1^[n] = 0 for n <= r and Gamma^{r+1} x triv (one dimensional)
// for n = r+1.
inline CheckReport low_weight_suite(int rmax) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "low weight vanishing r<=" + std::to_string(rmax);
    for (int r = 0; r <= rmax; ++r) {
        for (int n = 0; n <= r; ++n) {
            HomologyReport h = h1_bimodule(r, n);
            rep.add("H1 r=" + std::to_string(r) + " n=" + std::to_string(n) + " vanishes",
                    h.dim == 0, "dim = " + std::to_string(h.dim));
        }
        HomologyReport h = h1_bimodule(r, r + 1);
        std::vector<DecompEntry> want;
        if (r == 0)
            want.push_back({Partition({1}), Partition(), 1});
        else
            want.push_back({Partition({r + 1}), Partition({r}), 1});
        rep.add("H1 r=" + std::to_string(r) + " n=" + std::to_string(r + 1) + " is triv x triv",
                h.dim == 1 && entries_equal(h.entries, want), entries_str(h.entries));
    }
    rep.ms = sw.ms();
    return rep;
}

// The r=1 chain in weights 2..nmax: the adjoint map is onto, its kernel has
// dimension (n-2)! and the Euler characteristic of the four-term complex
// vanishes.
inline CheckReport r1_chain_suite(int nmax) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "r=1 chain exactness n<=" + std::to_string(nmax);
    for (int n = 2; n <= nmax; ++n) {
        VLieMap am = adbar_map(1, n);
        KernelResult k = kernel_basis(am.m);
        std::size_t lie_n = factorial_sz(n - 1);
        std::size_t cyclie_n = factorial_sz(n - 2);
        bool onto = k.rank == am.cod.dim();
        rep.add("n=" + std::to_string(n) + ": adjoint map onto Lie^[n]",
                onto && am.cod.dim() == lie_n,
                "rank " + std::to_string(k.rank) + " of " + std::to_string(am.cod.dim()));
        rep.add("n=" + std::to_string(n) + ": kernel dimension (n-2)!", k.dim() == cyclie_n,
                "dim " + std::to_string(k.dim()));
        long euler = static_cast<long>(cyclie_n) - static_cast<long>(am.dom.dim()) +
                     static_cast<long>(am.cod.dim()) - 0;
        rep.add("n=" + std::to_string(n) + ": Euler characteristic vanishes", euler == 0,
                std::to_string(euler));
    }
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Identity suite (weight 4 and 5 morphisms)

namespace detail {

// Expected matrices from the displayed formulas, with wedge sort signs.
inline QMatrix expected_e_matrix() {
    FunctorShape sh = shape_of({L(3), T()});
    MLBasis b(sh);
    QMatrix m(b.dim(), b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        MLElem e = b.element(j);
        const int x = e[0][0], y = e[0][1], z = e[0][2], w = e[1][0];
        auto term = [&](std::vector<int> wedge, int last, int sgn) {
            int s = sort_sign(wedge);
            std::sort(wedge.begin(), wedge.end());
            m.at(b.index({wedge, {last}}), j) += Rational(sgn * s, 4);
        };
        term({x, y, z}, w, 1);
        term({x, y, w}, z, -1);
        term({x, z, w}, y, 1);
        term({y, z, w}, x, -1);
    }
    return m;
}

inline QMatrix expected_tau_alpha_matrix() {
    FunctorShape sh = shape_of({L(3), T()});
    MLBasis b(sh);
    QMatrix m(b.dim(), b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        MLElem e = b.element(j);
        const int x = e[0][0], y = e[0][1], z = e[0][2], w = e[1][0];
        auto term = [&](std::vector<int> wedge, int last, int sgn) {
            int s = sort_sign(wedge);
            std::sort(wedge.begin(), wedge.end());
            m.at(b.index({wedge, {last}}), j) += Rational(-sgn * s, 2);
        };
        term({x, y, z}, w, 1);
        term({x, y, w}, z, 1);
        term({x, z, w}, y, -1);
        term({y, z, w}, x, 1);
    }
    return m;
}

inline QMatrix expected_minus_beta_matrix() {
    FunctorShape sh = shape_of({L(3), T(), T()});
    MLBasis b(sh);
    QMatrix m(b.dim(), b.dim());
    for (std::size_t j = 0; j < b.dim(); ++j) {
        MLElem e = b.element(j);
        const int x = e[0][0], y = e[0][1], z = e[0][2], s = e[1][0], t = e[2][0];
        auto term = [&](std::vector<int> wedge, int m1, int m2, int sgn) {
            int sg = sort_sign(wedge);
            std::sort(wedge.begin(), wedge.end());
            m.at(b.index({wedge, {m1}, {m2}}), j) += Rational(sgn * sg, 2);
        };
        term({x, y, z}, t, s, 1);
        term({x, y, s}, t, z, 1);
        term({x, z, s}, t, y, -1);
        term({y, z, s}, t, x, 1);
    }
    return m;
}

// {(X_i) : alpha_{i;j} X_i = -X_j for all i < j} as a subspace of the
// delta-bar domain.
inline Subspace cocycle_subspace(int r, const BlockShapeSpace& dom) {
    std::vector<SparseMat> rows;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            ShapedMap a = alpha_ij(r, i, j);
            std::size_t bi = dom.find_block(a.dom), bj = dom.find_block(a.cod);
            SparseMat row(dom.basis(bj).dim(), dom.dim());
            for (std::size_t c = 0; c < dom.basis(bi).dim(); ++c)
                for (const auto& [rr, v] : a.m.column(c)) row.add(rr, dom.offset(bi) + c, v);
            for (std::size_t c = 0; c < dom.basis(bj).dim(); ++c) row.add(c, dom.offset(bj) + c, 1);
            rows.push_back(std::move(row));
        }
    std::size_t total = 0;
    for (const auto& r_ : rows) total += r_.rows();
    SparseMat constraints(total, dom.dim());
    std::size_t off = 0;
    for (const auto& r_ : rows) {
        for (std::size_t c = 0; c < r_.cols(); ++c)
            for (const auto& [rr, v] : r_.column(c)) constraints.add(off + rr, c, v);
        off += r_.rows();
    }
    KernelResult k = kernel_basis(constraints);
    Subspace s;
    s.ambient = dom.dim();
    s.b = as_rcef_basis(k.basis);
    return s;
}

}  // namespace detail

inline CheckReport verify_identity_suite() {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "identity suite";

    QMatrix e = idempotent_e();
    rep.add("e is idempotent", e * e == e);
    rep.add("e matches its explicit formula", e == detail::expected_e_matrix());

    QMatrix ta = tau_alpha_matrix();
    rep.add("tau.alpha is an involution", ta * ta == QMatrix::identity(4));
    rep.add("tau.alpha = 2e - Id", ta == e * Rational(2) - QMatrix::identity(4));
    rep.add("tau.alpha matches its explicit formula", ta == detail::expected_tau_alpha_matrix());

    bool alpha_ok = true;
    std::string alpha_detail;
    try {
        alpha_matrix();
    } catch (const SolveMismatchError& ex) {
        alpha_ok = false;
        alpha_detail = ex.what();
    }
    rep.add("alpha: involution route agrees with the kappa solve", alpha_ok, alpha_detail);

    QMatrix kap = kappa_matrix(), kat = kappa_tilde_matrix();
    rep.add("rank kappa = 4", rank_of(kap) == 4);
    rep.add("rank kappa~ = 4", rank_of(kat) == 4);
    rep.add("image(kappa) = image(kappa~)", rcef(kap) == rcef(kat));

    rep.add("alpha_{1;2} at r=2 equals alpha", alpha_ij(2, 1, 2).m.to_dense() == alpha_matrix());

    {
        // alpha_{1;3}^{-1} . alpha_{2;3} . alpha_{1;2} = beta^3 on L3 T T.
        QMatrix a12 = alpha_ij(3, 1, 2).m.to_dense();
        QMatrix a23 = alpha_ij(3, 2, 3).m.to_dense();
        QMatrix a13 = alpha_ij(3, 1, 3).m.to_dense();
        QMatrix comp = solve_in_span(a13, a23 * a12);  // a13^{-1} (a23 a12)
        QMatrix beta = beta_matrix().to_dense();
        rep.add("alpha composite equals beta^3", comp == beta * beta * beta);
        rep.add("-beta matches its explicit formula", -beta == detail::expected_minus_beta_matrix());
    }

    for (int r = 2; r <= 4; ++r) {
        BlockMap dm = deltabar(r);
        KernelResult k = kernel_basis(dm.m);
        Subspace ker;
        ker.ambient = dm.dom.dim();
        ker.b = as_rcef_basis(k.basis);
        Subspace coc = detail::cocycle_subspace(r, dm.dom);
        rep.add("ker delta-bar_" + std::to_string(r) + " equals the cocycle subspace",
                ker.basis() == coc.basis(),
                "dims " + std::to_string(ker.dim()) + " / " + std::to_string(coc.dim()));
    }

    // delta-bar agrees with delta'' restricted to ker delta' (embedded by the
    // wedge coproduct), and ker delta' carries the expected character.
    for (int r = 2; r <= 3; ++r) {
        BlockMap dm = deltabar(r);
        VLieMap dp = delta_prime(r);
        VLieMap dpp = delta_doubleprime(r);
        SparseMat emb = embed_ker_delta_prime(r, dm.dom, dp.dom);
        rep.add("embedded blocks lie in ker delta'_" + std::to_string(r),
                dp.m.mul_sparse(emb).is_zero());
        std::size_t kdim = kernel_basis(dp.m).dim();
        rep.add("ker delta'_" + std::to_string(r) + " has the block space dimension",
                kdim == dm.dom.dim(),
                std::to_string(kdim) + " vs " + std::to_string(dm.dom.dim()));
        SparseMat ident = dbar_cod_identification(dpp.cod, dm.cod);
        SparseMat route = ident.mul_sparse(dpp.m.mul_sparse(emb));
        rep.add("delta-bar_" + std::to_string(r) + " = delta'' restricted to ker delta'",
                route == dm.m);
        // Bimodule character of ker delta' equals that of the block space.
        KernelResult kp = kernel_basis(dp.m);
        RcefBasis kb = as_rcef_basis(kp.basis);
        ActionSpace vs = action_space(dp.dom);
        BimoduleClassFunction chi_ker = subspace_bimodule_character(vs, kb, &dp.m);
        BimoduleClassFunction chi_blocks = space_bimodule_character(action_space(dm.dom));
        rep.add("ker delta'_" + std::to_string(r) + " bimodule character matches the induced module",
                chi_ker == chi_blocks);
    }

    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// The r=3 constant suite

inline CheckReport verify_r3_case() {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "r=3 case";
    FunctorShape sh = shape_of({L(3), T(), T()});
    MLBasis basis(sh);

    ClassFunction chi = shape_character(sh);
    auto dec = decompose(chi);
    std::vector<std::pair<Partition, long>> want{{Partition({2, 1, 1, 1}), 2},
                                                 {Partition({2, 2, 1}), 1},
                                                 {Partition({3, 1, 1}), 1},
                                                 {Partition({1, 1, 1, 1, 1}), 1}};
    std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rep.add("L3*T1*T1 decomposes per the Pieri rule", dec == want);

    {
        ClassFunction ind = induce_outer(induce_outer(ClassFunction::sign_cf(3), ClassFunction::trivial(1)),
                                         ClassFunction::trivial(1));
        rep.add("matches the induced character of sgn_3 x triv_1 x triv_1", ind == chi);
    }

    rep.add("dimensions are (1, 6, 5, 4)",
            hook_dimension(Partition({1, 1, 1, 1, 1})) == 1 && hook_dimension(Partition({3, 1, 1})) == 6 &&
                hook_dimension(Partition({2, 2, 1})) == 5 && hook_dimension(Partition({2, 1, 1, 1})) == 4);

    QMatrix mb = -beta_matrix().to_dense();  // -beta, 20 x 20
    rep.add("trace of -beta on the 20-dimensional module is 0", mb.trace() == Rational(0));
    rep.data["trace20"] = mb.trace().str();

    auto projector = [&](const Partition& lam) {
        QMatrix p(basis.dim(), basis.dim());
        std::vector<int> img(5);
        std::iota(img.begin(), img.end(), 0);
        Rational scale = Rational(hook_dimension(lam)) / Rational(factorial_z(5));
        do {
            Permutation g{std::vector<int>(img)};
            Rational c = Rational(irr_char(lam, g.cycle_type())) * scale;
            if (c.is_zero()) continue;
            SparseMat act = letter_action(sh, g);
            for (std::size_t j = 0; j < basis.dim(); ++j)
                for (const auto& [i, v] : act.column(j)) p.at(i, j) += v * c;
        } while (std::next_permutation(img.begin(), img.end()));
        return p;
    };

    QMatrix p15 = projector(Partition({1, 1, 1, 1, 1}));
    QMatrix p311 = projector(Partition({3, 1, 1}));
    QMatrix p221 = projector(Partition({2, 2, 1}));
    QMatrix p2111 = projector(Partition({2, 1, 1, 1}));
    rep.add("-beta acts as Id on Lambda^5 + S_(3,1,1)",
            mb * p15 == p15 && mb * p311 == p311);
    rep.add("-beta acts as -Id on S_(2,2,1)", mb * p221 == -p221);

    Subspace iso = Subspace::from_span(basis.dim(), p2111);
    rep.add("S_(2,1,1,1) isotypic component has dimension 8", iso.dim() == 8);
    QMatrix w = mb * iso.basis();
    QMatrix c = solve_against_rcef(iso.b, w, /*validate=*/true);
    rep.add("trace of -beta on the isotypic component is -2", c.trace() == Rational(-2));

    // As an element of M_2(Q), -beta has char poly q = x^2 + x/2 + 1; the
    // 8x8 restriction must then have char poly q^4.
    Rational block_trace = c.trace() / Rational(4);
    std::vector<Rational> q{Rational(1), Rational(1, 2), Rational(1)};
    std::vector<Rational> cp = charpoly(c);
    rep.add("isotypic block trace is -1/2", block_trace == Rational(-1, 2));
    rep.add("characteristic polynomial of the 2x2 block is x^2 + x/2 + 1", cp == poly_pow(q, 4));
    Rational block_det = det(c);
    rep.add("isotypic block determinant is 1", block_det == Rational(1));
    rep.data["blockTrace"] = block_trace.str();
    rep.data["blockDet"] = (block_det == Rational(1)) ? std::string("1") : block_det.str();

    QMatrix one_minus_cube = QMatrix::identity(8) - mat_pow(c, 3);
    rep.add("Id - (-beta)^3 is invertible on the isotypic component",
            !det(one_minus_cube).is_zero());

    // ker delta-bar_3 is the equalizer of Id and (-beta)^3, compared through
    // the (injective) projection onto the first block.
    BlockMap dm = deltabar(3);
    KernelResult k = kernel_basis(dm.m);
    QMatrix proj(basis.dim(), k.basis.cols());
    for (std::size_t i = 0; i < basis.dim(); ++i)
        for (std::size_t j = 0; j < k.basis.cols(); ++j) proj.at(i, j) = k.basis.at(i, j);
    KernelResult eq = kernel_basis(QMatrix::identity(20) - mat_pow(mb, 3));
    rep.add("ker delta-bar_3 equals the equalizer of Id and (-beta)^3",
            rcef(proj) == eq.basis,
            "dims " + std::to_string(k.dim()) + " / " + std::to_string(eq.dim()));

    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Differential suite

inline CheckReport differential_suite(int amax = 4, int bmax = 4) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "de Rham differential suite";
    for (int a = 1; a <= amax; ++a)
        for (int b = 1; b <= bmax; ++b) {
            std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
            ShapedMap d = de_rham_d(a, b);
            MLBasis domb(d.dom), codb(d.cod);
            KernelResult k = kernel_basis(d.m);

            Subspace ker;
            ker.ambient = domb.dim();
            ker.b = as_rcef_basis(k.basis);
            ClassFunction chi_ker = subrep_character(d.dom, ker);
            std::vector<int> kp{b + 1};
            for (int i = 0; i < a - 1; ++i) kp.push_back(1);
            rep.add(tag + " kernel carries S_" + Partition(kp).str(),
                    chi_ker == ClassFunction::irreducible(Partition(kp)));

            ClassFunction chi_coker = shape_character(d.cod);
            Subspace img = Subspace::from_span(codb.dim(), d.m.to_dense());
            chi_coker -= subrep_character(d.cod, img);
            if (b == 1) {
                rep.add(tag + " cokernel vanishes", chi_coker.is_zero());
            } else {
                std::vector<int> cp{b - 1};
                for (int i = 0; i < a + 1; ++i) cp.push_back(1);
                rep.add(tag + " cokernel carries S_" + Partition(cp).str(),
                        chi_coker == ClassFunction::irreducible(Partition(cp)));
            }

            // The commuting square: including into tensors then multiplying
            // equals d followed by inclusion.
            std::vector<int> dom_positions;
            for (int i = 0; i < b; ++i) dom_positions.push_back(1 + i);
            ShapedMap dom_incl = (b >= 2)
                                     ? apply_local(d.dom, {1}, dom_positions, local_gamma_to_tensor(b))
                                     : ShapedMap{d.dom, d.dom, SparseMat::identity(domb.dim())};
            std::vector<int> cod_positions;
            for (int i = 0; i < b - 1; ++i) cod_positions.push_back(1 + i);
            ShapedMap cod_incl = (b >= 3)
                                     ? apply_local(d.cod, {1}, cod_positions, local_gamma_to_tensor(b - 1))
                                     : ShapedMap{d.cod, d.cod, SparseMat::identity(codb.dim())};
            ShapedMap merge = apply_local(dom_incl.cod, {0, 1}, {0}, local_wedge_product(a, 1));
            SparseMat route_down = merge.m.mul_sparse(dom_incl.m);
            SparseMat route_right = cod_incl.m.mul_sparse(d.m);
            rep.add(tag + " characterizing square commutes",
                    merge.cod == cod_incl.cod && route_down == route_right);

            // d.d vanishes, and its rank matches the prediction from the
            // intersection of image and kernel one step up.
            if (b >= 2) {
                ShapedMap d2 = de_rham_d(a + 1, b - 1);
                SparseMat dd = d2.m.mul_sparse(d.m);
                Subspace ker2;
                KernelResult k2 = kernel_basis(d2.m);
                ker2.ambient = codb.dim();
                ker2.b = as_rcef_basis(k2.basis);
                Subspace meet = intersect(img, ker2);
                std::size_t predicted = img.dim() - meet.dim();
                rep.add(tag + " rank of d.d matches the intersection prediction",
                        rank_of(dd) == predicted && predicted == 0,
                        "rank " + std::to_string(rank_of(dd)));
            }
        }
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Intersection suite

inline CheckReport intersection_suite(int lambda_nmax = 3, int schur_nmax = 4) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "intersection suite";

    for (int n = 2; n <= lambda_nmax; ++n) {
        // Lambda^{n+1} (x) Lambda^1 and its slot-swapped copy inside
        // Lambda^n (x) T^2 meet in Lambda^{n+2}.
        ShapedMap incl = apply_local(shape_of({L(n + 1), T()}), {0}, {0, 1}, local_wedge_coproduct(n, 1));
        MLBasis amb(incl.cod);
        Subspace s1 = Subspace::from_span(amb.dim(), incl.m.to_dense());
        SparseMat swap_last = slot_action(incl.cod, Permutation::transposition(3, 1, 2));
        Subspace s2 = Subspace::from_span(amb.dim(), swap_last.mul_dense(s1.basis()));
        Subspace meet = intersect(s1, s2);
        std::vector<int> sgn_parts(static_cast<std::size_t>(n + 2), 1);
        bool ok = meet.dim() == 1 &&
                  subrep_character(incl.cod, meet) == ClassFunction::irreducible(Partition(sgn_parts));
        rep.add("wedge intersection at n=" + std::to_string(n) + " is Lambda^" + std::to_string(n + 2),
                ok, "dim " + std::to_string(meet.dim()));
    }

    for (int n = 2; n <= schur_nmax; ++n) {
        // S_(n,1,1) (x) Gamma^1 and its slot-swapped copy inside
        // Lambda^3 (x) Gamma^{n-2} (x) T^2 meet in S_(n+1,1,1).
        FunctorShape start = shape_of({L(3), G(n - 1), T()});
        ShapedMap d = de_rham_d(3, n - 1);
        LocalMap dl{d.dom, d.cod, d.m};
        std::vector<int> dcod_pos;
        for (std::size_t i = 0; i < d.cod.size(); ++i) dcod_pos.push_back(static_cast<int>(i));
        ShapedMap dtensored = apply_local(start, {0, 1}, dcod_pos, dl);
        KernelResult k0 = kernel_basis(dtensored.m);

        FunctorShape ambient;
        QMatrix b1;
        if (n == 2) {
            ambient = start;  // Gamma^{n-1} = T already
            b1 = k0.basis;
        } else {
            ShapedMap push = apply_local(start, {1}, {1, 2}, local_gamma_coproduct(n - 2, 1));
            ambient = push.cod;
            b1 = push.m.mul_dense(k0.basis);
        }
        MLBasis amb(ambient);
        Subspace s1 = Subspace::from_span(amb.dim(), b1);
        int slots = static_cast<int>(ambient.size());
        SparseMat swap_last = slot_action(ambient, Permutation::transposition(slots, slots - 2, slots - 1));
        Subspace s2 = Subspace::from_span(amb.dim(), swap_last.mul_dense(s1.basis()));
        Subspace meet = intersect(s1, s2);
        Partition target({n + 1, 1, 1});
        ClassFunction got = subrep_character(ambient, meet);
        bool ok = got == ClassFunction::irreducible(target);
        std::string detail = "dim " + std::to_string(meet.dim());
        if (!ok) {
            detail += "; computed";
            for (const auto& [lam, mult] : decompose(got))
                detail += " " + lam.str() + (mult == 1 ? "" : "*" + std::to_string(mult));
        }
        rep.add("divided-power intersection at n=" + std::to_string(n) + " is S_" + target.str(), ok,
                detail);
    }

    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Lower bound and the inductive step

namespace detail {

// Iterated wedge coproduct L^{total} -> L^{d_1} (x) ... (x) L^{d_m}.
inline ShapedMap multi_wedge_split(int total, const std::vector<int>& degrees) {
    FunctorShape cur = shape_of({L(total)});
    SparseMat acc = SparseMat::identity(MLBasis(cur).dim());
    int remaining = total;
    for (std::size_t t = 0; t + 1 < degrees.size(); ++t) {
        ShapedMap s = apply_local(cur, {static_cast<int>(t)},
                                  {static_cast<int>(t), static_cast<int>(t) + 1},
                                  local_wedge_coproduct(degrees[t], remaining - degrees[t]));
        acc = s.m.mul_sparse(acc);
        cur = s.cod;
        remaining -= degrees[t];
    }
    return {shape_of({L(total)}), cur, std::move(acc)};
}

// Gamma-route inclusion of ker d into block i of the delta-bar domain:
// split the divided power, move the wedge into place, expand to tensors.
inline SparseMat gamma_block_chain(int r, int i, const FunctorShape& start) {
    FunctorShape cur = start;  // (L3, G(r-1))
    SparseMat acc = SparseMat::identity(MLBasis(cur).dim());
    int left = i, right = r - 1 - i;
    if (left > 0 && right > 0) {
        ShapedMap s = apply_local(cur, {1}, {1, 2}, local_gamma_coproduct(left, right));
        acc = s.m.mul_sparse(acc);
        cur = s.cod;
    }
    // Move L3 past the leading divided block, if any.
    if (left > 0) {
        std::vector<int> img(cur.size());
        std::iota(img.begin(), img.end(), 0);
        img[0] = 1;
        img[1] = 0;
        ShapedMap s = slot_permute_map(cur, Permutation(std::move(img)));
        acc = s.m.mul_sparse(acc);
        cur = s.cod;
    }
    // Expand remaining divided blocks (degree >= 2) into bare letters.
    for (std::size_t pos = 0; pos < cur.size();) {
        if (cur.slots[pos].kind == SlotKind::Divided && cur.slots[pos].degree >= 2) {
            int deg = cur.slots[pos].degree;
            std::vector<int> cod_pos;
            for (int q = 0; q < deg; ++q) cod_pos.push_back(static_cast<int>(pos) + q);
            ShapedMap s = apply_local(cur, {static_cast<int>(pos)}, cod_pos, local_gamma_to_tensor(deg));
            acc = s.m.mul_sparse(acc);
            cur = s.cod;
            pos += static_cast<std::size_t>(deg);
        } else {
            ++pos;
        }
    }
    if (!(cur == dbar_block_shape(r, i))) throw Error("gamma_block_chain: unexpected shape (bug)");
    return acc;
}

}  // namespace detail

// The explicit lower bound: the wedge coproduct vector and the divided-power
// images of ker d all lie in ker delta-bar; for small r they exhaust it.
inline CheckReport lower_bound_check(int r, bool check_equality = true) {
    if (r < 2) throw DimensionError("lower_bound_check: r >= 2 required");
    Stopwatch sw;
    CheckReport rep;
    rep.name = "lower bound r=" + std::to_string(r);
    BlockMap dm = deltabar(r);

    // Lambda^{r+2} vector: coproduct images in every block.
    QMatrix lambda_vec(dm.dom.dim(), 1);
    for (int i = 0; i < r; ++i) {
        std::vector<int> degrees(static_cast<std::size_t>(r), 1);
        degrees[i] = 3;
        ShapedMap split = detail::multi_wedge_split(r + 2, degrees);
        if (!(split.cod == dm.dom.block(i))) throw Error("lower_bound_check: block shape mismatch");
        QMatrix col = split.m.to_dense();  // (block dim) x 1
        for (std::size_t row = 0; row < col.rows(); ++row)
            lambda_vec.at(dm.dom.offset(i) + row, 0) = col.at(row, 0);
    }
    rep.add("wedge coproduct vector lies in ker delta-bar",
            dm.m.mul_dense(lambda_vec).is_zero());

    // S_(r,1,1) block: Gamma-coproduct images of ker d.
    ShapedMap d = de_rham_d(3, r - 1);
    KernelResult kd = kernel_basis(d.m);
    rep.add("ker d has dimension r(r+1)/2",
            kd.dim() == static_cast<std::size_t>(r * (r + 1) / 2),
            "dim " + std::to_string(kd.dim()));
    QMatrix schur_block(dm.dom.dim(), kd.dim());
    for (int i = 0; i < r; ++i) {
        SparseMat chain = detail::gamma_block_chain(r, i, d.dom);
        QMatrix img = chain.mul_dense(kd.basis);
        for (std::size_t row = 0; row < img.rows(); ++row)
            for (std::size_t c = 0; c < img.cols(); ++c)
                schur_block.at(dm.dom.offset(i) + row, c) = img.at(row, c);
    }
    rep.add("divided-power images of ker d lie in ker delta-bar",
            dm.m.mul_dense(schur_block).is_zero());

    QMatrix combined = rcef(lambda_vec.hstack(schur_block));
    rep.add("the two families are independent",
            combined.cols() == 1 + kd.dim());
    if (check_equality) {
        KernelResult full = kernel_basis(dm.m);
        rep.add("together they span ker delta-bar", combined == full.basis,
                "dims " + std::to_string(combined.cols()) + " / " + std::to_string(full.dim()));
    }
    rep.ms = sw.ms();
    return rep;
}

// Inductive step data: ker delta-bar_r is contained in both faces built from
// ker delta-bar_{r-1}, whose intersection decomposes as
// Lambda^{r+2} + S_(r,1,1).
inline CheckReport verify_inductive_step(int r) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "inductive step r=" + std::to_string(r);
    if (r < 3) throw DimensionError("verify_inductive_step: r >= 3 required");
    if (r == 3) {
        rep.not_applicable = true;
        rep.data["note"] =
            "rejected: for r=3 the faces share a common S_(2,1,1,1) factor, so the "
            "face-intersection argument does not apply";
        rep.add("r=3 is rejected with an explanatory note", true, rep.data["note"]);
        rep.ms = sw.ms();
        return rep;
    }

    // Projection of ker delta-bar_{r-1} onto its first block.
    BlockMap prev = deltabar(r - 1);
    KernelResult kprev = kernel_basis(prev.m);
    const std::size_t prev_block_dim = prev.dom.basis(0).dim();
    QMatrix fsmall(prev_block_dim, kprev.basis.cols());
    for (std::size_t i = 0; i < prev_block_dim; ++i)
        for (std::size_t j = 0; j < kprev.basis.cols(); ++j) fsmall.at(i, j) = kprev.basis.at(i, j);
    rep.add("projection onto the first block is injective (r-1)",
            rank_of(fsmall) == kprev.dim());

    // Embed with one extra letter in a final bare slot.
    FunctorShape small = dbar_block_shape(r - 1, 0);  // L3 T^{r-2}, r+1 letters
    FunctorShape big = dbar_block_shape(r, 0);        // L3 T^{r-1}, r+2 letters
    MLBasis small_basis(small), big_basis(big);
    const int k = r + 1;
    QMatrix face1(big_basis.dim(), static_cast<std::size_t>(k + 1) * fsmall.cols());
    for (int extra = 0; extra <= k; ++extra) {
        auto relabel = [&](int x) { return x < extra ? x : x + 1; };
        for (std::size_t idx = 0; idx < small_basis.dim(); ++idx) {
            MLElem e = small_basis.element(idx);
            MLElem f(e.size() + 1);
            for (std::size_t s = 0; s < e.size(); ++s) {
                f[s] = e[s];
                for (int& x : f[s]) x = relabel(x);
            }
            f[e.size()] = {extra};
            std::size_t row = big_basis.index(f);
            for (std::size_t j = 0; j < fsmall.cols(); ++j) {
                const Rational& v = fsmall.at(idx, j);
                if (!v.is_zero())
                    face1.at(row, static_cast<std::size_t>(extra) * fsmall.cols() + j) = v;
            }
        }
    }
    Subspace s1 = Subspace::from_span(big_basis.dim(), face1);
    SparseMat swap_last = slot_action(big, Permutation::transposition(r, r - 2, r - 1));
    Subspace s2 = Subspace::from_span(big_basis.dim(), swap_last.mul_dense(s1.basis()));
    Subspace meet = intersect(s1, s2);

    std::vector<int> sgn(static_cast<std::size_t>(r + 2), 1);
    ClassFunction expected =
        ClassFunction::irreducible(Partition(sgn)) + ClassFunction::irreducible(Partition({r, 1, 1}));
    rep.add("face intersection decomposes as Lambda^{r+2} + S_(r,1,1)",
            subrep_character(big, meet) == expected, "dim " + std::to_string(meet.dim()));

    BlockMap cur = deltabar(r);
    KernelResult kcur = kernel_basis(cur.m);
    QMatrix proj(big_basis.dim(), kcur.basis.cols());
    for (std::size_t i = 0; i < big_basis.dim(); ++i)
        for (std::size_t j = 0; j < kcur.basis.cols(); ++j) proj.at(i, j) = kcur.basis.at(i, j);
    auto contained = [&](const Subspace& s) {
        try {
            solve_against_rcef(s.b, proj, /*validate=*/true);
            return true;
        } catch (const NotInSpanError&) {
            return false;
        }
    };
    rep.add("ker delta-bar_r lies in the first face", contained(s1));
    rep.add("ker delta-bar_r lies in the second face", contained(s2));
    rep.add("ker delta-bar_r lies in the intersection", contained(meet));
    rep.ms = sw.ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Euler relation and conjugate translation

inline CheckReport euler_suite(int rmax = 4) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "Euler relation r<=" + std::to_string(rmax);
    for (int r = 1; r <= rmax; ++r)
        for (int n = 0; n <= r + 2; ++n) {
            // h0_bimodule throws on any disagreement between its direct and
            // Euler-route characters, which is exactly the relation.
            bool ok = true;
            std::string detail;
            try {
                h0_bimodule(r, n);
            } catch (const ConsistencyError& e) {
                ok = false;
                detail = e.what();
            }
            rep.add("chi(H0) - chi(H1) = chi(Lie^r) - chi(V x Lie^r) at r=" + std::to_string(r) +
                        " n=" + std::to_string(n),
                    ok, detail);
        }
    rep.ms = sw.ms();
    return rep;
}

inline CheckReport conjugate_translation_check(int rmax = 4) {
    Stopwatch sw;
    CheckReport rep;
    rep.name = "conjugate partition translation";
    for (int r = 2; r <= rmax; ++r) {
        std::vector<DecompEntry> thm = to_entries(decompose_bimodule(theorem_prediction(r)));
        std::vector<DecompEntry> conj;
        for (const auto& e : thm) conj.push_back({e.lambda.conjugate(), e.mu.conjugate(), e.mult});
        std::sort(conj.begin(), conj.end(), [](const DecompEntry& x, const DecompEntry& y) {
            return x.lambda == y.lambda ? x.mu < y.mu : x.lambda < y.lambda;
        });
        std::vector<int> hook{3};
        for (int i = 0; i < r - 1; ++i) hook.push_back(1);
        std::vector<DecompEntry> want{{Partition({r + 2}), Partition({r}), 1},
                                      {Partition(hook), Partition(std::vector<int>(r, 1)), 1}};
        std::sort(want.begin(), want.end(), [](const DecompEntry& x, const DecompEntry& y) {
            return x.lambda == y.lambda ? x.mu < y.mu : x.lambda < y.lambda;
        });
        rep.add("conjugating the r=" + std::to_string(r) + " decomposition gives the bimodule form",
                entries_equal(conj, want), entries_str(conj));
    }
    rep.ms = sw.ms();
    return rep;
}

}  // namespace lieho
