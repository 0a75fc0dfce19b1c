#pragma once

// Exact linear algebra: reduced echelon forms, kernels, span solving,
// intersections and characteristic polynomials.
//
// The canonical representative of a subspace is its basis in reduced column
// echelon form (RCEF): columns ordered by pivot row, pivots normalized to 1,
// pivot rows cleared in all other columns.  Subspace equality is then matrix
// equality.

#include "lieho/exactalg.hpp"

#include <cassert>

namespace lieho {

// Gauss-Jordan over Q, in place.  Returns the pivot column indices.
inline std::vector<std::size_t> rref_inplace(QMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

struct RcefBasis {
    QMatrix basis;                     // RCEF, zero columns dropped
    std::vector<std::size_t> pivot_rows;  // pivot_rows[j] is the pivot of column j
};

inline RcefBasis rcef_with_pivots(const QMatrix& m) {
    QMatrix t = m.transpose();
    std::vector<std::size_t> piv = rref_inplace(t);
    RcefBasis out;
    out.pivot_rows = piv;
    out.basis = QMatrix(m.rows(), piv.size());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) out.basis.at(j, i) = t.at(i, j);
    return out;
}

inline QMatrix rcef(const QMatrix& m) { return rcef_with_pivots(m).basis; }

// ---------------------------------------------------------------------------
// Sparse kernel computation.
//
// To compute ker(M) we row-reduce M^T: each column of M becomes a sparse
// rational row vector, augmented with an identity tail that tracks the
// combination.  Coordinates (the rows of M) are processed in increasing
// order; among the candidate rows for a pivot the sparsest one is chosen,
// ties broken by lowest id.  Pivot rows are normalized before use, so
// entries stay ratios of minors instead of accumulating products.

struct KernelResult {
    QMatrix basis;      // RCEF basis of {x : Mx = 0}
    std::size_t rank = 0;
    std::size_t dim() const { return basis.cols(); }
};

namespace detail {

using QEntry = std::pair<int, Rational>;
using QRow = std::vector<QEntry>;  // sorted by coordinate

// target <- target - c*pivot.  Coordinates present in the pivot but not in
// the target (fill-in) are appended to `fresh`.
inline void combine(QRow& target, const Rational& c, const QRow& pivot, std::vector<int>& fresh) {
    QRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            out.push_back(target[i]);
            ++i;
        } else if (i == target.size() || pivot[j].first < target[i].first) {
            out.emplace_back(pivot[j].first, -(c * pivot[j].second));
            fresh.push_back(pivot[j].first);
            ++j;
        } else {
            Rational v = target[i].second - c * pivot[j].second;
            if (!v.is_zero()) out.emplace_back(target[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

inline const Rational* find_coord(const QRow& r, int c) {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const QEntry& e, int key) { return e.first < key; });
    if (it != r.end() && it->first == c) return &it->second;
    return nullptr;
}

// Shared elimination core.  Returns the frozen pivot rows (an echelon basis
// of the span of the input rows) and leaves the surviving reduced rows in
// `vec`/`alive`.
struct Elimination {
    std::vector<QRow> vec;
    std::vector<char> alive;
    std::vector<std::pair<int, int>> pivots;  // (coordinate, row id), frozen
};

inline Elimination eliminate(std::vector<QRow> vec, int ncoords) {
    Elimination el;
    const std::size_t nv = vec.size();
    el.alive.assign(nv, 1);
    std::vector<std::vector<int>> occ(ncoords);
    for (std::size_t j = 0; j < nv; ++j)
        for (const auto& [r, v] : vec[j])
            if (r < ncoords) occ[r].push_back(static_cast<int>(j));

    std::vector<int> cand;
    for (int c = 0; c < ncoords; ++c) {
        cand.clear();
        for (int id : occ[c]) {
            if (!el.alive[id]) continue;
            if (find_coord(vec[id], c)) cand.push_back(id);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        if (cand.empty()) continue;

        int piv = cand[0];
        for (int id : cand)
            if (vec[id].size() < vec[piv].size() || (vec[id].size() == vec[piv].size() && id < piv))
                piv = id;

        // Normalize the pivot row so its entry at c is 1.
        {
            Rational inv = find_coord(vec[piv], c)->inv();
            if (!(inv == Rational(1)))
                for (auto& [r, v] : vec[piv]) v *= inv;
        }
        el.alive[piv] = 0;
        el.pivots.emplace_back(c, piv);
        std::vector<int> fresh;
        for (int id : cand) {
            if (id == piv) continue;
            Rational vc = *find_coord(vec[id], c);
            fresh.clear();
            combine(vec[id], vc, vec[piv], fresh);
            for (int r : fresh)
                if (r > c && r < ncoords) occ[r].push_back(id);
        }
        occ[c].clear();
        occ[c].shrink_to_fit();
    }
    el.vec = std::move(vec);
    return el;
}

}  // namespace detail

inline KernelResult kernel_basis(const SparseMat& m) {
    using namespace detail;
    const int nr = static_cast<int>(m.rows());
    const std::size_t nc = m.cols();

    std::vector<QRow> vec(nc);
    for (std::size_t j = 0; j < nc; ++j) {
        QRow& row = vec[j];
        for (const auto& [r, v] : m.column(j)) row.emplace_back(r, v);
        row.emplace_back(nr + static_cast<int>(j), Rational(1));  // identity tail
    }
    Elimination el = eliminate(std::move(vec), nr);

    std::vector<std::size_t> kernel_ids;
    for (std::size_t j = 0; j < nc; ++j)
        if (el.alive[j]) kernel_ids.push_back(j);

    QMatrix basis(nc, kernel_ids.size());
    for (std::size_t k = 0; k < kernel_ids.size(); ++k) {
        const QRow& row = el.vec[kernel_ids[k]];
        for (const auto& [r, v] : row) {
            if (r < nr) throw Error("kernel_basis: residual matrix entry (bug)");
            basis.at(static_cast<std::size_t>(r - nr), k) = v;
        }
    }
    KernelResult res;
    res.basis = rcef(basis);
    res.rank = el.pivots.size();
    return res;
}

// RCEF basis of the column space, by the same elimination followed by
// back-substitution on the frozen pivot rows.
inline RcefBasis column_space_rcef(const SparseMat& m) {
    using namespace detail;
    const int nr = static_cast<int>(m.rows());
    std::vector<QRow> vec(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [r, v] : m.column(j)) vec[j].emplace_back(r, v);
    Elimination el = eliminate(std::move(vec), nr);

    // Clear each pivot coordinate from the earlier pivot rows.
    std::vector<int> fresh;
    for (std::size_t i = el.pivots.size(); i-- > 0;) {
        const auto& [c, id] = el.pivots[i];
        for (std::size_t j = 0; j < i; ++j) {
            QRow& target = el.vec[el.pivots[j].second];
            if (const Rational* tc = find_coord(target, c)) {
                Rational coeff = *tc;
                fresh.clear();
                combine(target, coeff, el.vec[id], fresh);
            }
        }
    }
    RcefBasis out;
    out.basis = QMatrix(m.rows(), el.pivots.size());
    for (std::size_t i = 0; i < el.pivots.size(); ++i) {
        out.pivot_rows.push_back(static_cast<std::size_t>(el.pivots[i].first));
        for (const auto& [r, v] : el.vec[el.pivots[i].second]) out.basis.at(r, i) = v;
    }
    return out;
}

inline KernelResult kernel_basis(const QMatrix& m) { return kernel_basis(m.to_sparse()); }

inline std::size_t rank_of(const SparseMat& m) { return kernel_basis(m).rank; }
inline std::size_t rank_of(const QMatrix& m) { return kernel_basis(m).rank; }

// Pivot rows of a matrix already in RCEF.
inline std::vector<std::size_t> pivots_of_rcef(const QMatrix& b) {
    std::vector<std::size_t> piv;
    for (std::size_t j = 0; j < b.cols(); ++j) {
        std::size_t i = 0;
        while (i < b.rows() && b.at(i, j).is_zero()) ++i;
        if (i == b.rows()) throw Error("pivots_of_rcef: zero column");
        piv.push_back(i);
    }
    return piv;
}

inline RcefBasis as_rcef_basis(QMatrix rcef_matrix) {
    RcefBasis out;
    out.pivot_rows = pivots_of_rcef(rcef_matrix);
    out.basis = std::move(rcef_matrix);
    return out;
}

// Basis of {y : y^T M = 0}, read off from the column space echelon form:
// for every non-pivot coordinate q the vector with 1 at q and -B[q, i] at
// the i-th pivot coordinate annihilates span(B).  The result has identity
// structure at its pivot rows (the non-pivot coordinates of M).
inline RcefBasis left_kernel_basis(const SparseMat& m) {
    RcefBasis img = column_space_rcef(m);
    std::vector<char> is_piv(m.rows(), 0);
    for (std::size_t p : img.pivot_rows) is_piv[p] = 1;
    RcefBasis out;
    for (std::size_t q = 0; q < m.rows(); ++q)
        if (!is_piv[q]) out.pivot_rows.push_back(q);
    out.basis = QMatrix(m.rows(), out.pivot_rows.size());
    for (std::size_t j = 0; j < out.pivot_rows.size(); ++j) {
        std::size_t q = out.pivot_rows[j];
        out.basis.at(q, j) = 1;
        for (std::size_t i = 0; i < img.pivot_rows.size(); ++i)
            out.basis.at(img.pivot_rows[i], j) = -img.basis.at(q, i);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Solving inside a span.

// Returns C with B*C = W; requires the columns of B to be independent.
// Throws NotInSpanError when some column of W falls outside span(B).
inline QMatrix solve_in_span(const QMatrix& b, const QMatrix& w) {
    if (b.rows() != w.rows()) throw DimensionError("solve_in_span: row mismatch");
    QMatrix aug = b.hstack(w);
    std::vector<std::size_t> piv = rref_inplace(aug);
    for (std::size_t p : piv)
        if (p >= b.cols()) throw NotInSpanError("solve_in_span: column outside span");
    if (piv.size() != b.cols())
        throw Error("solve_in_span: columns of B are dependent");
    // With B of full column rank and all pivots inside B, row i of the
    // reduced augmented part is the coefficient vector on basis column i.
    QMatrix c(b.cols(), w.cols());
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) c.at(i, j) = aug.at(i, b.cols() + j);
    // Rows below the pivot count must impose no further constraints.
    for (std::size_t i = b.cols(); i < aug.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (!aug.at(i, b.cols() + j).is_zero())
                throw NotInSpanError("solve_in_span: column outside span");
    return c;
}

// Fast path for an RCEF basis: coefficients are read off at the pivot rows;
// validation (B*C == W) is the caller's choice because it dominates the cost
// on large ambients.
inline QMatrix solve_against_rcef(const RcefBasis& b, const QMatrix& w, bool validate) {
    QMatrix c(b.basis.cols(), w.cols());
    for (std::size_t i = 0; i < b.pivot_rows.size(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) c.at(i, j) = w.at(b.pivot_rows[i], j);
    if (validate && !(b.basis * c == w))
        throw NotInSpanError("solve_against_rcef: column outside span");
    return c;
}

// Basis (RCEF) of span(b1) ∩ span(b2) inside a common ambient space.
inline QMatrix intersect_spans(const QMatrix& b1, const QMatrix& b2) {
    if (b1.rows() != b2.rows()) throw AmbientMismatchError("intersect_spans: ambient mismatch");
    QMatrix stacked = b1.hstack(-b2);
    KernelResult k = kernel_basis(stacked);
    QMatrix top(b1.cols(), k.basis.cols());
    for (std::size_t i = 0; i < b1.cols(); ++i)
        for (std::size_t j = 0; j < k.basis.cols(); ++j) top.at(i, j) = k.basis.at(i, j);
    return rcef(b1 * top);
}

// ---------------------------------------------------------------------------
// Characteristic polynomial (Faddeev-LeVerrier), det, polynomial helpers.

// Coefficients ascending: p(x) = c[0] + c[1] x + ... + c[n] x^n, monic.
inline std::vector<Rational> charpoly(const QMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("charpoly: square matrix required");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMatrix m(n, n);  // zero
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I
        QMatrix am = a * m;
        for (std::size_t i = 0; i < n; ++i) am.at(i, i) += c[n - k + 1];
        m = std::move(am);
        QMatrix prod = a * m;
        c[n - k] = -(prod.trace() / Rational(static_cast<long>(k)));
    }
    return c;
}

inline Rational det(const QMatrix& a) {
    std::vector<Rational> c = charpoly(a);
    Rational d = c[0];
    if (a.rows() % 2 == 1) d = -d;
    return d;
}

inline std::vector<Rational> poly_mul(const std::vector<Rational>& p, const std::vector<Rational>& q) {
    std::vector<Rational> r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

inline std::vector<Rational> poly_pow(std::vector<Rational> p, int e) {
    std::vector<Rational> r{Rational(1)};
    for (int i = 0; i < e; ++i) r = poly_mul(r, p);
    return r;
}

inline QMatrix mat_pow(const QMatrix& a, int e) {
    QMatrix r = QMatrix::identity(a.rows());
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

}  // namespace lieho
