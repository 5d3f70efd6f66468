#pragma once

// Smith normal form over the integers with unimodular transforms.
//
// Pivoting rule: the smallest nonzero |entry| of the active submatrix, ties
// broken by lowest row then lowest column. The output is a pure function of
// the input matrix.

#include "telescoped/exactalg/integer.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace telescoped {

template <typename Scalar>
struct SmithDecomposition {
    Matrix<Scalar> U;     ///< rows x rows, unimodular
    Matrix<Scalar> S;     ///< rows x cols, diagonal d1 | d2 | ... , di >= 0
    Matrix<Scalar> V;     ///< cols x cols, unimodular
    Matrix<Scalar> Uinv;  ///< inverse of U
    Matrix<Scalar> Vinv;  ///< inverse of V
    Eigen::Index rank = 0;

    std::vector<Scalar> diagonal() const
    {
        std::vector<Scalar> d;
        for (Eigen::Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
        return d;
    }
};

namespace detail {

template <typename Scalar>
struct SmithWorker {
    Matrix<Scalar> A, U, Uinv, V, Vinv;

    void swap_rows(Eigen::Index a, Eigen::Index b)
    {
        if (a == b) return;
        A.row(a).swap(A.row(b));
        U.row(a).swap(U.row(b));
        Uinv.col(a).swap(Uinv.col(b));
    }
    void swap_cols(Eigen::Index a, Eigen::Index b)
    {
        if (a == b) return;
        A.col(a).swap(A.col(b));
        V.col(a).swap(V.col(b));
        Vinv.row(a).swap(Vinv.row(b));
    }
    // row[dst] += q * row[src]
    void add_row(Eigen::Index dst, Eigen::Index src, const Scalar& q)
    {
        if (q == Scalar(0)) return;
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (A(src, j) != Scalar(0)) A(dst, j) += q * A(src, j);
        for (Eigen::Index j = 0; j < U.cols(); ++j)
            if (U(src, j) != Scalar(0)) U(dst, j) += q * U(src, j);
        for (Eigen::Index i = 0; i < Uinv.rows(); ++i)
            if (Uinv(i, dst) != Scalar(0)) Uinv(i, src) -= q * Uinv(i, dst);
    }
    // col[dst] += q * col[src]
    void add_col(Eigen::Index dst, Eigen::Index src, const Scalar& q)
    {
        if (q == Scalar(0)) return;
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            if (A(i, src) != Scalar(0)) A(i, dst) += q * A(i, src);
        for (Eigen::Index i = 0; i < V.rows(); ++i)
            if (V(i, src) != Scalar(0)) V(i, dst) += q * V(i, src);
        for (Eigen::Index j = 0; j < Vinv.cols(); ++j)
            if (Vinv(dst, j) != Scalar(0)) Vinv(src, j) -= q * Vinv(dst, j);
    }
    void negate_row(Eigen::Index r)
    {
        A.row(r) = -A.row(r);
        U.row(r) = -U.row(r);
        Uinv.col(r) = -Uinv.col(r);
    }

    // Smallest nonzero |entry| in A[t.., t..]; ties by lowest row, then column.
    std::optional<std::pair<Eigen::Index, Eigen::Index>> find_pivot(Eigen::Index t) const
    {
        std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
        Scalar best_abs(0);
        for (Eigen::Index i = t; i < A.rows(); ++i)
            for (Eigen::Index j = t; j < A.cols(); ++j) {
                if (A(i, j) == Scalar(0)) continue;
                Scalar a = exact::abs(A(i, j));
                if (!best || a < best_abs) {
                    best = std::make_pair(i, j);
                    best_abs = a;
                }
            }
        return best;
    }
};

}  // namespace detail

template <typename Scalar>
SmithDecomposition<Scalar> smith_normal_form(const Matrix<Scalar>& input)
{
    const Eigen::Index m = input.rows(), n = input.cols();
    detail::SmithWorker<Scalar> w{input, exact::identity<Scalar>(m), exact::identity<Scalar>(m),
                                  exact::identity<Scalar>(n), exact::identity<Scalar>(n)};
    Eigen::Index t = 0;
    const Eigen::Index limit = std::min(m, n);
    while (t < limit) {
        auto pivot = w.find_pivot(t);
        if (!pivot) break;
        w.swap_rows(t, pivot->first);
        w.swap_cols(t, pivot->second);
        for (;;) {
            bool clean = true;
            for (Eigen::Index i = t + 1; i < m; ++i) {
                if (w.A(i, t) == Scalar(0)) continue;
                w.add_row(i, t, Scalar(-(w.A(i, t) / w.A(t, t))));
                if (w.A(i, t) != Scalar(0)) clean = false;
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (w.A(t, j) == Scalar(0)) continue;
                w.add_col(j, t, Scalar(-(w.A(t, j) / w.A(t, t))));
                if (w.A(t, j) != Scalar(0)) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived in row/column t.
                Eigen::Index bi = t, bj = t;
                Scalar best = exact::abs(w.A(t, t));
                for (Eigen::Index i = t + 1; i < m; ++i)
                    if (w.A(i, t) != Scalar(0) && exact::abs(w.A(i, t)) < best) {
                        best = exact::abs(w.A(i, t));
                        bi = i;
                        bj = t;
                    }
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (w.A(t, j) != Scalar(0) && exact::abs(w.A(t, j)) < best) {
                        best = exact::abs(w.A(t, j));
                        bi = t;
                        bj = j;
                    }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // Divisibility: fold an offending row into row t and re-reduce.
            bool divides = true;
            for (Eigen::Index i = t + 1; i < m && divides; ++i)
                for (Eigen::Index j = t + 1; j < n; ++j)
                    if (w.A(i, j) % w.A(t, t) != Scalar(0)) {
                        w.add_row(t, i, Scalar(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.A(t, t) < Scalar(0)) w.negate_row(t);
        ++t;
    }
    SmithDecomposition<Scalar> out;
    out.rank = t;
    out.S = std::move(w.A);
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    return out;
}

/// Diagonal of the Smith form only (no transforms).
template <typename Scalar>
std::vector<Scalar> smith_invariants(const Matrix<Scalar>& input)
{
    return smith_normal_form(input).diagonal();
}

/// Nonzero invariant factors d1 | d2 | ... of an integer matrix. Unit
/// entries are eliminated on a sparse copy first (fewest-fill pivot first)
/// and only the remainder goes through the dense Smith form, which keeps
/// large, sparse coboundary matrices cheap.
std::vector<BigInt> nonzero_invariant_factors(const IntMatrix& a);

}  // namespace telescoped
