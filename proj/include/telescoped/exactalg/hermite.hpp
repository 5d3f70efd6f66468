#pragma once

// Column-style Hermite normal form.
//
// A basis B (n x k) is in column Hermite form when there are pivot rows
// r_0 < r_1 < ... < r_{k-1} such that column j vanishes above r_j,
// B(r_j, j) > 0, and 0 <= B(r_j, i) < B(r_j, j) for every i < j. Two
// generating sets span the same lattice iff their Hermite forms agree.

#include "telescoped/exactalg/integer.hpp"

#include <optional>
#include <vector>

namespace telescoped {

template <typename Scalar>
struct ColumnEchelon {
    Matrix<Scalar> basis;                 ///< first `rank` columns of the reduced matrix
    std::vector<Eigen::Index> pivot_rows; ///< one per basis column
    Matrix<Scalar> V;                     ///< unimodular, input * V = [basis | 0]
    Matrix<Scalar> Vinv;
    Eigen::Index rank = 0;
    bool has_transform = false;
};

/// Column operations only; the transform is tracked when `track` is set.
template <typename Scalar>
ColumnEchelon<Scalar> column_hermite(const Matrix<Scalar>& input, bool track = false)
{
    Matrix<Scalar> A = input;
    const Eigen::Index n = A.rows(), m = A.cols();
    Matrix<Scalar> V, Vinv;
    if (track) {
        V = exact::identity<Scalar>(m);
        Vinv = exact::identity<Scalar>(m);
    }
    auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
        if (a == b) return;
        A.col(a).swap(A.col(b));
        if (track) {
            V.col(a).swap(V.col(b));
            Vinv.row(a).swap(Vinv.row(b));
        }
    };
    // col[dst] += q * col[src]
    auto add_col = [&](Eigen::Index dst, Eigen::Index src, const Scalar& q) {
        if (q == Scalar(0)) return;
        for (Eigen::Index i = 0; i < n; ++i)
            if (A(i, src) != Scalar(0)) A(i, dst) += q * A(i, src);
        if (track) {
            for (Eigen::Index i = 0; i < m; ++i)
                if (V(i, src) != Scalar(0)) V(i, dst) += q * V(i, src);
            for (Eigen::Index j = 0; j < m; ++j)
                if (Vinv(dst, j) != Scalar(0)) Vinv(src, j) -= q * Vinv(dst, j);
        }
    };
    auto negate_col = [&](Eigen::Index c) {
        A.col(c) = -A.col(c);
        if (track) {
            V.col(c) = -V.col(c);
            Vinv.row(c) = -Vinv.row(c);
        }
    };

    ColumnEchelon<Scalar> out;
    Eigen::Index k = 0;
    for (Eigen::Index row = 0; row < n && k < m; ++row) {
        for (;;) {
            Eigen::Index best = -1;
            for (Eigen::Index j = k; j < m; ++j)
                if (A(row, j) != Scalar(0) &&
                    (best < 0 || exact::abs(A(row, j)) < exact::abs(A(row, best))))
                    best = j;
            if (best < 0) break;
            swap_cols(k, best);
            bool single = true;
            for (Eigen::Index j = k + 1; j < m; ++j) {
                if (A(row, j) == Scalar(0)) continue;
                add_col(j, k, Scalar(-(A(row, j) / A(row, k))));
                if (A(row, j) != Scalar(0)) single = false;
            }
            if (single) break;
        }
        if (A(row, k) == Scalar(0)) continue;
        if (A(row, k) < Scalar(0)) negate_col(k);
        for (Eigen::Index j = 0; j < k; ++j)
            add_col(j, k, Scalar(-exact::floor_div(A(row, j), A(row, k))));
        out.pivot_rows.push_back(row);
        ++k;
    }
    out.rank = k;
    out.basis = A.leftCols(k);
    if (track) {
        out.V = std::move(V);
        out.Vinv = std::move(Vinv);
        out.has_transform = true;
    }
    return out;
}

/// Integer kernel basis of A (as columns); saturated, in Hermite form.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& a)
{
    auto ech = column_hermite(a, true);
    Matrix<Scalar> raw = ech.V.rightCols(a.cols() - ech.rank);
    return column_hermite(raw).basis;
}

/// Solve B y = v for a basis in column Hermite form; nullopt if v is not in
/// the lattice spanned by B.
template <typename Scalar>
std::optional<Vector<Scalar>> hermite_coordinates(const Matrix<Scalar>& basis,
                                                  const std::vector<Eigen::Index>& pivot_rows,
                                                  const Vector<Scalar>& v)
{
    const Eigen::Index k = basis.cols();
    Vector<Scalar> y = Vector<Scalar>::Zero(k);
    Vector<Scalar> rest = v;
    for (Eigen::Index j = 0; j < k; ++j) {
        const Eigen::Index r = pivot_rows[static_cast<std::size_t>(j)];
        if (rest(r) % basis(r, j) != Scalar(0)) return std::nullopt;
        y(j) = rest(r) / basis(r, j);
        if (y(j) != Scalar(0))
            for (Eigen::Index i = r; i < basis.rows(); ++i)
                if (basis(i, j) != Scalar(0)) rest(i) -= y(j) * basis(i, j);
    }
    if (!exact::is_zero(rest)) return std::nullopt;
    return y;
}

}  // namespace telescoped
