#pragma once

// Scalar and dense matrix types shared by every exact computation.
//
// All algorithms in exactalg are templated on the scalar so that they can be
// exercised with machine integers in tests; everything above exactalg uses
// BigInt.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace telescoped {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<BigInt>;
using IntVector = Vector<BigInt>;

namespace exact {

template <typename Scalar>
Scalar abs(const Scalar& a)
{
    return a < Scalar(0) ? Scalar(-a) : a;
}

/// Floor division; b != 0.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b)
{
    Scalar q = a / b;
    Scalar r = a - q * b;
    if (r != Scalar(0) && ((r < Scalar(0)) != (b < Scalar(0)))) q -= Scalar(1);
    return q;
}

/// Representative of a mod m in [0, |m|); m != 0.
template <typename Scalar>
Scalar mod_floor(const Scalar& a, const Scalar& m)
{
    Scalar r = a % m;
    if (r < Scalar(0)) r += abs(m);
    return r;
}

template <typename Scalar>
Scalar gcd(Scalar a, Scalar b)
{
    a = abs(a);
    b = abs(b);
    while (b != Scalar(0)) {
        Scalar t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <typename Scalar>
Scalar lcm(const Scalar& a, const Scalar& b)
{
    if (a == Scalar(0) || b == Scalar(0)) return Scalar(0);
    return abs(a / gcd(a, b) * b);
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != Scalar(0)) return false;
    return true;
}

template <typename Scalar>
Matrix<Scalar> identity(Eigen::Index n)
{
    return Matrix<Scalar>::Identity(n, n);
}

template <typename Scalar>
Matrix<Scalar> zeros(Eigen::Index rows, Eigen::Index cols)
{
    return Matrix<Scalar>::Zero(rows, cols);
}

/// Matrix product with an explicit loop; Eigen's kernels assume a field.
template <typename Scalar>
Matrix<Scalar> multiply(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out = Matrix<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index j = 0; j < b.cols(); ++j)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            if (b(k, j) == Scalar(0)) continue;
            const Scalar& bkj = b(k, j);
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                if (a(i, k) != Scalar(0)) out(i, j) += a(i, k) * bkj;
        }
    return out;
}

template <typename Scalar>
Vector<Scalar> apply(const Matrix<Scalar>& a, const Vector<Scalar>& v)
{
    Vector<Scalar> out = Vector<Scalar>::Zero(a.rows());
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        if (v(k) == Scalar(0)) continue;
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (a(i, k) != Scalar(0)) out(i) += a(i, k) * v(k);
    }
    return out;
}

template <typename Scalar>
Matrix<Scalar> hstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b)
{
    Matrix<Scalar> out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

template <typename Scalar>
Matrix<Scalar> block_diagonal(const std::vector<Matrix<Scalar>>& blocks)
{
    Eigen::Index rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix<Scalar> out = Matrix<Scalar>::Zero(rows, cols);
    Eigen::Index r = 0, c = 0;
    for (const auto& b : blocks) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
template <typename Scalar>
Scalar determinant(Matrix<Scalar> a)
{
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar sign(1), prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Scalar(0)) {
            Eigen::Index swap = -1;
            for (Eigen::Index i = k + 1; i < n; ++i)
                if (a(i, k) != Scalar(0)) {
                    swap = i;
                    break;
                }
            if (swap < 0) return Scalar(0);
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i)
            for (Eigen::Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

template <typename Scalar>
Matrix<Scalar> from_rows(const std::vector<std::vector<Scalar>>& rows, Eigen::Index cols = -1)
{
    const Eigen::Index r = static_cast<Eigen::Index>(rows.size());
    const Eigen::Index c = cols >= 0 ? cols : (r ? static_cast<Eigen::Index>(rows[0].size()) : 0);
    Matrix<Scalar> m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

}  // namespace exact

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);
IntVector int_vector(std::initializer_list<long long> entries);
IntVector int_vector(const std::vector<BigInt>& entries);

std::string to_string(const BigInt& a);
std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

/// Lexicographic comparison; used to make outputs deterministic.
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace telescoped
