#pragma once

// Integer polynomials, stored as coefficient vectors from the constant term
// upward. Only what the limit computations need: characteristic
// polynomials, evaluation at a matrix, and factorization of monic
// polynomials over Z.

#include "telescoped/exactalg/integer.hpp"

#include <utility>
#include <vector>

namespace telescoped {

using Polynomial = std::vector<BigInt>;

namespace poly {

Eigen::Index degree(const Polynomial& f);  ///< -1 for the zero polynomial
Polynomial trim(Polynomial f);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
/// Quotient and remainder by a monic divisor.
std::pair<Polynomial, Polynomial> divide_monic(const Polynomial& f, const Polynomial& g);
BigInt evaluate(const Polynomial& f, const BigInt& x);
IntMatrix evaluate(const Polynomial& f, const IntMatrix& a);

/// det(tI - A), monic of degree n.
Polynomial characteristic(const IntMatrix& a);

/// Irreducible monic factors with multiplicities, sorted by degree then
/// coefficients. Input must be monic. Uses integer roots first and then
/// Kronecker's interpolation search; throws Error if the search space is
/// beyond a fixed budget.
std::vector<std::pair<Polynomial, unsigned>> factor_monic(const Polynomial& f);

/// Split a monic f as u * w where u collects the irreducible factors with
/// constant term +-1 and w the rest.
std::pair<Polynomial, Polynomial> split_unit_part(const Polynomial& f);

std::string to_string(const Polynomial& f);

}  // namespace poly
}  // namespace telescoped
