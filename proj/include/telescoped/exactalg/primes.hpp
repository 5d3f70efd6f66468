#pragma once

#include "telescoped/exactalg/integer.hpp"

#include <map>

namespace telescoped::primes {

bool is_prime(const BigInt& n);
/// Smallest prime strictly greater than n.
BigInt next_prime(const BigInt& n);
/// Prime factorization of |n| (n != 0); empty for |n| = 1.
std::map<BigInt, unsigned> factorize(const BigInt& n);
/// p-adic valuation of n != 0.
unsigned valuation(BigInt n, const BigInt& p);
/// All positive divisors of |n|, ascending (n != 0).
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace telescoped::primes
