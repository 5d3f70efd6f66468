#include "telescoped/exactalg/primes.hpp"

#include "telescoped/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>

namespace telescoped::primes {

bool is_prime(const BigInt& n)
{
    if (n < 2) return false;
    thread_local std::mt19937_64 gen(0x5eed);
    return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

BigInt next_prime(const BigInt& n)
{
    BigInt c = n < 2 ? BigInt(2) : BigInt(n + 1);
    while (!is_prime(c)) ++c;
    return c;
}

namespace {

BigInt pollard_rho(const BigInt& n)
{
    if (n % 2 == 0) return 2;
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = exact::gcd(BigInt(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt n, std::map<BigInt, unsigned>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::map<BigInt, unsigned> factorize(const BigInt& n)
{
    if (n == 0) throw PreconditionError("factorization of a nonzero integer", "got 0");
    std::map<BigInt, unsigned> out;
    BigInt m = exact::abs(n);
    for (unsigned p = 2; p < 1000 && BigInt(p) * p <= m; ++p) {
        while (m % p == 0) {
            ++out[BigInt(p)];
            m /= p;
        }
    }
    factor_into(m, out);
    return out;
}

unsigned valuation(BigInt n, const BigInt& p)
{
    if (n == 0) throw PreconditionError("valuation of a nonzero integer", "got 0");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<BigInt> divisors(const BigInt& n)
{
    std::vector<BigInt> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        BigInt pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace telescoped::primes
