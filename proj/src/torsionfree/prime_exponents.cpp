#include "telescoped/torsionfree/prime_exponents.hpp"

#include "telescoped/error.hpp"
#include "telescoped/exactalg/primes.hpp"

#include <set>

namespace telescoped {

Exponent Exponent::parse(const std::string& text)
{
    if (text == "inf") return infinity();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("exponent must be a natural number or \"inf\"");
    try {
        return Exponent(std::stoull(text));
    } catch (const std::out_of_range&) {
        throw ParseError("exponent out of range");
    }
}

PrimeExponentSeq::PrimeExponentSeq(std::map<BigInt, Exponent> exceptional, std::uint64_t default_value)
    : exceptional_(std::move(exceptional)), default_(default_value)
{
    for (const auto& [p, e] : exceptional_)
        if (!primes::is_prime(p)) throw PreconditionError("exceptional keys are primes", telescoped::to_string(p) + " is not prime");
    canonicalize();
}

void PrimeExponentSeq::canonicalize()
{
    for (auto it = exceptional_.begin(); it != exceptional_.end();) {
        if (it->second == Exponent(default_))
            it = exceptional_.erase(it);
        else
            ++it;
    }
}

Exponent PrimeExponentSeq::at(const BigInt& p) const
{
    auto it = exceptional_.find(p);
    return it == exceptional_.end() ? Exponent(default_) : it->second;
}

void PrimeExponentSeq::set(const BigInt& p, Exponent e)
{
    if (!primes::is_prime(p)) throw PreconditionError("exceptional keys are primes", telescoped::to_string(p) + " is not prime");
    exceptional_[p] = e;
    canonicalize();
}

std::vector<BigInt> PrimeExponentSeq::infinite_primes() const
{
    std::vector<BigInt> out;
    for (const auto& [p, e] : exceptional_)
        if (e.is_infinite()) out.push_back(p);
    return out;
}

std::string PrimeExponentSeq::to_string() const
{
    std::string s = "{";
    for (const auto& [p, e] : exceptional_) {
        if (s.size() > 1) s += ", ";
        s += telescoped::to_string(p) + ": " + e.to_string();
    }
    if (s.size() > 1) s += ", ";
    return s + "default: " + std::to_string(default_) + "}";
}

BigInt MultiplierSequence::at(std::size_t n) const
{
    if (n < prefix.size()) return prefix[n];
    const std::size_t j = n - prefix.size();
    if (!sweep) {
        if (block.empty()) throw PreconditionError("multiplier block is nonempty", "empty periodic block");
        return block[j % block.size()];
    }
    BigInt p = sweep->first_prime;
    if (!primes::is_prime(p)) p = primes::next_prime(p);
    for (std::size_t i = 0; i < j; ++i) p = primes::next_prime(p);
    BigInt k = sweep->factor;
    for (unsigned e = 0; e < sweep->exponent; ++e) k *= p;
    return k;
}

PrimeExponentSeq type_of(const MultiplierSequence& k)
{
    auto nonzero = [](const BigInt& v) {
        if (v == 0) throw PreconditionError("multipliers are nonzero", "zero multiplier");
    };
    std::map<BigInt, Exponent> entries;
    for (const auto& v : k.prefix) {
        nonzero(v);
        for (const auto& [p, e] : primes::factorize(v)) entries[p] = entries[p] + Exponent(e);
    }
    std::set<BigInt> infinite;
    std::uint64_t default_value = 0;
    if (k.sweep) {
        nonzero(k.sweep->factor);
        if (k.sweep->first_prime < 2)
            throw PreconditionError("sweep starts at a prime >= 2", to_string(k.sweep->first_prime));
        for (const auto& [p, e] : primes::factorize(k.sweep->factor)) infinite.insert(p);
        default_value = k.sweep->exponent;
        if (default_value > 0) {
            // Primes below the sweep only get their prefix contributions.
            for (BigInt p = 2; p < k.sweep->first_prime; p = primes::next_prime(p))
                entries.try_emplace(p, Exponent(0));
            for (auto& [p, e] : entries)
                if (p >= k.sweep->first_prime) e = e + Exponent(default_value);
        }
    } else {
        if (k.block.empty()) throw PreconditionError("multiplier block is nonempty", "empty periodic block");
        for (const auto& v : k.block) {
            nonzero(v);
            for (const auto& [p, e] : primes::factorize(v)) infinite.insert(p);
        }
    }
    for (const auto& p : infinite) entries[p] = Exponent::infinity();
    return PrimeExponentSeq(std::move(entries), default_value);
}

MultiplierSequence multipliers_for(const PrimeExponentSeq& m)
{
    MultiplierSequence k;
    BigInt inf_product = 1;
    for (const auto& p : m.infinite_primes()) inf_product *= p;
    auto emit = [&](const BigInt& p, std::uint64_t e) {
        if (e <= 64) {
            for (std::uint64_t i = 0; i < e; ++i) k.prefix.push_back(p);
        } else {
            BigInt pe = 1;
            for (std::uint64_t i = 0; i < e; ++i) pe *= p;
            k.prefix.push_back(pe);
        }
    };
    if (m.default_value() == 0) {
        for (const auto& [p, e] : m.exceptional())
            if (!e.is_infinite()) emit(p, e.value());
        k.block = {inf_product};
        return k;
    }
    BigInt first = 2;
    if (!m.exceptional().empty()) first = primes::next_prime(m.exceptional().rbegin()->first);
    for (BigInt p = 2; p < first; p = primes::next_prime(p)) {
        const Exponent e = m.at(p);
        if (!e.is_infinite()) emit(p, e.value());
    }
    k.sweep = SweepRule{inf_product, static_cast<unsigned>(m.default_value()), first};
    return k;
}

}  // namespace telescoped
