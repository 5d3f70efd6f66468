#pragma once

// Prime-exponent sequences (types of rank-1 torsion-free groups) and
// sequences of integer multipliers that present them as colimits
// Z -> Z -> Z -> ... with maps x k_n.

#include "telescoped/exactalg/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace telescoped {

/// A natural number or infinity.
class Exponent {
public:
    constexpr Exponent() = default;
    constexpr explicit Exponent(std::uint64_t v) : value_(v) {}
    static constexpr Exponent infinity()
    {
        Exponent e;
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    std::uint64_t value() const { return value_; }
    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
    /// "inf" or a decimal; throws ParseError.
    static Exponent parse(const std::string& text);

    bool operator==(const Exponent& o) const
    {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator!=(const Exponent& o) const { return !(*this == o); }
    Exponent operator+(const Exponent& o) const
    {
        if (infinite_ || o.infinite_) return infinity();
        return Exponent(value_ + o.value_);
    }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

/// m : primes -> N u {inf}, finitely many exceptions to a finite default.
/// Always kept canonical: no exception equals the default.
class PrimeExponentSeq {
public:
    PrimeExponentSeq() = default;
    /// Throws PreconditionError if a key is not prime.
    PrimeExponentSeq(std::map<BigInt, Exponent> exceptional, std::uint64_t default_value = 0);

    std::uint64_t default_value() const { return default_; }
    const std::map<BigInt, Exponent>& exceptional() const { return exceptional_; }
    Exponent at(const BigInt& p) const;
    void set(const BigInt& p, Exponent e);

    /// Primes with an infinite entry, ascending.
    std::vector<BigInt> infinite_primes() const;
    bool has_infinite() const { return !infinite_primes().empty(); }
    /// True iff every entry is finite and all but finitely many are 0, i.e.
    /// the group is isomorphic to Z.
    bool is_free_type() const { return default_ == 0 && !has_infinite(); }

    std::string to_string() const;

    bool operator==(const PrimeExponentSeq& o) const
    {
        return default_ == o.default_ && exceptional_ == o.exceptional_;
    }
    bool operator!=(const PrimeExponentSeq& o) const { return !(*this == o); }

private:
    void canonicalize();

    std::map<BigInt, Exponent> exceptional_;
    std::uint64_t default_ = 0;
};

/// k_n = factor * p_j^exponent for the j-th prime p_j >= first_prime.
struct SweepRule {
    BigInt factor{1};
    unsigned exponent = 0;
    BigInt first_prime{2};
};

/// A multiplier sequence: a finite prefix followed by a periodic block or
/// a sweep over the primes.
struct MultiplierSequence {
    std::vector<BigInt> prefix;
    std::vector<BigInt> block;          ///< used when sweep is empty
    std::optional<SweepRule> sweep;

    /// k_n for any n >= 0.
    BigInt at(std::size_t n) const;
};

/// Entry at p is the sum over n of v_p(k_n); infinite when p divides the
/// periodic block (or the sweep factor). Throws PreconditionError on a
/// zero multiplier or an empty block.
PrimeExponentSeq type_of(const MultiplierSequence& k);

/// A multiplier sequence whose colimit has type m. Primes are emitted in
/// increasing order: finite exceptional entries as a prefix, infinite ones
/// through the periodic block, and a positive default through a sweep
/// starting above every exceptional prime.
MultiplierSequence multipliers_for(const PrimeExponentSeq& m);

}  // namespace telescoped
