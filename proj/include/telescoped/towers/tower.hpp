#pragma once

// Towers G_0 <- G_1 <- G_2 <- ... of finitely generated abelian groups,
// given by an explicit prefix and a finitely described tail.
//
// Stage n < P comes from the prefix; prefix map n is eta^n : G_{n+1} -> G_n,
// so the source of the last prefix map is the tail group. From stage P on
// every group is the tail group and eta^n is determined by the tail rule.

#include "telescoped/exactalg/abelian_group.hpp"
#include "telescoped/torsionfree/prime_exponents.hpp"

#include <optional>
#include <string>
#include <vector>

namespace telescoped {

enum class TailKind {
    Periodic,  ///< endomorphisms M_0, ..., M_{L-1} applied cyclically (usually on Z^d)
    Constant,  ///< fixed group with one endomorphism
    Identity,  ///< fixed group with identity maps
    Sweep,     ///< Z^d with maps factor * p_j^exponent over successive primes
    None,      ///< no tail information; only the prefix is known
};

std::string to_string(TailKind k);

struct Tail {
    TailKind kind = TailKind::None;
    FgAbGroup group;
    std::vector<IntMatrix> matrices;  ///< periodic block, or the single endo
    SweepRule sweep;

    static Tail periodic(std::vector<IntMatrix> block);
    /// Periodic endomorphisms of an arbitrary group.
    static Tail periodic(const FgAbGroup& g, std::vector<IntMatrix> block);
    static Tail constant(const FgAbGroup& g, const IntMatrix& endo);
    static Tail identity(const FgAbGroup& g);
    static Tail sweeping(std::size_t d, const SweepRule& rule);
    static Tail none(const FgAbGroup& g);

    /// Length of one period (1 for constant/identity; 0 for sweep/none).
    std::size_t period() const;
};

class AbTower {
public:
    AbTower() = default;
    /// prefix_maps[n] : G_{n+1} -> G_n with G_P = tail.group. Throws if the
    /// groups do not chain or the tail matrices are not endomorphisms.
    AbTower(std::vector<AbHom> prefix_maps, Tail tail);
    /// Tower with no prefix.
    explicit AbTower(Tail tail) : AbTower({}, std::move(tail)) {}

    /// Rank-1 multiplication tower (Z, x k_n).
    static AbTower multiplication(const MultiplierSequence& k);
    /// (Z^d, x k_n I).
    static AbTower scalar(std::size_t d, const MultiplierSequence& k);

    std::size_t prefix_length() const { return prefix_.size(); }
    const std::vector<AbHom>& prefix_maps() const { return prefix_; }
    const Tail& tail() const { return tail_; }

    const FgAbGroup& group(std::size_t n) const;
    /// eta^n : G_{n+1} -> G_n. Throws for a None tail beyond the prefix.
    AbHom map(std::size_t n) const;
    /// eta^{m,n} = eta^m o ... o eta^{n-1} : G_n -> G_m for m <= n.
    AbHom composite(std::size_t m, std::size_t n) const;

    /// Multipliers when every stage is Z (and the maps are 1x1).
    std::optional<MultiplierSequence> multipliers() const;

    /// Drop the first `count` stages.
    AbTower shifted(std::size_t count) const;
    /// Transpose every map; requires free groups throughout.
    AbTower dual() const;

private:
    std::vector<AbHom> prefix_;
    Tail tail_;
};

}  // namespace telescoped
