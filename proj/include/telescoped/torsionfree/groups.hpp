#pragma once

// Rank-1 torsion-free groups Z[1/P^m] given by their type, their powers,
// Hom into Z and the lim^1 description of Ext into Z.

#include "telescoped/exactalg/abelian_group.hpp"
#include "telescoped/torsionfree/prime_exponents.hpp"
#include "telescoped/towers/limits.hpp"

#include <string>
#include <utility>

namespace telescoped {

struct RankOneGroup {
    PrimeExponentSeq type;

    /// Z iff every entry is finite and all but finitely many vanish.
    bool is_free() const { return type.is_free_type(); }
    bool operator==(const RankOneGroup& o) const { return type == o.type; }
};

/// Lambda = base^rank.
struct HomogeneousGroup {
    std::size_t rank = 1;
    RankOneGroup base;

    HomogeneousGroup() = default;
    /// Throws PreconditionError when rank is 0.
    HomogeneousGroup(std::size_t rank, RankOneGroup base);
    HomogeneousGroup(const RankOneGroup& g) : base(g) {}  // NOLINT: rank-1 groups are homogeneous

    bool is_free() const { return base.is_free(); }
    std::string to_string() const;
};

/// colim(Z, x k_n). Throws PreconditionError on a zero multiplier.
RankOneGroup from_multiplication_tower(const MultiplierSequence& k);

/// Types agree at all but finitely many primes; infinite entries must
/// agree exactly. Equivalent types give isomorphic groups.
bool star_equivalent(const PrimeExponentSeq& m, const PrimeExponentSeq& n);

/// Representative of the =* class: the default and the infinite entries.
PrimeExponentSeq star_canonical(const PrimeExponentSeq& m);

/// Z^d when Lambda is free, 0 otherwise.
FgAbGroup hom_to_Z(const HomogeneousGroup& g);

/// The inductive system (Z^d, x k_n I) with k = multipliers_for(type).
AbTower presented_tower(const HomogeneousGroup& g);

/// Multipliers of a scalar tower (Z^d, x k_n I); throws PreconditionError
/// otherwise.
MultiplierSequence scalar_multipliers(const AbTower& t);

struct ExtDescriptor {
    HomogeneousGroup source;
    Lim1Descriptor lim1;  ///< of the dual tower
    bool is_trivial = false;
    bool is_smooth_classification = false;
    bool is_essentially_hyperfinite = true;
    std::pair<std::size_t, PrimeExponentSeq> borel_class_key;
};

/// Uses the presented tower of g unless one is supplied; a supplied
/// tower must be scalar of the right rank with a =*-equivalent type.
ExtDescriptor ext_to_Z(const HomogeneousGroup& g, const AbTower* presentation = nullptr,
                       const TowerOptions& opts = {});

}  // namespace telescoped
