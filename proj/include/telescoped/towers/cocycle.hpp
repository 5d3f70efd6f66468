#pragma once

// Finitely described elements of the product of the stage groups, the
// action (g.h)_n = g_n + h_n - eta^n(g_{n+1}) and coboundary membership.

#include "telescoped/towers/limits.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace telescoped {

/// h_n = prefix[n] for n < |prefix|, then block[(n - |prefix|) mod |block|].
/// An empty block means the sequence is eventually zero.
struct ElementSequence {
    std::vector<IntVector> prefix;
    std::vector<IntVector> block;

    static ElementSequence eventually_zero(std::vector<IntVector> terms);
    static ElementSequence eventually_periodic(std::vector<IntVector> prefix, std::vector<IntVector> block);

    bool is_eventually_zero() const { return block.empty(); }
    /// Element n; zero vectors past an eventually-zero prefix need the
    /// stage size, so the tower is passed in.
    IntVector at(const AbTower& t, std::size_t n) const;
};

class TowerCocycle {
public:
    /// Reduces every term into its stage group. Throws PreconditionError on
    /// a size mismatch, or a periodic description over a tail that is not
    /// periodic, constant or identity.
    TowerCocycle(std::shared_ptr<const AbTower> tower, ElementSequence terms);

    const AbTower& tower() const { return *tower_; }
    const std::shared_ptr<const AbTower>& tower_ptr() const { return tower_; }
    /// Normalized: a periodic prefix covers at least the tower prefix, and
    /// an all-zero block is folded into an eventually-zero description.
    const ElementSequence& terms() const { return terms_; }
    IntVector at(std::size_t n) const { return terms_.at(*tower_, n); }

    /// Equal as sequences.
    bool operator==(const TowerCocycle& o) const;
    bool operator!=(const TowerCocycle& o) const { return !(*this == o); }

private:
    std::shared_ptr<const AbTower> tower_;
    ElementSequence terms_;
};

/// g.h over h's tower.
TowerCocycle action_apply(const ElementSequence& g, const TowerCocycle& h);

enum class Verdict { Yes, No, Undetermined };
std::string to_string(Verdict v);

struct CoboundaryVerdict {
    Verdict verdict = Verdict::Undetermined;
    /// Yes: g with g.0 = h, when a finite description exists.
    std::optional<ElementSequence> witness;
    /// No: the non-integral value A_r / (1 - Q) of the periodic tail
    /// equation, with the coordinate and offset it was found at.
    std::optional<Rational> value;
    std::size_t coordinate = 0;
    std::size_t offset = 0;
    std::size_t depth = 0;
    std::string certificate;
};

CoboundaryVerdict is_coboundary(const TowerCocycle& h, const TowerOptions& opts = {});

}  // namespace telescoped
