#pragma once

// Milnor decomposition, Hopf brackets, classification of sphere and torus
// telescopes, and the Borsuk-Eilenberg report.

#include "telescoped/telescope/telescope.hpp"
#include "telescoped/torsionfree/groups.hpp"
#include "telescoped/towers/cocycle.hpp"
#include "telescoped/towers/limits.hpp"

#include <optional>
#include <string>

namespace telescoped {

/// Hom/Ext of the colimit group Lambda, attached when a homogeneous
/// sphere or torus sequence has a closed form in this degree.
struct ClosedForm {
    HomogeneousGroup lambda;
    int hom_degree = 0;  ///< weak part here is Hom(Lambda, Z)
    int ext_degree = 0;  ///< asymptotic part here is Ext(Lambda, Z)
    FgAbGroup hom;
    ExtDescriptor ext;
    /// The tower route and the closed form give the same verdicts.
    bool agrees = false;
};

struct MilnorReport {
    int degree = 0;
    Lim1Descriptor asymptotic;     ///< lim^1 of H^{q-1}(X_n)
    std::optional<LimResult> weak; ///< lim of H^q(X_n); empty when the tail is not described
    std::string total;
    /// Set when one side vanishes and the other is a finitely generated group.
    std::optional<FgAbGroup> total_group;
    std::optional<ClosedForm> closed_form;

    bool asymptotic_zero() const { return asymptotic.status.status == Lim1Status::Zero; }
    bool weak_zero() const { return weak && weak->group.is_trivial(); }
    bool vanishes() const { return asymptotic_zero() && weak_zero(); }
};

MilnorReport milnor(const TelescopeSpec& tel, int q, const CoefficientGroup& g = CoefficientGroup(),
                    const TowerOptions& opts = {});

struct HopfReport {
    int d = 0;
    MilnorReport bracket;  ///< Milnor data of H^{d+1}
    int checked_from = 0, checked_to = 0;  ///< degrees certified to vanish
    bool all_phantom = false;              ///< weak part of H^{d+1} is 0
    std::string description;
};

/// [hocolim, S^{d+1}] through H^{d+1}. Throws PreconditionError unless
/// H^q vanishes for every q > d+1 (certified degree by degree).
HopfReport hopf_bracket(const TelescopeSpec& tel, int d, const TowerOptions& opts = {});

enum class Equivalence { Equivalent, Inequivalent, Undetermined };
std::string to_string(Equivalence e);

struct ClassificationEvidence {
    PrimeExponentSeq type_a, type_b;
    PrimeExponentSeq class_a, class_b;  ///< star-canonical representatives
    FgAbGroup hom_a, hom_b;
    bool ext_trivial_a = false, ext_trivial_b = false;
};

struct ClassificationVerdict {
    Equivalence verdict = Equivalence::Undetermined;
    std::string reason;
    std::optional<ClassificationEvidence> evidence;
};

/// Homotopy classification of nontrivial homogeneous sphere or torus
/// telescopes. Throws DimensionError on a dimension mismatch.
ClassificationVerdict classify(const TelescopeSpec& a, const TelescopeSpec& b, const TowerOptions& opts = {});

struct BorsukEilenbergReport {
    BigInt p;
    TelescopeSpec model;
    MilnorReport milnor_q1, milnor_q2;
    ExtDescriptor ext;
    /// All-ones cocycle on (Z, x p).
    CoboundaryVerdict all_ones;
    bool phantom_only = false;
};

BorsukEilenbergReport borsuk_eilenberg(const BigInt& p, const TowerOptions& opts = {});

}  // namespace telescoped
