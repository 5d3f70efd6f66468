#pragma once

// lim, Mittag-Leffler and lim^1 descriptors of towers with a finitely
// described tail.
//
// Every supported tail reduces to one endomorphism C of the tail group G,
// the composite over one period. lim(T) = lim(G, C). Writing G = T + Z^f
// (torsion first), C is block upper triangular with free block C_FF:
//  - free part: W = saturation of the eventual image of C_FF, C1 = C_FF|W,
//    and the thread lattice is D = ker_Z u(C1), u the product of the
//    irreducible factors of charpoly(C1) with constant term +-1;
//  - torsion part: T_inf = the eventual image of T under C.
// Mittag-Leffler holds iff |det C1| = 1.

#include "telescoped/exactalg/abelian_group.hpp"
#include "telescoped/exactalg/polynomial.hpp"
#include "telescoped/torsionfree/prime_exponents.hpp"
#include "telescoped/towers/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace telescoped {

constexpr std::size_t default_probe_depth = 64;

struct TowerOptions {
    std::size_t probe_depth = default_probe_depth;
};

/// The tail rule reduced to one endomorphism per period.
struct TailAnalysis {
    std::size_t stage = 0;       ///< P, first tail stage
    std::size_t period = 1;      ///< L
    AbHom period_map;            ///< C : G_{P+L} -> G_P
    bool vanishing_sweep = false;  ///< sweep with positive exponent: lim = 0, never ML

    std::size_t rank_stabilization = 0;  ///< k0: rank C^k constant from k0 on (free block)
    std::size_t torsion_stabilization = 0;  ///< K: C^K T = C^{K+1} T
    std::size_t eventual_rank = 0;       ///< rank of W
    IntMatrix restricted;                ///< C1 in a basis of W
    Polynomial characteristic;           ///< of C1
    Polynomial unit_part;
    BigInt period_index{1};              ///< |det C1|
    Lattice free_threads;                ///< D inside Z^f
};

/// Throws PreconditionError for a None tail.
TailAnalysis analyze_tail(const AbTower& t);

struct LimResult {
    FgAbGroup group;
    AbHom embedding;         ///< thread -> its component in G_0
    std::size_t stage = 0;   ///< P
    Subquotient threads;     ///< thread components at stage P
    AbHom stage_embedding;   ///< lim -> G_P, injective
    TailAnalysis certificate;
};

LimResult lim(const AbTower& t);

enum class Lim1Status { Zero, NonZero, Undetermined };
std::string to_string(Lim1Status s);

struct MittagLefflerCertificate {
    Lim1Status status = Lim1Status::Undetermined;
    /// Zero: images of G_{P+kL} in G_P are equal for every k >= this.
    /// NonZero: images strictly descend from this k on.
    std::size_t stabilization_index = 0;
    /// NonZero: [I_k : I_{k+1}] in the free quotient for k >= stabilization_index
    /// (for a sweep, the index of the first step).
    BigInt step_index{1};
    std::size_t eventual_rank = 0;
    std::size_t lim_rank = 0;
    std::size_t depth = 0;   ///< probe depth in force
    std::string detail;
};

MittagLefflerCertificate mittag_leffler(const AbTower& t, const TowerOptions& opts = {});

struct Lim1Descriptor {
    MittagLefflerCertificate status;
    std::optional<PrimeExponentSeq> rank1_type;
    std::vector<std::string> notes;
};

Lim1Descriptor lim1_descriptor(const AbTower& t, const TowerOptions& opts = {});

}  // namespace telescoped
