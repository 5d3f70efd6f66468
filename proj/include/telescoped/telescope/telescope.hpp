#pragma once

// Inductive sequences X_0 -> X_1 -> ... and the towers H^q(X_n; G) they
// induce. Sphere and torus sequences use closed forms; simplicial ones
// compute cohomology of the listed complexes.

#include "telescoped/simplicial/coefficients.hpp"
#include "telescoped/simplicial/complex.hpp"
#include "telescoped/torsionfree/prime_exponents.hpp"
#include "telescoped/towers/tower.hpp"

#include <string>
#include <vector>

namespace telescoped {

enum class TelescopeKind { Simplicial, Sphere, Torus };
std::string to_string(TelescopeKind k);

/// Square integer matrices: a finite prefix, then a periodic block.
struct MatrixSequence {
    std::vector<IntMatrix> prefix;
    std::vector<IntMatrix> block;

    const IntMatrix& at(std::size_t n) const;
};

class TelescopeSpec {
public:
    /// S^d -> S^d -> ... with the given degrees; d >= 1.
    static TelescopeSpec sphere(int d, MultiplierSequence degrees);
    /// T^d -> T^d -> ... with maps induced by d x d integer matrices.
    static TelescopeSpec torus(int d, MatrixSequence matrices);
    /// maps[n] : X_n -> X_{n+1}. With tail_period L > 0 the last L maps
    /// repeat forever; they must all be self-maps of one complex.
    static TelescopeSpec simplicial(std::vector<SimplicialMap> maps, std::size_t tail_period);

    TelescopeKind kind() const { return kind_; }
    /// d for spheres and tori, the largest stage dimension otherwise.
    int dimension() const;
    const MultiplierSequence& degrees() const { return degrees_; }
    const MatrixSequence& matrices() const { return matrices_; }
    const std::vector<SimplicialMap>& maps() const { return maps_; }
    std::size_t tail_period() const { return tail_period_; }

    /// Simplicial kind: the n-th bonding map, following the tail rule.
    /// Throws PreconditionError past the listed maps when there is no tail.
    const SimplicialMap& map(std::size_t n) const;
    const SimplicialComplex& stage(std::size_t n) const;

    /// Every bonding map has nonzero degree (spheres) or nonzero
    /// determinant (tori); false for the simplicial kind.
    bool is_nontrivial() const;
    /// Torus maps that are all scalar: their scalars. Sphere kind: the degrees.
    std::optional<MultiplierSequence> scalar_multipliers() const;

    std::string to_string() const;

private:
    TelescopeKind kind_ = TelescopeKind::Sphere;
    int d_ = 1;
    MultiplierSequence degrees_;
    MatrixSequence matrices_;
    std::vector<SimplicialMap> maps_;
    std::size_t tail_period_ = 0;
};

/// The tower H^q(X_n; G) with maps induced by the bonding maps. Throws
/// PreconditionError when the degrees sweep over primes and G has torsion.
AbTower cohomology_tower(const TelescopeSpec& tel, int q, const CoefficientGroup& g = CoefficientGroup());

/// Mapping telescope of the first n bonding maps (stages X_0 .. X_n).
/// Simplicial kind only; n >= 1.
TelescopeComplex truncated_telescope(const TelescopeSpec& tel, std::size_t n);

/// q-th compound matrix: determinants of the q x q minors, rows and
/// columns indexed by increasing index sets in lexicographic order.
IntMatrix compound_matrix(const IntMatrix& a, int q);

}  // namespace telescoped
