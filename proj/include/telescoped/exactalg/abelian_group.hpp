#pragma once

// Finitely generated abelian groups in invariant-factor form, homomorphisms
// between them, and subquotients of lattices.
//
// Generator order is fixed: one generator per invariant factor (in chain
// order) followed by the free generators. Elements are integer vectors in
// those coordinates; `reduce` brings torsion coordinates into [0, d).

#include "telescoped/exactalg/integer.hpp"
#include "telescoped/exactalg/lattice.hpp"

#include <string>
#include <vector>

namespace telescoped {

class FgAbGroup {
public:
    FgAbGroup() = default;
    /// Throws unless every factor is >= 2 and the factors form a divisibility chain.
    FgAbGroup(std::size_t free_rank, std::vector<BigInt> invariant_factors);

    /// Direct sum of cyclic groups Z/orders[i] (0 means Z, 1 the trivial group).
    static FgAbGroup from_orders(const std::vector<BigInt>& orders);
    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }
    static FgAbGroup cyclic(const BigInt& order) { return from_orders({order}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<BigInt>& invariant_factors() const { return factors_; }
    std::size_t torsion_count() const { return factors_.size(); }
    Eigen::Index generator_count() const { return static_cast<Eigen::Index>(factors_.size() + free_rank_); }
    /// Order of generator i, 0 for free generators.
    BigInt generator_order(Eigen::Index i) const;
    /// Product of the invariant factors.
    BigInt torsion_order() const;

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_free() const { return factors_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }

    IntVector reduce(const IntVector& element) const;
    bool is_zero_element(const IntVector& element) const;
    /// Relation lattice in generator coordinates (spanned by d_i e_i).
    Lattice relations() const;
    /// Relation matrix (generators x torsion_count).
    IntMatrix relation_matrix() const;

    FgAbGroup direct_sum(const FgAbGroup& other) const;

    bool operator==(const FgAbGroup& o) const { return free_rank_ == o.free_rank_ && factors_ == o.factors_; }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    /// "0", "Z", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<BigInt> factors_;
};

/// Z^rows / column span of A, in canonical form.
FgAbGroup cokernel(const IntMatrix& a);

/// A generator count together with a relation matrix (relations as columns).
struct Presentation {
    Eigen::Index generators = 0;
    IntMatrix relations;

    FgAbGroup group() const { return cokernel(relations); }
};

class AbHom {
public:
    AbHom() = default;
    /// matrix is target.generator_count() x source.generator_count(). Throws
    /// if the matrix does not carry source relations into target relations.
    AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix);

    static AbHom identity(const FgAbGroup& g);
    static AbHom zero(const FgAbGroup& source, const FgAbGroup& target);

    const FgAbGroup& source() const { return source_; }
    const FgAbGroup& target() const { return target_; }
    /// Normalized: each row reduced modulo the matching target order.
    const IntMatrix& matrix() const { return matrix_; }

    IntVector operator()(const IntVector& element) const;

    bool is_zero() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// Kernel as a lattice in source generator coordinates (contains the
    /// source relations).
    Lattice kernel_lattice() const;
    /// Image plus target relations, in target generator coordinates.
    Lattice image_lattice() const;

    FgAbGroup kernel_group() const;
    FgAbGroup image_group() const;
    FgAbGroup cokernel_group() const;

    bool operator==(const AbHom& o) const;
    bool operator!=(const AbHom& o) const { return !(*this == o); }

private:
    FgAbGroup source_, target_;
    IntMatrix matrix_;
};

/// g o f
AbHom compose(const AbHom& g, const AbHom& f);

/// numerator / denominator for lattices D <= N in Z^n, with canonical
/// generators and a coordinate map into the canonical group.
class Subquotient {
public:
    Subquotient() = default;
    /// Throws unless denominator is contained in numerator.
    Subquotient(Lattice numerator, Lattice denominator);

    const FgAbGroup& group() const { return group_; }
    const Lattice& numerator() const { return numerator_; }
    const Lattice& denominator() const { return denominator_; }
    /// Ambient representatives of the canonical generators (as columns).
    const IntMatrix& generators() const { return generators_; }
    IntVector generator(Eigen::Index i) const { return generators_.col(i); }

    bool contains(const IntVector& v) const { return numerator_.contains(v); }
    /// Canonical coordinates of the class of v; throws unless v is in the numerator.
    IntVector coordinates(const IntVector& v) const;
    /// Ambient representative of a class given in canonical coordinates.
    IntVector lift(const IntVector& coords) const;

private:
    Lattice numerator_, denominator_;
    FgAbGroup group_;
    IntMatrix generators_;
    IntMatrix coord_map_;  ///< rows of U selected for the nontrivial generators
    Eigen::Index skip_ = 0;
};

}  // namespace telescoped
