#pragma once

#include "telescoped/exactalg/hermite.hpp"
#include "telescoped/exactalg/integer.hpp"

#include <optional>
#include <vector>

namespace telescoped {

/// A subgroup of Z^n, stored by its column Hermite basis (canonical).
class Lattice {
public:
    explicit Lattice(Eigen::Index ambient_dim = 0);

    static Lattice from_generators(const IntMatrix& generators);
    static Lattice full(Eigen::Index ambient_dim);

    Eigen::Index ambient_dim() const { return ambient_; }
    Eigen::Index rank() const { return basis_.cols(); }
    const IntMatrix& basis() const { return basis_; }
    const std::vector<Eigen::Index>& pivot_rows() const { return pivots_; }

    bool contains(const IntVector& v) const;
    bool contains(const Lattice& other) const;
    std::optional<IntVector> coordinates(const IntVector& v) const;

    /// Canonical representative of v modulo the lattice: entries on the
    /// pivot rows are brought into [0, pivot).
    IntVector reduce(const IntVector& v) const;

    bool is_full() const;
    bool operator==(const Lattice& other) const;
    bool operator!=(const Lattice& other) const { return !(*this == other); }

private:
    Eigen::Index ambient_;
    IntMatrix basis_;
    std::vector<Eigen::Index> pivots_;
};

Lattice image(const IntMatrix& a);
Lattice image(const IntMatrix& a, const Lattice& l);
Lattice kernel(const IntMatrix& a);
/// {x : a x in target}
Lattice preimage(const IntMatrix& a, const Lattice& target);
Lattice sum(const Lattice& a, const Lattice& b);
Lattice intersection(const Lattice& a, const Lattice& b);
/// (Q-span of l) intersected with Z^n.
Lattice saturation(const Lattice& l);

/// Finite index [outer : inner]. Returns nullopt when the ranks differ
/// (infinite index). Throws when inner is not contained in outer.
std::optional<BigInt> index_in(const Lattice& outer, const Lattice& inner);

/// Result of solving A x = b over the integers.
struct IntegerSolution {
    IntVector particular;  ///< canonical: reduced modulo the kernel lattice
    Lattice kernel;
};

/// Integer solutions of A x = b. The particular solution is the unique one
/// whose entries on the kernel's Hermite pivot rows lie in [0, pivot).
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVector& b);

}  // namespace telescoped
