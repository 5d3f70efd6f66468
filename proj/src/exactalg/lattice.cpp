#include "telescoped/exactalg/lattice.hpp"

#include "telescoped/error.hpp"

namespace telescoped {

Lattice::Lattice(Eigen::Index ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

Lattice Lattice::from_generators(const IntMatrix& generators)
{
    Lattice l(generators.rows());
    auto ech = column_hermite(generators);
    l.basis_ = std::move(ech.basis);
    l.pivots_ = std::move(ech.pivot_rows);
    return l;
}

Lattice Lattice::full(Eigen::Index ambient_dim)
{
    return from_generators(exact::identity<BigInt>(ambient_dim));
}

bool Lattice::contains(const IntVector& v) const
{
    return coordinates(v).has_value();
}

bool Lattice::contains(const Lattice& other) const
{
    if (other.ambient_ != ambient_) throw DimensionError("lattice containment across ambient dimensions");
    for (Eigen::Index j = 0; j < other.rank(); ++j)
        if (!contains(IntVector(other.basis_.col(j)))) return false;
    return true;
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const
{
    if (v.size() != ambient_) throw DimensionError("vector length differs from lattice ambient dimension");
    return hermite_coordinates(basis_, pivots_, v);
}

IntVector Lattice::reduce(const IntVector& v) const
{
    IntVector out = v;
    for (Eigen::Index j = 0; j < rank(); ++j) {
        const Eigen::Index r = pivots_[static_cast<std::size_t>(j)];
        BigInt q = exact::floor_div(out(r), basis_(r, j));
        if (q != 0) out -= q * basis_.col(j);
    }
    return out;
}

bool Lattice::is_full() const
{
    return rank() == ambient_ && index_in(full(ambient_), *this) == BigInt(1);
}

bool Lattice::operator==(const Lattice& other) const
{
    return ambient_ == other.ambient_ && basis_.cols() == other.basis_.cols() && basis_ == other.basis_;
}

Lattice image(const IntMatrix& a)
{
    return Lattice::from_generators(a);
}

Lattice image(const IntMatrix& a, const Lattice& l)
{
    if (a.cols() != l.ambient_dim()) throw DimensionError("matrix columns differ from lattice ambient dimension");
    return Lattice::from_generators(exact::multiply(a, l.basis()));
}

Lattice kernel(const IntMatrix& a)
{
    Lattice l = Lattice::from_generators(kernel_basis(a));
    return l;
}

Lattice preimage(const IntMatrix& a, const Lattice& target)
{
    if (a.rows() != target.ambient_dim()) throw DimensionError("preimage target dimension");
    if (target.rank() == 0) return kernel(a);
    IntMatrix joint = exact::hstack<BigInt>(a, -target.basis());
    IntMatrix k = kernel_basis(joint);
    return Lattice::from_generators(k.topRows(a.cols()));
}

Lattice sum(const Lattice& a, const Lattice& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("lattice sum across ambient dimensions");
    return Lattice::from_generators(exact::hstack(a.basis(), b.basis()));
}

Lattice intersection(const Lattice& a, const Lattice& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("lattice intersection across ambient dimensions");
    if (a.rank() == 0 || b.rank() == 0) return Lattice(a.ambient_dim());
    IntMatrix joint = exact::hstack<BigInt>(a.basis(), -b.basis());
    IntMatrix k = kernel_basis(joint);
    return Lattice::from_generators(exact::multiply<BigInt>(a.basis(), k.topRows(a.rank())));
}

Lattice saturation(const Lattice& l)
{
    const Eigen::Index n = l.ambient_dim();
    if (l.rank() == 0) return Lattice(n);
    // Functionals vanishing on l, then their common kernel.
    IntMatrix annihilator = kernel_basis<BigInt>(l.basis().transpose());
    if (annihilator.cols() == 0) return Lattice::full(n);
    return kernel(annihilator.transpose());
}

std::optional<BigInt> index_in(const Lattice& outer, const Lattice& inner)
{
    if (outer.ambient_dim() != inner.ambient_dim()) throw DimensionError("index across ambient dimensions");
    if (!outer.contains(inner))
        throw PreconditionError("index-in requires a sublattice", "second lattice is not contained in the first");
    if (outer.rank() != inner.rank()) return std::nullopt;
    // Both bases are triangular on their pivot rows; since inner is a full
    // rank sublattice the pivot rows coincide.
    BigInt outer_det(1), inner_det(1);
    for (Eigen::Index j = 0; j < outer.rank(); ++j) {
        outer_det *= outer.basis()(outer.pivot_rows()[static_cast<std::size_t>(j)], j);
        inner_det *= inner.basis()(inner.pivot_rows()[static_cast<std::size_t>(j)], j);
    }
    return inner_det / outer_det;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVector& b)
{
    if (a.rows() != b.size()) throw DimensionError("solve_integer: right-hand side length");
    auto ech = column_hermite(a, true);
    auto y = hermite_coordinates(ech.basis, ech.pivot_rows, b);
    if (!y) return std::nullopt;
    IntegerSolution sol;
    sol.particular = exact::apply<BigInt>(ech.V.leftCols(ech.rank), *y);
    sol.kernel = Lattice::from_generators(ech.V.rightCols(a.cols() - ech.rank));
    sol.particular = sol.kernel.reduce(sol.particular);
    return sol;
}

}  // namespace telescoped
