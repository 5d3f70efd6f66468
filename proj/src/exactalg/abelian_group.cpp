#include "telescoped/exactalg/abelian_group.hpp"

#include "telescoped/error.hpp"
#include "telescoped/exactalg/smith.hpp"

namespace telescoped {

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<BigInt> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors))
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw PreconditionError("invariant factors are >= 2", "got " + telescoped::to_string(factors_[i]));
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw PreconditionError("invariant factors form a divisibility chain",
                                    telescoped::to_string(factors_[i - 1]) + " does not divide " +
                                        telescoped::to_string(factors_[i]));
    }
}

FgAbGroup FgAbGroup::from_orders(const std::vector<BigInt>& orders)
{
    const auto n = static_cast<Eigen::Index>(orders.size());
    IntMatrix rel = IntMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (orders[static_cast<std::size_t>(i)] < 0)
            throw PreconditionError("cyclic orders are nonnegative", telescoped::to_string(orders[static_cast<std::size_t>(i)]));
        rel(i, i) = orders[static_cast<std::size_t>(i)];
    }
    return cokernel(rel);
}

BigInt FgAbGroup::generator_order(Eigen::Index i) const
{
    if (i < 0 || i >= generator_count()) throw DimensionError("generator index out of range");
    return static_cast<std::size_t>(i) < factors_.size() ? factors_[static_cast<std::size_t>(i)] : BigInt(0);
}

BigInt FgAbGroup::torsion_order() const
{
    BigInt p(1);
    for (const auto& d : factors_) p *= d;
    return p;
}

IntVector FgAbGroup::reduce(const IntVector& element) const
{
    if (element.size() != generator_count()) throw DimensionError("element length differs from generator count");
    IntVector out = element;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        out(k) = exact::mod_floor(out(k), factors_[i]);
    }
    return out;
}

bool FgAbGroup::is_zero_element(const IntVector& element) const
{
    return exact::is_zero(reduce(element));
}

IntMatrix FgAbGroup::relation_matrix() const
{
    IntMatrix rel = IntMatrix::Zero(generator_count(), static_cast<Eigen::Index>(factors_.size()));
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        rel(k, k) = factors_[i];
    }
    return rel;
}

Lattice FgAbGroup::relations() const
{
    return Lattice::from_generators(relation_matrix());
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const
{
    std::vector<BigInt> orders = factors_;
    orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
    orders.resize(orders.size() + free_rank_ + other.free_rank_, BigInt(0));
    return from_orders(orders);
}

std::string FgAbGroup::to_string() const
{
    if (is_trivial()) return "0";
    std::string s;
    auto append = [&](const std::string& part) {
        if (!s.empty()) s += " + ";
        s += part;
    };
    if (free_rank_ == 1)
        append("Z");
    else if (free_rank_ > 1)
        append("Z^" + std::to_string(free_rank_));
    for (const auto& d : factors_) append("Z/" + telescoped::to_string(d));
    return s;
}

FgAbGroup cokernel(const IntMatrix& a)
{
    auto snf = smith_normal_form(a);
    std::vector<BigInt> factors;
    for (Eigen::Index i = 0; i < snf.rank; ++i)
        if (snf.S(i, i) > 1) factors.push_back(snf.S(i, i));
    return FgAbGroup(static_cast<std::size_t>(a.rows() - snf.rank), std::move(factors));
}

AbHom::AbHom(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
        throw DimensionError("homomorphism matrix shape differs from generator counts");
    for (Eigen::Index j = 0; j < source_.generator_count(); ++j) {
        const BigInt d = source_.generator_order(j);
        if (d == 0) continue;
        IntVector image = d * matrix_.col(j);
        if (!target_.is_zero_element(image))
            throw PreconditionError("homomorphism is well defined",
                                    "generator " + std::to_string(j) + " of order " + telescoped::to_string(d) +
                                        " does not map to an element of compatible order");
    }
    for (Eigen::Index i = 0; i < target_.generator_count(); ++i) {
        const BigInt d = target_.generator_order(i);
        if (d == 0) continue;
        for (Eigen::Index j = 0; j < matrix_.cols(); ++j) matrix_(i, j) = exact::mod_floor(matrix_(i, j), d);
    }
}

AbHom AbHom::identity(const FgAbGroup& g)
{
    return AbHom(g, g, exact::identity<BigInt>(g.generator_count()));
}

AbHom AbHom::zero(const FgAbGroup& source, const FgAbGroup& target)
{
    return AbHom(source, target, IntMatrix::Zero(target.generator_count(), source.generator_count()));
}

IntVector AbHom::operator()(const IntVector& element) const
{
    if (element.size() != source_.generator_count()) throw DimensionError("element length differs from source");
    return target_.reduce(exact::apply(matrix_, element));
}

bool AbHom::is_zero() const
{
    return exact::is_zero(matrix_);
}

Lattice AbHom::kernel_lattice() const
{
    return preimage(matrix_, target_.relations());
}

Lattice AbHom::image_lattice() const
{
    return sum(image(matrix_), target_.relations());
}

bool AbHom::is_injective() const
{
    return kernel_lattice() == source_.relations();
}

bool AbHom::is_surjective() const
{
    return image_lattice() == Lattice::full(target_.generator_count());
}

FgAbGroup AbHom::kernel_group() const
{
    return Subquotient(kernel_lattice(), source_.relations()).group();
}

FgAbGroup AbHom::image_group() const
{
    return Subquotient(image_lattice(), target_.relations()).group();
}

FgAbGroup AbHom::cokernel_group() const
{
    return Subquotient(Lattice::full(target_.generator_count()), image_lattice()).group();
}

bool AbHom::operator==(const AbHom& o) const
{
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
}

AbHom compose(const AbHom& g, const AbHom& f)
{
    if (f.target() != g.source()) throw DimensionError("composition of homomorphisms with mismatched groups");
    return AbHom(f.source(), g.target(), exact::multiply(g.matrix(), f.matrix()));
}

Subquotient::Subquotient(Lattice numerator, Lattice denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator))
{
    if (!numerator_.contains(denominator_))
        throw PreconditionError("subquotient denominator lies in numerator", "denominator is not a sublattice");
    const Eigen::Index k = numerator_.rank();
    const Eigen::Index m = denominator_.rank();
    // Coordinates of the denominator basis in the numerator basis.
    IntMatrix x(k, m);
    for (Eigen::Index j = 0; j < m; ++j) x.col(j) = *numerator_.coordinates(IntVector(denominator_.basis().col(j)));
    auto snf = smith_normal_form(x);
    skip_ = 0;
    std::vector<BigInt> factors;
    for (Eigen::Index i = 0; i < snf.rank; ++i) {
        if (snf.S(i, i) == 1)
            ++skip_;
        else
            factors.push_back(snf.S(i, i));
    }
    group_ = FgAbGroup(static_cast<std::size_t>(k - snf.rank), std::move(factors));
    generators_ = exact::multiply<BigInt>(numerator_.basis(), snf.Uinv.rightCols(k - skip_));
    coord_map_ = snf.U.bottomRows(k - skip_);
    // Shorter representatives: reduce each generator modulo the denominator.
    for (Eigen::Index j = 0; j < generators_.cols(); ++j)
        generators_.col(j) = denominator_.reduce(IntVector(generators_.col(j)));
}

IntVector Subquotient::coordinates(const IntVector& v) const
{
    auto y = numerator_.coordinates(v);
    if (!y) throw PreconditionError("subquotient element lies in numerator", "vector is not in the numerator lattice");
    return group_.reduce(exact::apply(coord_map_, *y));
}

IntVector Subquotient::lift(const IntVector& coords) const
{
    if (coords.size() != group_.generator_count()) throw DimensionError("coordinate length differs from generator count");
    return exact::apply(generators_, coords);
}

}  // namespace telescoped
