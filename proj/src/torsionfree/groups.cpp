#include "telescoped/torsionfree/groups.hpp"

#include "telescoped/error.hpp"

namespace telescoped {

HomogeneousGroup::HomogeneousGroup(std::size_t r, RankOneGroup b) : rank(r), base(std::move(b))
{
    if (rank == 0) throw PreconditionError("homogeneous rank d >= 1", "rank 0");
}

std::string HomogeneousGroup::to_string() const
{
    std::string s;
    if (base.type.is_free_type())
        s = "Z";
    else
        s = "Z[1/P^m], m = " + base.type.to_string();
    if (rank > 1) s = "(" + s + ")^" + std::to_string(rank);
    return s;
}

RankOneGroup from_multiplication_tower(const MultiplierSequence& k) { return RankOneGroup{type_of(k)}; }

bool star_equivalent(const PrimeExponentSeq& m, const PrimeExponentSeq& n)
{
    return m.default_value() == n.default_value() && m.infinite_primes() == n.infinite_primes();
}

PrimeExponentSeq star_canonical(const PrimeExponentSeq& m)
{
    std::map<BigInt, Exponent> inf;
    for (const auto& p : m.infinite_primes()) inf[p] = Exponent::infinity();
    return PrimeExponentSeq(std::move(inf), m.default_value());
}

FgAbGroup hom_to_Z(const HomogeneousGroup& g)
{
    return g.is_free() ? FgAbGroup::free(g.rank) : FgAbGroup::free(0);
}

AbTower presented_tower(const HomogeneousGroup& g)
{
    return AbTower::scalar(g.rank, multipliers_for(g.base.type));
}

MultiplierSequence scalar_multipliers(const AbTower& t)
{
    const FgAbGroup& tg = t.tail().group;
    const auto d = tg.generator_count();
    auto scalar_of = [&](const IntMatrix& m, const std::string& where) {
        if (m.rows() != d || m.cols() != d || d == 0)
            throw PreconditionError("presentation is a scalar tower on Z^d", where + " has the wrong shape");
        for (Eigen::Index i = 0; i < d; ++i)
            for (Eigen::Index j = 0; j < d; ++j)
                if (m(i, j) != (i == j ? m(0, 0) : BigInt(0)))
                    throw PreconditionError("presentation is a scalar tower on Z^d", where + " is not scalar");
        return m(0, 0);
    };
    if (!tg.is_free()) throw PreconditionError("presentation is a scalar tower on Z^d", "tail group " + tg.to_string());
    MultiplierSequence k;
    for (std::size_t n = 0; n < t.prefix_length(); ++n)
        k.prefix.push_back(scalar_of(t.prefix_maps()[n].matrix(), "map " + std::to_string(n)));
    switch (t.tail().kind) {
    case TailKind::Periodic:
    case TailKind::Constant:
    case TailKind::Identity:
        for (const auto& m : t.tail().matrices) k.block.push_back(scalar_of(m, "tail matrix"));
        break;
    case TailKind::Sweep: k.sweep = t.tail().sweep; break;
    case TailKind::None:
        throw PreconditionError("presentation is a scalar tower on Z^d", "tower has no tail rule");
    }
    return k;
}

ExtDescriptor ext_to_Z(const HomogeneousGroup& g, const AbTower* presentation, const TowerOptions& opts)
{
    ExtDescriptor out;
    out.source = g;
    AbTower tower = presentation ? *presentation : presented_tower(g);
    if (presentation) {
        const MultiplierSequence k = scalar_multipliers(tower);
        if (static_cast<std::size_t>(tower.tail().group.free_rank()) != g.rank)
            throw PreconditionError("presentation matches the group", "tower rank " +
                                                                          std::to_string(tower.tail().group.free_rank()) +
                                                                          " vs group rank " + std::to_string(g.rank));
        const PrimeExponentSeq m = type_of(k);
        if (!star_equivalent(m, g.base.type))
            throw PreconditionError("presentation matches the group",
                                    "tower type " + m.to_string() + " vs " + g.base.type.to_string());
    }
    out.lim1 = lim1_descriptor(tower.dual(), opts);
    out.is_trivial = out.lim1.status.status == Lim1Status::Zero;
    out.is_smooth_classification = out.is_trivial;
    out.is_essentially_hyperfinite = true;  // every finite-rank group
    out.borel_class_key = {g.rank, star_canonical(g.base.type)};
    return out;
}

}  // namespace telescoped
