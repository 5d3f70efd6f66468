#include "telescoped/telescope/reports.hpp"

#include "telescoped/error.hpp"

#include <memory>

namespace telescoped {

namespace {

Lim1Descriptor zero_descriptor(const std::string& why)
{
    Lim1Descriptor d;
    d.status.status = Lim1Status::Zero;
    d.status.detail = why;
    return d;
}

// Lambda for a homogeneous sphere/torus sequence with integer coefficients.
struct Homogeneous {
    HomogeneousGroup lambda;
    int hom_degree, ext_degree;
};

std::optional<Homogeneous> homogeneous_form(const TelescopeSpec& tel)
{
    if (tel.kind() == TelescopeKind::Simplicial || !tel.is_nontrivial()) return std::nullopt;
    const auto k = tel.scalar_multipliers();
    if (!k) return std::nullopt;
    const RankOneGroup r = from_multiplication_tower(*k);
    if (tel.kind() == TelescopeKind::Sphere) return Homogeneous{HomogeneousGroup(1, r), tel.dimension(), tel.dimension() + 1};
    // Scalar torus maps: H^1 is the tower (Z^d, x k_n), so Hom and Ext of
    // R^d sit in degrees 1 and 2.
    return Homogeneous{HomogeneousGroup(static_cast<std::size_t>(tel.dimension()), r), 1, 2};
}

std::string summary(const MilnorReport& m)
{
    const std::string q = std::to_string(m.degree), p = std::to_string(m.degree - 1);
    const std::string h = "H^" + q, weak = "lim H^" + q + "(X_n)", asym = "lim^1 H^" + p + "(X_n)";
    if (!m.weak) return h + " undetermined: " + weak + " needs a described tail";
    if (m.asymptotic.status.status == Lim1Status::Undetermined)
        return h + " undetermined: " + asym + " not decided within the probe depth";
    if (m.asymptotic_zero()) return h + " = " + weak + " = " + m.weak->group.to_string();
    if (m.weak_zero()) return h + " = " + asym + ", nonzero and uncountable (phantom classes only)";
    return h + " is an extension of " + weak + " = " + m.weak->group.to_string() + " by the nonzero " + asym +
           "; extension data unresolved";
}

}  // namespace

MilnorReport milnor(const TelescopeSpec& tel, int q, const CoefficientGroup& g, const TowerOptions& opts)
{
    MilnorReport r;
    r.degree = q;
    if (q <= 0)
        r.asymptotic = zero_descriptor("no cohomology in negative degrees");
    else
        r.asymptotic = lim1_descriptor(cohomology_tower(tel, q - 1, g), opts);
    const AbTower t = cohomology_tower(tel, q, g);
    if (t.tail().kind != TailKind::None) r.weak = lim(t);
    r.total = summary(r);
    if (r.weak && r.asymptotic_zero()) r.total_group = r.weak->group;

    const auto form = homogeneous_form(tel);
    if (form && g == CoefficientGroup::integers() && (q == form->hom_degree || q == form->ext_degree)) {
        ClosedForm c;
        c.lambda = form->lambda;
        c.hom_degree = form->hom_degree;
        c.ext_degree = form->ext_degree;
        c.hom = hom_to_Z(form->lambda);
        c.ext = ext_to_Z(form->lambda, nullptr, opts);
        c.agrees = true;
        if (q == c.hom_degree) c.agrees = c.agrees && r.weak && r.weak->group == c.hom;
        if (q == c.ext_degree)
            c.agrees = c.agrees && r.asymptotic.status.status != Lim1Status::Undetermined &&
                       r.asymptotic_zero() == c.ext.is_trivial;
        r.closed_form = c;
    }
    return r;
}

HopfReport hopf_bracket(const TelescopeSpec& tel, int d, const TowerOptions& opts)
{
    if (d < 0) throw PreconditionError("bracket dimension >= 0", std::to_string(d));
    HopfReport h;
    h.d = d;
    h.checked_from = d + 2;
    h.checked_to = tel.dimension() + 1;
    for (int q = h.checked_from; q <= h.checked_to; ++q) {
        const MilnorReport m = milnor(tel, q, CoefficientGroup(), opts);
        if (!m.weak || m.asymptotic.status.status == Lim1Status::Undetermined)
            throw PreconditionError("H^q = 0 for q > d+1", "H^" + std::to_string(q) + " not certified to vanish");
        if (!m.vanishes()) throw PreconditionError("H^q = 0 for q > d+1", "H^" + std::to_string(q) + " is nonzero");
    }
    h.bracket = milnor(tel, d + 1, CoefficientGroup(), opts);
    h.all_phantom = h.bracket.weak_zero();
    if (h.bracket.vanishes())
        h.description = "[hocolim, S^" + std::to_string(d + 1) + "] is trivial";
    else if (h.all_phantom && h.bracket.asymptotic.status.status == Lim1Status::NonZero)
        h.description = "[hocolim, S^" + std::to_string(d + 1) + "] = its phantom part = lim^1 H^" + std::to_string(d) +
                        "(X_n)";
    else
        h.description = "[hocolim, S^" + std::to_string(d + 1) + "] corresponds to " + h.bracket.total;
    return h;
}

std::string to_string(Equivalence e)
{
    switch (e) {
    case Equivalence::Equivalent: return "Equivalent";
    case Equivalence::Inequivalent: return "Inequivalent";
    case Equivalence::Undetermined: return "Undetermined";
    }
    return "?";
}

ClassificationVerdict classify(const TelescopeSpec& a, const TelescopeSpec& b, const TowerOptions& opts)
{
    ClassificationVerdict v;
    if (a.kind() == TelescopeKind::Simplicial || b.kind() == TelescopeKind::Simplicial) {
        v.reason = "simplicial telescopes are outside the classified families";
        return v;
    }
    if (a.dimension() != b.dimension())
        throw DimensionError("telescopes of dimension " + std::to_string(a.dimension()) + " and " +
                             std::to_string(b.dimension()));
    // The 1-torus is the circle.
    if (a.kind() != b.kind() && a.dimension() != 1) {
        v.reason = "sphere and torus families are not compared";
        return v;
    }
    if (!a.is_nontrivial() || !b.is_nontrivial()) {
        v.reason = "a bonding map has degree 0 or is singular";
        return v;
    }
    const auto ka = a.scalar_multipliers(), kb = b.scalar_multipliers();
    if (!ka || !kb) {
        v.reason = "torus bonding maps are not all scalar";
        return v;
    }
    const std::size_t rank = a.kind() == TelescopeKind::Torus ? static_cast<std::size_t>(a.dimension()) : 1;
    const RankOneGroup ra = from_multiplication_tower(*ka), rb = from_multiplication_tower(*kb);
    ClassificationEvidence e;
    e.type_a = ra.type;
    e.type_b = rb.type;
    e.class_a = star_canonical(ra.type);
    e.class_b = star_canonical(rb.type);
    e.hom_a = hom_to_Z(HomogeneousGroup(rank, ra));
    e.hom_b = hom_to_Z(HomogeneousGroup(rank, rb));
    e.ext_trivial_a = ext_to_Z(HomogeneousGroup(rank, ra), nullptr, opts).is_trivial;
    e.ext_trivial_b = ext_to_Z(HomogeneousGroup(rank, rb), nullptr, opts).is_trivial;
    const bool same = star_equivalent(ra.type, rb.type);
    v.verdict = same ? Equivalence::Equivalent : Equivalence::Inequivalent;
    v.reason = same ? "colimit types agree up to finitely many finite entries"
                    : "colimit types differ: " + ra.type.to_string() + " vs " + rb.type.to_string();
    v.evidence = e;
    return v;
}

BorsukEilenbergReport borsuk_eilenberg(const BigInt& p, const TowerOptions& opts)
{
    if (p < 2) throw PreconditionError("p >= 2", to_string(p));
    MultiplierSequence k;
    k.block = {p};
    BorsukEilenbergReport r{p, TelescopeSpec::sphere(1, k), {}, {}, {}, {}, false};
    r.milnor_q1 = milnor(r.model, 1, CoefficientGroup(), opts);
    r.milnor_q2 = milnor(r.model, 2, CoefficientGroup(), opts);
    r.ext = ext_to_Z(from_multiplication_tower(k), nullptr, opts);
    auto tower = std::make_shared<const AbTower>(AbTower::multiplication(k));
    const TowerCocycle ones(tower, ElementSequence::eventually_periodic({}, {int_vector({1})}));
    r.all_ones = is_coboundary(ones, opts);
    r.phantom_only = r.milnor_q2.weak_zero();
    return r;
}

}  // namespace telescoped
