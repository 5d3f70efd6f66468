#include "telescoped/towers/limits.hpp"

#include "telescoped/error.hpp"

namespace telescoped {

namespace {

IntMatrix columns_of(const Lattice& l) { return l.basis(); }

// Coordinates of the columns of m in the lattice basis; throws when a
// column falls outside.
IntMatrix coordinates_in(const Lattice& l, const IntMatrix& m)
{
    IntMatrix out(l.rank(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        auto c = l.coordinates(m.col(j));
        if (!c) throw Error("internal: lattice is not invariant");
        out.col(j) = *c;
    }
    return out;
}

void analyze_free_block(const IntMatrix& cff, TailAnalysis& a)
{
    const Eigen::Index f = cff.rows();
    IntMatrix power = exact::identity<BigInt>(f);
    Eigen::Index rank = f;
    std::size_t k = 0;
    for (;;) {
        IntMatrix next = exact::multiply(cff, power);
        const Eigen::Index r = image(next).rank();
        if (r == rank) break;
        power = std::move(next);
        rank = r;
        ++k;
    }
    a.rank_stabilization = k;
    const Lattice w = saturation(image(power));
    a.eventual_rank = static_cast<std::size_t>(w.rank());
    const IntMatrix b = columns_of(w);
    a.restricted = coordinates_in(w, exact::multiply(cff, b));
    a.characteristic = poly::characteristic(a.restricted);
    a.period_index = exact::abs(a.characteristic.front());

    const auto [unit, rest] = poly::split_unit_part(a.characteristic);
    a.unit_part = unit;
    const Eigen::Index du = poly::degree(unit);
    if (du == w.rank()) {
        a.free_threads = w;
    } else if (du <= 0) {
        a.free_threads = Lattice(f);
    } else {
        const Lattice coords = kernel(poly::evaluate(unit, a.restricted));
        a.free_threads = image(exact::multiply(b, coords.basis()));
    }
}

}  // namespace

TailAnalysis analyze_tail(const AbTower& t)
{
    const Tail& tail = t.tail();
    TailAnalysis a;
    a.stage = t.prefix_length();
    const FgAbGroup& g = tail.group;
    const Eigen::Index n = g.generator_count();
    const auto nt = static_cast<Eigen::Index>(g.torsion_count());
    const auto f = static_cast<Eigen::Index>(g.free_rank());

    switch (tail.kind) {
    case TailKind::None:
        throw PreconditionError("supported tail rule", "tower has no tail rule; lim needs the full tower");
    case TailKind::Sweep:
        a.period = 1;
        a.period_map = t.map(a.stage);
        if (tail.sweep.exponent > 0) {
            a.vanishing_sweep = true;
            a.free_threads = Lattice(f);
            return a;
        }
        break;
    default:
        a.period = tail.period();
        a.period_map = t.composite(a.stage, a.stage + a.period);
        break;
    }

    const IntMatrix& c = a.period_map.matrix();
    analyze_free_block(c.bottomRightCorner(f, f), a);

    const Lattice rel = g.relations();
    IntMatrix tors = exact::zeros<BigInt>(n, nt);
    for (Eigen::Index i = 0; i < nt; ++i) tors(i, i) = 1;
    Lattice s = Lattice::from_generators(tors);
    std::size_t k = 0;
    for (;;) {
        Lattice next = sum(image(c, s), rel);
        if (next == s) break;
        s = std::move(next);
        ++k;
    }
    a.torsion_stabilization = k;
    return a;
}

LimResult lim(const AbTower& t)
{
    LimResult out;
    out.certificate = analyze_tail(t);
    const TailAnalysis& a = out.certificate;
    out.stage = a.stage;
    const FgAbGroup& g = t.tail().group;
    const Eigen::Index n = g.generator_count();
    const auto nt = static_cast<Eigen::Index>(g.torsion_count());
    const auto f = static_cast<Eigen::Index>(g.free_rank());
    const Lattice rel = g.relations();

    Lattice h = rel;
    if (!a.vanishing_sweep) {
        const IntMatrix& c = a.period_map.matrix();
        const IntMatrix cff = c.bottomRightCorner(f, f);

        IntMatrix tors = exact::zeros<BigInt>(n, nt);
        for (Eigen::Index i = 0; i < nt; ++i) tors(i, i) = 1;
        Lattice t_inf = Lattice::from_generators(tors);
        for (std::size_t i = 0; i < a.torsion_stabilization; ++i) t_inf = sum(image(c, t_inf), rel);

        // Lift each free thread delta to C^K(0, C_FF^{-K} delta); these
        // extend to threads once T_inf is added.
        const Lattice& d = a.free_threads;
        const IntMatrix db = d.basis();
        const IntMatrix action = coordinates_in(d, exact::multiply(cff, db));
        IntMatrix lifts(n, d.rank());
        for (Eigen::Index j = 0; j < d.rank(); ++j) {
            IntVector y = IntVector::Zero(d.rank());
            y(j) = 1;
            for (std::size_t i = 0; i < a.torsion_stabilization; ++i) {
                auto sol = solve_integer(action, y);
                if (!sol) throw Error("internal: free thread action is not invertible");
                y = sol->particular;
            }
            IntVector w = IntVector::Zero(n);
            w.tail(f) = exact::apply(db, y);
            for (std::size_t i = 0; i < a.torsion_stabilization; ++i) w = exact::apply(c, w);
            lifts.col(j) = w;
        }
        h = sum(sum(t_inf, Lattice::from_generators(lifts)), rel);
    }

    out.threads = Subquotient(h, rel);
    out.group = out.threads.group();
    out.stage_embedding = AbHom(out.group, g, out.threads.generators());
    out.embedding = compose(t.composite(0, a.stage), out.stage_embedding);
    return out;
}

std::string to_string(Lim1Status s)
{
    switch (s) {
    case Lim1Status::Zero: return "Zero";
    case Lim1Status::NonZero: return "NonZero";
    case Lim1Status::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

MittagLefflerCertificate mittag_leffler(const AbTower& t, const TowerOptions& opts)
{
    MittagLefflerCertificate cert;
    cert.depth = opts.probe_depth;
    const Tail& tail = t.tail();
    if (tail.kind == TailKind::None) {
        cert.status = Lim1Status::Undetermined;
        cert.detail = "no tail rule; " + std::to_string(t.prefix_length()) + " explicit stages, probe depth " +
                      std::to_string(opts.probe_depth);
        return cert;
    }
    const TailAnalysis a = analyze_tail(t);
    const FgAbGroup& g = tail.group;
    cert.eventual_rank = a.eventual_rank;
    cert.lim_rank = static_cast<std::size_t>(a.free_threads.rank());

    if (a.vanishing_sweep) {
        cert.eventual_rank = g.free_rank();
        if (g.free_rank() == 0) {
            cert.status = Lim1Status::Zero;
            cert.detail = "trivial tail group";
            return cert;
        }
        BigInt step = 1;
        const BigInt k = exact::abs(a.period_map.matrix()(0, 0));
        for (std::size_t i = 0; i < g.free_rank(); ++i) step *= k;
        cert.status = Lim1Status::NonZero;
        cert.step_index = step;
        cert.detail = "sweep multipliers have absolute value >= 2 at every step";
        return cert;
    }

    if (a.period_index != 1) {
        cert.status = Lim1Status::NonZero;
        cert.stabilization_index = a.rank_stabilization;
        BigInt step = a.period_index;
        cert.step_index = step;
        cert.detail = "free-quotient images have index |det C1| = " + to_string(a.period_index) +
                      " in their predecessor from period " + std::to_string(a.rank_stabilization) + " on";
        return cert;
    }

    const IntMatrix& c = a.period_map.matrix();
    const Lattice rel = g.relations();
    Lattice img = Lattice::full(g.generator_count());
    std::size_t k = 0;
    for (;; ++k) {
        Lattice next = sum(image(c, img), rel);
        if (next == img) break;
        if (k > (1u << 16)) throw Error("internal: image chain failed to stabilize");
        img = std::move(next);
    }
    cert.status = Lim1Status::Zero;
    cert.stabilization_index = k;
    cert.detail = "images stabilize after " + std::to_string(k) + " periods of length " + std::to_string(a.period);
    return cert;
}

Lim1Descriptor lim1_descriptor(const AbTower& t, const TowerOptions& opts)
{
    Lim1Descriptor out;
    out.status = mittag_leffler(t, opts);
    if (auto k = t.multipliers()) {
        try {
            out.rank1_type = type_of(*k);
            out.notes.push_back("rank-1 multiplication tower; lim1 is Ext(colim(Z, x k_n), Z)");
        } catch (const PreconditionError&) {
            out.notes.push_back("rank-1 tower with a zero multiplier; colimit is 0");
        }
    }
    switch (out.status.status) {
    case Lim1Status::Zero: out.notes.push_back("Mittag-Leffler: lim1 = 0"); break;
    case Lim1Status::NonZero:
        out.notes.push_back("images of countable groups never stabilize: lim1 is uncountable");
        break;
    case Lim1Status::Undetermined: out.notes.push_back("tail unknown beyond the explicit stages"); break;
    }
    return out;
}

}  // namespace telescoped
