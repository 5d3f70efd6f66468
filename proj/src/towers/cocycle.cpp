#include "telescoped/towers/cocycle.hpp"

#include "telescoped/error.hpp"

#include <numeric>

namespace telescoped {

ElementSequence ElementSequence::eventually_zero(std::vector<IntVector> terms)
{
    ElementSequence s;
    s.prefix = std::move(terms);
    return s;
}

ElementSequence ElementSequence::eventually_periodic(std::vector<IntVector> prefix, std::vector<IntVector> block)
{
    if (block.empty()) throw PreconditionError("periodic block is nonempty", "empty block");
    ElementSequence s;
    s.prefix = std::move(prefix);
    s.block = std::move(block);
    return s;
}

IntVector ElementSequence::at(const AbTower& t, std::size_t n) const
{
    if (n < prefix.size()) return prefix[n];
    if (block.empty()) return IntVector::Zero(t.group(n).generator_count());
    return block[(n - prefix.size()) % block.size()];
}

namespace {

bool periodic_tail(const Tail& t)
{
    return t.kind == TailKind::Periodic || t.kind == TailKind::Constant || t.kind == TailKind::Identity;
}

bool all_zero(const std::vector<IntVector>& v)
{
    for (const auto& x : v)
        if (!exact::is_zero(x)) return false;
    return true;
}

std::size_t lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

// eta^n(x) with x in G_{n+1}; a zero x never needs the map.
IntVector push_down(const AbTower& t, std::size_t n, const IntVector& x)
{
    if (exact::is_zero(x)) return IntVector::Zero(t.group(n).generator_count());
    return t.map(n)(x);
}

}  // namespace

TowerCocycle::TowerCocycle(std::shared_ptr<const AbTower> tower, ElementSequence terms)
    : tower_(std::move(tower)), terms_(std::move(terms))
{
    if (!tower_) throw PreconditionError("cocycle has a tower", "null tower");
    const AbTower& t = *tower_;
    const std::size_t p = t.prefix_length();
    auto& s = terms_;

    if (!s.block.empty()) {
        if (!periodic_tail(t.tail()))
            throw PreconditionError("periodic description only over periodic, constant or identity tails",
                                    "tail is " + to_string(t.tail().kind));
        while (s.prefix.size() < p) {
            s.prefix.push_back(s.block.front());
            std::rotate(s.block.begin(), s.block.begin() + 1, s.block.end());
        }
    }
    auto check = [&](const IntVector& x, std::size_t n, const char* where) {
        const FgAbGroup& g = t.group(n);
        if (x.size() != g.generator_count())
            throw PreconditionError("element degrees match tower groups",
                                    std::string(where) + " term at stage " + std::to_string(n) + " has " +
                                        std::to_string(x.size()) + " entries, stage group " + g.to_string());
        return g.reduce(x);
    };
    for (std::size_t n = 0; n < s.prefix.size(); ++n) s.prefix[n] = check(s.prefix[n], n, "prefix");
    for (auto& x : s.block) x = check(x, p, "block");

    if (!s.block.empty() && all_zero(s.block)) s.block.clear();
    if (s.block.empty()) {
        while (!s.prefix.empty() && exact::is_zero(s.prefix.back())) s.prefix.pop_back();
        return;
    }
    // Shortest period, then absorb prefix terms that already follow it.
    const std::size_t b = s.block.size();
    for (std::size_t d = 1; d < b; ++d) {
        if (b % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < b && ok; ++i) ok = s.block[i] == s.block[i - d];
        if (ok) {
            s.block.resize(d);
            break;
        }
    }
    while (s.prefix.size() > p && s.prefix.back() == s.block.back()) {
        s.prefix.pop_back();
        std::rotate(s.block.rbegin(), s.block.rbegin() + 1, s.block.rend());
    }
}

bool TowerCocycle::operator==(const TowerCocycle& o) const
{
    return terms_.prefix == o.terms_.prefix && terms_.block == o.terms_.block;
}

TowerCocycle action_apply(const ElementSequence& g_terms, const TowerCocycle& h)
{
    const TowerCocycle g(h.tower_ptr(), g_terms);
    const AbTower& t = h.tower();
    const auto& gs = g.terms();
    const auto& hs = h.terms();

    auto term = [&](std::size_t n) { return IntVector(g.at(n) + h.at(n) - push_down(t, n, g.at(n + 1))); };

    if (gs.is_eventually_zero() && hs.is_eventually_zero()) {
        const std::size_t len = std::max(gs.prefix.size(), hs.prefix.size());
        std::vector<IntVector> out;
        for (std::size_t n = 0; n < len; ++n) out.push_back(term(n));
        return TowerCocycle(h.tower_ptr(), ElementSequence::eventually_zero(std::move(out)));
    }
    const std::size_t start = std::max({gs.prefix.size(), hs.prefix.size(), t.prefix_length()});
    std::size_t period = t.tail().period();
    period = lcm(period, gs.block.empty() ? 1 : gs.block.size());
    period = lcm(period, hs.block.empty() ? 1 : hs.block.size());
    std::vector<IntVector> prefix, block;
    for (std::size_t n = 0; n < start; ++n) prefix.push_back(term(n));
    for (std::size_t n = start; n < start + period; ++n) block.push_back(term(n));
    return TowerCocycle(h.tower_ptr(), ElementSequence::eventually_periodic(std::move(prefix), std::move(block)));
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Undetermined: return "Undetermined";
    }
    return "Undetermined";
}

namespace {

// g_n = h_n + eta^n(g_{n+1}) for n < start, given g from `start` on.
std::vector<IntVector> back_substitute(const TowerCocycle& h, std::size_t start, const IntVector& g_start)
{
    std::vector<IntVector> g(start);
    IntVector next = g_start;
    for (std::size_t n = start; n-- > 0;) {
        g[n] = h.tower().group(n).reduce(IntVector(h.at(n) + push_down(h.tower(), n, next)));
        next = g[n];
    }
    return g;
}

void verify_witness(const TowerCocycle& h, const ElementSequence& g)
{
    const TowerCocycle zero(h.tower_ptr(), ElementSequence{});
    if (action_apply(g, zero) != h) throw Error("internal: coboundary witness failed verification");
}

bool diagonal_free_tail(const Tail& t)
{
    if (!periodic_tail(t) || !t.group.is_free()) return false;
    for (const auto& m : t.matrices)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (i != j && m(i, j) != 0) return false;
    return true;
}

}  // namespace

CoboundaryVerdict is_coboundary(const TowerCocycle& h, const TowerOptions& opts)
{
    CoboundaryVerdict out;
    out.depth = opts.probe_depth;
    const AbTower& t = h.tower();
    const auto& hs = h.terms();

    if (hs.is_eventually_zero()) {
        const std::size_t len = hs.prefix.size();
        out.verdict = Verdict::Yes;
        try {
            auto g = back_substitute(h, len, IntVector::Zero(t.group(len).generator_count()));
            ElementSequence w = ElementSequence::eventually_zero(std::move(g));
            verify_witness(h, w);
            out.witness = std::move(w);
            out.certificate = "back-substitution from stage " + std::to_string(len);
        } catch (const PreconditionError&) {
            out.certificate = "eventually zero; maps beyond the explicit stages are unknown, no witness";
        }
        return out;
    }

    const Tail& tail = t.tail();
    if (diagonal_free_tail(tail)) {
        // Coordinates decouple on the tail. On each, a periodic solution
        // g_{N0+r} = A_r / (1 - Q) exists when it is integral; when |Q| >= 2
        // a non-integral value rules out every integer solution.
        const std::size_t p = t.prefix_length();
        const std::size_t n0 = hs.prefix.size();
        const std::size_t period = lcm(hs.block.size(), tail.period());
        const auto d = static_cast<std::size_t>(tail.group.free_rank());
        auto mult = [&](std::size_t stage, std::size_t i) {
            return tail.matrices[(stage - p) % tail.period()](static_cast<Eigen::Index>(i),
                                                              static_cast<Eigen::Index>(i));
        };
        auto hval = [&](std::size_t stage, std::size_t i) { return h.at(stage)(static_cast<Eigen::Index>(i)); };

        std::vector<std::vector<BigInt>> columns(d);  // per coordinate, one block of witness values
        bool finite_witness = true;
        for (std::size_t i = 0; i < d; ++i) {
            BigInt q = 1;
            for (std::size_t j = 0; j < period; ++j) q *= mult(n0 + j, i);
            if (exact::abs(q) == 1) {
                // Unit multipliers: run forward from 0; a return to 0 after
                // two periods gives a periodic witness.
                std::vector<BigInt> vals;
                BigInt g = 0;
                for (std::size_t s = 0; s < 2 * period; ++s) {
                    vals.push_back(g);
                    g = mult(n0 + s, i) * (g - hval(n0 + s, i));
                }
                if (g == 0)
                    columns[i] = std::move(vals);
                else
                    finite_witness = false;
                continue;
            }
            for (std::size_t r = 0; r < period; ++r) {
                BigInt a = 0, pi = 1;
                for (std::size_t j = 0; j < period; ++j) {
                    a += pi * hval(n0 + r + j, i);
                    pi *= mult(n0 + r + j, i);
                }
                const Rational s = Rational(a) / Rational(BigInt(1 - q));
                if (denominator(s) != 1) {
                    out.verdict = Verdict::No;
                    out.value = s;
                    out.coordinate = i;
                    out.offset = r;
                    out.certificate = "coordinate " + std::to_string(i) + ", stage " + std::to_string(n0 + r) +
                                      ": forced value " + s.str() + " with Q = " +
                                      to_string(q) + " is not an integer";
                    return out;
                }
                columns[i].push_back(numerator(s));
            }
        }
        out.verdict = Verdict::Yes;
        if (!finite_witness) {
            out.certificate = "unit multipliers on every undecided coordinate (Mittag-Leffler there); the "
                              "solution is not eventually periodic";
            return out;
        }
        std::size_t wlen = 1;
        for (const auto& c : columns) wlen = lcm(wlen, c.empty() ? 1 : c.size());
        std::vector<IntVector> block(wlen, IntVector::Zero(static_cast<Eigen::Index>(d)));
        for (std::size_t r = 0; r < wlen; ++r)
            for (std::size_t i = 0; i < d; ++i) block[r](static_cast<Eigen::Index>(i)) = columns[i][r % columns[i].size()];
        auto prefix = back_substitute(h, n0, block.front());
        ElementSequence w = ElementSequence::eventually_periodic(std::move(prefix), std::move(block));
        verify_witness(h, w);
        out.witness = std::move(w);
        out.certificate = "periodic solution of the tail equation from stage " + std::to_string(n0) +
                          ", prefix by back-substitution";
        return out;
    }

    const auto ml = mittag_leffler(t, opts);
    if (ml.status == Lim1Status::Zero) {
        out.verdict = Verdict::Yes;
        out.certificate = "Mittag-Leffler: " + ml.detail;
        return out;
    }
    out.verdict = Verdict::Undetermined;
    out.certificate = "non-diagonal tail without Mittag-Leffler; probe depth " + std::to_string(opts.probe_depth);
    return out;
}

}  // namespace telescoped
