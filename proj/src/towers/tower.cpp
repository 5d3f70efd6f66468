#include "telescoped/towers/tower.hpp"

#include "telescoped/error.hpp"
#include "telescoped/exactalg/primes.hpp"

#include <algorithm>

namespace telescoped {

std::string to_string(TailKind k)
{
    switch (k) {
    case TailKind::Periodic: return "periodic";
    case TailKind::Constant: return "constant";
    case TailKind::Identity: return "identity";
    case TailKind::Sweep: return "sweep";
    case TailKind::None: return "none";
    }
    return "none";
}

Tail Tail::periodic(std::vector<IntMatrix> block)
{
    if (block.empty()) throw PreconditionError("periodic tail has a nonempty block", "no matrices");
    const Eigen::Index d = block.front().rows();
    for (const auto& m : block)
        if (m.rows() != d || m.cols() != d)
            throw PreconditionError("periodic tail matrices are square of size d", "matrix of shape " +
                                                                                      std::to_string(m.rows()) + "x" +
                                                                                      std::to_string(m.cols()));
    Tail t;
    t.kind = TailKind::Periodic;
    t.group = FgAbGroup::free(static_cast<std::size_t>(d));
    t.matrices = std::move(block);
    return t;
}

Tail Tail::periodic(const FgAbGroup& g, std::vector<IntMatrix> block)
{
    if (block.empty()) throw PreconditionError("periodic tail has a nonempty block", "no matrices");
    Tail t;
    t.kind = TailKind::Periodic;
    t.group = g;
    for (const auto& m : block) t.matrices.push_back(AbHom(g, g, m).matrix());
    return t;
}

Tail Tail::constant(const FgAbGroup& g, const IntMatrix& endo)
{
    Tail t;
    t.kind = TailKind::Constant;
    t.group = g;
    t.matrices = {AbHom(g, g, endo).matrix()};
    return t;
}

Tail Tail::identity(const FgAbGroup& g)
{
    Tail t;
    t.kind = TailKind::Identity;
    t.group = g;
    t.matrices = {exact::identity<BigInt>(g.generator_count())};
    return t;
}

Tail Tail::sweeping(std::size_t d, const SweepRule& rule)
{
    if (rule.factor == 0) throw PreconditionError("multipliers are nonzero", "zero sweep factor");
    if (rule.first_prime < 2) throw PreconditionError("sweep starts at a prime >= 2", to_string(rule.first_prime));
    Tail t;
    t.kind = TailKind::Sweep;
    t.group = FgAbGroup::free(d);
    t.sweep = rule;
    return t;
}

Tail Tail::none(const FgAbGroup& g)
{
    Tail t;
    t.kind = TailKind::None;
    t.group = g;
    return t;
}

std::size_t Tail::period() const
{
    switch (kind) {
    case TailKind::Periodic: return matrices.size();
    case TailKind::Constant:
    case TailKind::Identity: return 1;
    default: return 0;
    }
}

AbTower::AbTower(std::vector<AbHom> prefix_maps, Tail tail) : prefix_(std::move(prefix_maps)), tail_(std::move(tail))
{
    for (std::size_t n = 0; n + 1 < prefix_.size(); ++n)
        if (prefix_[n].source() != prefix_[n + 1].target())
            throw PreconditionError("tower maps chain", "source of map " + std::to_string(n) + " is " +
                                                            prefix_[n].source().to_string() + " but stage " +
                                                            std::to_string(n + 1) + " is " +
                                                            prefix_[n + 1].target().to_string());
    if (!prefix_.empty() && prefix_.back().source() != tail_.group)
        throw PreconditionError("prefix final group matches the tail group",
                                prefix_.back().source().to_string() + " vs " + tail_.group.to_string());
    if (tail_.kind == TailKind::Periodic || tail_.kind == TailKind::Constant || tail_.kind == TailKind::Identity)
        for (auto& m : tail_.matrices) m = AbHom(tail_.group, tail_.group, m).matrix();
}

AbTower AbTower::multiplication(const MultiplierSequence& k)
{
    return scalar(1, k);
}

AbTower AbTower::scalar(std::size_t d, const MultiplierSequence& k)
{
    const FgAbGroup g = FgAbGroup::free(d);
    const IntMatrix id = exact::identity<BigInt>(static_cast<Eigen::Index>(d));
    std::vector<AbHom> prefix;
    for (const auto& v : k.prefix) prefix.emplace_back(g, g, IntMatrix(v * id));
    if (k.sweep) return AbTower(std::move(prefix), Tail::sweeping(d, *k.sweep));
    std::vector<IntMatrix> block;
    for (const auto& v : k.block) block.push_back(v * id);
    return AbTower(std::move(prefix), Tail::periodic(std::move(block)));
}

const FgAbGroup& AbTower::group(std::size_t n) const
{
    return n < prefix_.size() ? prefix_[n].target() : tail_.group;
}

AbHom AbTower::map(std::size_t n) const
{
    if (n < prefix_.size()) return prefix_[n];
    const std::size_t j = n - prefix_.size();
    switch (tail_.kind) {
    case TailKind::Periodic:
    case TailKind::Constant:
    case TailKind::Identity:
        return AbHom(tail_.group, tail_.group, tail_.matrices[j % tail_.matrices.size()]);
    case TailKind::Sweep: {
        MultiplierSequence k;
        k.sweep = tail_.sweep;
        const BigInt v = k.at(j);
        return AbHom(tail_.group, tail_.group, IntMatrix(v * exact::identity<BigInt>(tail_.group.generator_count())));
    }
    case TailKind::None: break;
    }
    throw PreconditionError("supported tail rule", "stage " + std::to_string(n) + " lies beyond a tower with no tail");
}

AbHom AbTower::composite(std::size_t m, std::size_t n) const
{
    if (m > n) throw PreconditionError("composite goes down the tower", std::to_string(m) + " > " + std::to_string(n));
    AbHom acc = AbHom::identity(group(n));
    for (std::size_t i = n; i > m; --i) acc = compose(map(i - 1), acc);
    return acc;
}

std::optional<MultiplierSequence> AbTower::multipliers() const
{
    auto is_z = [](const FgAbGroup& g) { return g == FgAbGroup::free(1); };
    if (!is_z(tail_.group)) return std::nullopt;
    MultiplierSequence k;
    for (const auto& f : prefix_) {
        if (!is_z(f.target())) return std::nullopt;
        k.prefix.push_back(f.matrix()(0, 0));
    }
    switch (tail_.kind) {
    case TailKind::Periodic:
    case TailKind::Constant:
    case TailKind::Identity:
        for (const auto& m : tail_.matrices) k.block.push_back(m(0, 0));
        return k;
    case TailKind::Sweep:
        k.sweep = tail_.sweep;
        return k;
    case TailKind::None: break;
    }
    return std::nullopt;
}

AbTower AbTower::shifted(std::size_t count) const
{
    if (count <= prefix_.size())
        return AbTower(std::vector<AbHom>(prefix_.begin() + static_cast<std::ptrdiff_t>(count), prefix_.end()), tail_);
    Tail t = tail_;
    const std::size_t j = count - prefix_.size();
    switch (t.kind) {
    case TailKind::Periodic:
        std::rotate(t.matrices.begin(), t.matrices.begin() + static_cast<std::ptrdiff_t>(j % t.matrices.size()),
                    t.matrices.end());
        break;
    case TailKind::Sweep: {
        BigInt p = t.sweep.first_prime;
        if (!primes::is_prime(p)) p = primes::next_prime(p);
        for (std::size_t i = 0; i < j; ++i) p = primes::next_prime(p);
        t.sweep.first_prime = p;
        break;
    }
    case TailKind::None:
        throw PreconditionError("supported tail rule", "cannot shift past the prefix of a tower with no tail");
    default: break;
    }
    return AbTower({}, std::move(t));
}

AbTower AbTower::dual() const
{
    // Hom(colim(G_n), Z) is the limit of the Hom(G_n, Z), whose maps are
    // the transposes. Every stage must be free.
    auto require_free = [](const FgAbGroup& g) {
        if (!g.is_free()) throw PreconditionError("dual tower needs free groups", "stage group " + g.to_string());
    };
    require_free(tail_.group);
    std::vector<AbHom> out;
    for (const auto& f : prefix_) {
        require_free(f.target());
        out.emplace_back(f.source(), f.target(), IntMatrix(f.matrix().transpose()));
    }
    Tail t = tail_;
    for (auto& m : t.matrices) m = IntMatrix(m.transpose());
    return AbTower(std::move(out), std::move(t));
}

}  // namespace telescoped
