#include "telescoped/telescope/telescope.hpp"

#include "telescoped/error.hpp"
#include "telescoped/simplicial/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace telescoped {

std::string to_string(TelescopeKind k)
{
    switch (k) {
    case TelescopeKind::Simplicial: return "simplicial";
    case TelescopeKind::Sphere: return "sphere";
    case TelescopeKind::Torus: return "torus";
    }
    return "?";
}

const IntMatrix& MatrixSequence::at(std::size_t n) const
{
    if (n < prefix.size()) return prefix[n];
    if (block.empty()) throw PreconditionError("matrix sequence has a periodic block", "empty block");
    return block[(n - prefix.size()) % block.size()];
}

TelescopeSpec TelescopeSpec::sphere(int d, MultiplierSequence degrees)
{
    if (d < 1) throw PreconditionError("sphere dimension >= 1", std::to_string(d));
    if (!degrees.sweep && degrees.block.empty())
        throw PreconditionError("degree sequence has a tail", "empty periodic block");
    TelescopeSpec t;
    t.kind_ = TelescopeKind::Sphere;
    t.d_ = d;
    t.degrees_ = std::move(degrees);
    return t;
}

TelescopeSpec TelescopeSpec::torus(int d, MatrixSequence matrices)
{
    if (d < 1) throw PreconditionError("torus dimension >= 1", std::to_string(d));
    if (matrices.block.empty()) throw PreconditionError("matrix sequence has a tail", "empty periodic block");
    auto check = [d](const IntMatrix& m) {
        if (m.rows() != d || m.cols() != d)
            throw DimensionError("torus map must be " + std::to_string(d) + "x" + std::to_string(d) + ", got " +
                                 std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    };
    for (const auto& m : matrices.prefix) check(m);
    for (const auto& m : matrices.block) check(m);
    TelescopeSpec t;
    t.kind_ = TelescopeKind::Torus;
    t.d_ = d;
    t.matrices_ = std::move(matrices);
    return t;
}

TelescopeSpec TelescopeSpec::simplicial(std::vector<SimplicialMap> maps, std::size_t tail_period)
{
    if (maps.empty()) throw PreconditionError("telescope has a bonding map", "no maps given");
    for (std::size_t i = 0; i + 1 < maps.size(); ++i)
        if (maps[i].target() != maps[i + 1].source())
            throw PreconditionError("maps chain", "target of map " + std::to_string(i) + " is not the source of map " +
                                                      std::to_string(i + 1));
    if (tail_period > maps.size())
        throw PreconditionError("tail period <= number of maps", std::to_string(tail_period));
    if (tail_period > 0) {
        const SimplicialComplex& x = maps.back().target();
        for (std::size_t i = maps.size() - tail_period; i < maps.size(); ++i)
            if (maps[i].source() != x || maps[i].target() != x)
                throw PreconditionError("tail maps are self-maps of one complex",
                                        "map " + std::to_string(i) + " changes the complex");
    }
    TelescopeSpec t;
    t.kind_ = TelescopeKind::Simplicial;
    t.maps_ = std::move(maps);
    t.tail_period_ = tail_period;
    int dim = 0;
    for (const auto& f : t.maps_) dim = std::max({dim, f.source().dimension(), f.target().dimension()});
    t.d_ = dim;
    return t;
}

int TelescopeSpec::dimension() const { return d_; }

const SimplicialMap& TelescopeSpec::map(std::size_t n) const
{
    if (kind_ != TelescopeKind::Simplicial) throw PreconditionError("simplicial telescope", telescoped::to_string(kind_));
    if (n < maps_.size()) return maps_[n];
    if (tail_period_ == 0)
        throw PreconditionError("bonding map is described",
                                "map " + std::to_string(n) + " lies beyond the listed maps and there is no tail");
    const std::size_t first = maps_.size() - tail_period_;
    return maps_[first + (n - maps_.size()) % tail_period_];
}

const SimplicialComplex& TelescopeSpec::stage(std::size_t n) const
{
    if (kind_ != TelescopeKind::Simplicial) throw PreconditionError("simplicial telescope", telescoped::to_string(kind_));
    if (n == maps_.size() && tail_period_ == 0) return maps_.back().target();
    return map(n).source();
}

bool TelescopeSpec::is_nontrivial() const
{
    switch (kind_) {
    case TelescopeKind::Sphere:
        for (const auto& k : degrees_.prefix)
            if (k == 0) return false;
        if (degrees_.sweep) return degrees_.sweep->factor != 0;
        for (const auto& k : degrees_.block)
            if (k == 0) return false;
        return true;
    case TelescopeKind::Torus:
        for (const auto* part : {&matrices_.prefix, &matrices_.block})
            for (const auto& m : *part)
                if (exact::determinant(m) == 0) return false;
        return true;
    case TelescopeKind::Simplicial: return false;
    }
    return false;
}

std::optional<MultiplierSequence> TelescopeSpec::scalar_multipliers() const
{
    if (kind_ == TelescopeKind::Sphere) return degrees_;
    if (kind_ != TelescopeKind::Torus) return std::nullopt;
    auto scalar = [](const IntMatrix& m) -> std::optional<BigInt> {
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j)
                if (i == j ? m(i, j) != m(0, 0) : m(i, j) != 0) return std::nullopt;
        return m(0, 0);
    };
    MultiplierSequence k;
    for (const auto& m : matrices_.prefix) {
        auto s = scalar(m);
        if (!s) return std::nullopt;
        k.prefix.push_back(*s);
    }
    for (const auto& m : matrices_.block) {
        auto s = scalar(m);
        if (!s) return std::nullopt;
        k.block.push_back(*s);
    }
    return k;
}

std::string TelescopeSpec::to_string() const
{
    std::ostringstream out;
    switch (kind_) {
    case TelescopeKind::Sphere: {
        out << "Sphere(" << d_ << ", x[";
        for (std::size_t i = 0; i < degrees_.prefix.size(); ++i)
            out << (i ? "," : "") << telescoped::to_string(degrees_.prefix[i]);
        out << "](";
        if (degrees_.sweep)
            out << "sweep " << telescoped::to_string(degrees_.sweep->factor) << "*p^" << degrees_.sweep->exponent;
        else
            for (std::size_t i = 0; i < degrees_.block.size(); ++i)
                out << (i ? "," : "") << telescoped::to_string(degrees_.block[i]);
        out << ")*)";
        break;
    }
    case TelescopeKind::Torus:
    {
        // Same bracket notation as the sphere case, matrices row by row.
        const auto mat = [&](const IntMatrix& m) {
            out << "[";
            for (Eigen::Index r = 0; r < m.rows(); ++r) {
                out << (r ? ";" : "");
                for (Eigen::Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << telescoped::to_string(m(r, c));
            }
            out << "]";
        };
        out << "Torus(" << d_ << ", [";
        for (std::size_t i = 0; i < matrices_.prefix.size(); ++i) {
            out << (i ? "," : "");
            mat(matrices_.prefix[i]);
        }
        out << "](";
        for (std::size_t i = 0; i < matrices_.block.size(); ++i) {
            out << (i ? "," : "");
            mat(matrices_.block[i]);
        }
        out << ")*)";
        break;
    }
    case TelescopeKind::Simplicial:
        out << "Simplicial(" << maps_.size() << " maps, tail period " << tail_period_ << ")";
        break;
    }
    return out.str();
}

IntMatrix compound_matrix(const IntMatrix& a, int q)
{
    if (a.rows() != a.cols()) throw DimensionError("compound of a non-square matrix");
    const int d = static_cast<int>(a.rows());
    if (q < 0 || q > d) return IntMatrix(0, 0);
    std::vector<std::vector<Eigen::Index>> subsets;
    std::vector<Eigen::Index> cur;
    auto rec = [&](auto&& self, Eigen::Index start) -> void {
        if (static_cast<int>(cur.size()) == q) {
            subsets.push_back(cur);
            return;
        }
        for (Eigen::Index i = start; i < d; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    const auto n = static_cast<Eigen::Index>(subsets.size());
    IntMatrix c(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s) {
            IntMatrix minor(q, q);
            for (int i = 0; i < q; ++i)
                for (int j = 0; j < q; ++j) minor(i, j) = a(subsets[r][i], subsets[s][j]);
            c(r, s) = q == 0 ? BigInt(1) : exact::determinant(minor);
        }
    return c;
}

namespace {

// G^n written in naive coordinates: block i holds one copy of the
// coefficient summands. Endomorphisms A (x) id act on the block index.
struct NaiveSum {
    Subquotient sq;

    NaiveSum(std::size_t copies, const CoefficientGroup& g)
    {
        const std::size_t s = g.summands();
        const auto n = static_cast<Eigen::Index>(copies * s);
        IntMatrix rel = exact::zeros<BigInt>(n, n);
        for (std::size_t i = 0; i < copies; ++i)
            for (std::size_t j = 0; j < s; ++j) {
                const auto k = static_cast<Eigen::Index>(i * s + j);
                rel(k, k) = g.moduli()[j];
            }
        sq = Subquotient(Lattice::full(n), Lattice::from_generators(rel));
    }

    AbHom endo(const IntMatrix& a, std::size_t s) const
    {
        const FgAbGroup& grp = sq.group();
        const auto n = grp.generator_count();
        const auto big = sq.numerator().ambient_dim();
        IntMatrix m = exact::zeros<BigInt>(big, big);
        for (Eigen::Index r = 0; r < a.rows(); ++r)
            for (Eigen::Index c = 0; c < a.cols(); ++c)
                for (std::size_t j = 0; j < s; ++j)
                    m(r * static_cast<Eigen::Index>(s) + static_cast<Eigen::Index>(j),
                      c * static_cast<Eigen::Index>(s) + static_cast<Eigen::Index>(j)) = a(r, c);
        IntMatrix cols(n, n);
        for (Eigen::Index i = 0; i < n; ++i) cols.col(i) = sq.coordinates(exact::apply(m, sq.generator(i)));
        return AbHom(grp, grp, cols);
    }
};

AbTower trivial_tower() { return AbTower(Tail::identity(FgAbGroup())); }

AbTower sphere_tower(const TelescopeSpec& tel, int q, const CoefficientGroup& g)
{
    const int d = tel.dimension();
    if (q != 0 && q != d) return trivial_tower();
    const NaiveSum sum(1, g);
    const FgAbGroup& grp = sum.sq.group();
    if (q == 0) return AbTower(Tail::identity(grp));
    const MultiplierSequence& k = tel.degrees();
    if (k.sweep) {
        if (!grp.is_free())
            throw PreconditionError("supported degree sequence",
                                    "degrees sweeping over the primes need torsion-free coefficients");
        return AbTower::scalar(grp.free_rank(), k);
    }
    auto scalar = [&](const BigInt& v) { return sum.endo(IntMatrix::Constant(1, 1, v), g.summands()); };
    std::vector<AbHom> prefix;
    for (const auto& v : k.prefix) prefix.push_back(scalar(v));
    std::vector<IntMatrix> block;
    for (const auto& v : k.block) block.push_back(scalar(v).matrix());
    return AbTower(std::move(prefix), Tail::periodic(grp, std::move(block)));
}

BigInt binomial(int n, int r)
{
    BigInt b = 1;
    for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
    return b;
}

AbTower torus_tower(const TelescopeSpec& tel, int q, const CoefficientGroup& g)
{
    const int d = tel.dimension();
    if (q < 0 || q > d) return trivial_tower();
    const NaiveSum sum(binomial(d, q).convert_to<std::size_t>(), g);
    const FgAbGroup& grp = sum.sq.group();
    // Pullback along the map of tori with matrix M acts on H^q = Lambda^q Hom(Z^d, G)
    // by the transposed q-th compound.
    auto induced = [&](const IntMatrix& m) { return sum.endo(compound_matrix(m, q).transpose(), g.summands()); };
    const MatrixSequence& ms = tel.matrices();
    std::vector<AbHom> prefix;
    for (const auto& m : ms.prefix) prefix.push_back(induced(m));
    std::vector<IntMatrix> block;
    for (const auto& m : ms.block) block.push_back(induced(m).matrix());
    return AbTower(std::move(prefix), Tail::periodic(grp, std::move(block)));
}

AbTower simplicial_tower(const TelescopeSpec& tel, int q, const CoefficientGroup& g)
{
    const std::size_t n = tel.maps().size();
    const std::size_t period = tel.tail_period();
    const std::size_t p = n - period;
    std::vector<AbHom> prefix;
    for (std::size_t i = 0; i < p; ++i) prefix.push_back(induced_map(tel.map(i), q, g));
    if (period == 0) return AbTower(std::move(prefix), Tail::none(cohomology(tel.stage(n), q, g)));
    std::vector<IntMatrix> block;
    for (std::size_t i = p; i < n; ++i) block.push_back(induced_map(tel.map(i), q, g).matrix());
    return AbTower(std::move(prefix), Tail::periodic(cohomology(tel.stage(p), q, g), std::move(block)));
}

}  // namespace

AbTower cohomology_tower(const TelescopeSpec& tel, int q, const CoefficientGroup& g)
{
    if (q < 0) return trivial_tower();
    switch (tel.kind()) {
    case TelescopeKind::Sphere: return sphere_tower(tel, q, g);
    case TelescopeKind::Torus: return torus_tower(tel, q, g);
    case TelescopeKind::Simplicial: return simplicial_tower(tel, q, g);
    }
    throw PreconditionError("known telescope kind", "?");
}

TelescopeComplex truncated_telescope(const TelescopeSpec& tel, std::size_t n)
{
    if (tel.kind() != TelescopeKind::Simplicial)
        throw PreconditionError("simplicial telescope", "truncation needs explicit complexes, got " + to_string(tel.kind()));
    if (n < 1) throw PreconditionError("at least one stage map", "N = 0");
    std::vector<SimplicialMap> maps;
    for (std::size_t i = 0; i < n; ++i) maps.push_back(tel.map(i));
    return mapping_telescope(maps);
}

}  // namespace telescoped
