#include "telescoped/simplicial/cohomology.hpp"

#include "telescoped/error.hpp"
#include "telescoped/exactalg/lattice.hpp"
#include "telescoped/exactalg/smith.hpp"

#include <algorithm>

namespace telescoped {

namespace {

// Faces of k of dimension n that are not faces of sub.
std::vector<Face> relative_faces(const SimplicialComplex& k, int n, const SimplicialComplex* sub)
{
    std::vector<Face> out;
    for (const auto& f : k.faces(n))
        if (!sub || !sub->contains_face(f)) out.push_back(f);
    return out;
}

// Coboundary restricted to the given row/column face lists.
IntMatrix restricted_coboundary(const std::vector<Face>& rows, const std::vector<Face>& cols)
{
    std::map<Face, Eigen::Index> col_index;
    for (std::size_t j = 0; j < cols.size(); ++j) col_index.emplace(cols[j], static_cast<Eigen::Index>(j));
    IntMatrix d = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Face& tau = rows[r];
        for (std::size_t i = 0; i < tau.size(); ++i) {
            Face sigma = tau;
            sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = col_index.find(sigma);
            if (it == col_index.end()) continue;
            d(static_cast<Eigen::Index>(r), it->second) += (i % 2 == 0) ? 1 : -1;
        }
    }
    return d;
}

IntMatrix repeat_blocks(const IntMatrix& block, std::size_t copies)
{
    return exact::block_diagonal(std::vector<IntMatrix>(copies, block));
}

}  // namespace

IntMatrix coboundary_matrix(const SimplicialComplex& k, int n)
{
    if (n < 0) throw PreconditionError("cochain degree is nonnegative", std::to_string(n));
    return restricted_coboundary(k.faces(n + 1), k.faces(n));
}

CohomologyGroup::CohomologyGroup(const SimplicialComplex& k, int n, const CoefficientGroup& g) : n_(n), coeff_(g)
{
    build(k, nullptr);
}

CohomologyGroup::CohomologyGroup(const SimplicialPair& pair, int n, const CoefficientGroup& g) : n_(n), coeff_(g)
{
    build(pair.complex, &pair.sub);
}

void CohomologyGroup::build(const SimplicialComplex& k, const SimplicialComplex* sub)
{
    if (n_ < 0) throw PreconditionError("cohomology degree is nonnegative", std::to_string(n_));
    faces_ = relative_faces(k, n_, sub);
    const auto above = relative_faces(k, n_ + 1, sub);
    const auto below = relative_faces(k, n_ - 1, sub);
    const IntMatrix d_n = restricted_coboundary(above, faces_);
    const IntMatrix d_prev = restricted_coboundary(faces_, below);
    const auto c = static_cast<Eigen::Index>(faces_.size());

    std::vector<IntMatrix> num_blocks, den_blocks;
    for (const auto& m : coeff_.moduli()) {
        if (m == 0) {
            num_blocks.push_back(kernel(d_n).basis());
            den_blocks.push_back(image(d_prev).basis());
        } else {
            IntMatrix mi = m * exact::identity<BigInt>(static_cast<Eigen::Index>(above.size()));
            num_blocks.push_back(preimage(d_n, image(mi)).basis());
            den_blocks.push_back(image(exact::hstack<BigInt>(d_prev, m * exact::identity<BigInt>(c))).basis());
        }
    }
    sq_ = Subquotient(Lattice::from_generators(exact::block_diagonal(num_blocks)),
                      Lattice::from_generators(exact::block_diagonal(den_blocks)));
}

Eigen::Index CohomologyGroup::cochain_length() const
{
    return static_cast<Eigen::Index>(faces_.size() * coeff_.summands());
}

namespace {

// The group alone, from the invariant factors a_i of delta^n and b_j of
// delta^{n-1}: split the cochain complex into pieces Z --x--> Z and tensor
// with each Z/m. Over Z this is Z^{free} + sum Z/b_j; over Z/m it is
// (Z/m)^{free} + sum Z/(a_i, m) + sum Z/(b_j, m).
FgAbGroup cohomology_group_only(const SimplicialComplex& k, const SimplicialComplex* sub, int n,
                                const CoefficientGroup& g)
{
    if (n < 0) throw PreconditionError("cohomology degree is nonnegative", std::to_string(n));
    const auto faces = relative_faces(k, n, sub);
    const auto a = nonzero_invariant_factors(restricted_coboundary(relative_faces(k, n + 1, sub), faces));
    const auto b = nonzero_invariant_factors(restricted_coboundary(faces, relative_faces(k, n - 1, sub)));
    const std::size_t free = faces.size() - a.size() - b.size();
    std::vector<BigInt> orders;
    for (const auto& m : g.moduli()) {
        orders.insert(orders.end(), free, m);
        // Trivial summands are dropped here: from_orders runs a dense Smith
        // form over whatever it is given.
        auto push = [&](BigInt o) {
            if (o != 1) orders.push_back(std::move(o));
        };
        if (m != 0)
            for (const auto& x : a) push(exact::gcd(x, m));
        for (const auto& x : b) push(m == 0 ? x : exact::gcd(x, m));
    }
    return FgAbGroup::from_orders(orders);
}

}  // namespace

FgAbGroup cohomology(const SimplicialComplex& k, int n, const CoefficientGroup& g)
{
    return cohomology_group_only(k, nullptr, n, g);
}

FgAbGroup cohomology(const SimplicialPair& pair, int n, const CoefficientGroup& g)
{
    return cohomology_group_only(pair.complex, &pair.sub, n, g);
}

AbHom induced_by_cochain_map(const CohomologyGroup& from, const CohomologyGroup& to, const IntMatrix& cochain_map)
{
    if (!(from.coefficients() == to.coefficients()))
        throw DimensionError("cochain map between different coefficient groups");
    const IntMatrix full = repeat_blocks(cochain_map, from.coefficients().summands());
    if (full.cols() != from.cochain_length() || full.rows() != to.cochain_length())
        throw DimensionError("cochain map shape");
    IntMatrix m(to.group().generator_count(), from.group().generator_count());
    for (Eigen::Index i = 0; i < from.group().generator_count(); ++i)
        m.col(i) = to.class_of(exact::apply(full, from.generator(i)));
    return AbHom(from.group(), to.group(), m);
}

IntMatrix pullback_matrix(const SimplicialMap& f, const std::vector<Face>& source_faces,
                          const std::vector<Face>& target_faces)
{
    std::map<Face, Eigen::Index> target_index;
    for (std::size_t j = 0; j < target_faces.size(); ++j)
        target_index.emplace(target_faces[j], static_cast<Eigen::Index>(j));
    IntMatrix p = IntMatrix::Zero(static_cast<Eigen::Index>(source_faces.size()),
                                  static_cast<Eigen::Index>(target_faces.size()));
    for (std::size_t r = 0; r < source_faces.size(); ++r) {
        Face img;
        for (Vertex v : source_faces[r]) img.push_back(f(v));
        // Sign of the sorting permutation; a repeated vertex makes the
        // alternating cochain vanish.
        int sign = 1;
        bool degenerate = false;
        for (std::size_t i = 0; i < img.size() && !degenerate; ++i)
            for (std::size_t j = i + 1; j < img.size(); ++j) {
                if (img[i] == img[j]) {
                    degenerate = true;
                    break;
                }
                if (img[i] > img[j]) sign = -sign;
            }
        if (degenerate) continue;
        std::sort(img.begin(), img.end());
        auto it = target_index.find(img);
        if (it != target_index.end()) p(static_cast<Eigen::Index>(r), it->second) = sign;
    }
    return p;
}

AbHom induced_map(const SimplicialMap& f, int n, const CoefficientGroup& g)
{
    CohomologyGroup h_target(f.target(), n, g);
    CohomologyGroup h_source(f.source(), n, g);
    return induced_by_cochain_map(h_target, h_source,
                                  pullback_matrix(f, h_source.basis_faces(), h_target.basis_faces()));
}

void require_cohomology_sphere(const SimplicialComplex& k, int d, const std::string& role)
{
    if (d < 1) throw PreconditionError("cohomology sphere", "sphere dimension must be at least 1");
    if (k.dimension() < d)
        throw PreconditionError("cohomology sphere", role + " has dimension " + std::to_string(k.dimension()) +
                                                         " < " + std::to_string(d));
    for (int q = 0; q <= k.dimension(); ++q) {
        FgAbGroup h = cohomology(k, q);
        const bool want_z = q == 0 || q == d;
        if (want_z ? h != FgAbGroup::free(1) : !h.is_trivial())
            throw PreconditionError("cohomology sphere", role + " has H^" + std::to_string(q) + " = " + h.to_string());
    }
}

BigInt degree(const SimplicialMap& f, int d)
{
    require_cohomology_sphere(f.source(), d, "source");
    require_cohomology_sphere(f.target(), d, "target");
    return induced_map(f, d).matrix()(0, 0);
}

bool LongExactSequence::exact() const
{
    return std::all_of(exact_at.begin(), exact_at.end(), [](bool b) { return b; });
}

LongExactSequence les_of_pair(const SimplicialPair& pair, const CoefficientGroup& g, int max_degree)
{
    if (max_degree < 0) throw PreconditionError("maximum degree is nonnegative", std::to_string(max_degree));
    const SimplicialComplex& k = pair.complex;
    const SimplicialComplex& l = pair.sub;
    LongExactSequence les;
    std::vector<CohomologyGroup> rel, abs_k, abs_l;
    for (int n = 0; n <= max_degree + 1; ++n) {
        rel.emplace_back(pair, n, g);
        if (n <= max_degree) {
            abs_k.emplace_back(k, n, g);
            abs_l.emplace_back(l, n, g);
        }
    }
    auto selection = [](const std::vector<Face>& rows, const std::vector<Face>& cols) {
        // rows[i] == cols[j] -> 1
        IntMatrix s = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
        std::map<Face, Eigen::Index> ci;
        for (std::size_t j = 0; j < cols.size(); ++j) ci.emplace(cols[j], static_cast<Eigen::Index>(j));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto it = ci.find(rows[i]);
            if (it != ci.end()) s(static_cast<Eigen::Index>(i), it->second) = 1;
        }
        return s;
    };

    for (int n = 0; n <= max_degree; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const std::string deg = std::to_string(n);
        les.nodes.push_back({"H^" + deg + "(K,L)", n, rel[un].group()});
        les.nodes.push_back({"H^" + deg + "(K)", n, abs_k[un].group()});
        les.nodes.push_back({"H^" + deg + "(L)", n, abs_l[un].group()});
        // Relative cochains extend by zero; absolute ones restrict to L.
        les.maps.push_back(induced_by_cochain_map(rel[un], abs_k[un],
                                                  selection(abs_k[un].basis_faces(), rel[un].basis_faces())));
        const IntMatrix restrict = selection(abs_l[un].basis_faces(), abs_k[un].basis_faces());
        les.maps.push_back(induced_by_cochain_map(abs_k[un], abs_l[un], restrict));

        // Connecting map H^n(L) -> H^{n+1}(K,L).
        const CohomologyGroup& src = abs_l[un];
        const CohomologyGroup& dst = rel[un + 1];
        const std::vector<Face> k_above = k.faces(n + 1);
        const IntMatrix d_k = coboundary_matrix(k, n);
        const IntMatrix keep = selection(dst.basis_faces(), k_above);
        const auto l_len = static_cast<Eigen::Index>(src.basis_faces().size());
        IntMatrix m(dst.group().generator_count(), src.group().generator_count());
        for (Eigen::Index gi = 0; gi < src.group().generator_count(); ++gi) {
            const IntVector zeta = src.generator(gi);
            IntVector out(dst.cochain_length());
            Eigen::Index offset = 0;
            for (std::size_t s = 0; s < g.summands(); ++s) {
                const BigInt& mod = g.moduli()[s];
                const IntVector part = zeta.segment(static_cast<Eigen::Index>(s) * l_len, l_len);
                auto lift = solve_integer(restrict, part);
                if (!lift) throw Error("restriction of cochains is not surjective");
                const IntVector cob = exact::apply(d_k, lift->particular);
                // The coboundary vanishes on L (mod the coefficient modulus).
                for (Eigen::Index r = 0; r < cob.size(); ++r) {
                    if (!l.contains_face(k_above[static_cast<std::size_t>(r)])) continue;
                    const bool zero = mod == 0 ? cob(r) == 0 : exact::mod_floor(cob(r), mod) == 0;
                    if (!zero) throw Error("connecting map: lifted coboundary does not vanish on the subcomplex");
                }
                const IntVector piece = exact::apply(keep, cob);
                out.segment(offset, piece.size()) = piece;
                offset += piece.size();
            }
            m.col(gi) = dst.class_of(out);
        }
        les.maps.emplace_back(src.group(), dst.group(), m);
    }
    les.nodes.push_back({"H^" + std::to_string(max_degree + 1) + "(K,L)", max_degree + 1,
                         rel[static_cast<std::size_t>(max_degree + 1)].group()});

    for (std::size_t t = 0; t + 1 < les.nodes.size(); ++t) {
        const Lattice ker = les.maps[t].kernel_lattice();
        const Lattice img = t == 0 ? les.nodes[0].group.relations() : les.maps[t - 1].image_lattice();
        les.exact_at.push_back(ker == img);
    }
    return les;
}

}  // namespace telescoped
