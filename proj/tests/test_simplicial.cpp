#include <doctest.h>

#include "support.hpp"
#include "telescoped/error.hpp"
#include "telescoped/simplicial/cohomology.hpp"
#include "telescoped/simplicial/io.hpp"

using namespace telescoped;
using namespace telescoped::complexes;

namespace {

const FgAbGroup Z = FgAbGroup::free(1);
const FgAbGroup zero;

FgAbGroup zmod(long m)
{
    return FgAbGroup::cyclic(BigInt(m));
}

// Free rank of H^n from rational ranks only (independent of Smith forms).
std::size_t betti(const SimplicialComplex& k, int n)
{
    const auto c = static_cast<Eigen::Index>(k.face_count(n));
    const Eigen::Index r_n = testsupport::rational_rank(coboundary_matrix(k, n));
    const Eigen::Index r_prev = n > 0 ? testsupport::rational_rank(coboundary_matrix(k, n - 1)) : 0;
    return static_cast<std::size_t>(c - r_n - r_prev);
}

}  // namespace

TEST_CASE("coboundary of an edge")
{
    CHECK(coboundary_matrix(simplex(1), 0) == int_matrix({{-1, 1}}));
}

TEST_CASE("coboundary of the hollow triangle")
{
    // Edges {0,1},{0,2},{1,2} against vertices 0,1,2.
    CHECK(coboundary_matrix(simplex_boundary(2), 0) == int_matrix({{-1, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
}

TEST_CASE("coboundary squares to zero")
{
    std::mt19937 gen(1);
    for (int trial = 0; trial < 50; ++trial) {
        auto k = testsupport::random_complex(gen, 8, 3, 6);
        for (int n = 0; n + 1 <= k.dimension(); ++n)
            CHECK(exact::is_zero(exact::multiply(coboundary_matrix(k, n + 1), coboundary_matrix(k, n))));
    }
}

TEST_CASE("spheres")
{
    for (int d = 1; d <= 3; ++d) {
        auto s = simplex_boundary(d + 1);
        for (int q = 0; q <= d + 1; ++q) {
            const bool z = q == 0 || q == d;
            CHECK(cohomology(s, q) == (z ? Z : zero));
            CHECK(cohomology(s, q, CoefficientGroup::integers_mod(6)) == (z ? zmod(6) : zero));
        }
    }
}

TEST_CASE("torus and projective plane")
{
    auto t = torus7();
    CHECK(t.face_count(0) == 7);
    CHECK(t.face_count(1) == 21);
    CHECK(t.face_count(2) == 14);
    CHECK(cohomology(t, 0) == Z);
    CHECK(cohomology(t, 1) == FgAbGroup::free(2));
    CHECK(cohomology(t, 2) == Z);
    auto p = testsupport::rp2();
    CHECK(cohomology(p, 0) == Z);
    CHECK(cohomology(p, 1) == zero);
    CHECK(cohomology(p, 2) == zmod(2));
    const auto z2 = CoefficientGroup::integers_mod(2);
    CHECK(cohomology(p, 1, z2) == zmod(2));
    CHECK(cohomology(p, 2, z2) == zmod(2));
    // Universal coefficients: H^1(RP^2; Z/3) = 0, H^2(RP^2; Z/4) = Z/2.
    CHECK(cohomology(p, 1, CoefficientGroup::integers_mod(3)) == zero);
    CHECK(cohomology(p, 2, CoefficientGroup::integers_mod(4)) == zmod(2));
    // Direct sums of coefficients.
    auto mixed = CoefficientGroup::parse("Z+Zmod:2");
    CHECK(cohomology(p, 2, mixed) == zmod(2).direct_sum(zmod(2)));
    CHECK(cohomology(t, 1, mixed) == FgAbGroup(2, {BigInt(2), BigInt(2)}));
}

TEST_CASE("free ranks match rational ranks and Euler characteristic")
{
    for (const auto& k : testsupport::corpus()) {
        long long chi = 0;
        for (int n = 0; n <= k.dimension(); ++n) {
            auto h = cohomology(k, n);
            CHECK(h.free_rank() == betti(k, n));
            chi += (n % 2 ? -1 : 1) * static_cast<long long>(h.free_rank());
        }
        CHECK(chi == k.euler_characteristic());
    }
}

TEST_CASE("group-only cohomology agrees with the cocycle subquotient")
{
    const std::vector<CoefficientGroup> coeffs{CoefficientGroup(), CoefficientGroup::parse("Zmod:4"),
                                               CoefficientGroup::parse("Z+Zmod:6"), CoefficientGroup::parse("Zmod:2")};
    auto corpus = testsupport::corpus();
    corpus.push_back(testsupport::rp2());
    for (const auto& k : corpus)
        for (const auto& g : coeffs)
            for (int n = 0; n <= k.dimension() + 1; ++n) CHECK(cohomology(k, n, g) == CohomologyGroup(k, n, g).group());
    std::mt19937 gen(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto k = testsupport::random_complex(gen, 7, 2, 6);
        std::vector<Face> sub;
        for (const auto& f : k.facets())
            if (gen() % 2) sub.push_back(Face(f.begin(), f.begin() + 1));
        SimplicialPair pair(k, SimplicialComplex::from_facets(sub));
        for (const auto& g : coeffs)
            for (int n = 0; n <= 3; ++n) CHECK(cohomology(pair, n, g) == CohomologyGroup(pair, n, g).group());
    }
}

TEST_CASE("relative cohomology of the disk rel boundary")
{
    SimplicialPair pair(simplex(2), simplex_boundary(2));
    CHECK(cohomology(pair, 2) == Z);
    CHECK(cohomology(pair, 1) == zero);
    CHECK(cohomology(pair, 0) == zero);
    CHECK_THROWS_AS(SimplicialPair(simplex_boundary(2), simplex(2)), PreconditionError);
}

TEST_CASE("induced maps")
{
    auto s = simplex_boundary(2);
    CHECK(induced_map(SimplicialMap::identity(s), 1) == AbHom::identity(Z));
    CHECK(induced_map(SimplicialMap::constant(s, s, 0), 1).is_zero());
    CHECK(induced_map(SimplicialMap::constant(s, s, 0), 0) == AbHom::identity(Z));
    auto wrap = polygon_wrap(3, 2);
    auto h = induced_map(wrap, 1);
    CHECK(exact::abs(h.matrix()(0, 0)) == 2);
    CHECK(induced_map(wrap, 1, CoefficientGroup::integers_mod(2)).is_zero());
    CHECK(induced_map(wrap, 1, CoefficientGroup::integers_mod(3)).is_isomorphism());
}

TEST_CASE("induced maps are functorial")
{
    auto f = polygon_wrap(6, 2);  // 12-gon -> hexagon
    auto g = polygon_wrap(3, 2);  // hexagon -> triangle
    auto gf = compose(g, f);
    CHECK(induced_map(gf, 1) == compose(induced_map(f, 1), induced_map(g, 1)));
    CHECK(degree(gf, 1) == degree(f, 1) * degree(g, 1));
    CHECK(exact::abs(degree(gf, 1)) == 4);
}

TEST_CASE("contiguous maps induce equal homomorphisms")
{
    // Two maps from the subdivided triangle boundary onto the triangle
    // boundary that differ at one vertex but stay contiguous.
    auto hex = polygon(6);
    auto tri = simplex_boundary(2);
    SimplicialMap f(hex, tri, {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}});
    SimplicialMap g(hex, tri, {{0, 0}, {1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 2}});
    REQUIRE(are_contiguous(f, g));
    CHECK(induced_map(f, 1) == induced_map(g, 1));
    CHECK(induced_map(f, 0) == induced_map(g, 0));
    SimplicialMap c = SimplicialMap::constant(hex, tri, 0);
    CHECK_FALSE(are_contiguous(c, f));
}

TEST_CASE("degree")
{
    auto s2 = simplex_boundary(3);
    CHECK(degree(SimplicialMap::identity(s2), 2) == 1);
    CHECK(degree(SimplicialMap::constant(s2, s2, 0), 2) == 0);
    // A reflection swapping two vertices has degree -1.
    SimplicialMap swap(s2, s2, {{0, 1}, {1, 0}, {2, 2}, {3, 3}});
    CHECK(degree(swap, 2) == -1);
    CHECK(exact::abs(degree(polygon_wrap(3, 2), 1)) == 2);
    CHECK_THROWS_AS(degree(SimplicialMap::identity(torus7()), 2), PreconditionError);
    // Suspension preserves degree.
    CHECK(degree(suspension(polygon_wrap(3, 2)), 2) == degree(polygon_wrap(3, 2), 1));
}

TEST_CASE("long exact sequence of the disk rel boundary")
{
    SimplicialPair pair(simplex(2), simplex_boundary(2));
    auto les = les_of_pair(pair, CoefficientGroup(), 2);
    CHECK(les.exact());
    // Nodes: H0(K,L) H0(K) H0(L) H1(K,L) H1(K) H1(L) H2(K,L) ...
    CHECK(les.nodes[5].label == "H^1(L)");
    CHECK(les.nodes[6].label == "H^2(K,L)");
    CHECK(les.maps[5].is_isomorphism());
    CHECK(les.nodes[5].group == Z);
}

TEST_CASE("long exact sequences of trivial pairs")
{
    auto k = torus7();
    auto same = les_of_pair(SimplicialPair(k, k), CoefficientGroup(), 2);
    CHECK(same.exact());
    for (std::size_t i = 0; i < same.nodes.size(); ++i)
        if (same.nodes[i].label.find("(K,L)") != std::string::npos) CHECK(same.nodes[i].group.is_trivial());
    for (int n = 0; n <= 2; ++n) CHECK(same.maps[static_cast<std::size_t>(3 * n + 1)].is_isomorphism());

    auto empty = les_of_pair(SimplicialPair(k, SimplicialComplex()), CoefficientGroup(), 2);
    CHECK(empty.exact());
    for (int n = 0; n <= 2; ++n) {
        CHECK(empty.nodes[static_cast<std::size_t>(3 * n)].group == cohomology(k, n));
        CHECK(empty.maps[static_cast<std::size_t>(3 * n + 2)].is_zero());
    }
}

TEST_CASE("long exact sequences of random pairs with several coefficients")
{
    std::mt19937 gen(77);
    for (int trial = 0; trial < 12; ++trial) {
        auto k = testsupport::random_complex(gen, 7, 2, 6);
        // Subcomplex: a random subset of facets' faces.
        std::vector<Face> sub;
        for (const auto& f : k.facets())
            if (gen() % 2) sub.push_back(Face(f.begin(), f.begin() + std::max<std::ptrdiff_t>(1, static_cast<std::ptrdiff_t>(f.size()) - 1)));
        SimplicialPair pair(k, SimplicialComplex::from_facets(sub));
        for (const char* spec : {"Z", "Zmod:4", "Z+Zmod:3"})
            CHECK(les_of_pair(pair, CoefficientGroup::parse(spec), 2).exact());
    }
}

TEST_CASE("barycentric subdivision")
{
    auto e = barycentric_subdivision(simplex(1));
    CHECK(e.complex.face_count(0) == 3);
    CHECK(e.complex.face_count(1) == 2);
    auto t = barycentric_subdivision(simplex(2));
    CHECK(t.complex.face_count(0) == 7);
    CHECK(t.complex.face_count(1) == 12);
    CHECK(t.complex.face_count(2) == 6);
    for (const auto& k : testsupport::corpus()) {
        auto sd = barycentric_subdivision(k);
        for (int n = 0; n <= k.dimension(); ++n) {
            CHECK(cohomology(sd.complex, n) == cohomology(k, n));
            // The selection map is a homotopy inverse of subdivision.
            CHECK(induced_map(sd.selection, n).is_isomorphism());
        }
    }
}

TEST_CASE("relabelling")
{
    for (const auto& k : testsupport::corpus()) {
        std::map<Vertex, Vertex> bij;
        for (Vertex v : k.vertices()) bij[v] = 100 - 3 * v;
        auto iso = relabel(k, bij);
        for (int n = 0; n <= k.dimension(); ++n) {
            CHECK(cohomology(iso.target(), n) == cohomology(k, n));
            CHECK(induced_map(iso, n).is_isomorphism());
        }
    }
}

TEST_CASE("nerves")
{
    for (const auto& k : testsupport::corpus()) CHECK(nerve(star_cover(k)) == k);
    auto path = SimplicialComplex::from_facets({{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CoverData halves{path, {{10, {0, 1, 2}}, {11, {2, 3, 4}}}};
    CHECK(nerve(halves) == SimplicialComplex::from_facets({{10, 11}}));
    CoverData three{simplex_boundary(2), {{0, {0}}, {1, {1}}, {2, {2}}}};
    CHECK(nerve(three) == simplex_boundary(2));
    CHECK_THROWS_AS(nerve(CoverData{path, {}}), PreconditionError);
    CHECK_THROWS_AS(nerve(CoverData{path, {{0, {0, 1}}}}), PreconditionError);
}

TEST_CASE("mapping cylinders retract to the target")
{
    auto square = mapping_cylinder(SimplicialMap::identity(simplex(1)));
    CHECK(square.complex.face_count(0) == 4);
    CHECK(square.complex.face_count(2) == 2);
    CHECK(cohomology(square.complex, 0) == Z);
    CHECK(cohomology(square.complex, 1) == zero);

    auto cone = mapping_cylinder(SimplicialMap::constant(simplex_boundary(2), point(), 0));
    CHECK(cohomology(cone.complex, 1) == zero);
    CHECK(cohomology(cone.complex, 2) == zero);

    auto wrap = polygon_wrap(3, 2);
    auto cyl = mapping_cylinder(wrap);
    CHECK(cohomology(cyl.complex, 1) == Z);
    CHECK(induced_map(cyl.target_inclusion, 1).is_isomorphism());
    // Restricting the generator to the top copy recovers the degree.
    CHECK(exact::abs(induced_map(cyl.source_inclusion, 1).matrix()(0, 0)) == 2);

    std::mt19937 gen(8);
    for (const auto& k : testsupport::corpus()) {
        // A random simplicial map into the first complex: a constant map and
        // the selection map of the subdivision.
        auto sd = barycentric_subdivision(k);
        auto c = mapping_cylinder(sd.selection);
        for (int n = 0; n <= k.dimension(); ++n) {
            CHECK(cohomology(c.complex, n) == cohomology(k, n));
            CHECK(induced_map(c.target_inclusion, n).is_isomorphism());
        }
    }
}

TEST_CASE("suspension shifts reduced cohomology")
{
    for (const auto& k : {simplex_boundary(2), torus7(), testsupport::rp2()}) {
        auto s = suspension(k);
        for (int n = 1; n <= k.dimension(); ++n) CHECK(cohomology(s, n + 1) == cohomology(k, n));
        CHECK(cohomology(s, 1).free_rank() + 1 == cohomology(k, 0).free_rank());
    }
}

TEST_CASE("coefficient parsing")
{
    CHECK(CoefficientGroup::parse("Z").moduli() == std::vector<BigInt>{0});
    CHECK(CoefficientGroup::parse("Z+Zmod:2").moduli() == std::vector<BigInt>{0, 2});
    CHECK(CoefficientGroup::parse("Zmod:6").to_string() == "Zmod:6");
    CHECK_THROWS_AS(CoefficientGroup::parse("Zmod:1"), ParseError);
    CHECK_THROWS_AS(CoefficientGroup::parse("Q"), ParseError);
    CHECK_THROWS_AS(CoefficientGroup::parse("Z+"), ParseError);
    try {
        CoefficientGroup::parse("Z+Zmod:x");
    } catch (const ParseError& e) {
        CHECK(e.position() == 7);
    }
}

TEST_CASE("json round trip")
{
    for (const auto& k : testsupport::corpus()) CHECK(complex_from_json(to_json(k)) == k);
    auto wrap = polygon_wrap(3, 2);
    auto back = map_from_json(to_json(wrap, true));
    CHECK(back.vertex_map() == wrap.vertex_map());
    CHECK(back.source() == wrap.source());
    auto j = jsonio::json::parse(R"({"vertices":[0,1],"facets":[[0,2]]})");
    CHECK_THROWS_AS(complex_from_json(j), PreconditionError);
    CHECK_THROWS_AS(complex_from_json(jsonio::json::parse(R"({"vertices":[0]})")), ParseError);
    CHECK_THROWS_AS(jsonio::parse_text("{\"vertices\": [0,", "x"), ParseError);
}
