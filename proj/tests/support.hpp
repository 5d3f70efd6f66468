#pragma once

// Shared test fixtures and independent oracles.

#include "telescoped/exactalg/integer.hpp"
#include "telescoped/simplicial/complex.hpp"

#include <random>

namespace testsupport {

using telescoped::BigInt;
using telescoped::Face;
using telescoped::IntMatrix;
using telescoped::Rational;
using telescoped::SimplicialComplex;
using telescoped::Vertex;

/// Rank over Q by plain Gaussian elimination with rationals.
inline Eigen::Index rational_rank(const IntMatrix& a)
{
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(a.rows()),
                                         std::vector<Rational>(static_cast<std::size_t>(a.cols())));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(a(i, j));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < static_cast<std::size_t>(a.cols()) && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            Rational q = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= q * m[rank][j];
        }
        ++rank;
    }
    return static_cast<Eigen::Index>(rank);
}

/// Random complex: `facets` random vertex sets of size 1..max_dim+1 drawn
/// from 0..vertices-1.
inline SimplicialComplex random_complex(std::mt19937& gen, int vertices, int max_dim, int facets)
{
    std::uniform_int_distribution<int> size(1, max_dim + 1);
    std::vector<Vertex> all(static_cast<std::size_t>(vertices));
    for (int i = 0; i < vertices; ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<Face> fs;
    for (int k = 0; k < facets; ++k) {
        std::vector<Vertex> pool = all;
        std::shuffle(pool.begin(), pool.end(), gen);
        const int s = std::min(size(gen), vertices);
        fs.emplace_back(pool.begin(), pool.begin() + s);
    }
    return SimplicialComplex(all, fs);
}

/// Six-vertex real projective plane.
inline SimplicialComplex rp2()
{
    return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                           {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

/// A fixed corpus of small complexes with varied topology.
inline std::vector<SimplicialComplex> corpus()
{
    using namespace telescoped::complexes;
    std::vector<SimplicialComplex> out = {
        point(),
        simplex(1),
        simplex(2),
        simplex(3),
        simplex_boundary(2),
        simplex_boundary(3),
        simplex_boundary(4),
        polygon(4),
        polygon(5),
        torus7(),
        rp2(),
        // wedge of two circles
        SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}),
        // two disjoint triangles' boundaries
        SimplicialComplex::from_facets({{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}),
        // filled triangle with a dangling edge and an isolated vertex
        SimplicialComplex({0, 1, 2, 3, 7}, {{0, 1, 2}, {2, 3}}),
        // cone over a square
        SimplicialComplex::from_facets({{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}}),
        // annulus
        SimplicialComplex::from_facets({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}}),
        // two tetrahedron boundaries sharing a vertex
        SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6},
                                        {4, 5, 6}}),
    };
    std::mt19937 gen(2024);
    while (out.size() < 20) out.push_back(random_complex(gen, 6, 2, 5));
    return out;
}

}  // namespace testsupport
