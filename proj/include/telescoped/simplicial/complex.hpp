#pragma once

// Finite abstract simplicial complexes, pairs, and simplicial maps.
//
// A face is a strictly increasing vector of vertex labels. Faces of a given
// dimension are materialized on first use and kept in lexicographic order;
// that order fixes the cochain bases everywhere else.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace telescoped {

using Vertex = std::int64_t;
using Face = std::vector<Vertex>;

class SimplicialComplex {
public:
    SimplicialComplex();
    /// Faces are sorted and de-duplicated; faces contained in others are
    /// dropped. Throws PreconditionError if a face uses an unlisted vertex.
    /// Listed vertices that lie in no face become 0-dimensional facets.
    SimplicialComplex(std::vector<Vertex> vertices, std::vector<Face> faces);
    /// Vertex set inferred from the faces.
    static SimplicialComplex from_facets(std::vector<Face> faces);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    int dimension() const;  ///< -1 for the empty complex
    bool empty() const { return vertices_.empty(); }

    /// Faces with n+1 vertices, sorted lexicographically; empty for n < 0.
    const std::vector<Face>& faces(int n) const;
    std::size_t face_count(int n) const { return faces(n).size(); }
    /// Index of a face in faces(face.size()-1), or nullopt.
    std::optional<std::size_t> face_index(const Face& face) const;
    bool contains_face(const Face& face) const;
    bool contains_vertex(Vertex v) const;
    /// Every face of this complex is a face of other.
    bool is_subcomplex_of(const SimplicialComplex& other) const;
    /// All faces in (dimension, lex) order.
    std::vector<Face> all_faces() const;

    long long euler_characteristic() const;

    bool operator==(const SimplicialComplex& o) const { return vertices_ == o.vertices_ && facets_ == o.facets_; }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<std::unique_ptr<std::vector<Face>>> by_dim;
        std::vector<std::unique_ptr<std::map<Face, std::size_t>>> index;
    };

    std::vector<Vertex> vertices_;
    std::vector<Face> facets_;
    std::shared_ptr<Cache> cache_;
};

struct SimplicialPair {
    SimplicialComplex complex;
    SimplicialComplex sub;

    /// Throws PreconditionError("subcomplex", ...) unless sub <= complex.
    SimplicialPair(SimplicialComplex k, SimplicialComplex l);
};

class SimplicialMap {
public:
    /// Throws PreconditionError unless every source vertex is mapped to a
    /// target vertex and faces go to faces.
    SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::map<Vertex, Vertex> vertex_map);

    static SimplicialMap identity(const SimplicialComplex& k);
    static SimplicialMap constant(const SimplicialComplex& source, const SimplicialComplex& target, Vertex v);

    const SimplicialComplex& source() const { return source_; }
    const SimplicialComplex& target() const { return target_; }
    const std::map<Vertex, Vertex>& vertex_map() const { return map_; }
    Vertex operator()(Vertex v) const { return map_.at(v); }
    /// Image vertex set (sorted, de-duplicated).
    Face image(const Face& face) const;

private:
    SimplicialComplex source_, target_;
    std::map<Vertex, Vertex> map_;
};

/// g o f
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// f(sigma) u g(sigma) is a face of the common target for every facet sigma.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

/// Apply a vertex bijection; returns the relabelled complex and the
/// isomorphism from the original.
SimplicialMap relabel(const SimplicialComplex& k, const std::map<Vertex, Vertex>& bijection);

struct Subdivision {
    SimplicialComplex complex;
    SimplicialMap selection;  ///< subdivision -> original, face |-> its minimum vertex
    std::vector<Face> barycenters;  ///< barycenters[label] is the face of the original
};

/// Vertices of the subdivision are labelled 0, 1, ... following the
/// (dimension, lex) order of the nonempty faces of K.
Subdivision barycentric_subdivision(const SimplicialComplex& k);

struct CoverPiece {
    Vertex label;
    std::vector<Vertex> vertices;  ///< union of the open stars of these vertices
};

struct CoverData {
    SimplicialComplex base;
    std::vector<CoverPiece> pieces;
};

/// One piece per vertex, labelled by the vertex.
CoverData star_cover(const SimplicialComplex& k);
/// Nerve with vertex set = piece labels. Throws on an empty cover, duplicate
/// labels, or pieces that fail to cover the vertex set.
SimplicialComplex nerve(const CoverData& cover);

struct Cylinder {
    SimplicialComplex complex;
    SimplicialMap source_inclusion;
    SimplicialMap target_inclusion;
};

/// Staircase triangulation of the mapping cylinder. Source vertices are
/// relabelled by their index i, target vertices by |V(source)| + index.
Cylinder mapping_cylinder(const SimplicialMap& f);

/// Union of the mapping cylinders of X_0 -> X_1 -> ... -> X_N glued along the
/// shared stages; stage n vertex i gets label offset(n) + i. Returns the
/// complex and the inclusion of each stage.
struct TelescopeComplex {
    SimplicialComplex complex;
    std::vector<SimplicialMap> stage_inclusions;
};
TelescopeComplex mapping_telescope(const std::vector<SimplicialMap>& maps);

/// Suspension with two new cone vertices max+1 and max+2.
SimplicialComplex suspension(const SimplicialComplex& k);
/// Suspension of a self-map with matching cone vertices.
SimplicialMap suspension(const SimplicialMap& f);

namespace complexes {

SimplicialComplex simplex(int n);           ///< full n-simplex on 0..n
SimplicialComplex simplex_boundary(int n);  ///< boundary of the n-simplex (an (n-1)-sphere)
SimplicialComplex polygon(int k);           ///< circle with k >= 3 vertices
SimplicialComplex torus7();                 ///< minimal 7-vertex torus
SimplicialComplex point();

/// polygon(k*m) -> polygon(m), i |-> i mod m; degree k.
SimplicialMap polygon_wrap(int m, int k);

}  // namespace complexes

std::string to_string(const Face& f);

}  // namespace telescoped
