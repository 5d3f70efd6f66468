#pragma once

// Alternating cochains with the global vertex order: one basis cochain per
// n-face with increasing vertices, faces in lexicographic order. With
// coefficients Z + Z/m + ..., a cochain is the concatenation of one integer
// vector per summand (summand-major).

#include "telescoped/exactalg/abelian_group.hpp"
#include "telescoped/simplicial/coefficients.hpp"
#include "telescoped/simplicial/complex.hpp"

#include <string>
#include <vector>

namespace telescoped {

/// delta^n : C^n -> C^{n+1}; rows are (n+1)-faces, columns n-faces.
/// (delta z)(v_0..v_{n+1}) = sum_i (-1)^i z(v_0..^v_i..v_{n+1}).
IntMatrix coboundary_matrix(const SimplicialComplex& k, int n);

/// H^n(K, L; G) together with cocycle representatives.
class CohomologyGroup {
public:
    CohomologyGroup(const SimplicialComplex& k, int n, const CoefficientGroup& g);
    CohomologyGroup(const SimplicialPair& pair, int n, const CoefficientGroup& g);

    int degree() const { return n_; }
    const CoefficientGroup& coefficients() const { return coeff_; }
    const FgAbGroup& group() const { return sq_.group(); }
    const Subquotient& subquotient() const { return sq_; }
    /// n-faces of K not in L, indexing each summand's block.
    const std::vector<Face>& basis_faces() const { return faces_; }
    Eigen::Index cochain_length() const;

    bool is_cocycle(const IntVector& cochain) const { return sq_.contains(cochain); }
    /// Canonical coordinates of the class of a cocycle.
    IntVector class_of(const IntVector& cocycle) const { return sq_.coordinates(cocycle); }
    /// Cocycle representing canonical generator i.
    IntVector generator(Eigen::Index i) const { return sq_.generator(i); }

private:
    void build(const SimplicialComplex& k, const SimplicialComplex* sub);

    int n_;
    CoefficientGroup coeff_;
    std::vector<Face> faces_;
    Subquotient sq_;
};

FgAbGroup cohomology(const SimplicialComplex& k, int n, const CoefficientGroup& g = CoefficientGroup());
FgAbGroup cohomology(const SimplicialPair& pair, int n, const CoefficientGroup& g = CoefficientGroup());

/// Homomorphism between two cohomology groups induced by a cochain map.
/// `cochain_map` acts on a single summand block (rows: faces of `to`,
/// columns: faces of `from`) and is applied blockwise.
AbHom induced_by_cochain_map(const CohomologyGroup& from, const CohomologyGroup& to, const IntMatrix& cochain_map);

/// Pullback of n-cochains along f, restricted to the given face lists
/// (faces outside the lists are treated as zero). Rows index `source_faces`.
IntMatrix pullback_matrix(const SimplicialMap& f, const std::vector<Face>& source_faces,
                          const std::vector<Face>& target_faces);

/// f^* : H^n(target; G) -> H^n(source; G).
AbHom induced_map(const SimplicialMap& f, int n, const CoefficientGroup& g = CoefficientGroup());

/// Throws PreconditionError("cohomology sphere", ...) unless the complex
/// has the integral cohomology of S^d (d >= 1).
void require_cohomology_sphere(const SimplicialComplex& k, int d, const std::string& role);

/// f^* on H^d = Z, as an integer. The generator of H^d produced by the
/// Smith pipeline is the positive one on each side.
BigInt degree(const SimplicialMap& f, int d);

struct LesNode {
    std::string label;  ///< "H^n(K,L)", "H^n(K)" or "H^n(L)"
    int degree;
    FgAbGroup group;
};

struct LongExactSequence {
    std::vector<LesNode> nodes;
    std::vector<AbHom> maps;      ///< maps[i] : nodes[i] -> nodes[i+1]
    std::vector<bool> exact_at;   ///< one entry per node except the last
    bool exact() const;
};

/// ... -> H^n(K,L) -> H^n(K) -> H^n(L) -> H^{n+1}(K,L) -> ... for
/// n = 0..max_degree, ending at H^{max_degree+1}(K,L). The connecting map
/// lifts a cocycle of L through the restriction (solve_integer), applies
/// delta on K, and reads off the relative cocycle.
LongExactSequence les_of_pair(const SimplicialPair& pair, const CoefficientGroup& g, int max_degree);

}  // namespace telescoped
