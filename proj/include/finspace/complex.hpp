#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "finspace/matrix.hpp"
#include "finspace/poset.hpp"

namespace finspace {

/// Vertex indices in increasing order. Vertex order is the orientation.
using Simplex = std::vector<int>;

/// Abstract simplicial complex, closed under faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// All faces of the given simplices are added. Vertex indices refer to
  /// `vertex_names`; each simplex may be given in any order.
  static SimplicialComplex from_simplices(std::vector<std::string> vertex_names,
                                          const std::vector<Simplex>& simplices);
  /// Takes a family that already contains every face of its members (each
  /// sorted). Throws Error if a codimension-one face is missing.
  static SimplicialComplex from_closed_family(std::vector<std::string> vertex_names,
                                              std::vector<Simplex> simplices);

  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  std::size_t vertex_count() const { return vertex_names_.size(); }

  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(simplices_.size()) - 1; }

  /// Simplices of dimension d, sorted lexicographically.
  const std::vector<Simplex>& simplices(int d) const;
  std::size_t count(int d) const { return simplices(d).size(); }
  std::optional<int> index_of(const Simplex& s) const;

  std::string simplex_name(const Simplex& s) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, int>> index_;
};

/// A vertex map that sends simplices to simplices.
class SimplicialMap {
 public:
  /// Throws NotContinuous if some simplex image does not span a simplex.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertex_assignment);

  const SimplicialComplex& source() const { return source_; }
  const SimplicialComplex& target() const { return target_; }
  const std::vector<int>& vertex_assignment() const { return assignment_; }

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<int> assignment_;
};

/// K(X). Vertices are the elements of X listed in X.linear_extension()
/// order, so the simplices are exactly the chains of X written bottom-up.
SimplicialComplex order_complex(const FinitePoset& space);

/// Element -> vertex index in order_complex(space).
std::vector<int> order_complex_vertex_of(const FinitePoset& space);

/// X(K): simplices ordered by inclusion, named "(a,b,...)", listed by
/// dimension and then lexicographically.
FinitePoset face_poset(const SimplicialComplex& complex);

/// X' = X(K(X)) together with the chain behind every element and the map
/// h: X' -> X sending a chain to its maximum.
struct Subdivision {
  FinitePoset space;
  std::vector<Chain> chains;
  PosetMap h;
};

Subdivision subdivide(const FinitePoset& space);
FinitePoset barycentric_subdivision_space(const FinitePoset& space);
SimplicialComplex barycentric_subdivision_complex(const SimplicialComplex& complex);

/// K(f). Throws NotContinuous.
SimplicialMap induced_simplicial_map(const PosetMap& f);

/// Boundary matrix of dimension d: rows are (d-1)-simplices, columns are
/// d-simplices. Dimension 0 gives a 0 x n_0 matrix.
IntMatrix boundary_matrix(const SimplicialComplex& complex, int d);

/// Chain map matrices, one per dimension of the source. A simplex with a
/// degenerate image goes to zero; otherwise the sign is the parity of the
/// permutation sorting the image vertices.
std::vector<IntMatrix> chain_map_of(const SimplicialMap& map);

/// One simplex per line, vertex names separated by spaces, by dimension.
std::string export_complex(const SimplicialComplex& complex);

}  // namespace finspace
