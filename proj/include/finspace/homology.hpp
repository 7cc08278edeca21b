#pragma once

#include <cstdint>
#include <vector>

#include "finspace/complex.hpp"
#include "finspace/matrix.hpp"
#include "finspace/poset.hpp"

namespace finspace {

/// Homology of one dimension together with the chosen free-part basis.
struct DimensionHomology {
  long long betti = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion;
  /// betti x n_k: sends a cycle to its coordinates in the free basis,
  /// killing boundaries and torsion.
  IntMatrix projector;
  /// n_k x betti: one cycle per basis class; projector * representatives = I.
  IntMatrix representatives;
};

/// Betti numbers and torsion only, for reports and certificates.
struct HomologySummary {
  std::vector<long long> betti;
  std::vector<std::vector<Integer>> torsion;

  bool is_point() const;
  long long euler_characteristic() const;
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

class HomologyProfile {
 public:
  std::vector<DimensionHomology> dims;
  /// Boundary matrices d_0 .. d_{top+1}, kept for the chain-map check.
  std::vector<IntMatrix> boundaries;
  /// Hash of the complex and the basis data; induced maps record it.
  std::uint64_t basis_fingerprint = 0;

  std::size_t dimension_count() const { return dims.size(); }
  long long betti(std::size_t d) const { return d < dims.size() ? dims[d].betti : 0; }
  std::vector<long long> betti_numbers() const;
  HomologySummary summary() const;
  bool is_acyclic() const { return summary().is_point(); }

  /// Appends zero dimensions so that the profile lists `count` dimensions.
  void pad_to(std::size_t count);
};

/// Integral homology of `complex` via Smith normal form of the boundary
/// matrices. In dimension k the free basis is read off the kernel basis
/// (trailing columns of V for d_k) after a second reduction that splits off
/// the boundaries.
HomologyProfile homology(const SimplicialComplex& complex);

/// Homomorphisms between free parts of homology, one matrix per dimension.
struct InducedMap {
  std::vector<IntMatrix> matrices;
  std::uint64_t source_basis = 0;
  std::uint64_t target_basis = 0;

  std::size_t dimension_count() const { return matrices.size(); }
  Integer trace(std::size_t d) const;
  bool is_identity() const;
  /// Same bases and matrices; a missing trailing dimension counts as 0x0.
  bool operator==(const InducedMap& other) const;
};

/// Identity on the free part of `profile`.
InducedMap identity_map(const HomologyProfile& profile);

/// `second` after `first`. Throws ProfileMismatch unless first's target
/// basis is second's source basis.
InducedMap compose(const InducedMap& second, const InducedMap& first);

/// Throws NotInvertible carrying the first failing dimension.
InducedMap invert(const InducedMap& map);

/// Throws ProfileMismatch if source and target bases differ.
Integer lefschetz_number(const InducedMap& map);

/// Matrices of the induced map on free parts. Throws NotAChainMap if the
/// matrices do not commute with the boundaries, BasisSolveFailure if a
/// boundary survives the projection (never expected).
InducedMap induced_on_homology(const std::vector<IntMatrix>& chain_map, const HomologyProfile& source,
                               const HomologyProfile& target);

/// Homology of a finite space, computed on the order complex of its core
/// (or of the space itself when `reduce_to_core` is false). The profile is
/// padded to the dimension of K(space).
struct SpaceHomology {
  FinitePoset space;
  CoreReduction reduction;
  SimplicialComplex complex;
  HomologyProfile profile;
};

SpaceHomology space_homology(const FinitePoset& space, bool reduce_to_core = true);

/// f_* in the bases of `source` and `target`, which must describe f's source
/// and target spaces (ProfileMismatch otherwise). When cores are in use the
/// map pushed down is r_target o f o i_source.
InducedMap induced_map(const PosetMap& f, const SpaceHomology& source, const SpaceHomology& target);

/// Convenience form computing both profiles from scratch.
InducedMap induced_map(const PosetMap& f);

/// Homology summary of a subspace. Contractible cores short-circuit to the
/// point profile. Throws EmptySubspace for the empty space.
HomologySummary acyclicity_profile(const FinitePoset& space);
bool is_acyclic(const FinitePoset& space);

}  // namespace finspace
