#include "finspace/homology.hpp"

#include <string>

#include "finspace/errors.hpp"
#include "finspace/hash.hpp"
#include "finspace/smith.hpp"

namespace finspace {

bool HomologySummary::is_point() const {
  if (betti.empty() || betti[0] != 1) return false;
  for (std::size_t d = 1; d < betti.size(); ++d) {
    if (betti[d] != 0) return false;
  }
  for (const auto& t : torsion) {
    if (!t.empty()) return false;
  }
  return true;
}

long long HomologySummary::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * betti[d];
  return chi;
}

std::vector<long long> HomologyProfile::betti_numbers() const {
  std::vector<long long> out;
  for (const auto& d : dims) out.push_back(d.betti);
  return out;
}

HomologySummary HomologyProfile::summary() const {
  HomologySummary s;
  for (const auto& d : dims) {
    s.betti.push_back(d.betti);
    s.torsion.push_back(d.torsion);
  }
  return s;
}

void HomologyProfile::pad_to(std::size_t count) {
  while (dims.size() < count) {
    DimensionHomology d;
    d.projector = IntMatrix(0, 0);
    d.representatives = IntMatrix(0, 0);
    dims.push_back(std::move(d));
  }
}

namespace {

void hash_matrix(Fnv1a& h, const IntMatrix& m) {
  h.add_int(static_cast<std::int64_t>(m.rows()));
  h.add_int(static_cast<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) h.add(m(i, j).str());
  }
}

// Rows [r0, r1) of m.
IntMatrix rows_of(const IntMatrix& m, std::size_t r0, std::size_t r1) { return m.block(r0, r1, 0, m.cols()); }
IntMatrix cols_of(const IntMatrix& m, std::size_t c0, std::size_t c1) { return m.block(0, m.rows(), c0, c1); }

}  // namespace

HomologyProfile homology(const SimplicialComplex& complex) {
  HomologyProfile profile;
  const int top = complex.dimension();
  for (int k = 0; k <= top + 1; ++k) profile.boundaries.push_back(boundary_matrix(complex, k));

  Fnv1a h;
  for (const auto& name : complex.vertex_names()) h.add(name);
  for (int k = 0; k <= top; ++k) {
    for (const auto& s : complex.simplices(k)) {
      for (int v : s) h.add_int(v);
      h.add_int(-1);
    }
  }

  for (int k = 0; k <= top; ++k) {
    const auto n = complex.count(k);
    const auto& d_k = profile.boundaries[static_cast<std::size_t>(k)];
    const auto& d_next = profile.boundaries[static_cast<std::size_t>(k) + 1];

    const SmithForm cycles = smith_normal_form(d_k);
    const std::size_t r = cycles.rank;
    const IntMatrix kernel = cols_of(cycles.V, r, n);
    const IntMatrix kernel_coords = rows_of(cycles.V_inv, r, n);
    const std::size_t z = n - r;

    // Boundaries written in kernel coordinates, then split by a second
    // reduction: P * A * Q = diag(d_1..d_s).
    const IntMatrix a = kernel_coords * d_next;
    const SmithForm bounds = smith_normal_form(a);
    const std::size_t s = bounds.rank;

    DimensionHomology dim;
    dim.betti = static_cast<long long>(z - s);
    for (const auto& f : bounds.invariant_factors()) {
      if (f > 1) dim.torsion.push_back(f);
    }
    dim.projector = rows_of(bounds.U * kernel_coords, s, z);
    dim.representatives = cols_of(kernel * bounds.U_inv, s, z);
    hash_matrix(h, dim.projector);
    hash_matrix(h, dim.representatives);
    profile.dims.push_back(std::move(dim));
  }
  profile.basis_fingerprint = h.value();
  return profile;
}

Integer InducedMap::trace(std::size_t d) const {
  if (d >= matrices.size()) return 0;
  return matrices[d].trace();
}

bool InducedMap::is_identity() const {
  for (const auto& m : matrices) {
    if (!m.is_identity()) return false;
  }
  return true;
}

InducedMap identity_map(const HomologyProfile& profile) {
  InducedMap out;
  for (const auto& d : profile.dims) out.matrices.push_back(IntMatrix::identity(static_cast<std::size_t>(d.betti)));
  out.source_basis = out.target_basis = profile.basis_fingerprint;
  return out;
}

bool InducedMap::operator==(const InducedMap& other) const {
  if (source_basis != other.source_basis || target_basis != other.target_basis) return false;
  const IntMatrix empty(0, 0);
  for (std::size_t d = 0; d < std::max(matrices.size(), other.matrices.size()); ++d) {
    const auto& a = d < matrices.size() ? matrices[d] : empty;
    const auto& b = d < other.matrices.size() ? other.matrices[d] : empty;
    if (!(a == b)) return false;
  }
  return true;
}

InducedMap compose(const InducedMap& second, const InducedMap& first) {
  if (first.target_basis != second.source_basis)
    throw ProfileMismatch("cannot compose induced maps: intermediate homology bases differ");
  InducedMap out;
  const auto count = std::max(first.matrices.size(), second.matrices.size());
  for (std::size_t d = 0; d < count; ++d) {
    const bool has_first = d < first.matrices.size();
    const bool has_second = d < second.matrices.size();
    if (has_first && has_second) {
      out.matrices.push_back(second.matrices[d] * first.matrices[d]);
    } else {
      const std::size_t rows = has_second ? second.matrices[d].rows() : 0;
      const std::size_t cols = has_first ? first.matrices[d].cols() : 0;
      out.matrices.emplace_back(rows, cols);
    }
  }
  out.source_basis = first.source_basis;
  out.target_basis = second.target_basis;
  return out;
}

InducedMap invert(const InducedMap& map) {
  InducedMap out;
  for (std::size_t d = 0; d < map.matrices.size(); ++d) {
    const auto& m = map.matrices[d];
    if (m.rows() != m.cols())
      throw NotInvertible("induced map is not invertible in dimension " + std::to_string(d) + " (ranks " +
                              std::to_string(m.cols()) + " -> " + std::to_string(m.rows()) + ")",
                          static_cast<int>(d));
    const SmithForm snf = smith_normal_form(m);
    if (!snf.S.is_identity())
      throw NotInvertible("induced map is not invertible in dimension " + std::to_string(d),
                          static_cast<int>(d));
    // U m V = I  =>  m^-1 = V U
    out.matrices.push_back(snf.V * snf.U);
  }
  out.source_basis = map.target_basis;
  out.target_basis = map.source_basis;
  return out;
}

Integer lefschetz_number(const InducedMap& map) {
  if (map.source_basis != map.target_basis)
    throw ProfileMismatch("Lefschetz number needs an endomorphism in a single homology basis");
  Integer lambda = 0;
  for (std::size_t d = 0; d < map.matrices.size(); ++d) {
    if (d % 2 == 0)
      lambda += map.trace(d);
    else
      lambda -= map.trace(d);
  }
  return lambda;
}

InducedMap induced_on_homology(const std::vector<IntMatrix>& chain_map, const HomologyProfile& source,
                               const HomologyProfile& target) {
  // The boundary lists contain d_0 .. d_{top+1}.
  for (std::size_t k = 1; k < chain_map.size(); ++k) {
    const IntMatrix& d_src = source.boundaries.at(k);
    const IntMatrix d_tgt = k < target.boundaries.size() ? target.boundaries[k]
                                                         : IntMatrix(chain_map[k - 1].rows(), chain_map[k].rows());
    if (!(chain_map[k - 1] * d_src == d_tgt * chain_map[k]))
      throw NotAChainMap("chain map does not commute with the boundary in dimension " + std::to_string(k));
  }

  InducedMap out;
  out.source_basis = source.basis_fingerprint;
  out.target_basis = target.basis_fingerprint;
  const auto count = std::max(source.dims.size(), target.dims.size());
  for (std::size_t k = 0; k < count; ++k) {
    const auto rows = static_cast<std::size_t>(target.betti(k));
    const auto cols = static_cast<std::size_t>(source.betti(k));
    if (rows == 0 || cols == 0) {
      out.matrices.emplace_back(rows, cols);
      continue;
    }
    const IntMatrix image = chain_map.at(k) * source.dims[k].representatives;
    out.matrices.push_back(target.dims[k].projector * image);
  }

  // Boundaries must die under the projector; a survivor means the basis
  // data is inconsistent.
  for (std::size_t k = 0; k < target.dims.size(); ++k) {
    if (target.dims[k].betti == 0 || k + 1 >= target.boundaries.size()) continue;
    if (!(target.dims[k].projector * target.boundaries[k + 1]).is_zero())
      throw BasisSolveFailure("boundaries survive the free-part projection in dimension " + std::to_string(k));
  }
  return out;
}

SpaceHomology space_homology(const FinitePoset& space, bool reduce_to_core) {
  SpaceHomology out;
  out.space = space;
  if (reduce_to_core) {
    out.reduction = core_reduction(space);
  } else {
    out.reduction.core = space;
    out.reduction.kept.resize(space.size());
    out.reduction.retraction.resize(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) out.reduction.kept[x] = out.reduction.retraction[x] = static_cast<int>(x);
  }
  out.complex = order_complex(out.reduction.core);
  out.profile = homology(out.complex);
  out.profile.pad_to(chain_counts(space).size());
  return out;
}

InducedMap induced_map(const PosetMap& f, const SpaceHomology& source, const SpaceHomology& target) {
  if (!(f.source() == source.space) || !(f.target() == target.space))
    throw ProfileMismatch("homology data does not belong to the map's source and target");
  require_continuous(f, "map");
  const auto& src_core = source.reduction.core;
  std::vector<int> assignment(src_core.size());
  for (std::size_t c = 0; c < src_core.size(); ++c)
    assignment[c] = target.reduction.retraction[static_cast<std::size_t>(f(source.reduction.kept[c]))];
  const PosetMap pushed(src_core, target.reduction.core, std::move(assignment));
  const auto chain_map = chain_map_of(induced_simplicial_map(pushed));
  return induced_on_homology(chain_map, source.profile, target.profile);
}

InducedMap induced_map(const PosetMap& f) {
  return induced_map(f, space_homology(f.source()), space_homology(f.target()));
}

HomologySummary acyclicity_profile(const FinitePoset& space) {
  if (space.empty()) throw EmptySubspace("the empty space is not acyclic");
  const auto reduced = core(space);
  HomologySummary summary;
  if (reduced.size() == 1) {
    summary.betti = {1};
    summary.torsion = {{}};
  } else {
    summary = homology(order_complex(reduced)).summary();
  }
  const auto height = chain_counts(space).size();
  while (summary.betti.size() < height) {
    summary.betti.push_back(0);
    summary.torsion.emplace_back();
  }
  return summary;
}

bool is_acyclic(const FinitePoset& space) { return acyclicity_profile(space).is_point(); }

}  // namespace finspace
