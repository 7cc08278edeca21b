#pragma once

#include <vector>

#include "finspace/matrix.hpp"

namespace finspace {

/// S = U * M * V with S diagonal, d_1 | d_2 | ... | d_rank, all d_i > 0,
/// and U, V unimodular. The inverses are tracked alongside so callers never
/// have to invert U or V themselves.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  IntMatrix U_inv;
  IntMatrix V_inv;
  std::size_t rank = 0;

  std::vector<Integer> invariant_factors() const;
};

/// Exact Smith normal form. Pivots on the entry of smallest absolute value.
/// Runs in checked 64-bit arithmetic first and repeats in arbitrary
/// precision if any intermediate value would overflow.
SmithForm smith_normal_form(const IntMatrix& m);

/// The arbitrary precision path alone, for cross-checking the fast path.
SmithForm smith_normal_form_exact(const IntMatrix& m);

/// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& m);

/// Rank over the rationals by fraction-free elimination. Independent of the
/// Smith normal form code.
std::size_t rational_rank(const IntMatrix& m);

}  // namespace finspace
