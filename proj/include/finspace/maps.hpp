#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finspace/homology.hpp"
#include "finspace/poset.hpp"

namespace finspace {

/// A multivalued map X -o Y with non-empty values. Values are kept as sorted
/// index lists.
class MultiMap {
 public:
  /// Throws EmptyValue if some value is empty, UnknownElement on bad indices.
  MultiMap(FinitePoset source, FinitePoset target, std::vector<std::vector<int>> values);

  static MultiMap from_map(const PosetMap& f);
  static MultiMap identity(const FinitePoset& space);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  const std::vector<int>& operator()(int x) const { return values_[static_cast<std::size_t>(x)]; }
  const std::vector<std::vector<int>>& values() const { return values_; }
  bool contains(int x, int y) const;

  bool operator==(const MultiMap& other) const;

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<std::vector<int>> values_;
};

/// Γ(F) with the product order, pairs sorted by (x, y) index, named "(x,y)".
struct GraphSpace {
  FinitePoset space;
  std::vector<std::pair<int, int>> pairs;
  PosetMap p;
  PosetMap q;
};

GraphSpace graph(const MultiMap& F);

/// usc: x1 <= x2 and y1 in F(x1) give y2 in F(x2) with y1 <= y2.
/// lsc: x1 >= x2 and y1 in F(x1) give y2 in F(x2) with y1 >= y2.
/// susc: x1 <= x2 implies F(x1) is contained in F(x2).
/// slsc: x1 >= x2 implies F(x1) is contained in F(x2).
struct ContinuityClass {
  bool usc = false;
  bool lsc = false;
  bool susc = false;
  bool slsc = false;
};

ContinuityClass classify_continuity(const MultiMap& F);

/// Outcome of a Vietoris-like check. On failure `failing_chain` is the first
/// chain of the target (ordered by length, then lexicographically) whose
/// fiber union is not acyclic, and `profile` its homology; an empty fiber
/// union has no profile.
struct Certificate {
  bool ok = true;
  std::optional<Chain> failing_chain;
  std::optional<HomologySummary> profile;
  bool empty_fiber = false;
  std::size_t chains_checked = 0;
};

/// Throws NotContinuous.
Certificate is_vietoris_like_map(const PosetMap& f, std::size_t budget = kDefaultChainBudget);
/// The check on the first projection of Γ(F).
Certificate is_vietoris_like_multimap(const MultiMap& F, std::size_t budget = kDefaultChainBudget);

/// F_* = q_* o p_*^{-1}, in the bases of `source` and `target` (the homology
/// of F's source and target). Throws ProjectionNotIso.
InducedMap induced_multimap_homology(const MultiMap& F, const SpaceHomology& source,
                                     const SpaceHomology& target);
InducedMap induced_multimap_homology(const MultiMap& F);

/// G o F, pointwise union of images. Throws NotComposable.
MultiMap compose_multimaps(const MultiMap& F, const MultiMap& G);
/// G o f for a single-valued f.
MultiMap compose_multimaps(const PosetMap& f, const MultiMap& G);

/// y -> f^{-1}(y), a multimap from f's target to its source. Throws
/// NotSurjective.
MultiMap fiber_multimap(const PosetMap& f);

/// x -> max F(x). Throws NotUsc, NoMaximum.
PosetMap selector_from_maxima(const MultiMap& F);
/// x -> min F(x). Throws NotLsc, NoMinimum.
PosetMap selector_from_minima(const MultiMap& F);

/// Every continuous selector, by backtracking over the source in
/// linear-extension order. Throws BudgetExceeded past `budget` search nodes.
std::vector<PosetMap> enumerate_selectors(const MultiMap& F, std::size_t budget = kDefaultHomotopyBudget);

std::string value_name(const FinitePoset& space, const std::vector<int>& value);

}  // namespace finspace
