#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace finspace {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// An i-chain x_0 < x_1 < ... < x_i, stored as element indices in
/// increasing order.
using Chain = std::vector<int>;

inline constexpr std::size_t kDefaultChainBudget = 5'000'000;
inline constexpr std::size_t kDefaultHomotopyBudget = 1'000'000;

/// A finite T0 space, stored as its specialization order.
///
/// Elements are addressed by index (declaration order); names are the
/// symbolic ids used by the text formats. The order relation is kept as two
/// dense bit matrices (up-sets and down-sets) so that `leq` is O(1). Copies
/// share the immutable state.
class FinitePoset {
 public:
  FinitePoset();

  /// Closes `less_than` reflexively and transitively. Throws
  /// DuplicateElement, UnknownElement, CycleError.
  static FinitePoset build(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& less_than);

  /// Constructs from a complete order relation: bit y of up_sets[x] is set
  /// iff x <= y. Reflexivity and antisymmetry are checked, transitivity is
  /// the caller's responsibility (used by the internal constructions whose
  /// relations are orders by construction).
  static FinitePoset from_up_sets(std::vector<std::string> names, std::vector<Bitset> up_sets);

  std::size_t size() const;
  bool empty() const { return size() == 0; }

  const std::string& name(int x) const;
  const std::vector<std::string>& names() const;
  std::optional<int> find(std::string_view name) const;
  /// Throws UnknownElement.
  int index_of(std::string_view name) const;

  bool leq(int x, int y) const;
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  /// {y | x <= y}
  const Bitset& up_bits(int x) const;
  /// {y | y <= x}
  const Bitset& down_bits(int x) const;

  /// Hasse diagram edges (x, y) with x covered by y, sorted.
  const std::vector<std::pair<int, int>>& covers() const;

  /// Elements sorted so that x < y implies x comes first; ties by index.
  const std::vector<int>& linear_extension() const;

  /// Element-wise comparison of names and order.
  bool operator==(const FinitePoset& other) const;

  /// Stable content hash (names and relation).
  std::uint64_t fingerprint() const;

 private:
  struct Impl;
  explicit FinitePoset(std::shared_ptr<const Impl> impl);
  static std::shared_ptr<const Impl> make_impl(std::vector<std::string> names, std::vector<Bitset> up);
  std::shared_ptr<const Impl> impl_;
};

FinitePoset build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& less_than);

/// U_x, the down-set of x (sorted indices).
std::vector<int> min_open_set(const FinitePoset& space, int x);
/// F_x, the up-set of x (sorted indices).
std::vector<int> min_closed_set(const FinitePoset& space, int x);

FinitePoset opposite(const FinitePoset& space);

/// The subspace on `elements` (in the given order) with the induced order.
FinitePoset induced_subposet(const FinitePoset& space, std::span<const int> elements);
FinitePoset induced_subposet(const FinitePoset& space, const Bitset& elements);

/// All i-chains (i + 1 elements), lexicographic in index order.
std::vector<Chain> chains(const FinitePoset& space, int length,
                          std::size_t budget = kDefaultChainBudget);
/// All non-empty chains, ordered by length and then lexicographically.
std::vector<Chain> all_chains(const FinitePoset& space, std::size_t budget = kDefaultChainBudget);

/// Number of i-chains for every i.
std::vector<long long> chain_counts(const FinitePoset& space);

long long euler_characteristic(const FinitePoset& space);

std::string chain_name(const FinitePoset& space, const Chain& chain);

/// A total function between finite spaces. Continuity is not enforced at
/// construction; see check_continuous.
class PosetMap {
 public:
  PosetMap(FinitePoset source, FinitePoset target, std::vector<int> assignment);

  static PosetMap identity(const FinitePoset& space);
  static PosetMap constant(const FinitePoset& source, const FinitePoset& target, int value);

  const FinitePoset& source() const { return source_; }
  const FinitePoset& target() const { return target_; }
  const std::vector<int>& assignment() const { return assignment_; }
  int operator()(int x) const { return assignment_[static_cast<std::size_t>(x)]; }

  bool operator==(const PosetMap& other) const;

 private:
  FinitePoset source_;
  FinitePoset target_;
  std::vector<int> assignment_;
};

/// g ∘ f. Throws NotComposable when f's target differs from g's source.
PosetMap compose(const PosetMap& g, const PosetMap& f);

bool is_surjective(const PosetMap& f);
std::vector<int> preimage(const PosetMap& f, int y);

struct ContinuityCheck {
  bool continuous = true;
  /// First pair x <= y (x-major order) with f(x) not <= f(y).
  std::optional<std::pair<int, int>> violation;
};

ContinuityCheck check_continuous(const PosetMap& f);
/// Throws NotContinuous with the offending pair in the message.
void require_continuous(const PosetMap& f, std::string_view what);

/// Whether f and g lie in the same component of the space of continuous
/// maps under the pointwise order. Searches single-point moves to
/// comparable values, which connect any two comparable continuous maps.
/// Throws BudgetExceeded once more than `budget` maps have been visited.
bool are_homotopic(const PosetMap& f, const PosetMap& g,
                   std::size_t budget = kDefaultHomotopyBudget);

/// Result of beat-point reduction.
struct CoreReduction {
  FinitePoset core;
  /// core index -> index in the original space
  std::vector<int> kept;
  /// original index -> core index; continuous, and a homotopy inverse of
  /// the inclusion
  std::vector<int> retraction;
};

/// Removes beat points, lowest index first, until none remain.
CoreReduction core_reduction(const FinitePoset& space);
FinitePoset core(const FinitePoset& space);
bool is_contractible(const FinitePoset& space);

}  // namespace finspace
