#pragma once

#include <string>
#include <vector>

#include "finspace/homology.hpp"
#include "finspace/maps.hpp"

namespace finspace {

inline constexpr std::size_t kDefaultLevelCap = 20000;

/// Barycentric subdivision tower X^0, X^1 = (X^0)', ..., X^N with the maps
/// h_{n,n+1}: X^{n+1} -> X^n sending a chain to its maximum.
struct Tower {
  std::vector<FinitePoset> levels;
  /// chains[n][i]: element i of X^{n+1} as a chain of X^n.
  std::vector<std::vector<Chain>> chains;
  std::vector<PosetMap> h_maps;
  /// Levels that came within half of the size cap.
  std::vector<std::string> warnings;

  int depth() const { return static_cast<int>(levels.size()) - 1; }
};

/// Throws SizeBudgetExceeded before building a level larger than `cap`.
Tower build_tower(const FinitePoset& base, int depth, std::size_t cap = kDefaultLevelCap);

/// h_{n,m} = h_{n,n+1} o ... o h_{m-1,m}: X^m -> X^n. Throws IndexRange.
PosetMap compose_h(const Tower& tower, int n, int m);

/// H_{n,m}(x) = h_{n,m}^{-1}(x), a multimap X^n -o X^m. Throws IndexRange.
MultiMap fiber_H(const Tower& tower, int n, int m);

/// Level maps f_{n,n+1}: X^{n+1} -> X^n with the derived multimaps
/// F_{n+1} = H_{n,n+1} o f_{n,n+1}: X^{n+1} -o X^{n+1}.
struct ApproximativeSequence {
  Tower tower;
  std::vector<PosetMap> f_maps;
  /// F_maps[n] is F_{n+1}.
  std::vector<MultiMap> F_maps;
  std::vector<Certificate> certificates;
};

/// One map per level. Throws LevelError on wrong spaces, LevelNotContinuous,
/// and CertificationFailed when some F_{n+1} is not Vietoris-like (only with
/// `certify`).
ApproximativeSequence attach_level_maps(const Tower& tower, std::vector<PosetMap> f_maps, bool certify = true);

/// f_{n,m} = f_{n,n+1} o ... o f_{m-1,m}: X^m -> X^n. Throws IndexRange.
PosetMap compose_f(const ApproximativeSequence& seq, int n, int m);

/// Λ_{n,m} = Λ(f_{n,m*} o h_{n,m*}^{-1}), n < m. Throws IndexRange.
Integer lambda_nm(const ApproximativeSequence& seq, int n, int m);

/// All sequences (x_0, ..., x_N) with x_n = h_{n,n+1}(x_{n+1}) and
/// x_k in F_k(x_k) for every level k >= max(m, 1). Ordered by x_N index.
std::vector<std::vector<int>> fixed_chain_search(const ApproximativeSequence& seq, int m);

}  // namespace finspace
