#pragma once

// Brute-force reference implementations used to check the library. They
// share nothing with the library beyond the FinitePoset accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "finspace/matrix.hpp"
#include "finspace/poset.hpp"

namespace oracle {

using finspace::Chain;
using finspace::FinitePoset;
using finspace::PosetMap;

/// Every non-empty totally ordered subset, elements sorted bottom-up.
inline std::vector<Chain> chains_by_subsets(const FinitePoset& X) {
  const int n = static_cast<int>(X.size());
  std::vector<Chain> out;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    Chain c;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1U) c.push_back(i);
    }
    bool total = true;
    for (std::size_t a = 0; a < c.size() && total; ++a) {
      for (std::size_t b = a + 1; b < c.size() && total; ++b) total = X.comparable(c[a], c[b]);
    }
    if (!total) continue;
    std::sort(c.begin(), c.end(), [&](int a, int b) { return X.less(a, b); });
    out.push_back(c);
  }
  return out;
}

inline bool has_beat_point(const FinitePoset& X) {
  const int n = static_cast<int>(X.size());
  for (int x = 0; x < n; ++x) {
    std::vector<int> below, above;
    for (int y = 0; y < n; ++y) {
      if (X.less(y, x)) below.push_back(y);
      if (X.less(x, y)) above.push_back(y);
    }
    auto has_max = [&](const std::vector<int>& s) {
      return std::any_of(s.begin(), s.end(), [&](int m) {
        return std::all_of(s.begin(), s.end(), [&](int y) { return X.leq(y, m); });
      });
    };
    auto has_min = [&](const std::vector<int>& s) {
      return std::any_of(s.begin(), s.end(), [&](int m) {
        return std::all_of(s.begin(), s.end(), [&](int y) { return X.leq(m, y); });
      });
    };
    if ((!below.empty() && has_max(below)) || (!above.empty() && has_min(above))) return true;
  }
  return false;
}

inline bool order_preserving(const FinitePoset& X, const FinitePoset& Y, const std::vector<int>& a) {
  for (int x = 0; x < static_cast<int>(X.size()); ++x) {
    for (int y = 0; y < static_cast<int>(X.size()); ++y) {
      if (X.leq(x, y) && !Y.leq(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)])) return false;
    }
  }
  return true;
}

/// Every assignment X -> Y, filtered for order preservation.
inline std::vector<PosetMap> all_continuous_maps(const FinitePoset& X, const FinitePoset& Y) {
  std::vector<PosetMap> out;
  std::vector<int> a(X.size(), 0);
  while (true) {
    if (order_preserving(X, Y, a)) out.emplace_back(X, Y, a);
    std::size_t i = 0;
    while (i < a.size() && ++a[i] == static_cast<int>(Y.size())) a[i++] = 0;
    if (i == a.size()) break;
  }
  return out;
}

inline bool pointwise_comparable(const PosetMap& f, const PosetMap& g) {
  const auto& Y = f.target();
  bool le = true, ge = true;
  for (std::size_t x = 0; x < f.source().size(); ++x) {
    le = le && Y.leq(f(static_cast<int>(x)), g(static_cast<int>(x)));
    ge = ge && Y.leq(g(static_cast<int>(x)), f(static_cast<int>(x)));
  }
  return le || ge;
}

/// Connected component test in the graph of continuous maps joined when
/// pointwise comparable.
inline bool same_component(const std::vector<PosetMap>& maps, const PosetMap& f, const PosetMap& g) {
  std::size_t start = 0, goal = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i] == f) start = i;
    if (maps[i] == g) goal = i;
  }
  std::vector<bool> seen(maps.size(), false);
  std::queue<std::size_t> q;
  q.push(start);
  seen[start] = true;
  while (!q.empty()) {
    const auto i = q.front();
    q.pop();
    if (i == goal) return true;
    for (std::size_t j = 0; j < maps.size(); ++j) {
      if (!seen[j] && pointwise_comparable(maps[i], maps[j])) {
        seen[j] = true;
        q.push(j);
      }
    }
  }
  return false;
}

/// Rank over Z/p by Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<long long>> m, long long p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  auto power = [&](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : m) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = power(m[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const long long k = m[r][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) m[r][j] = ((m[r][j] - k * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Betti numbers of K(X) over Z/p, from boundary matrices built directly on
/// the chains of X.
inline std::vector<long long> chain_betti_mod(const FinitePoset& X, long long p) {
  const auto all = chains_by_subsets(X);
  std::size_t top = 0;
  for (const auto& c : all) top = std::max(top, c.size());
  std::vector<std::vector<Chain>> by_dim(top);
  for (const auto& c : all) by_dim[c.size() - 1].push_back(c);
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[d] = rank of d_d
  for (std::size_t d = 1; d < top; ++d) {
    std::map<Chain, std::size_t> row_of;
    for (std::size_t i = 0; i < by_dim[d - 1].size(); ++i) row_of[by_dim[d - 1][i]] = i;
    std::vector<std::vector<long long>> m(by_dim[d - 1].size(), std::vector<long long>(by_dim[d].size(), 0));
    for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
      const auto& c = by_dim[d][j];
      for (std::size_t i = 0; i < c.size(); ++i) {
        Chain face = c;
        face.erase(face.begin() + static_cast<long>(i));
        m[row_of.at(face)][j] += (i % 2 == 0) ? 1 : -1;
      }
    }
    ranks[d] = rank_mod(m, p);
  }
  std::vector<long long> betti(top, 0);
  for (std::size_t d = 0; d < top; ++d)
    betti[d] = static_cast<long long>(by_dim[d].size() - ranks[d] - (d + 1 < top ? ranks[d + 1] : 0));
  return betti;
}

inline std::vector<long long> trim(std::vector<long long> b) {
  while (b.size() > 1 && b.back() == 0) b.pop_back();
  return b;
}

/// Acyclic over Z/p for a few primes including 2 and 3; for the small
/// spaces in the tests this detects every torsion class that occurs.
inline bool acyclic_by_fields(const FinitePoset& X) {
  if (X.size() == 0) return false;
  for (long long p : {2LL, 3LL, 5LL, 1000000007LL}) {
    if (trim(chain_betti_mod(X, p)) != std::vector<long long>{1}) return false;
  }
  return true;
}

/// Determinant by cofactor expansion.
inline finspace::Integer laplace_det(const finspace::IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  finspace::Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    finspace::IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, k = 0; c < n; ++c) {
        if (c != j) minor(r - 1, k++) = m(r, c);
      }
    }
    const auto term = m(0, j) * laplace_det(minor);
    total += (j % 2 == 0) ? term : finspace::Integer(-term);
  }
  return total;
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} with
/// D_k the gcd of all k x k minors.
inline std::vector<finspace::Integer> invariant_factors_by_minors(const finspace::IntMatrix& m) {
  using finspace::Integer;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> D{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        finspace::IntMatrix sub(k, k);
        for (std::size_t r = 0, a = 0; r < rows; ++r) {
          if (!rsel[r]) continue;
          for (std::size_t c = 0, b = 0; c < cols; ++c) {
            if (csel[c]) sub(a, b++) = m(r, c);
          }
          ++a;
        }
        Integer d = laplace_det(sub);
        if (d < 0) d = -d;
        g = boost::multiprecision::gcd(g, d);
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    D.push_back(g);
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k < D.size(); ++k) out.push_back(D[k] / D[k - 1]);
  return out;
}

}  // namespace oracle
