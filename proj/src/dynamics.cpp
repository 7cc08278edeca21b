#include "finspace/dynamics.hpp"

#include <numeric>

#include "finspace/complex.hpp"
#include "finspace/errors.hpp"

namespace finspace {

Tower build_tower(const FinitePoset& base, int depth, std::size_t cap) {
  if (depth < 0) throw IndexRange("tower depth must be non-negative");
  Tower tower;
  tower.levels.push_back(base);
  for (int n = 0; n < depth; ++n) {
    const auto counts = chain_counts(tower.levels.back());
    const auto next_size = static_cast<std::size_t>(std::accumulate(counts.begin(), counts.end(), 0LL));
    if (next_size > cap)
      throw SizeBudgetExceeded("level " + std::to_string(n + 1) + " would have " + std::to_string(next_size) +
                               " elements (cap " + std::to_string(cap) + ")");
    if (2 * next_size > cap)
      tower.warnings.push_back("level " + std::to_string(n + 1) + " has " + std::to_string(next_size) +
                               " elements, more than half the cap of " + std::to_string(cap));
    auto sub = subdivide(tower.levels.back());
    tower.levels.push_back(std::move(sub.space));
    tower.chains.push_back(std::move(sub.chains));
    tower.h_maps.push_back(std::move(sub.h));
  }
  return tower;
}

namespace {
void check_range(const Tower& tower, int n, int m) {
  if (n < 0 || m < n || m > tower.depth())
    throw IndexRange("level indices (" + std::to_string(n) + ", " + std::to_string(m) +
                     ") outside 0 <= n <= m <= " + std::to_string(tower.depth()));
}
}  // namespace

PosetMap compose_h(const Tower& tower, int n, int m) {
  check_range(tower, n, m);
  PosetMap out = PosetMap::identity(tower.levels[static_cast<std::size_t>(m)]);
  for (int k = m - 1; k >= n; --k) out = compose(tower.h_maps[static_cast<std::size_t>(k)], out);
  return out;
}

MultiMap fiber_H(const Tower& tower, int n, int m) { return fiber_multimap(compose_h(tower, n, m)); }

ApproximativeSequence attach_level_maps(const Tower& tower, std::vector<PosetMap> f_maps, bool certify) {
  if (static_cast<int>(f_maps.size()) != tower.depth())
    throw IndexRange("expected " + std::to_string(tower.depth()) + " level maps, got " + std::to_string(f_maps.size()));
  ApproximativeSequence seq;
  seq.tower = tower;
  for (std::size_t n = 0; n < f_maps.size(); ++n) {
    const auto level = static_cast<int>(n);
    const auto& f = f_maps[n];
    if (!(f.source() == tower.levels[n + 1]) || !(f.target() == tower.levels[n]))
      throw LevelError("level map " + std::to_string(n) + " must go from X^" + std::to_string(n + 1) + " to X^" +
                           std::to_string(n),
                       level);
    const auto check = check_continuous(f);
    if (!check.continuous) {
      const auto [x, y] = *check.violation;
      throw LevelNotContinuous("level map " + std::to_string(n) + " is not continuous: " + f.source().name(x) +
                                   " <= " + f.source().name(y) + " is not preserved",
                               level);
    }
    auto F = compose_multimaps(f, fiber_multimap(tower.h_maps[n]));
    if (certify) {
      auto cert = is_vietoris_like_multimap(F);
      if (!cert.ok)
        throw CertificationFailed("F_" + std::to_string(n + 1) + " is not a Vietoris-like multimap", level + 1);
      seq.certificates.push_back(std::move(cert));
    }
    seq.F_maps.push_back(std::move(F));
  }
  seq.f_maps = std::move(f_maps);
  return seq;
}

PosetMap compose_f(const ApproximativeSequence& seq, int n, int m) {
  check_range(seq.tower, n, m);
  PosetMap out = PosetMap::identity(seq.tower.levels[static_cast<std::size_t>(m)]);
  for (int k = m - 1; k >= n; --k) out = compose(seq.f_maps[static_cast<std::size_t>(k)], out);
  return out;
}

Integer lambda_nm(const ApproximativeSequence& seq, int n, int m) {
  check_range(seq.tower, n, m);
  if (n == m) throw IndexRange("Λ_{n,m} needs n < m");
  const auto top = space_homology(seq.tower.levels[static_cast<std::size_t>(m)]);
  const auto bottom = space_homology(seq.tower.levels[static_cast<std::size_t>(n)]);
  const auto h_inv = invert(induced_map(compose_h(seq.tower, n, m), top, bottom));
  return lefschetz_number(compose(induced_map(compose_f(seq, n, m), top, bottom), h_inv));
}

std::vector<std::vector<int>> fixed_chain_search(const ApproximativeSequence& seq, int m) {
  const int depth = seq.tower.depth();
  if (m < 0 || m > depth) throw IndexRange("fixed chain search level " + std::to_string(m) + " outside the tower");
  std::vector<std::vector<int>> out;
  const auto& top = seq.tower.levels.back();
  for (std::size_t start = 0; start < top.size(); ++start) {
    std::vector<int> xs(static_cast<std::size_t>(depth) + 1);
    xs[static_cast<std::size_t>(depth)] = static_cast<int>(start);
    bool ok = true;
    for (int k = depth; k >= 1 && ok; --k) {
      const int x = xs[static_cast<std::size_t>(k)];
      if (k >= m && !seq.F_maps[static_cast<std::size_t>(k - 1)].contains(x, x)) ok = false;
      xs[static_cast<std::size_t>(k - 1)] = seq.tower.h_maps[static_cast<std::size_t>(k - 1)](x);
    }
    if (ok) out.push_back(std::move(xs));
  }
  return out;
}

}  // namespace finspace
