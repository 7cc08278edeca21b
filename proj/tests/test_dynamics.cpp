#include <doctest.h>

#include "finspace/dynamics.hpp"
#include "finspace/errors.hpp"
#include "finspace/examples.hpp"
#include "finspace/random.hpp"

using namespace finspace;

namespace {

FinitePoset two_chain() { return build_poset({"M", "N"}, {{"M", "N"}}); }

std::vector<PosetMap> constant_levels(const Tower& tower, const std::vector<std::string>& names) {
  std::vector<PosetMap> out;
  for (int n = 0; n < tower.depth(); ++n) {
    const auto& target = tower.levels[static_cast<std::size_t>(n)];
    out.push_back(PosetMap::constant(tower.levels[static_cast<std::size_t>(n) + 1], target,
                                     target.index_of(names[static_cast<std::size_t>(n)])));
  }
  return out;
}

// Every tuple (x_0, ..., x_N) over the levels, filtered by the definition.
std::vector<std::vector<int>> fixed_chains_by_enumeration(const ApproximativeSequence& seq, int m) {
  const auto& levels = seq.tower.levels;
  std::vector<std::vector<int>> out;
  std::vector<int> xs(levels.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t n = 0; n + 1 < levels.size(); ++n) ok = ok && seq.tower.h_maps[n](xs[n + 1]) == xs[n];
    for (std::size_t k = std::max(1, m); k < levels.size(); ++k) ok = ok && seq.F_maps[k - 1].contains(xs[k], xs[k]);
    if (ok) out.push_back(xs);
    std::size_t i = 0;
    while (i < xs.size() && ++xs[i] == static_cast<int>(levels[i].size())) xs[i++] = 0;
    if (i == xs.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.back() < b.back(); });
  return out;
}

}  // namespace

TEST_CASE("tower over a two-point chain") {
  const auto tower = build_tower(two_chain(), 2);
  REQUIRE(tower.depth() == 2);
  CHECK(tower.levels[1].size() == 3);
  CHECK(tower.levels[2].size() == 5);
  CHECK(tower.levels[1].find("(M,N)").has_value());
  CHECK(tower.levels[2].find("((M))").has_value());
  CHECK(tower.warnings.empty());
  const auto h = compose_h(tower, 0, 2);
  CHECK(h(tower.levels[2].index_of("((M),(M,N))")) == 1);
  CHECK(compose_h(tower, 1, 1).assignment() == PosetMap::identity(tower.levels[1]).assignment());
}

TEST_CASE("towers over a point stay a point") {
  const auto tower = build_tower(build_poset({"p"}, {}), 4);
  for (const auto& level : tower.levels) CHECK(level.size() == 1);
}

TEST_CASE("tower size cap and warnings") {
  const auto S = fixture_poset("models/circle4");
  const auto warned = build_tower(S, 2, 20);
  CHECK(warned.levels[2].size() == 16);
  CHECK(warned.warnings.size() == 1);
  CHECK_THROWS_AS(build_tower(S, 3, 20), SizeBudgetExceeded);
  CHECK_THROWS_AS(build_tower(S, -1), IndexRange);
}

TEST_CASE("index ranges") {
  const auto tower = build_tower(two_chain(), 1);
  CHECK_THROWS_AS(compose_h(tower, 1, 0), IndexRange);
  CHECK_THROWS_AS(fiber_H(tower, 0, 2), IndexRange);
  const auto seq = attach_level_maps(tower, {tower.h_maps[0]});
  CHECK_THROWS_AS(lambda_nm(seq, 0, 0), IndexRange);
  CHECK_THROWS_AS(fixed_chain_search(seq, 2), IndexRange);
}

TEST_CASE("H_{n,m} is the fiber multimap of h_{n,m}") {
  const auto tower = build_tower(fixture_poset("ex2_5/X"), 2);
  const auto H = fiber_H(tower, 0, 2);
  const auto h = compose_h(tower, 0, 2);
  for (std::size_t y = 0; y < tower.levels[2].size(); ++y) CHECK(H.contains(h(static_cast<int>(y)), static_cast<int>(y)));
}

TEST_CASE("constant level maps give the chain (M, (M), ((M)))") {
  const auto tower = build_tower(two_chain(), 2);
  const auto seq = attach_level_maps(tower, constant_levels(tower, {"M", "(M)"}));
  const auto found = fixed_chain_search(seq, 0);
  REQUIRE(found.size() == 1);
  CHECK(tower.levels[0].name(found[0][0]) == "M");
  CHECK(tower.levels[1].name(found[0][1]) == "(M)");
  CHECK(tower.levels[2].name(found[0][2]) == "((M))");
  CHECK(found == fixed_chains_by_enumeration(seq, 0));
  CHECK(lambda_nm(seq, 0, 1) == 1);
  CHECK(lambda_nm(seq, 0, 2) == 1);
  CHECK(lambda_nm(seq, 1, 2) == 1);
}

TEST_CASE("level map validation") {
  const auto tower = build_tower(two_chain(), 2);
  CHECK_THROWS_AS(attach_level_maps(tower, {tower.h_maps[0]}), IndexRange);
  try {
    attach_level_maps(tower, {tower.h_maps[0], tower.h_maps[0]});
    FAIL("expected LevelError");
  } catch (const LevelError& e) {
    CHECK(e.level() == 1);
  }
  const auto& X1 = tower.levels[1];
  // (M) < (M,N) but the images are not ordered.
  std::vector<int> a(tower.levels[2].size(), X1.index_of("(N)"));
  a[static_cast<std::size_t>(tower.levels[2].index_of("((M))"))] = X1.index_of("(M,N)");
  CHECK_THROWS_AS(attach_level_maps(tower, {tower.h_maps[0], PosetMap(tower.levels[2], X1, a)}), LevelNotContinuous);
}

TEST_CASE("continuous level maps are always certified and Λ with f = h is χ") {
  Rng rng(701);
  for (int i = 0; i < 30; ++i) {
    const auto X = random_poset(rng, 4);
    const auto tower = build_tower(X, 2, 5000);
    std::vector<PosetMap> fs;
    for (int n = 0; n < tower.depth(); ++n)
      fs.push_back(random_continuous_map(rng, tower.levels[static_cast<std::size_t>(n) + 1],
                                         tower.levels[static_cast<std::size_t>(n)]));
    const auto seq = attach_level_maps(tower, fs);
    CHECK(seq.certificates.size() == 2);
    for (int m = 0; m <= 2; ++m) CHECK(fixed_chain_search(seq, m) == fixed_chains_by_enumeration(seq, m));
    const auto identity = attach_level_maps(tower, tower.h_maps);
    CHECK(lambda_nm(identity, 0, 2) == euler_characteristic(X));
  }
}
