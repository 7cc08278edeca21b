#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "finspace/errors.hpp"
#include "finspace/examples.hpp"
#include "finspace/poset.hpp"
#include "finspace/random.hpp"
#include "oracles.hpp"

using namespace finspace;

TEST_CASE("build closes relations transitively") {
  const auto X = build_poset({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
  CHECK(X.leq(0, 2));
  CHECK(X.leq(3, 3));
  CHECK_FALSE(X.leq(2, 0));
  CHECK_FALSE(X.comparable(0, 3));
  CHECK(X.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(min_open_set(X, 2) == std::vector<int>{0, 1, 2});
  CHECK(min_closed_set(X, 1) == std::vector<int>{1, 2});
}

TEST_CASE("build rejects bad input") {
  CHECK_THROWS_AS(build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  CHECK_THROWS_AS(build_poset({"a", "a"}, {}), DuplicateElement);
  CHECK_THROWS_AS(build_poset({"a"}, {{"a", "z"}}), UnknownElement);
  CHECK_THROWS_AS(build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}), CycleError);
}

TEST_CASE("covers match the naive transitive reduction") {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const auto X = random_poset(rng, 8);
    std::vector<std::pair<int, int>> naive;
    const int n = static_cast<int>(X.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (!X.less(x, y)) continue;
        bool between = false;
        for (int z = 0; z < n; ++z) between = between || (X.less(x, z) && X.less(z, y));
        if (!between) naive.emplace_back(x, y);
      }
    }
    std::sort(naive.begin(), naive.end());
    CHECK(X.covers() == naive);
  }
}

TEST_CASE("linear extension respects the order") {
  Rng rng(102);
  for (int i = 0; i < 200; ++i) {
    const auto X = random_poset(rng, 8);
    const auto& ext = X.linear_extension();
    REQUIRE(ext.size() == X.size());
    std::vector<std::size_t> pos(X.size());
    for (std::size_t k = 0; k < ext.size(); ++k) pos[static_cast<std::size_t>(ext[k])] = k;
    for (int x = 0; x < static_cast<int>(X.size()); ++x) {
      for (int y = 0; y < static_cast<int>(X.size()); ++y) {
        if (X.less(x, y)) CHECK(pos[static_cast<std::size_t>(x)] < pos[static_cast<std::size_t>(y)]);
      }
    }
  }
}

TEST_CASE("chains agree with subset enumeration") {
  Rng rng(103);
  for (int i = 0; i < 150; ++i) {
    const auto X = random_poset(rng, 8);
    const auto brute = oracle::chains_by_subsets(X);
    const auto all = all_chains(X);
    CHECK(std::set<Chain>(all.begin(), all.end()) == std::set<Chain>(brute.begin(), brute.end()));
    CHECK(all.size() == brute.size());
    const auto counts = chain_counts(X);
    long long chi = 0;
    for (const auto& c : brute) chi += (c.size() % 2 == 1) ? 1 : -1;
    CHECK(euler_characteristic(X) == chi);
    for (std::size_t len = 0; len < counts.size(); ++len) {
      const auto expected = std::count_if(brute.begin(), brute.end(), [&](const Chain& c) { return c.size() == len + 1; });
      CHECK(counts[len] == expected);
      CHECK(chains(X, static_cast<int>(len)).size() == static_cast<std::size_t>(expected));
    }
  }
}

TEST_CASE("chains are ordered by length, then lexicographically") {
  const auto X = fixture_poset("models/circle4");
  const auto all = all_chains(X);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const bool ordered = all[i - 1].size() < all[i].size() || (all[i - 1].size() == all[i].size() && all[i - 1] < all[i]);
    CHECK(ordered);
  }
  CHECK(chain_name(X, all.back()) == "(D,B)");
}

TEST_CASE("chain enumeration honours its budget") {
  const auto X = fixture_poset("exW/W");
  CHECK_THROWS_AS(all_chains(X, 5), BudgetExceeded);
}

TEST_CASE("Euler characteristics of the circle and sphere models") {
  CHECK(euler_characteristic(fixture_poset("models/circle4")) == 0);
  CHECK(euler_characteristic(fixture_poset("models/sphere6")) == 2);
}

TEST_CASE("opposite reverses the order") {
  Rng rng(104);
  const auto X = random_poset(rng, 7, 0.4);
  const auto op = opposite(X);
  for (int x = 0; x < static_cast<int>(X.size()); ++x) {
    for (int y = 0; y < static_cast<int>(X.size()); ++y) CHECK(op.leq(x, y) == X.leq(y, x));
  }
  CHECK(euler_characteristic(op) == euler_characteristic(X));
}

TEST_CASE("continuity check reports the first violation") {
  const auto X = build_poset({"a", "b"}, {{"a", "b"}});
  const PosetMap swap(X, X, {1, 0});
  const auto check = check_continuous(swap);
  CHECK_FALSE(check.continuous);
  CHECK(check.violation == std::optional<std::pair<int, int>>({0, 1}));
  CHECK_THROWS_AS(require_continuous(swap, "swap"), NotContinuous);
  CHECK(check_continuous(PosetMap::identity(X)).continuous);
}

TEST_CASE("random continuous maps are continuous") {
  Rng rng(105);
  for (int i = 0; i < 300; ++i) {
    const auto X = random_poset(rng, 7);
    const auto Y = random_poset(rng, 7);
    CHECK(check_continuous(random_continuous_map(rng, X, Y)).continuous);
  }
}

TEST_CASE("cores have no beat points and retract continuously") {
  Rng rng(106);
  for (int i = 0; i < 200; ++i) {
    const auto X = random_poset(rng, 8);
    const auto red = core_reduction(X);
    CHECK_FALSE(oracle::has_beat_point(red.core));
    for (std::size_t k = 0; k < red.kept.size(); ++k)
      CHECK(red.retraction[static_cast<std::size_t>(red.kept[k])] == static_cast<int>(k));
    const PosetMap r(X, red.core, red.retraction);
    CHECK(check_continuous(r).continuous);
    CHECK(euler_characteristic(red.core) == euler_characteristic(X));
  }
}

TEST_CASE("known cores") {
  CHECK(core(fixture_poset("models/circle4")).size() == 4);
  CHECK(core(fixture_poset("models/sphere6")).size() == 6);
  CHECK(core(fixture_poset("exW/W")).size() == 9);
  CHECK(is_contractible(fixture_poset("ex2_5/X")));
  CHECK_FALSE(is_contractible(fixture_poset("exW/W")));
  Rng rng(107);
  for (int i = 0; i < 50; ++i) CHECK(is_contractible(random_cone(rng, 7)));
}

TEST_CASE("homotopy agrees with components of the comparability graph") {
  Rng rng(108);
  int nontrivial = 0;
  for (int i = 0; i < 120; ++i) {
    const auto X = random_poset(rng, 4);
    const auto Y = random_poset(rng, 4);
    const auto maps = oracle::all_continuous_maps(X, Y);
    const auto f = maps[rng() % maps.size()];
    const auto g = maps[rng() % maps.size()];
    const bool expected = oracle::same_component(maps, f, g);
    nontrivial += expected ? 0 : 1;
    CHECK(are_homotopic(f, g) == expected);
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("identity of the circle is not homotopic to a constant") {
  const auto S = fixture_poset("models/circle4");
  CHECK_FALSE(are_homotopic(PosetMap::identity(S), PosetMap::constant(S, S, 0)));
  const auto cone = fixture_poset("ex2_5/X");
  CHECK(are_homotopic(PosetMap::identity(cone), PosetMap::constant(cone, cone, 0)));
}

TEST_CASE("homotopy search honours its budget") {
  const auto W = fixture_poset("exW/W");
  CHECK_THROWS_AS(are_homotopic(PosetMap::constant(W, W, 0), PosetMap::identity(W), 3), BudgetExceeded);
}

TEST_CASE("induced subposets keep the order") {
  const auto X = fixture_poset("models/sphere6");
  const std::vector<int> members{0, 2, 4};
  const auto sub = induced_subposet(X, members);
  CHECK(sub.names() == std::vector<std::string>{"A", "C", "E"});
  CHECK(sub.leq(2, 0));
  CHECK(sub.covers().size() == 2);
}

TEST_CASE("compose and preimage") {
  const auto X = fixture_poset("ex2_5/X");
  const auto Y = fixture_poset("ex2_5/Y");
  const auto Z = fixture_poset("ex2_5/Z");
  const auto f = fixture_map("ex2_5/f", X, Y);
  const auto g = fixture_map("ex2_5/g", Y, Z);
  CHECK(compose(g, f).assignment() == std::vector<int>{0, 0, 0});
  CHECK(preimage(f, 0) == std::vector<int>{0, 1});
  CHECK(is_surjective(f));
  CHECK_THROWS_AS(compose(f, g), NotComposable);
}
