#include <doctest.h>

#include "finspace/complex.hpp"
#include "finspace/errors.hpp"
#include "finspace/examples.hpp"
#include "finspace/random.hpp"
#include "oracles.hpp"

using namespace finspace;

namespace {
std::vector<std::size_t> f_vector(const SimplicialComplex& K) {
  std::vector<std::size_t> out;
  for (int d = 0; d <= K.dimension(); ++d) out.push_back(K.count(d));
  return out;
}
}  // namespace

TEST_CASE("order complexes of the circle and sphere models") {
  CHECK(f_vector(order_complex(fixture_poset("models/circle4"))) == std::vector<std::size_t>{4, 4});
  CHECK(f_vector(order_complex(fixture_poset("models/sphere6"))) == std::vector<std::size_t>{6, 12, 8});
}

TEST_CASE("simplices of K(X) are the chains of X") {
  Rng rng(301);
  for (int i = 0; i < 100; ++i) {
    const auto X = random_poset(rng, 7);
    const auto K = order_complex(X);
    const auto brute = oracle::chains_by_subsets(X);
    std::size_t total = 0;
    for (int d = 0; d <= K.dimension(); ++d) total += K.count(d);
    CHECK(total == brute.size());
    const auto vertex = order_complex_vertex_of(X);
    for (const auto& c : brute) {
      Simplex s;
      for (int x : c) s.push_back(vertex[static_cast<std::size_t>(x)]);
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(K.index_of(s).has_value());
    }
  }
}

TEST_CASE("subdivision of a triangle") {
  const auto K = SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1, 2}});
  CHECK(f_vector(K) == std::vector<std::size_t>{3, 3, 1});
  const auto sd = barycentric_subdivision_complex(K);
  CHECK(f_vector(sd) == std::vector<std::size_t>{7, 12, 6});
  const auto X = face_poset(K);
  CHECK(X.size() == 7);
  CHECK(X.find("(a,b)").has_value());
  CHECK(X.leq(X.index_of("(a)"), X.index_of("(a,b,c)")));
}

TEST_CASE("subdivide records chains and the max map") {
  Rng rng(302);
  for (int i = 0; i < 60; ++i) {
    const auto X = random_poset(rng, 6);
    const auto sub = subdivide(X);
    CHECK(sub.space.size() == oracle::chains_by_subsets(X).size());
    CHECK(check_continuous(sub.h).continuous);
    CHECK(is_surjective(sub.h));
    for (std::size_t i2 = 0; i2 < sub.chains.size(); ++i2) {
      CHECK(sub.h(static_cast<int>(i2)) == sub.chains[i2].back());
      CHECK(sub.space.name(static_cast<int>(i2)) == chain_name(X, sub.chains[i2]));
    }
    for (int a = 0; a < static_cast<int>(sub.space.size()); ++a) {
      for (int b = 0; b < static_cast<int>(sub.space.size()); ++b) {
        const auto& ca = sub.chains[static_cast<std::size_t>(a)];
        const auto& cb = sub.chains[static_cast<std::size_t>(b)];
        const bool subset = std::all_of(ca.begin(), ca.end(), [&](int x) {
          return std::find(cb.begin(), cb.end(), x) != cb.end();
        });
        CHECK(sub.space.leq(a, b) == subset);
      }
    }
  }
}

TEST_CASE("boundary of a boundary vanishes") {
  Rng rng(303);
  for (int i = 0; i < 60; ++i) {
    const auto K = order_complex(random_poset(rng, 7));
    for (int d = 1; d <= K.dimension() + 1; ++d) CHECK((boundary_matrix(K, d - 1) * boundary_matrix(K, d)).is_zero());
  }
}

TEST_CASE("boundary matrix of an edge and a triangle") {
  const auto K = SimplicialComplex::from_simplices({"a", "b", "c"}, {{0, 1, 2}});
  const auto d1 = boundary_matrix(K, 1);
  CHECK(d1.rows() == 3);
  CHECK(d1.cols() == 3);
  // edge (a,b) has boundary b - a
  CHECK(d1(0, 0) == -1);
  CHECK(d1(1, 0) == 1);
  const auto d2 = boundary_matrix(K, 2);
  // (a,b,c) -> (b,c) - (a,c) + (a,b); edges listed (a,b), (a,c), (b,c)
  CHECK(d2(0, 0) == 1);
  CHECK(d2(1, 0) == -1);
  CHECK(d2(2, 0) == 1);
  CHECK(boundary_matrix(K, 0).rows() == 0);
  CHECK(boundary_matrix(K, 3).cols() == 0);
}

TEST_CASE("chain maps: orientation and degeneracy") {
  const auto K = SimplicialComplex::from_simplices({"a", "b"}, {{0, 1}});
  const SimplicialMap swap(K, K, {1, 0});
  const auto m = chain_map_of(swap);
  CHECK(m[1](0, 0) == -1);
  const SimplicialMap collapse(K, K, {0, 0});
  CHECK(chain_map_of(collapse)[1](0, 0) == 0);
}

TEST_CASE("chain maps commute with boundaries") {
  Rng rng(304);
  for (int i = 0; i < 80; ++i) {
    const auto X = random_poset(rng, 6);
    const auto Y = random_poset(rng, 6);
    const auto f = random_continuous_map(rng, X, Y);
    const auto Kf = induced_simplicial_map(f);
    const auto phi = chain_map_of(Kf);
    for (int d = 1; d <= Kf.source().dimension(); ++d) {
      const auto lhs = boundary_matrix(Kf.target(), d) * phi[static_cast<std::size_t>(d)];
      const auto rhs = phi[static_cast<std::size_t>(d - 1)] * boundary_matrix(Kf.source(), d);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("induced simplicial maps reject discontinuous maps") {
  const auto X = build_poset({"a", "b"}, {{"a", "b"}});
  CHECK_THROWS_AS(induced_simplicial_map(PosetMap(X, X, {1, 0})), NotContinuous);
}

TEST_CASE("closed families must contain their faces") {
  CHECK_THROWS_AS(SimplicialComplex::from_closed_family({"a", "b"}, {{0}, {0, 1}}), Error);
  const auto K = SimplicialComplex::from_closed_family({"a", "b"}, {{0}, {1}, {0, 1}});
  CHECK(K.dimension() == 1);
}

TEST_CASE("export lists simplices by dimension") {
  const auto K = order_complex(fixture_poset("ex2_5/X"));
  CHECK(export_complex(K) == "A\nB\nC\nA C\nB C\n");
}
