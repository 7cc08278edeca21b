#include <doctest.h>

#include "finspace/complex.hpp"
#include "finspace/errors.hpp"
#include "finspace/examples.hpp"
#include "finspace/homology.hpp"
#include "finspace/random.hpp"
#include "oracles.hpp"

using namespace finspace;

namespace {

std::vector<long long> betti(const FinitePoset& X, bool reduce = true) {
  return oracle::trim(space_homology(X, reduce).profile.betti_numbers());
}

// Six-vertex triangulation of the projective plane.
SimplicialComplex projective_plane() {
  return SimplicialComplex::from_simplices(
      {"1", "2", "3", "4", "5", "6"},
      {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

}  // namespace

TEST_CASE("homology of the standard models") {
  CHECK(betti(fixture_poset("models/circle4")) == std::vector<long long>{1, 1});
  CHECK(betti(fixture_poset("models/sphere6")) == std::vector<long long>{1, 0, 1});
  CHECK(betti(fixture_poset("ex2_5/Z")) == std::vector<long long>{1});
  CHECK(betti(build_poset({"a", "b"}, {})) == std::vector<long long>{2});
  CHECK(betti(fixture_poset("exW/W")) == std::vector<long long>{1});
}

TEST_CASE("torsion of the projective plane") {
  const auto h = homology(projective_plane());
  CHECK(h.betti_numbers() == std::vector<long long>{1, 0, 0});
  CHECK(h.dims[1].torsion == std::vector<Integer>{2});
  CHECK(h.dims[2].torsion.empty());
  // The face poset is a finite model with the same homology.
  const auto X = face_poset(projective_plane());
  const auto s = space_homology(X).profile.summary();
  CHECK(oracle::trim(s.betti) == std::vector<long long>{1});
  CHECK(s.torsion[1] == std::vector<Integer>{2});
  CHECK_FALSE(is_acyclic(X));
}

TEST_CASE("Betti numbers agree with ranks over finite fields") {
  Rng rng(401);
  for (int i = 0; i < 150; ++i) {
    const auto X = random_poset(rng, 8);
    const auto expected = oracle::trim(oracle::chain_betti_mod(X, 1000000007LL));
    CHECK(betti(X, false) == expected);
    CHECK(betti(X, true) == expected);
  }
}

TEST_CASE("Euler characteristic from Betti numbers matches chain counts") {
  Rng rng(402);
  for (int i = 0; i < 150; ++i) {
    const auto X = random_poset(rng, 8);
    CHECK(space_homology(X).profile.summary().euler_characteristic() == euler_characteristic(X));
  }
}

TEST_CASE("projector inverts the representatives") {
  Rng rng(403);
  for (int i = 0; i < 100; ++i) {
    const auto profile = homology(order_complex(random_poset(rng, 8)));
    for (const auto& d : profile.dims) {
      const auto product = d.projector * d.representatives;
      CHECK(product == IntMatrix::identity(static_cast<std::size_t>(d.betti)));
    }
  }
}

TEST_CASE("representatives are cycles") {
  Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    const auto profile = homology(order_complex(random_poset(rng, 8)));
    for (std::size_t k = 0; k < profile.dims.size(); ++k)
      CHECK((profile.boundaries[k] * profile.dims[k].representatives).is_zero());
  }
}

TEST_CASE("acyclicity against field ranks") {
  Rng rng(405);
  for (int i = 0; i < 200; ++i) {
    const auto X = random_poset(rng, 7);
    CHECK(is_acyclic(X) == oracle::acyclic_by_fields(X));
  }
  CHECK_THROWS_AS(acyclicity_profile(FinitePoset()), EmptySubspace);
}

TEST_CASE("identity induces the identity") {
  Rng rng(406);
  for (int i = 0; i < 60; ++i) {
    const auto X = random_poset(rng, 8);
    const auto m = induced_map(PosetMap::identity(X));
    CHECK(m.is_identity());
    CHECK(lefschetz_number(m) == euler_characteristic(X));
  }
}

TEST_CASE("traces do not depend on reducing to the core") {
  Rng rng(407);
  for (int i = 0; i < 100; ++i) {
    const auto X = random_poset(rng, 7);
    const auto f = random_continuous_map(rng, X, X);
    const auto reduced = space_homology(X, true);
    const auto full = space_homology(X, false);
    const auto a = induced_map(f, reduced, reduced);
    const auto b = induced_map(f, full, full);
    for (std::size_t d = 0; d < a.dimension_count(); ++d) CHECK(a.trace(d) == b.trace(d));
  }
}

TEST_CASE("functoriality: (g o f)_* = g_* o f_*") {
  Rng rng(408);
  for (int i = 0; i < 100; ++i) {
    const auto X = random_poset(rng, 6);
    const auto Y = random_poset(rng, 6);
    const auto Z = random_poset(rng, 6);
    const auto f = random_continuous_map(rng, X, Y);
    const auto g = random_continuous_map(rng, Y, Z);
    const auto sx = space_homology(X), sy = space_homology(Y), sz = space_homology(Z);
    const auto lhs = induced_map(compose(g, f), sx, sz);
    const auto rhs = compose(induced_map(g, sy, sz), induced_map(f, sx, sy));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("homotopic maps induce the same map") {
  Rng rng(409);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const auto X = random_poset(rng, 5);
    const auto Y = random_poset(rng, 5);
    const auto f = random_continuous_map(rng, X, Y);
    const auto g = random_continuous_map(rng, X, Y);
    if (!are_homotopic(f, g)) continue;
    ++checked;
    const auto sx = space_homology(X), sy = space_homology(Y);
    CHECK(induced_map(f, sx, sy).matrices == induced_map(g, sx, sy).matrices);
  }
  CHECK(checked > 10);
}

TEST_CASE("inversion and its failures") {
  const auto X = fixture_poset("ex2_3/X");
  const auto Y = fixture_poset("ex2_3/Y");
  const auto f = fixture_map("ex2_3/f", X, Y);
  try {
    invert(induced_map(f));
    FAIL("expected NotInvertible");
  } catch (const NotInvertible& e) {
    CHECK(e.dimension() == 2);
  }
  const auto S = fixture_poset("models/circle4");
  const PosetMap flip(S, S, {1, 0, 2, 3});
  const auto m = induced_map(flip);
  CHECK(compose(m, invert(m)).is_identity());
  CHECK(m.trace(1) == -1);
}

TEST_CASE("profile mismatches are rejected") {
  const auto S = fixture_poset("models/circle4");
  const auto T = fixture_poset("models/sphere6");
  const auto a = induced_map(PosetMap::identity(S));
  const auto b = induced_map(PosetMap::identity(T));
  CHECK_THROWS_AS(compose(a, b), ProfileMismatch);
  const auto into = induced_map(PosetMap::constant(S, T, 0));
  CHECK_THROWS_AS(lefschetz_number(into), ProfileMismatch);
}
