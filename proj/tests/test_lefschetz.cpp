#include <doctest.h>

#include "finspace/errors.hpp"
#include "finspace/examples.hpp"
#include "finspace/lefschetz.hpp"
#include "finspace/random.hpp"

using namespace finspace;

TEST_CASE("identity of the circle: Λ = 0 and every point is fixed") {
  const auto S = fixture_poset("models/circle4");
  const auto r = classical_lefschetz(PosetMap::identity(S));
  CHECK(*r.lambda == 0);
  CHECK(*r.chi_fix == 0);
  CHECK(r.witnesses.size() == 4);
  CHECK(r.outcome == Outcome::Confirmed);
  CHECK(theorem_B(MultiMap::identity(S)).outcome == Outcome::Inconclusive);
}

TEST_CASE("Λ of an order-preserving endomorphism is χ of its fixed set") {
  Rng rng(601);
  for (int i = 0; i < 200; ++i) {
    const auto X = random_poset(rng, 7);
    const auto r = classical_lefschetz(random_continuous_map(rng, X, X));
    CHECK(*r.lambda == *r.chi_fix);
  }
}

TEST_CASE("theorem A on the swapped minima") {
  const auto X = fixture_poset("ex_postA/X");
  const auto f = fixture_map("ex_postA/f", X, X);
  const auto g = fixture_map("ex_postA/g", X, X);
  const auto r = theorem_A(f, g);
  CHECK(r.outcome == Outcome::Confirmed);
  CHECK(*r.lambda == 1);
  CHECK(r.witness_names == std::vector<std::string>{"B"});
  CHECK(coincidence_points(fixture_map("ex_postA/f_prime", X, X), g).empty());
}

TEST_CASE("theorem A reports failed hypotheses even when Λ exists") {
  const auto X = fixture_poset("ex2_5/X");
  const auto Y = fixture_poset("ex2_5/Y");
  const auto f = fixture_map("ex2_5/f", X, Y);
  const auto r = theorem_A(f, PosetMap::constant(X, Y, 1));
  CHECK(r.outcome == Outcome::HypothesisFailed);
  REQUIRE(r.lambda.has_value());
  CHECK(*r.lambda == 1);
  CHECK_FALSE(r.hypotheses.front().holds);
  REQUIRE(r.hypotheses.front().certificate.has_value());
  CHECK(chain_name(Y, *r.hypotheses.front().certificate->failing_chain) == "(D)");
}

TEST_CASE("theorem A with a non-invertible f_* has no Λ") {
  const auto X = fixture_poset("ex2_3/X");
  const auto Y = fixture_poset("ex2_3/Y");
  const auto f = fixture_map("ex2_3/f", X, Y);
  const auto r = theorem_A(f, f);
  CHECK_FALSE(r.lambda.has_value());
  CHECK(r.outcome == Outcome::HypothesisFailed);
}

TEST_CASE("theorem B on a contractible space") {
  const auto X = fixture_poset("ex4_2/X");
  const auto r = theorem_B(MultiMap::identity(X));
  CHECK(r.outcome == Outcome::Confirmed);
  CHECK(*r.lambda == 1);
  const auto F = theorem_B(fixture_multimap("ex4_2/F", X, X));
  CHECK(F.outcome == Outcome::HypothesisFailed);
  CHECK(F.witnesses.empty());
}

TEST_CASE("theorem B and theorem C agree on a single factor") {
  Rng rng(602);
  int compared = 0;
  for (int i = 0; i < 100; ++i) {
    const auto X = random_poset(rng, 6);
    const auto F = random_susc_acyclic(rng, X, X);
    if (!F) continue;
    ++compared;
    const auto b = theorem_B(*F);
    const auto c = theorem_C({*F});
    CHECK(b.lambda == c.lambda);
    CHECK(b.outcome == c.outcome);
    CHECK(b.witnesses == c.witnesses);
  }
  CHECK(compared > 20);
}

TEST_CASE("composition Λ by products and by iterated graphs") {
  const auto X = fixture_poset("ex4_3/X");
  const auto G0 = fixture_multimap("ex4_3/G0", X, X);
  const auto G1 = fixture_multimap("ex4_3/G1", X, X);
  const auto r = theorem_C({G0, G1});
  CHECK(r.hypotheses_hold());
  REQUIRE(r.lambda.has_value());
  CHECK(*r.lambda == 1);
  CHECK(composition_lambda_via_graphs({G0, G1}) == *r.lambda);

  const auto S = fixture_poset("ex2_8/X");
  const auto F = fixture_multimap("ex2_8/F", S, S);
  const auto G = fixture_multimap("ex2_8/G", S, S);
  const auto s = theorem_C({F, G});
  REQUIRE(s.lambda.has_value());
  CHECK(composition_lambda_via_graphs({F, G}) == *s.lambda);
  CHECK_THROWS_AS(theorem_C({}), NotComposable);
}

TEST_CASE("composition Λ cross-check on random Vietoris-like factors") {
  Rng rng(603);
  int compared = 0;
  for (int i = 0; i < 60; ++i) {
    const auto X = random_poset(rng, 4);
    const auto Y = random_poset(rng, 4);
    const auto G0 = random_vietoris_map(rng, X, Y);
    const auto G1 = random_susc_acyclic(rng, Y, X);
    if (!G0 || !G1) continue;
    ++compared;
    const auto r = theorem_C({MultiMap::from_map(*G0), *G1});
    REQUIRE(r.lambda.has_value());
    CHECK(composition_lambda_via_graphs({MultiMap::from_map(*G0), *G1}) == *r.lambda);
    CHECK(r.outcome != Outcome::Falsified);
  }
  CHECK(compared > 5);
}

TEST_CASE("multimap coincidence corollary with the identity") {
  const auto S = fixture_poset("ex2_8/X");
  const auto F = fixture_multimap("ex2_8/F", S, S);
  const auto one = corollary_multimap_coincidence(PosetMap::identity(S), F, 1);
  CHECK(one.lambda == theorem_B(F).lambda);
  CHECK(one.witnesses.size() == 4);
  CHECK_THROWS_AS(corollary_multimap_coincidence(PosetMap::identity(S), F, 3), Error);
}

TEST_CASE("intersection theorem needs selectors") {
  const auto X = fixture_poset("ex3_9/X");
  const auto Y = fixture_poset("ex3_9/Y");
  const auto T = fixture_multimap("ex3_9/T", X, Y);
  CHECK_THROWS_AS(theorem_310(T, T, 3), NoSelector);
  const auto S = fixture_poset("models/circle4");
  const auto I = MultiMap::identity(S);
  const auto r = theorem_310(I, I, 3);
  CHECK(r.witnesses.size() == 4);
  CHECK(*r.lambda == 0);
  CHECK(r.outcome == Outcome::Inconclusive);
}

TEST_CASE("outcome names") {
  CHECK(to_string(Outcome::Confirmed) == "confirmed");
  CHECK(to_string(Outcome::Falsified) == "falsified");
}
