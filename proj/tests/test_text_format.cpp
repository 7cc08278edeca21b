#include <doctest.h>

#include "finspace/errors.hpp"
#include "finspace/random.hpp"
#include "finspace/text_format.hpp"

using namespace finspace;

namespace {
std::string parse_error_of(const std::string& text) {
  try {
    parse_poset(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("poset files with comments and chained relations") {
  const auto X = parse_poset(
      "# four points\n"
      "elements: A B C D   # trailing comment\n"
      "\n"
      "rel: D < B < A\n"
      "rel: A > C\n");
  CHECK(X.size() == 4);
  CHECK(X.leq(X.index_of("D"), X.index_of("A")));
  CHECK(X.leq(X.index_of("C"), X.index_of("A")));
  CHECK_FALSE(X.comparable(X.index_of("C"), X.index_of("D")));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_of("elements: A B\nrel: A <\n").rfind("line 2:", 0) == 0);
  CHECK(parse_error_of("elements: A B\n\nrel: A = B\n").rfind("line 3:", 0) == 0);
  CHECK(parse_error_of("nonsense\n").rfind("line 1:", 0) == 0);
  CHECK(parse_error_of("elements: A\nelements: B\n").rfind("line 2:", 0) == 0);
  CHECK_FALSE(parse_error_of("rel: A < B\n").empty());
  CHECK_FALSE(parse_error_of("elements: A\nrel: A < Z\n").empty());
  CHECK_THROWS_AS(parse_poset("elements: A B\nrel: A < B\nrel: B < A\n"), CycleError);
  CHECK_THROWS_AS(parse_poset("elements: A A\n"), DuplicateElement);
}

TEST_CASE("map and multimap files") {
  const auto X = parse_poset("elements: a b\nrel: a < b\n");
  const auto f = parse_map("a -> b\nb -> b\n", X, X);
  CHECK(f(0) == 1);
  CHECK_THROWS_AS(parse_map("a -> b\n", X, X), ParseError);
  CHECK_THROWS_AS(parse_map("a -> b\na -> a\nb -> b\n", X, X), ParseError);
  CHECK_THROWS_AS(parse_map("a -> a b\nb -> b\n", X, X), ParseError);
  CHECK_THROWS_AS(parse_map("a b\nb -> b\n", X, X), ParseError);
  CHECK_THROWS_AS(parse_map("a -> z\nb -> b\n", X, X), ParseError);
  const auto F = parse_multimap("a -> b a\nb -> b  # comment\n", X, X);
  CHECK(F(0) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(parse_multimap("a ->\nb -> b\n", X, X), ParseError);
  CHECK_THROWS_AS(parse_multimap("b -> b\n", X, X), ParseError);
}

TEST_CASE("writers round-trip") {
  Rng rng(801);
  for (int i = 0; i < 100; ++i) {
    const auto X = random_poset(rng, 8);
    const auto Y = random_poset(rng, 6);
    const auto back = parse_poset(write_poset(X));
    CHECK(back == X);
    const auto f = random_continuous_map(rng, X, Y);
    CHECK(parse_map(write_map(f), X, Y) == f);
    const auto F = random_multimap(rng, X, Y);
    CHECK(parse_multimap(write_multimap(F), X, Y) == F);
  }
}
