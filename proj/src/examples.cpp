#include "finspace/examples.hpp"

#include <utility>

#include "finspace/errors.hpp"
#include "finspace/text_format.hpp"

namespace finspace {

namespace detail {
extern const std::pair<std::string_view, std::string_view> kFixtures[];
extern const std::size_t kFixtureCount;
}  // namespace detail

std::vector<std::string> fixture_keys() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kFixtureCount; ++i) out.emplace_back(detail::kFixtures[i].first);
  return out;
}

std::string_view fixture_text(std::string_view key) {
  for (std::size_t i = 0; i < detail::kFixtureCount; ++i) {
    if (detail::kFixtures[i].first == key) return detail::kFixtures[i].second;
  }
  throw Error("no fixture named '" + std::string(key) + "'");
}

FinitePoset fixture_poset(std::string_view key) { return parse_poset(fixture_text(key)); }

PosetMap fixture_map(std::string_view key, const FinitePoset& source, const FinitePoset& target) {
  return parse_map(fixture_text(key), source, target);
}

MultiMap fixture_multimap(std::string_view key, const FinitePoset& source, const FinitePoset& target) {
  return parse_multimap(fixture_text(key), source, target);
}

}  // namespace finspace
