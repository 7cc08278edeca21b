#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "finspace/maps.hpp"
#include "finspace/poset.hpp"

namespace finspace {

/// Fixture files compiled into the library, keyed by their path below
/// fixtures/ without the extension, e.g. "ex2_3/X".
std::vector<std::string> fixture_keys();
/// Throws Error for an unknown key.
std::string_view fixture_text(std::string_view key);

FinitePoset fixture_poset(std::string_view key);
PosetMap fixture_map(std::string_view key, const FinitePoset& source, const FinitePoset& target);
MultiMap fixture_multimap(std::string_view key, const FinitePoset& source, const FinitePoset& target);

}  // namespace finspace
