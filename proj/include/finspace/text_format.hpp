#pragma once

#include <string>
#include <string_view>

#include "finspace/maps.hpp"
#include "finspace/poset.hpp"

namespace finspace {

// Poset files:
//   # comment
//   elements: A B C D
//   rel: C < A
//   rel: D < A < X        (chains are split into consecutive pairs)
//   rel: A > D            (read as D < A)
// Map files, one line per source element:   x -> y
// Multimap files, one line per source element:   x -> y1 y2 y3
// All parsers throw ParseError with the 1-based line number.

FinitePoset parse_poset(std::string_view text);
PosetMap parse_map(std::string_view text, const FinitePoset& source, const FinitePoset& target);
MultiMap parse_multimap(std::string_view text, const FinitePoset& source, const FinitePoset& target);

/// Elements in index order and one `rel:` line per cover.
std::string write_poset(const FinitePoset& space);
std::string write_map(const PosetMap& f);
std::string write_multimap(const MultiMap& F);

}  // namespace finspace
