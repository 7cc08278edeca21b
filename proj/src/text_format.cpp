#include "finspace/text_format.hpp"

#include <sstream>
#include <vector>

#include "finspace/errors.hpp"

namespace finspace {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty lines with comments removed.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view s) {
  std::istringstream is{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

int lookup(const FinitePoset& space, const std::string& name, int line, const char* role) {
  if (auto x = space.find(name)) return *x;
  fail(line, std::string("unknown ") + role + " element '" + name + "'");
}

// Splits "x -> rest" and resolves x.
std::pair<int, std::vector<std::string>> arrow_line(const Line& line, const FinitePoset& source) {
  const auto arrow = line.text.find("->");
  if (arrow == std::string::npos) fail(line.number, "expected 'x -> y'");
  const auto lhs = tokens(line.text.substr(0, arrow));
  if (lhs.size() != 1) fail(line.number, "expected a single element before '->'");
  return {lookup(source, lhs[0], line.number, "source"), tokens(line.text.substr(arrow + 2))};
}

}  // namespace

FinitePoset parse_poset(std::string_view text) {
  std::vector<std::string> elements;
  bool have_elements = false;
  std::vector<std::pair<std::string, std::string>> relations;
  for (const auto& line : content_lines(text)) {
    if (starts_with(line.text, "elements:")) {
      if (have_elements) fail(line.number, "second 'elements:' line");
      have_elements = true;
      elements = tokens(line.text.substr(9));
    } else if (starts_with(line.text, "rel:")) {
      auto parts = tokens(line.text.substr(4));
      if (parts.size() < 3 || parts.size() % 2 == 0) fail(line.number, "expected 'rel: x < y'");
      for (std::size_t i = 1; i + 1 < parts.size(); i += 2) {
        const auto& op = parts[i];
        if (op == "<")
          relations.emplace_back(parts[i - 1], parts[i + 1]);
        else if (op == ">")
          relations.emplace_back(parts[i + 1], parts[i - 1]);
        else
          fail(line.number, "unknown relation '" + op + "'");
      }
    } else {
      fail(line.number, "expected 'elements:' or 'rel:'");
    }
  }
  if (!have_elements) throw ParseError("missing 'elements:' line");
  try {
    return build_poset(std::move(elements), relations);
  } catch (const UnknownElement& e) {
    throw ParseError(e.what());
  }
}

PosetMap parse_map(std::string_view text, const FinitePoset& source, const FinitePoset& target) {
  std::vector<int> assignment(source.size(), -1);
  for (const auto& line : content_lines(text)) {
    auto [x, rhs] = arrow_line(line, source);
    if (rhs.size() != 1) fail(line.number, "a map sends each element to exactly one element");
    if (assignment[static_cast<std::size_t>(x)] >= 0) fail(line.number, "element '" + source.name(x) + "' assigned twice");
    assignment[static_cast<std::size_t>(x)] = lookup(target, rhs[0], line.number, "target");
  }
  for (std::size_t x = 0; x < assignment.size(); ++x) {
    if (assignment[x] < 0) throw ParseError("map does not assign '" + source.name(static_cast<int>(x)) + "'");
  }
  return PosetMap(source, target, std::move(assignment));
}

MultiMap parse_multimap(std::string_view text, const FinitePoset& source, const FinitePoset& target) {
  std::vector<std::vector<int>> values(source.size());
  std::vector<bool> seen(source.size(), false);
  for (const auto& line : content_lines(text)) {
    auto [x, rhs] = arrow_line(line, source);
    if (rhs.empty()) fail(line.number, "empty value for '" + source.name(x) + "'");
    if (seen[static_cast<std::size_t>(x)]) fail(line.number, "element '" + source.name(x) + "' assigned twice");
    seen[static_cast<std::size_t>(x)] = true;
    for (const auto& y : rhs) values[static_cast<std::size_t>(x)].push_back(lookup(target, y, line.number, "target"));
  }
  for (std::size_t x = 0; x < seen.size(); ++x) {
    if (!seen[x]) throw ParseError("multimap does not assign '" + source.name(static_cast<int>(x)) + "'");
  }
  return MultiMap(source, target, std::move(values));
}

std::string write_poset(const FinitePoset& space) {
  std::ostringstream os;
  os << "elements:";
  for (const auto& n : space.names()) os << ' ' << n;
  os << '\n';
  for (const auto& [x, y] : space.covers()) os << "rel: " << space.name(x) << " < " << space.name(y) << '\n';
  return os.str();
}

std::string write_map(const PosetMap& f) {
  std::ostringstream os;
  for (std::size_t x = 0; x < f.source().size(); ++x)
    os << f.source().name(static_cast<int>(x)) << " -> " << f.target().name(f(static_cast<int>(x))) << '\n';
  return os.str();
}

std::string write_multimap(const MultiMap& F) {
  std::ostringstream os;
  for (std::size_t x = 0; x < F.source().size(); ++x) {
    os << F.source().name(static_cast<int>(x)) << " ->";
    for (int y : F(static_cast<int>(x))) os << ' ' << F.target().name(y);
    os << '\n';
  }
  return os.str();
}

}  // namespace finspace
