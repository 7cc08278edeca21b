#include "finspace/maps.hpp"

#include <algorithm>
#include <unordered_map>

#include "finspace/errors.hpp"
#include "finspace/hash.hpp"

namespace finspace {

MultiMap::MultiMap(FinitePoset source, FinitePoset target, std::vector<std::vector<int>> values)
    : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
  if (values_.size() != source_.size())
    throw Error("multimap has " + std::to_string(values_.size()) + " values, source has " +
                std::to_string(source_.size()) + " elements");
  for (std::size_t x = 0; x < values_.size(); ++x) {
    auto& v = values_[x];
    if (v.empty()) throw EmptyValue("multimap value at '" + source_.name(static_cast<int>(x)) + "' is empty");
    for (int y : v) {
      if (y < 0 || static_cast<std::size_t>(y) >= target_.size())
        throw UnknownElement("multimap value " + std::to_string(y) + " is not an element of the target");
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
}

MultiMap MultiMap::from_map(const PosetMap& f) {
  std::vector<std::vector<int>> values;
  values.reserve(f.assignment().size());
  for (int y : f.assignment()) values.push_back({y});
  return MultiMap(f.source(), f.target(), std::move(values));
}

MultiMap MultiMap::identity(const FinitePoset& space) { return from_map(PosetMap::identity(space)); }

bool MultiMap::contains(int x, int y) const {
  const auto& v = values_[static_cast<std::size_t>(x)];
  return std::binary_search(v.begin(), v.end(), y);
}

bool MultiMap::operator==(const MultiMap& other) const {
  return values_ == other.values_ && source_ == other.source_ && target_ == other.target_;
}

std::string value_name(const FinitePoset& space, const std::vector<int>& value) {
  std::string out = "{";
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i) out += ',';
    out += space.name(value[i]);
  }
  return out + "}";
}

GraphSpace graph(const MultiMap& F) {
  const auto& X = F.source();
  const auto& Y = F.target();
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::size_t> group_start(X.size() + 1, 0);
  for (std::size_t x = 0; x < X.size(); ++x) {
    group_start[x] = pairs.size();
    for (int y : F(static_cast<int>(x))) pairs.emplace_back(static_cast<int>(x), y);
  }
  group_start[X.size()] = pairs.size();

  const auto n = pairs.size();
  std::vector<std::string> names;
  names.reserve(n);
  std::vector<int> p(n), q(n);
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto [x, y] = pairs[i];
    names.push_back("(" + X.name(x) + "," + Y.name(y) + ")");
    p[i] = x;
    q[i] = y;
    const auto& above = X.up_bits(x);
    for (auto x2 = above.find_first(); x2 != Bitset::npos; x2 = above.find_next(x2)) {
      for (std::size_t j = group_start[x2]; j < group_start[x2 + 1]; ++j) {
        if (Y.leq(y, pairs[j].second)) up[i].set(j);
      }
    }
  }
  auto space = FinitePoset::from_up_sets(std::move(names), std::move(up));
  PosetMap pm(space, X, std::move(p));
  PosetMap qm(space, Y, std::move(q));
  return {std::move(space), std::move(pairs), std::move(pm), std::move(qm)};
}

ContinuityClass classify_continuity(const MultiMap& F) {
  const auto& X = F.source();
  const auto& Y = F.target();
  ContinuityClass c{true, true, true, true};
  for (std::size_t a = 0; a < X.size(); ++a) {
    const auto x1 = static_cast<int>(a);
    const auto& above = X.up_bits(x1);
    for (auto b = above.find_first(); b != Bitset::npos; b = above.find_next(b)) {
      const auto x2 = static_cast<int>(b);
      if (x1 == x2) continue;
      const auto& lo = F(x1);
      const auto& hi = F(x2);
      // x1 <= x2
      for (int y1 : lo) {
        if (std::none_of(hi.begin(), hi.end(), [&](int y2) { return Y.leq(y1, y2); })) c.usc = false;
      }
      if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end())) c.susc = false;
      // x2 >= x1, read with x2 in the role of the larger point
      for (int y1 : hi) {
        if (std::none_of(lo.begin(), lo.end(), [&](int y2) { return Y.leq(y2, y1); })) c.lsc = false;
      }
      if (!std::includes(lo.begin(), lo.end(), hi.begin(), hi.end())) c.slsc = false;
    }
  }
  return c;
}

namespace {

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const {
    std::vector<Bitset::block_type> blocks;
    boost::to_block_range(b, std::back_inserter(blocks));
    Fnv1a h;
    h.add_bytes(blocks.data(), blocks.size() * sizeof(Bitset::block_type));
    return static_cast<std::size_t>(h.value());
  }
};

}  // namespace

Certificate is_vietoris_like_map(const PosetMap& f, std::size_t budget) {
  require_continuous(f, "map");
  const auto& X = f.source();
  const auto& Y = f.target();
  std::vector<Bitset> fiber(Y.size(), Bitset(X.size()));
  for (std::size_t x = 0; x < X.size(); ++x) fiber[static_cast<std::size_t>(f(static_cast<int>(x)))].set(x);

  std::unordered_map<Bitset, std::optional<HomologySummary>, BitsetHash> seen;
  Certificate cert;
  for (const auto& chain : all_chains(Y, budget)) {
    ++cert.chains_checked;
    Bitset unite(X.size());
    for (int y : chain) unite |= fiber[static_cast<std::size_t>(y)];
    if (unite.none()) {
      cert.ok = false;
      cert.failing_chain = chain;
      cert.empty_fiber = true;
      return cert;
    }
    auto it = seen.find(unite);
    if (it == seen.end()) {
      const auto summary = acyclicity_profile(induced_subposet(X, unite));
      it = seen.emplace(unite, summary.is_point() ? std::nullopt : std::optional(summary)).first;
    }
    if (it->second) {
      cert.ok = false;
      cert.failing_chain = chain;
      cert.profile = it->second;
      return cert;
    }
  }
  return cert;
}

Certificate is_vietoris_like_multimap(const MultiMap& F, std::size_t budget) {
  return is_vietoris_like_map(graph(F).p, budget);
}

InducedMap induced_multimap_homology(const MultiMap& F, const SpaceHomology& source, const SpaceHomology& target) {
  const auto g = graph(F);
  const auto on_graph = space_homology(g.space);
  const auto p_star = induced_map(g.p, on_graph, source);
  const auto q_star = induced_map(g.q, on_graph, target);
  InducedMap p_inverse;
  try {
    p_inverse = invert(p_star);
  } catch (const NotInvertible& e) {
    throw ProjectionNotIso("first projection of the graph is not a homology isomorphism (dimension " +
                           std::to_string(e.dimension()) + ")");
  }
  return compose(q_star, p_inverse);
}

InducedMap induced_multimap_homology(const MultiMap& F) {
  return induced_multimap_homology(F, space_homology(F.source()), space_homology(F.target()));
}

MultiMap compose_multimaps(const MultiMap& F, const MultiMap& G) {
  if (!(F.target() == G.source())) throw NotComposable("cannot compose multimaps: target of F is not the source of G");
  std::vector<std::vector<int>> values(F.source().size());
  for (std::size_t x = 0; x < values.size(); ++x) {
    for (int y : F(static_cast<int>(x))) {
      const auto& gy = G(y);
      values[x].insert(values[x].end(), gy.begin(), gy.end());
    }
  }
  return MultiMap(F.source(), G.target(), std::move(values));
}

MultiMap compose_multimaps(const PosetMap& f, const MultiMap& G) {
  return compose_multimaps(MultiMap::from_map(f), G);
}

MultiMap fiber_multimap(const PosetMap& f) {
  require_continuous(f, "map");
  if (!is_surjective(f)) throw NotSurjective("fiber multimap needs a surjective map");
  std::vector<std::vector<int>> values(f.target().size());
  for (std::size_t x = 0; x < f.source().size(); ++x) values[static_cast<std::size_t>(f(static_cast<int>(x)))].push_back(static_cast<int>(x));
  return MultiMap(f.target(), f.source(), std::move(values));
}

namespace {

PosetMap extreme_selector(const MultiMap& F, bool maxima) {
  const auto& Y = F.target();
  std::vector<int> a(F.source().size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    const auto& v = F(static_cast<int>(x));
    auto it = std::find_if(v.begin(), v.end(), [&](int m) {
      return std::all_of(v.begin(), v.end(), [&](int y) { return maxima ? Y.leq(y, m) : Y.leq(m, y); });
    });
    if (it == v.end()) {
      const std::string what = "F(" + F.source().name(static_cast<int>(x)) + ") = " + value_name(Y, v);
      if (maxima) throw NoMaximum(what + " has no maximum");
      throw NoMinimum(what + " has no minimum");
    }
    a[x] = *it;
  }
  return PosetMap(F.source(), Y, std::move(a));
}

}  // namespace

PosetMap selector_from_maxima(const MultiMap& F) {
  if (!classify_continuity(F).usc) throw NotUsc("multimap is not upper semicontinuous");
  return extreme_selector(F, true);
}

PosetMap selector_from_minima(const MultiMap& F) {
  if (!classify_continuity(F).lsc) throw NotLsc("multimap is not lower semicontinuous");
  return extreme_selector(F, false);
}

std::vector<PosetMap> enumerate_selectors(const MultiMap& F, std::size_t budget) {
  const auto& X = F.source();
  const auto& Y = F.target();
  const auto& order = X.linear_extension();
  std::vector<int> assignment(X.size(), -1);
  std::vector<PosetMap> out;
  std::size_t nodes = 0;

  auto fits = [&](int x, int y) {
    const auto& below = X.down_bits(x);
    for (auto z = below.find_first(); z != Bitset::npos; z = below.find_next(z)) {
      const int fz = assignment[z];
      if (fz >= 0 && static_cast<int>(z) != x && !Y.leq(fz, y)) return false;
    }
    const auto& above = X.up_bits(x);
    for (auto z = above.find_first(); z != Bitset::npos; z = above.find_next(z)) {
      const int fz = assignment[z];
      if (fz >= 0 && static_cast<int>(z) != x && !Y.leq(y, fz)) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (++nodes > budget) throw BudgetExceeded("selector search exceeded its budget");
    if (depth == order.size()) {
      out.emplace_back(X, Y, assignment);
      return;
    }
    const int x = order[depth];
    for (int y : F(x)) {
      if (!fits(x, y)) continue;
      assignment[static_cast<std::size_t>(x)] = y;
      self(self, depth + 1);
      assignment[static_cast<std::size_t>(x)] = -1;
    }
  };
  search(search, 0);
  return out;
}

}  // namespace finspace
