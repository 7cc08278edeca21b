#include "finspace/poset.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "finspace/errors.hpp"
#include "finspace/hash.hpp"

namespace finspace {

struct FinitePoset::Impl {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<Bitset> up;
  std::vector<Bitset> down;
  std::vector<int> linear_extension;

  mutable std::once_flag covers_once;
  mutable std::vector<std::pair<int, int>> covers;
};

std::shared_ptr<const FinitePoset::Impl> FinitePoset::make_impl(std::vector<std::string> names,
                                                               std::vector<Bitset> up) {
  auto impl = std::make_shared<Impl>();
  const auto n = names.size();
  impl->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!impl->index.emplace(names[i], static_cast<int>(i)).second)
      throw DuplicateElement("duplicate element '" + names[i] + "'");
  }
  impl->down.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y))
      impl->down[y].set(x);
  }
  std::vector<std::size_t> below(n);
  for (std::size_t x = 0; x < n; ++x) below[x] = impl->down[x].count();
  impl->linear_extension.resize(n);
  std::iota(impl->linear_extension.begin(), impl->linear_extension.end(), 0);
  std::stable_sort(impl->linear_extension.begin(), impl->linear_extension.end(),
                   [&](int a, int b) { return below[a] < below[b]; });
  impl->names = std::move(names);
  impl->up = std::move(up);
  return impl;
}

namespace {

void check_order(const std::vector<std::string>& names, const std::vector<Bitset>& up) {
  const auto n = names.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (up[x].size() != n) throw Error("order row has the wrong width");
    if (!up[x].test(x)) throw Error("order relation is not reflexive at '" + names[x] + "'");
    for (auto y = up[x].find_next(x); y != Bitset::npos; y = up[x].find_next(y)) {
      if (up[y].test(x))
        throw CycleError("cycle through '" + names[x] + "' and '" + names[y] + "'");
    }
  }
}

}  // namespace

FinitePoset::FinitePoset() : impl_(make_impl({}, {})) {}

FinitePoset::FinitePoset(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

FinitePoset FinitePoset::build(std::vector<std::string> elements,
                               const std::vector<std::pair<std::string, std::string>>& less_than) {
  const auto n = elements.size();
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], static_cast<int>(i)).second)
      throw DuplicateElement("duplicate element '" + elements[i] + "'");
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw UnknownElement("relation references unknown element '" + name + "'");
    return static_cast<std::size_t>(it->second);
  };

  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) up[x].set(x);
  for (const auto& [a, b] : less_than) {
    const auto x = lookup(a);
    const auto y = lookup(b);
    if (x == y) throw CycleError("relation '" + a + " < " + b + "' is not strict");
    up[x].set(y);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && up[i].test(k)) up[i] |= up[k];
    }
  }
  check_order(elements, up);
  return FinitePoset(make_impl(std::move(elements), std::move(up)));
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> names, std::vector<Bitset> up_sets) {
  if (names.size() != up_sets.size()) throw Error("names and order rows differ in length");
  check_order(names, up_sets);
  return FinitePoset(make_impl(std::move(names), std::move(up_sets)));
}

std::size_t FinitePoset::size() const { return impl_->names.size(); }

const std::string& FinitePoset::name(int x) const { return impl_->names.at(static_cast<std::size_t>(x)); }

const std::vector<std::string>& FinitePoset::names() const { return impl_->names; }

std::optional<int> FinitePoset::find(std::string_view name) const {
  auto it = impl_->index.find(std::string(name));
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

int FinitePoset::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw UnknownElement("unknown element '" + std::string(name) + "'");
}

bool FinitePoset::leq(int x, int y) const {
  return impl_->up[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y));
}

const Bitset& FinitePoset::up_bits(int x) const { return impl_->up[static_cast<std::size_t>(x)]; }

const Bitset& FinitePoset::down_bits(int x) const { return impl_->down[static_cast<std::size_t>(x)]; }

const std::vector<std::pair<int, int>>& FinitePoset::covers() const {
  std::call_once(impl_->covers_once, [this] {
    const auto n = size();
    for (std::size_t x = 0; x < n; ++x) {
      Bitset strict_up = impl_->up[x];
      strict_up.reset(x);
      for (auto y = strict_up.find_first(); y != Bitset::npos; y = strict_up.find_next(y)) {
        if ((impl_->down[y] & strict_up).count() == 1)
          impl_->covers.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
    }
  });
  return impl_->covers;
}

const std::vector<int>& FinitePoset::linear_extension() const { return impl_->linear_extension; }

bool FinitePoset::operator==(const FinitePoset& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->names == other.impl_->names && impl_->up == other.impl_->up;
}

std::uint64_t FinitePoset::fingerprint() const {
  Fnv1a h;
  h.add_int(static_cast<std::int64_t>(size()));
  for (std::size_t x = 0; x < size(); ++x) {
    h.add(impl_->names[x]);
    const auto& row = impl_->up[x];
    for (auto y = row.find_first(); y != Bitset::npos; y = row.find_next(y))
      h.add_int(static_cast<std::int64_t>(y));
    h.add_int(-1);
  }
  return h.value();
}

FinitePoset build_poset(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& less_than) {
  return FinitePoset::build(std::move(elements), less_than);
}

namespace {
std::vector<int> bits_to_indices(const Bitset& bits) {
  std::vector<int> out;
  out.reserve(bits.count());
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

void check_element(const FinitePoset& space, int x) {
  if (x < 0 || static_cast<std::size_t>(x) >= space.size())
    throw UnknownElement("element index " + std::to_string(x) + " out of range");
}
}  // namespace

std::vector<int> min_open_set(const FinitePoset& space, int x) {
  check_element(space, x);
  return bits_to_indices(space.down_bits(x));
}

std::vector<int> min_closed_set(const FinitePoset& space, int x) {
  check_element(space, x);
  return bits_to_indices(space.up_bits(x));
}

FinitePoset opposite(const FinitePoset& space) {
  std::vector<Bitset> up;
  up.reserve(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) up.push_back(space.down_bits(static_cast<int>(x)));
  return FinitePoset::from_up_sets(space.names(), std::move(up));
}

FinitePoset induced_subposet(const FinitePoset& space, std::span<const int> elements) {
  const auto k = elements.size();
  std::vector<std::string> names;
  names.reserve(k);
  for (int x : elements) {
    check_element(space, x);
    names.push_back(space.name(x));
  }
  std::vector<Bitset> up(k, Bitset(k));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& row = space.up_bits(elements[i]);
    for (std::size_t j = 0; j < k; ++j) {
      if (row.test(static_cast<std::size_t>(elements[j]))) up[i].set(j);
    }
  }
  return FinitePoset::from_up_sets(std::move(names), std::move(up));
}

FinitePoset induced_subposet(const FinitePoset& space, const Bitset& elements) {
  const auto indices = bits_to_indices(elements);
  return induced_subposet(space, indices);
}

namespace {

// Depth-first extension of a chain by strictly larger elements.
template <typename Visit>
void extend_chains(const FinitePoset& space, Chain& chain, std::size_t max_length, Visit&& visit) {
  visit(chain);
  if (chain.size() >= max_length) return;
  const auto top = static_cast<std::size_t>(chain.back());
  const auto& above = space.up_bits(chain.back());
  for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
    if (y == top) continue;
    chain.push_back(static_cast<int>(y));
    extend_chains(space, chain, max_length, visit);
    chain.pop_back();
  }
}

}  // namespace

std::vector<Chain> chains(const FinitePoset& space, int length, std::size_t budget) {
  std::vector<Chain> out;
  if (length < 0) return out;
  const auto want = static_cast<std::size_t>(length) + 1;
  std::size_t visited = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    Chain chain{static_cast<int>(x)};
    extend_chains(space, chain, want, [&](const Chain& c) {
      if (++visited > budget) throw BudgetExceeded("chain enumeration exceeded its budget");
      if (c.size() == want) out.push_back(c);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Chain> all_chains(const FinitePoset& space, std::size_t budget) {
  std::vector<std::vector<Chain>> by_length;
  std::size_t visited = 0;
  for (std::size_t x = 0; x < space.size(); ++x) {
    Chain chain{static_cast<int>(x)};
    extend_chains(space, chain, space.size(), [&](const Chain& c) {
      if (++visited > budget) throw BudgetExceeded("chain enumeration exceeded its budget");
      if (by_length.size() < c.size()) by_length.resize(c.size());
      by_length[c.size() - 1].push_back(c);
    });
  }
  std::vector<Chain> out;
  out.reserve(visited);
  for (auto& bucket : by_length) {
    std::sort(bucket.begin(), bucket.end());
    for (auto& c : bucket) out.push_back(std::move(c));
  }
  return out;
}

std::vector<long long> chain_counts(const FinitePoset& space) {
  const auto n = space.size();
  std::vector<long long> counts;
  if (n == 0) return counts;
  // ending[x] = number of chains of the current length whose maximum is x
  std::vector<long long> ending(n, 1);
  counts.push_back(static_cast<long long>(n));
  const auto& order = space.linear_extension();
  while (true) {
    std::vector<long long> next(n, 0);
    long long total = 0;
    for (int x : order) {
      long long sum = 0;
      const auto& below = space.down_bits(x);
      for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
        if (static_cast<int>(y) != x) sum += ending[y];
      }
      next[static_cast<std::size_t>(x)] = sum;
      total += sum;
    }
    if (total == 0) break;
    counts.push_back(total);
    ending = std::move(next);
  }
  return counts;
}

long long euler_characteristic(const FinitePoset& space) {
  long long chi = 0;
  const auto counts = chain_counts(space);
  for (std::size_t i = 0; i < counts.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * counts[i];
  return chi;
}

std::string chain_name(const FinitePoset& space, const Chain& chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ',';
    out += space.name(chain[i]);
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Maps

PosetMap::PosetMap(FinitePoset source, FinitePoset target, std::vector<int> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size())
    throw Error("map assignment has " + std::to_string(assignment_.size()) + " entries, source has " +
                std::to_string(source_.size()) + " elements");
  for (int y : assignment_) {
    if (y < 0 || static_cast<std::size_t>(y) >= target_.size())
      throw UnknownElement("map value " + std::to_string(y) + " is not an element of the target");
  }
}

PosetMap PosetMap::identity(const FinitePoset& space) {
  std::vector<int> a(space.size());
  std::iota(a.begin(), a.end(), 0);
  return PosetMap(space, space, std::move(a));
}

PosetMap PosetMap::constant(const FinitePoset& source, const FinitePoset& target, int value) {
  return PosetMap(source, target, std::vector<int>(source.size(), value));
}

bool PosetMap::operator==(const PosetMap& other) const {
  return assignment_ == other.assignment_ && source_ == other.source_ && target_ == other.target_;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
  if (!(f.target() == g.source())) throw NotComposable("cannot compose: target of f is not the source of g");
  std::vector<int> a(f.source().size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = g(f(static_cast<int>(x)));
  return PosetMap(f.source(), g.target(), std::move(a));
}

bool is_surjective(const PosetMap& f) {
  std::vector<bool> hit(f.target().size(), false);
  for (int y : f.assignment()) hit[static_cast<std::size_t>(y)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<int> preimage(const PosetMap& f, int y) {
  std::vector<int> out;
  for (std::size_t x = 0; x < f.assignment().size(); ++x) {
    if (f.assignment()[x] == y) out.push_back(static_cast<int>(x));
  }
  return out;
}

ContinuityCheck check_continuous(const PosetMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  for (std::size_t x = 0; x < src.size(); ++x) {
    const auto& above = src.up_bits(static_cast<int>(x));
    for (auto y = above.find_first(); y != Bitset::npos; y = above.find_next(y)) {
      if (!tgt.leq(f(static_cast<int>(x)), f(static_cast<int>(y))))
        return {false, std::pair{static_cast<int>(x), static_cast<int>(y)}};
    }
  }
  return {};
}

void require_continuous(const PosetMap& f, std::string_view what) {
  const auto check = check_continuous(f);
  if (check.continuous) return;
  const auto [x, y] = *check.violation;
  throw NotContinuous(std::string(what) + " is not continuous: " + f.source().name(x) +
                      " <= " + f.source().name(y) + " but " + f.target().name(f(x)) +
                      " is not <= " + f.target().name(f(y)));
}

namespace {
struct AssignmentHash {
  std::size_t operator()(const std::vector<int>& a) const {
    Fnv1a h;
    h.add_bytes(a.data(), a.size() * sizeof(int));
    return static_cast<std::size_t>(h.value());
  }
};
}  // namespace

bool are_homotopic(const PosetMap& f, const PosetMap& g, std::size_t budget) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw NotComposable("homotopy requires maps with the same source and target");
  require_continuous(f, "f");
  require_continuous(g, "g");
  if (f.assignment() == g.assignment()) return true;

  const auto& src = f.source();
  const auto& tgt = f.target();
  const auto n = src.size();
  std::vector<std::vector<int>> strictly_below(n), strictly_above(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      if (z == x) continue;
      if (src.leq(static_cast<int>(z), static_cast<int>(x))) strictly_below[x].push_back(static_cast<int>(z));
      if (src.leq(static_cast<int>(x), static_cast<int>(z))) strictly_above[x].push_back(static_cast<int>(z));
    }
  }
  std::vector<std::vector<int>> comparable_values(tgt.size());
  for (std::size_t y = 0; y < tgt.size(); ++y) {
    for (std::size_t w = 0; w < tgt.size(); ++w) {
      if (w != y && tgt.comparable(static_cast<int>(y), static_cast<int>(w)))
        comparable_values[y].push_back(static_cast<int>(w));
    }
  }

  std::unordered_set<std::vector<int>, AssignmentHash> visited;
  std::deque<std::vector<int>> frontier;
  visited.insert(f.assignment());
  frontier.push_back(f.assignment());
  while (!frontier.empty()) {
    auto current = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t x = 0; x < n; ++x) {
      const int old_value = current[x];
      for (int w : comparable_values[static_cast<std::size_t>(old_value)]) {
        bool ok = true;
        for (int z : strictly_below[x]) {
          if (!tgt.leq(current[static_cast<std::size_t>(z)], w)) { ok = false; break; }
        }
        if (!ok) continue;
        for (int z : strictly_above[x]) {
          if (!tgt.leq(w, current[static_cast<std::size_t>(z)])) { ok = false; break; }
        }
        if (!ok) continue;
        current[x] = w;
        if (current == g.assignment()) return true;
        if (visited.insert(current).second) {
          if (visited.size() > budget) throw BudgetExceeded("homotopy search exceeded its node budget");
          frontier.push_back(current);
        }
        current[x] = old_value;
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Cores

namespace {

// Returns the point that x retracts onto if x is a beat point of the
// subspace `alive`.
std::optional<int> beat_target(const FinitePoset& space, const Bitset& alive, int x) {
  Bitset below = space.down_bits(x) & alive;
  below.reset(static_cast<std::size_t>(x));
  for (auto m = below.find_first(); m != Bitset::npos; m = below.find_next(m)) {
    if (below.is_subset_of(space.down_bits(static_cast<int>(m)))) return static_cast<int>(m);
  }
  Bitset above = space.up_bits(x) & alive;
  above.reset(static_cast<std::size_t>(x));
  for (auto m = above.find_first(); m != Bitset::npos; m = above.find_next(m)) {
    if (above.is_subset_of(space.up_bits(static_cast<int>(m)))) return static_cast<int>(m);
  }
  return std::nullopt;
}

}  // namespace

CoreReduction core_reduction(const FinitePoset& space) {
  const auto n = space.size();
  Bitset alive(n);
  alive.set();
  std::vector<int> moved_to(n, -1);

  std::priority_queue<int, std::vector<int>, std::greater<>> pending;
  std::vector<bool> queued(n, true);
  for (std::size_t x = 0; x < n; ++x) pending.push(static_cast<int>(x));

  while (!pending.empty()) {
    const int x = pending.top();
    pending.pop();
    queued[static_cast<std::size_t>(x)] = false;
    if (!alive.test(static_cast<std::size_t>(x))) continue;
    const auto target = beat_target(space, alive, x);
    if (!target) continue;
    alive.reset(static_cast<std::size_t>(x));
    moved_to[static_cast<std::size_t>(x)] = *target;
    const Bitset touched = (space.up_bits(x) | space.down_bits(x)) & alive;
    for (auto z = touched.find_first(); z != Bitset::npos; z = touched.find_next(z)) {
      if (!queued[z]) {
        queued[z] = true;
        pending.push(static_cast<int>(z));
      }
    }
  }

  CoreReduction out;
  std::vector<int> core_index(n, -1);
  for (auto x = alive.find_first(); x != Bitset::npos; x = alive.find_next(x)) {
    core_index[x] = static_cast<int>(out.kept.size());
    out.kept.push_back(static_cast<int>(x));
  }
  out.retraction.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto y = static_cast<int>(x);
    while (core_index[static_cast<std::size_t>(y)] < 0) y = moved_to[static_cast<std::size_t>(y)];
    out.retraction[x] = core_index[static_cast<std::size_t>(y)];
  }
  out.core = induced_subposet(space, out.kept);
  return out;
}

FinitePoset core(const FinitePoset& space) { return core_reduction(space).core; }

bool is_contractible(const FinitePoset& space) { return core(space).size() == 1; }

}  // namespace finspace
