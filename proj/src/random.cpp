#include "finspace/random.hpp"

#include <algorithm>
#include <numeric>

#include "finspace/homology.hpp"

namespace finspace {

namespace {

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<int> bits_of(const Bitset& b) {
  std::vector<int> out;
  for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

FinitePoset random_poset(Rng& rng, std::size_t size, double density) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::size_t> rank(size);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (rank[i] < rank[j] && coin(rng, density)) rel.emplace_back(names[i], names[j]);
    }
  }
  return build_poset(std::move(names), rel);
}

FinitePoset random_poset(Rng& rng, std::size_t max_size) {
  const auto size = 1 + uniform_index(rng, max_size);
  const double density = std::uniform_real_distribution<double>(0.15, 0.6)(rng);
  return random_poset(rng, size, density);
}

FinitePoset random_cone(Rng& rng, std::size_t max_size) {
  const auto base = random_poset(rng, max_size > 1 ? max_size - 1 : 1);
  auto names = base.names();
  std::vector<std::pair<std::string, std::string>> rel;
  for (const auto& [x, y] : base.covers()) rel.emplace_back(base.name(x), base.name(y));
  for (const auto& n : base.names()) rel.emplace_back(n, "top");
  names.push_back("top");
  return build_poset(std::move(names), rel);
}

PosetMap random_continuous_map(Rng& rng, const FinitePoset& source, const FinitePoset& target) {
  const auto& order = source.linear_extension();
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<int> a(source.size(), -1);
    bool dead = false;
    for (int x : order) {
      Bitset allowed(target.size());
      allowed.set();
      const auto& below = source.down_bits(x);
      for (auto z = below.find_first(); z != Bitset::npos; z = below.find_next(z)) {
        if (static_cast<int>(z) != x) allowed &= target.up_bits(a[z]);
      }
      const auto options = bits_of(allowed);
      if (options.empty()) {
        dead = true;
        break;
      }
      a[static_cast<std::size_t>(x)] = options[uniform_index(rng, options.size())];
    }
    if (!dead) return PosetMap(source, target, std::move(a));
  }
  return PosetMap::constant(source, target, static_cast<int>(uniform_index(rng, target.size())));
}

std::optional<PosetMap> random_continuous_surjection(Rng& rng, const FinitePoset& source, const FinitePoset& target,
                                                     int attempts) {
  for (int i = 0; i < attempts; ++i) {
    auto f = random_continuous_map(rng, source, target);
    if (is_surjective(f)) return f;
  }
  return std::nullopt;
}

MultiMap random_multimap(Rng& rng, const FinitePoset& source, const FinitePoset& target) {
  std::vector<std::vector<int>> values(source.size());
  for (auto& v : values) {
    for (std::size_t y = 0; y < target.size(); ++y) {
      if (coin(rng, 0.35)) v.push_back(static_cast<int>(y));
    }
    if (v.empty()) v.push_back(static_cast<int>(uniform_index(rng, target.size())));
  }
  return MultiMap(source, target, std::move(values));
}

std::optional<MultiMap> random_susc_acyclic(Rng& rng, const FinitePoset& source, const FinitePoset& target,
                                            int attempts) {
  for (int attempt = 0; attempt < attempts; ++attempt) {
    // Seeds are small: a point, or the down-set or up-set of a point.
    std::vector<Bitset> seed(source.size(), Bitset(target.size()));
    for (auto& s : seed) {
      const auto y = static_cast<int>(uniform_index(rng, target.size()));
      switch (uniform_index(rng, 4)) {
        case 0: s = target.down_bits(y); break;
        case 1: s = target.up_bits(y); break;
        case 2: break;
        default: s.set(static_cast<std::size_t>(y)); break;
      }
    }
    std::vector<std::vector<int>> values(source.size());
    bool ok = true;
    for (std::size_t x = 0; x < source.size() && ok; ++x) {
      Bitset v(target.size());
      const auto& below = source.down_bits(static_cast<int>(x));
      for (auto z = below.find_first(); z != Bitset::npos; z = below.find_next(z)) v |= seed[z];
      if (v.none()) {
        ok = false;
        break;
      }
      ok = is_acyclic(induced_subposet(target, v));
      values[x] = bits_of(v);
    }
    if (ok) return MultiMap(source, target, std::move(values));
  }
  return std::nullopt;
}

MultiMap random_usc_with_maxima(Rng& rng, const FinitePoset& source, const FinitePoset& target) {
  const auto phi = random_continuous_map(rng, source, target);
  std::vector<std::vector<int>> values(source.size());
  for (std::size_t x = 0; x < source.size(); ++x) {
    const int top = phi(static_cast<int>(x));
    const auto& below = target.down_bits(top);
    for (auto y = below.find_first(); y != Bitset::npos; y = below.find_next(y)) {
      if (static_cast<int>(y) == top || coin(rng, 0.5)) values[x].push_back(static_cast<int>(y));
    }
  }
  return MultiMap(source, target, std::move(values));
}

std::optional<PosetMap> random_vietoris_map(Rng& rng, const FinitePoset& source, const FinitePoset& target,
                                            int attempts) {
  for (int i = 0; i < attempts; ++i) {
    auto f = random_continuous_map(rng, source, target);
    if (!is_surjective(f)) continue;
    if (is_vietoris_like_map(f).ok) return f;
  }
  return std::nullopt;
}

}  // namespace finspace
