#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "finspace/maps.hpp"
#include "finspace/poset.hpp"

namespace finspace {

using Rng = std::mt19937_64;

/// Random order on `size` elements named p0, p1, ...: each pair of a hidden
/// random ranking is related with probability `density`, then closed.
FinitePoset random_poset(Rng& rng, std::size_t size, double density);
/// Size and density drawn uniformly from [1, max_size] and [0.15, 0.6].
FinitePoset random_poset(Rng& rng, std::size_t max_size);
/// A random poset with a top element added (contractible).
FinitePoset random_cone(Rng& rng, std::size_t max_size);

/// A uniformly chosen value among those compatible with the points already
/// assigned, in linear-extension order; restarts on dead ends and falls back
/// to a constant map.
PosetMap random_continuous_map(Rng& rng, const FinitePoset& source, const FinitePoset& target);
/// Like random_continuous_map, but retries until every target point is hit.
std::optional<PosetMap> random_continuous_surjection(Rng& rng, const FinitePoset& source, const FinitePoset& target,
                                                     int attempts = 200);

/// Non-empty random subsets, no structure.
MultiMap random_multimap(Rng& rng, const FinitePoset& source, const FinitePoset& target);

/// F(x) = union over z <= x of random seeds R(z), resampled until every
/// value is acyclic. Strongly upper semicontinuous by construction.
std::optional<MultiMap> random_susc_acyclic(Rng& rng, const FinitePoset& source, const FinitePoset& target,
                                            int attempts = 100);

/// F(x) a random subset of U_{φ(x)} containing φ(x) for a random continuous
/// φ: usc, and φ(x) is the maximum of F(x).
MultiMap random_usc_with_maxima(Rng& rng, const FinitePoset& source, const FinitePoset& target);

/// Random continuous maps from `source` into `target`, kept only if they
/// certify as Vietoris-like.
std::optional<PosetMap> random_vietoris_map(Rng& rng, const FinitePoset& source, const FinitePoset& target,
                                            int attempts = 200);

}  // namespace finspace
