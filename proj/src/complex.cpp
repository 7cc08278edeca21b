#include "finspace/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "finspace/errors.hpp"

namespace finspace {

namespace {
const std::vector<Simplex> kNoSimplices;

void check_vertices(const Simplex& s, std::size_t vertex_count) {
  for (int v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= vertex_count)
      throw UnknownElement("simplex vertex " + std::to_string(v) + " out of range");
  }
}
}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertex_names,
                                                    const std::vector<Simplex>& simplices) {
  std::set<Simplex> all;
  for (Simplex s : simplices) {
    check_vertices(s, vertex_names.size());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.size() > 30) throw Error("simplex too large to close under faces");
    const std::uint32_t full = (1u << s.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      all.insert(std::move(face));
    }
  }
  return from_closed_family(std::move(vertex_names), std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_closed_family(std::vector<std::string> vertex_names,
                                                        std::vector<Simplex> simplices) {
  SimplicialComplex k;
  k.vertex_names_ = std::move(vertex_names);
  for (auto& s : simplices) {
    check_vertices(s, k.vertex_names_.size());
    if (s.empty()) continue;
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error("simplex vertices must be strictly increasing");
    const auto d = s.size() - 1;
    if (k.simplices_.size() <= d) k.simplices_.resize(d + 1);
    k.simplices_[d].push_back(std::move(s));
  }
  k.index_.resize(k.simplices_.size());
  for (std::size_t d = 0; d < k.simplices_.size(); ++d) {
    auto& list = k.simplices_[d];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) k.index_[d].emplace(list[i], static_cast<int>(i));
  }
  for (std::size_t d = 1; d < k.simplices_.size(); ++d) {
    for (const auto& s : k.simplices_[d]) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        if (!k.index_[d - 1].count(face))
          throw Error("simplex family is not closed: " + k.simplex_name(s) + " lacks face " +
                      k.simplex_name(face));
      }
    }
  }
  return k;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= simplices_.size()) return kNoSimplices;
  return simplices_[static_cast<std::size_t>(d)];
}

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::string SimplicialComplex::simplex_name(const Simplex& s) const {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += vertex_names_.at(static_cast<std::size_t>(s[i]));
  }
  return out + ")";
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target,
                             std::vector<int> vertex_assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(vertex_assignment)) {
  if (assignment_.size() != source_.vertex_count())
    throw Error("vertex assignment does not cover the source vertices");
  for (int v : assignment_) {
    if (v < 0 || static_cast<std::size_t>(v) >= target_.vertex_count())
      throw UnknownElement("vertex image " + std::to_string(v) + " out of range");
  }
  for (int d = 1; d <= source_.dimension(); ++d) {
    for (const auto& s : source_.simplices(d)) {
      Simplex image;
      for (int v : s) image.push_back(assignment_[static_cast<std::size_t>(v)]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!target_.index_of(image))
        throw NotContinuous("image of " + source_.simplex_name(s) + " is not a simplex");
    }
  }
}

std::vector<int> order_complex_vertex_of(const FinitePoset& space) {
  const auto& order = space.linear_extension();
  std::vector<int> vertex_of(space.size());
  for (std::size_t v = 0; v < order.size(); ++v) vertex_of[static_cast<std::size_t>(order[v])] = static_cast<int>(v);
  return vertex_of;
}

SimplicialComplex order_complex(const FinitePoset& space) {
  const auto& order = space.linear_extension();
  const auto vertex_of = order_complex_vertex_of(space);
  std::vector<std::string> names;
  names.reserve(order.size());
  for (int x : order) names.push_back(space.name(x));
  auto simplices = all_chains(space);
  for (auto& chain : simplices) {
    for (auto& x : chain) x = vertex_of[static_cast<std::size_t>(x)];
  }
  return SimplicialComplex::from_closed_family(std::move(names), std::move(simplices));
}

FinitePoset face_poset(const SimplicialComplex& complex) {
  std::vector<std::string> names;
  std::vector<int> offset;
  int total = 0;
  for (int d = 0; d <= complex.dimension(); ++d) {
    offset.push_back(total);
    total += static_cast<int>(complex.count(d));
    for (const auto& s : complex.simplices(d)) names.push_back(complex.simplex_name(s));
  }
  const auto n = static_cast<std::size_t>(total);
  // Faces of a simplex are its facets' faces plus itself.
  std::vector<Bitset> down(n, Bitset(n));
  for (int d = 0; d <= complex.dimension(); ++d) {
    const auto& list = complex.simplices(d);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto self = static_cast<std::size_t>(offset[static_cast<std::size_t>(d)]) + i;
      down[self].set(self);
      if (d == 0) continue;
      for (std::size_t drop = 0; drop < list[i].size(); ++drop) {
        Simplex face = list[i];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        const auto f = static_cast<std::size_t>(offset[static_cast<std::size_t>(d - 1)] + *complex.index_of(face));
        down[self] |= down[f];
      }
    }
  }
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t y = 0; y < n; ++y) {
    for (auto x = down[y].find_first(); x != Bitset::npos; x = down[y].find_next(x)) up[x].set(y);
  }
  return FinitePoset::from_up_sets(std::move(names), std::move(up));
}

Subdivision subdivide(const FinitePoset& space) {
  const auto complex = order_complex(space);
  auto fp = face_poset(complex);
  const auto& order = space.linear_extension();
  std::vector<Chain> chains_of;
  chains_of.reserve(fp.size());
  std::vector<int> h;
  h.reserve(fp.size());
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const auto& s : complex.simplices(d)) {
      Chain c;
      for (int v : s) c.push_back(order[static_cast<std::size_t>(v)]);
      h.push_back(c.back());
      chains_of.push_back(std::move(c));
    }
  }
  PosetMap hmap(fp, space, std::move(h));
  return {std::move(fp), std::move(chains_of), std::move(hmap)};
}

FinitePoset barycentric_subdivision_space(const FinitePoset& space) { return face_poset(order_complex(space)); }

SimplicialComplex barycentric_subdivision_complex(const SimplicialComplex& complex) {
  return order_complex(face_poset(complex));
}

SimplicialMap induced_simplicial_map(const PosetMap& f) {
  require_continuous(f, "map");
  auto src = order_complex(f.source());
  auto tgt = order_complex(f.target());
  const auto& src_order = f.source().linear_extension();
  const auto tgt_vertex = order_complex_vertex_of(f.target());
  std::vector<int> assignment(src_order.size());
  for (std::size_t v = 0; v < src_order.size(); ++v)
    assignment[v] = tgt_vertex[static_cast<std::size_t>(f(src_order[v]))];
  return SimplicialMap(std::move(src), std::move(tgt), std::move(assignment));
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
  if (d <= 0) return IntMatrix(0, complex.count(0));
  const auto& cols = complex.simplices(d);
  IntMatrix m(complex.count(d - 1), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      m(static_cast<std::size_t>(*complex.index_of(face)), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

std::vector<IntMatrix> chain_map_of(const SimplicialMap& map) {
  const auto& src = map.source();
  const auto& tgt = map.target();
  std::vector<IntMatrix> out;
  for (int d = 0; d <= src.dimension(); ++d) {
    const auto& cols = src.simplices(d);
    IntMatrix m(tgt.count(d), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      Simplex image;
      for (int v : cols[j]) image.push_back(map.vertex_assignment()[static_cast<std::size_t>(v)]);
      int inversions = 0;
      bool degenerate = false;
      for (std::size_t a = 0; a < image.size() && !degenerate; ++a) {
        for (std::size_t b = a + 1; b < image.size(); ++b) {
          if (image[a] == image[b]) {
            degenerate = true;
            break;
          }
          if (image[a] > image[b]) ++inversions;
        }
      }
      if (degenerate) continue;
      std::sort(image.begin(), image.end());
      m(static_cast<std::size_t>(*tgt.index_of(image)), j) = (inversions % 2 == 0) ? 1 : -1;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string export_complex(const SimplicialComplex& complex) {
  std::ostringstream os;
  for (int d = 0; d <= complex.dimension(); ++d) {
    for (const auto& s : complex.simplices(d)) {
      for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? " " : "") << complex.vertex_names()[static_cast<std::size_t>(s[i])];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace finspace
