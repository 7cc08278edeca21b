#include "finspace/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "finspace/complex.hpp"
#include "finspace/dynamics.hpp"
#include "finspace/errors.hpp"
#include "finspace/examples.hpp"
#include "finspace/hash.hpp"
#include "finspace/homology.hpp"
#include "finspace/lefschetz.hpp"
#include "finspace/maps.hpp"
#include "finspace/random.hpp"
#include "finspace/smith.hpp"
#include "finspace/text_format.hpp"

namespace finspace {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Checks {
  std::vector<CheckResult> out;
  void add(std::string name, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), ok, std::move(detail)});
  }
};

template <typename T>
std::string tuple_text(const std::vector<T>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<long long> trimmed(std::vector<long long> betti) {
  while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
  return betti;
}

std::vector<long long> betti_of(const FinitePoset& space) {
  return trimmed(space_homology(space).profile.betti_numbers());
}

std::vector<std::string> names_of(const FinitePoset& space, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(space.name(x));
  return out;
}

std::string set_text(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

std::string certificate_text(const Certificate& cert, const FinitePoset& target) {
  if (cert.ok) return "certified on " + std::to_string(cert.chains_checked) + " chains";
  std::string out = "fails on chain " + chain_name(target, *cert.failing_chain);
  if (cert.empty_fiber) out += " (empty fiber)";
  if (cert.profile) out += ", betti " + tuple_text(trimmed(cert.profile->betti));
  return out;
}

bool fails_on(const Certificate& cert, const FinitePoset& target, const std::string& chain) {
  return !cert.ok && cert.failing_chain && chain_name(target, *cert.failing_chain) == chain;
}

std::vector<int> fixed_points(const MultiMap& F) {
  std::vector<int> out;
  for (std::size_t x = 0; x < F.source().size(); ++x) {
    if (F.contains(static_cast<int>(x), static_cast<int>(x))) out.push_back(static_cast<int>(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Worked examples

void case_ex2_3(Checks& c) {
  const auto X = fixture_poset("ex2_3/X");
  const auto Y = fixture_poset("ex2_3/Y");
  const auto f = fixture_map("ex2_3/f", X, Y);
  c.add("f continuous", check_continuous(f).continuous);
  for (std::size_t y = 0; y < Y.size(); ++y) {
    const auto fiber = preimage(f, static_cast<int>(y));
    c.add("fiber over " + Y.name(static_cast<int>(y)) + " contractible", is_contractible(induced_subposet(X, fiber)),
          set_text(names_of(X, fiber)));
  }
  const auto cert = is_vietoris_like_map(f);
  c.add("Vietoris-like check fails on (M,N)", fails_on(cert, Y, "(M,N)"), certificate_text(cert, Y));
  const auto bx = betti_of(X);
  const auto by = betti_of(Y);
  c.add("homology of X is (1,0,1)", bx == std::vector<long long>{1, 0, 1}, tuple_text(bx));
  c.add("homology of Y is (1)", by == std::vector<long long>{1}, tuple_text(by));
  int failing_dim = -1;
  try {
    invert(induced_map(f));
  } catch (const NotInvertible& e) {
    failing_dim = e.dimension();
  }
  c.add("f_* not an isomorphism in dimension 2", failing_dim == 2,
        failing_dim < 0 ? "invertible" : "first failing dimension " + std::to_string(failing_dim));
}

void case_ex2_5(Checks& c) {
  const auto X = fixture_poset("ex2_5/X");
  const auto Y = fixture_poset("ex2_5/Y");
  const auto Z = fixture_poset("ex2_5/Z");
  const auto f = fixture_map("ex2_5/f", X, Y);
  const auto g = fixture_map("ex2_5/g", Y, Z);
  const auto cg = is_vietoris_like_map(g);
  const auto cgf = is_vietoris_like_map(compose(g, f));
  const auto cf = is_vietoris_like_map(f);
  c.add("g Vietoris-like", cg.ok, certificate_text(cg, Z));
  c.add("g o f Vietoris-like", cgf.ok, certificate_text(cgf, Z));
  c.add("f fails on chain (D) with b0 = 2",
        fails_on(cf, Y, "(D)") && cf.profile && !cf.profile->betti.empty() && cf.profile->betti[0] == 2,
        certificate_text(cf, Y));
}

void case_exW(Checks& c) {
  const auto W = fixture_poset("exW/W");
  const auto X = fixture_poset("exW/X");
  const auto f = fixture_map("exW/f", W, X);
  const auto g = fixture_map("exW/g", W, X);
  c.add("f and g continuous", check_continuous(f).continuous && check_continuous(g).continuous);
  const auto cf = is_vietoris_like_map(f);
  const auto cg = is_vietoris_like_map(g);
  c.add("f Vietoris-like", cf.ok, certificate_text(cf, X));
  const auto g_a = preimage(g, X.index_of("A"));
  c.add("g fails: g^-1(A) disconnected",
        fails_on(cg, X, "(A)") && cg.profile && cg.profile->betti[0] == 2,
        certificate_text(cg, X) + ", g^-1(A) = " + set_text(names_of(W, g_a)));
  bool below = true;
  for (std::size_t w = 0; w < W.size(); ++w) below = below && X.leq(g(static_cast<int>(w)), f(static_cast<int>(w)));
  c.add("g <= f pointwise", below);
  c.add("f and g homotopic", are_homotopic(f, g));
  c.add("W acyclic", is_acyclic(W), tuple_text(betti_of(W)));
  const auto red = core_reduction(W);
  c.add("W is its own core, not contractible", red.core.size() == W.size() && !is_contractible(W),
        "core has " + std::to_string(red.core.size()) + " points");
}

void case_ex2_8(Checks& c) {
  const auto X = fixture_poset("ex2_8/X");
  const auto F = fixture_multimap("ex2_8/F", X, X);
  const auto G = fixture_multimap("ex2_8/G", X, X);
  const auto cF = is_vietoris_like_multimap(F);
  const auto cG = is_vietoris_like_multimap(G);
  c.add("F Vietoris-like", cF.ok, certificate_text(cF, X));
  c.add("G Vietoris-like", cG.ok, certificate_text(cG, X));
  c.add("G not usc", !classify_continuity(G).usc);
  const auto GF = compose_multimaps(F, G);
  const auto cGF = is_vietoris_like_multimap(GF);
  c.add("G o F fails on (A) with betti (1,1)",
        fails_on(cGF, X, "(A)") && cGF.profile && trimmed(cGF.profile->betti) == std::vector<long long>{1, 1},
        certificate_text(cGF, X) + ", G(F(A)) = " + value_name(X, GF(X.index_of("A"))));
}

void case_ex2_12(Checks& c) {
  const auto X = fixture_poset("ex2_12/X");
  const auto F = fixture_multimap("ex2_12/F", X, X);
  const auto cls = classify_continuity(F);
  c.add("F usc", cls.usc);
  c.add("F not susc", !cls.susc);
  const auto cert = is_vietoris_like_multimap(F);
  c.add("fails on chain (A,E) with betti (1,2)",
        fails_on(cert, X, "(A,E)") && cert.profile && trimmed(cert.profile->betti) == std::vector<long long>{1, 2},
        certificate_text(cert, X));
  // The fiber union over (A,E) inside Γ(F), with the product order.
  const auto g = graph(F);
  std::vector<int> members;
  for (std::size_t i = 0; i < g.pairs.size(); ++i) {
    const int x = g.pairs[i].first;
    if (X.name(x) == "A" || X.name(x) == "E") members.push_back(static_cast<int>(i));
  }
  const auto chi = euler_characteristic(induced_subposet(g.space, members));
  c.add("fiber union over (A,E) has Euler characteristic -1", chi == -1, std::to_string(chi));
}

void case_ex2_16(Checks& c) {
  const auto X = fixture_poset("ex2_16/X");
  const auto Y = fixture_poset("ex2_16/Y");
  const auto F = fixture_multimap("ex2_16/F", X, Y);
  const auto g = graph(F);
  const auto b = betti_of(g.space);
  c.add("graph of F has betti (1,1)", b == std::vector<long long>{1, 1}, tuple_text(b));
  const auto cert = is_vietoris_like_multimap(F);
  c.add("Vietoris-like check fails", !cert.ok, certificate_text(cert, X));
}

void case_ex3_9(Checks& c) {
  const auto X = fixture_poset("ex3_9/X");
  const auto Y = fixture_poset("ex3_9/Y");
  const auto T = fixture_multimap("ex3_9/T", X, Y);
  c.add("T usc", classify_continuity(T).usc);
  bool minima = true;
  for (std::size_t x = 0; x < X.size(); ++x) {
    const auto& v = T(static_cast<int>(x));
    minima = minima && std::any_of(v.begin(), v.end(), [&](int m) {
               return std::all_of(v.begin(), v.end(), [&](int y) { return Y.leq(m, y); });
             });
  }
  c.add("every value of T has a minimum", minima);
  const auto selectors = enumerate_selectors(T);
  c.add("T has no continuous selector", selectors.empty(), std::to_string(selectors.size()) + " selectors");
}

void case_ex_postA(Checks& c) {
  const auto X = fixture_poset("ex_postA/X");
  const auto f = fixture_map("ex_postA/f", X, X);
  const auto g = fixture_map("ex_postA/g", X, X);
  const auto f_prime = fixture_map("ex_postA/f_prime", X, X);
  const auto report = theorem_A(f, g);
  c.add("f Vietoris-like", report.hypotheses_hold());
  c.add("Λ(g_* o f_*^-1) = 1", report.lambda && *report.lambda == 1,
        report.lambda ? "Λ = " + report.lambda->str() : "Λ undefined");
  c.add("coincidence set is {B}", report.witness_names == std::vector<std::string>{"B"},
        set_text(report.witness_names));
  c.add("f' homotopic to f", are_homotopic(f, f_prime));
  const auto none = coincidence_points(f_prime, g);
  c.add("(f', g) has no coincidence", none.empty(), set_text(names_of(X, none)));
}

void case_ex4_2(Checks& c) {
  const auto X = fixture_poset("ex4_2/X");
  const auto F = fixture_multimap("ex4_2/F", X, X);
  c.add("F susc", classify_continuity(F).susc);
  const auto fc = F(X.index_of("C"));
  c.add("F(C) not acyclic", !is_acyclic(induced_subposet(X, fc)), value_name(X, fc));
  c.add("F has no fixed point", fixed_points(F).empty());
  c.add("X contractible", is_contractible(X));

  // Every multimap X -o X, and every composite of two Vietoris-like ones.
  const std::size_t n = X.size();
  const int subsets = (1 << n) - 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::size_t>(subsets);
  std::vector<MultiMap> vietoris;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<int>> values(n);
    std::size_t rest = code;
    for (std::size_t x = 0; x < n; ++x) {
      const auto mask = rest % static_cast<std::size_t>(subsets) + 1;
      rest /= static_cast<std::size_t>(subsets);
      for (std::size_t y = 0; y < n; ++y) {
        if (mask >> y & 1U) values[x].push_back(static_cast<int>(y));
      }
    }
    MultiMap G(X, X, std::move(values));
    if (is_vietoris_like_multimap(G).ok) vietoris.push_back(std::move(G));
  }
  std::size_t hits = 0;
  for (const auto& G0 : vietoris) {
    for (const auto& G1 : vietoris) {
      if (compose_multimaps(G0, G1) == F) ++hits;
    }
  }
  c.add("F is not a composite of two Vietoris-like multimaps on X", hits == 0,
        std::to_string(vietoris.size()) + " Vietoris-like multimaps of " + std::to_string(total) + ", " +
            std::to_string(hits) + " factorizations");
}

void case_ex4_3(Checks& c) {
  const auto X = fixture_poset("ex4_3/X");
  const auto G0 = fixture_multimap("ex4_3/G0", X, X);
  const auto G1 = fixture_multimap("ex4_3/G1", X, X);
  const auto F = fixture_multimap("ex4_3/F", X, X);
  const auto c0 = is_vietoris_like_multimap(G0);
  const auto c1 = is_vietoris_like_multimap(G1);
  c.add("G0 Vietoris-like", c0.ok, certificate_text(c0, X));
  c.add("G1 Vietoris-like", c1.ok, certificate_text(c1, X));
  c.add("G1 o G0 equals the tabulated F", compose_multimaps(G0, G1) == F);
  const auto cF = is_vietoris_like_multimap(F);
  c.add("F not Vietoris-like", !cF.ok, certificate_text(cF, X));
  const auto report = theorem_C({G0, G1});
  c.add("Λ(G1_* o G0_*) != 0", report.lambda && *report.lambda != 0,
        report.lambda ? "Λ = " + report.lambda->str() : "Λ undefined");
  const auto fixed = names_of(X, fixed_points(F));
  const bool has_c = std::count(fixed.begin(), fixed.end(), "C") > 0;
  const bool has_d = std::count(fixed.begin(), fixed.end(), "D") > 0;
  c.add("C and D are fixed points of F", has_c && has_d, "fixed points " + set_text(fixed));
  const auto b = betti_of(graph(F).space);
  c.add("graph of F has betti (1,1)", b == std::vector<long long>{1, 1}, tuple_text(b));
}

const std::map<std::string, void (*)(Checks&), std::less<>>& example_table() {
  static const std::map<std::string, void (*)(Checks&), std::less<>> table = {
      {"ex2_3", case_ex2_3},   {"ex2_5", case_ex2_5},   {"exW", case_exW},
      {"ex2_8", case_ex2_8},   {"ex2_12", case_ex2_12}, {"ex2_16", case_ex2_16},
      {"ex3_9", case_ex3_9},   {"ex_postA", case_ex_postA}, {"ex4_2", case_ex4_2},
      {"ex4_3", case_ex4_3}};
  return table;
}

// ---------------------------------------------------------------------------
// Randomized suites

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Corpus {
 public:
  Corpus(std::string name, std::uint64_t seed, std::size_t instances, std::size_t max_size)
      : seed_(seed), instances_(instances), max_size_(max_size) {
    result_.name = std::move(name);
    result_.seed = seed;
    Fnv1a h;
    h.add(result_.name);
    name_hash_ = h.value();
  }

  std::size_t max_size() const { return max_size_; }

  /// `body` returns false when its generator gave up; the instance is then
  /// redrawn from the same stream.
  SuiteResult run(const std::function<bool(Rng&, Corpus&)>& body) {
    const auto start = Clock::now();
    std::size_t redraws = 0;
    for (std::size_t i = 0; i < instances_; ++i) {
      Rng rng(splitmix(seed_ ^ splitmix(name_hash_ + i)));
      current_ = i;
      int tries = 0;
      while (!body(rng, *this)) {
        ++redraws;
        if (++tries == 100) {
          result_.checks.push_back({"generate instance " + std::to_string(i), false, "generator gave up"});
          break;
        }
      }
      ++result_.instances;
    }
    std::ostringstream os;
    os << result_.instances << " instances, " << result_.informative << " informative, " << failures_
       << " counterexamples";
    if (redraws) os << ", " << redraws << " redraws";
    result_.checks.insert(result_.checks.begin(), {"no counterexample", failures_ == 0, os.str()});
    result_.seconds = seconds_since(start);
    return std::move(result_);
  }

  void informative() { ++result_.informative; }

  void counterexample(const std::string& what, const std::string& dump) {
    if (failures_++ < 5)
      result_.checks.push_back({"instance " + std::to_string(current_) + ": " + what, false, dump});
  }

  /// A fixed check attached to the suite (not an instance).
  void check(std::string name, bool ok, std::string detail = {}) {
    result_.checks.push_back({std::move(name), ok, std::move(detail)});
    if (!ok) ++failures_;
  }

 private:
  std::uint64_t seed_;
  std::size_t instances_;
  std::size_t max_size_;
  std::uint64_t name_hash_ = 0;
  std::size_t current_ = 0;
  std::size_t failures_ = 0;
  SuiteResult result_;
};

std::string dump_space(const std::string& label, const FinitePoset& X) {
  return "[" + label + "]\n" + write_poset(X);
}
std::string dump_map(const std::string& label, const PosetMap& f) { return "[" + label + "]\n" + write_map(f); }
std::string dump_multimap(const std::string& label, const MultiMap& F) {
  return "[" + label + "]\n" + write_multimap(F);
}

bool invertible(const InducedMap& m) {
  try {
    invert(m);
    return true;
  } catch (const NotInvertible&) {
    return false;
  }
}

// Vietoris-like multimap from one of the structured generators, or a raw
// random multimap that happens to certify.
std::optional<MultiMap> random_vietoris_multimap(Rng& rng, const FinitePoset& X, const FinitePoset& Y) {
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: return random_susc_acyclic(rng, X, Y);
    case 1: return random_usc_with_maxima(rng, X, Y);
    default:
      for (int i = 0; i < 20; ++i) {
        auto F = random_multimap(rng, X, Y);
        if (is_vietoris_like_multimap(F).ok) return F;
      }
      return std::nullopt;
  }
}

bool suite_lefschetz_chi(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto f = random_continuous_map(rng, X, X);
  const auto report = classical_lefschetz(f);
  if (*report.lambda != 0) c.informative();
  if (report.outcome != Outcome::Confirmed)
    c.counterexample("Λ(f) = " + report.lambda->str() + " but χ(Fix) = " + std::to_string(*report.chi_fix),
                     dump_space("X", X) + dump_map("f", f));
  return true;
}

bool suite_vietoris_iso(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto Y = random_poset(rng, std::min<std::size_t>(X.size(), 4));
  const auto f = random_vietoris_map(rng, X, Y, 50);
  if (!f) return false;
  c.informative();
  const auto sx = space_homology(X);
  const auto sy = space_homology(Y);
  if (!invertible(induced_map(*f, sx, sy)))
    c.counterexample("Vietoris-like map with non-invertible f_*", dump_space("X", X) + dump_space("Y", Y) + dump_map("f", *f));
  // Contrapositive on an unrestricted map of the same spaces.
  const auto g = random_continuous_map(rng, X, Y);
  if (!invertible(induced_map(g, sx, sy)) && is_surjective(g) && is_vietoris_like_map(g).ok)
    c.counterexample("g_* not invertible yet g certified", dump_space("X", X) + dump_space("Y", Y) + dump_map("g", g));
  return true;
}

void known_failures(Corpus& c) {
  const auto X = fixture_poset("ex2_3/X");
  const auto Y = fixture_poset("ex2_3/Y");
  const auto f = fixture_map("ex2_3/f", X, Y);
  c.check("sphere onto an interval: f_* not invertible and f not certified",
          !invertible(induced_map(f)) && !is_vietoris_like_map(f).ok);
  const auto circle = fixture_poset("models/circle4");
  const auto point = fixture_poset("ex2_5/Z");
  const auto collapse = PosetMap::constant(circle, point, 0);
  c.check("circle collapsed to a point: f_* not invertible and f not certified",
          !invertible(induced_map(collapse)) && !is_vietoris_like_map(collapse).ok);
}

bool suite_susc_acyclic(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto Y = random_poset(rng, c.max_size());
  const auto F = random_susc_acyclic(rng, X, Y, 20);
  if (!F) return false;
  c.informative();
  if (!classify_continuity(*F).susc) c.counterexample("generator produced a non-susc multimap", dump_multimap("F", *F));
  const auto cert = is_vietoris_like_multimap(*F);
  if (!cert.ok)
    c.counterexample("susc with acyclic values but " + certificate_text(cert, X),
                     dump_space("X", X) + dump_space("Y", Y) + dump_multimap("F", *F));
  return true;
}

bool suite_usc_maxima(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto Y = random_poset(rng, c.max_size());
  const auto F = random_usc_with_maxima(rng, X, Y);
  c.informative();
  if (!classify_continuity(F).usc) c.counterexample("generator produced a non-usc multimap", dump_multimap("F", F));
  const auto cert = is_vietoris_like_multimap(F);
  if (!cert.ok)
    c.counterexample("usc with maxima but " + certificate_text(cert, X),
                     dump_space("X", X) + dump_space("Y", Y) + dump_multimap("F", F));
  return true;
}

bool suite_composition(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto Y = random_poset(rng, std::min<std::size_t>(X.size(), 4));
  const auto Z = random_poset(rng, std::min<std::size_t>(Y.size(), 3));
  const auto f = random_vietoris_map(rng, X, Y, 50);
  if (!f) return false;
  const auto dump = dump_space("X", X) + dump_space("Y", Y) + dump_space("Z", Z) + dump_map("f", *f);
  if (const auto g = random_vietoris_map(rng, Y, Z, 50)) {
    c.informative();
    const auto cert = is_vietoris_like_map(compose(*g, *f));
    if (!cert.ok) c.counterexample("g o f " + certificate_text(cert, Z), dump + dump_map("g", *g));
  }
  // f and g o f Vietoris-like force g Vietoris-like.
  const auto g = random_continuous_map(rng, Y, Z);
  if (is_surjective(g) && is_vietoris_like_map(compose(g, *f)).ok) {
    c.informative();
    const auto cert = is_vietoris_like_map(g);
    if (!cert.ok) c.counterexample("f, g o f certified but g " + certificate_text(cert, Z), dump + dump_map("g", g));
  }
  return true;
}

bool suite_gf_lemma(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto Y = random_poset(rng, c.max_size());
  const auto Z = random_poset(rng, c.max_size());
  const auto G = random_vietoris_multimap(rng, Y, Z);
  if (!G) return false;
  const auto f = random_continuous_map(rng, X, Y);
  c.informative();
  const auto cert = is_vietoris_like_multimap(compose_multimaps(f, *G));
  if (!cert.ok)
    c.counterexample("G o f " + certificate_text(cert, X), dump_space("X", X) + dump_space("Y", Y) +
                                                                 dump_space("Z", Z) + dump_map("f", f) +
                                                                 dump_multimap("G", *G));
  return true;
}

bool suite_selector_lambda(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto F = random_usc_with_maxima(rng, X, X);
  const auto sx = space_homology(X);
  const auto lambda_F = lefschetz_number(induced_multimap_homology(F, sx, sx));
  const auto selectors = enumerate_selectors(F);
  if (selectors.empty()) {
    c.counterexample("usc multimap with maxima has no selector", dump_space("X", X) + dump_multimap("F", F));
    return true;
  }
  c.informative();
  for (const auto& g : selectors) {
    const auto lambda_g = lefschetz_number(induced_map(g, sx, sx));
    if (lambda_g != lambda_F) {
      c.counterexample("Λ(g) = " + lambda_g.str() + " but Λ(F_*) = " + lambda_F.str(),
                       dump_space("X", X) + dump_multimap("F", F) + dump_map("g", g));
      break;
    }
  }
  return true;
}

void record_theorem(Corpus& c, const TheoremReport& report, const std::string& dump) {
  if (report.hypotheses_hold() && report.lambda && *report.lambda != 0) c.informative();
  if (report.outcome == Outcome::Falsified)
    c.counterexample("theorem " + report.theorem + ": Λ = " + report.lambda->str() + " and no witness", dump);
  if (report.outcome == Outcome::Confirmed && report.witnesses.empty())
    c.counterexample("confirmed without witnesses", dump);
}

bool suite_theorem_a(Rng& rng, Corpus& c) {
  const auto X = rng() % 2 ? random_cone(rng, c.max_size()) : random_poset(rng, c.max_size());
  const auto Y = rng() % 2 ? random_cone(rng, 4) : random_poset(rng, std::min<std::size_t>(X.size(), 4));
  const auto f = random_vietoris_map(rng, X, Y, 50);
  if (!f) return false;
  const auto g = random_continuous_map(rng, X, Y);
  record_theorem(c, theorem_A(*f, g), dump_space("X", X) + dump_space("Y", Y) + dump_map("f", *f) + dump_map("g", g));
  return true;
}

bool suite_theorem_b(Rng& rng, Corpus& c) {
  const auto X = rng() % 2 ? random_cone(rng, c.max_size()) : random_poset(rng, c.max_size());
  const auto F = random_vietoris_multimap(rng, X, X);
  if (!F) return false;
  record_theorem(c, theorem_B(*F), dump_space("X", X) + dump_multimap("F", *F));
  return true;
}

bool suite_theorem_c(Rng& rng, Corpus& c) {
  const std::size_t factors = 2 + rng() % 2;
  std::vector<FinitePoset> spaces;
  spaces.push_back(rng() % 2 ? random_cone(rng, c.max_size()) : random_poset(rng, c.max_size()));
  for (std::size_t i = 1; i < factors; ++i) spaces.push_back(random_poset(rng, c.max_size()));
  spaces.push_back(spaces.front());
  std::vector<MultiMap> Gs;
  std::string dump;
  for (std::size_t i = 0; i < factors; ++i) {
    auto G = random_vietoris_multimap(rng, spaces[i], spaces[i + 1]);
    if (!G) return false;
    dump += dump_space("X" + std::to_string(i), spaces[i]) + dump_multimap("G" + std::to_string(i), *G);
    Gs.push_back(std::move(*G));
  }
  const auto report = theorem_C(Gs);
  record_theorem(c, report, dump);
  // Second route through the iterated graphs, on small instances.
  std::size_t graph_size = 1;
  for (const auto& s : spaces) graph_size *= s.size();
  if (report.lambda && graph_size <= 200) {
    const auto via_graphs = composition_lambda_via_graphs(Gs);
    if (via_graphs != *report.lambda)
      c.counterexample("Λ = " + report.lambda->str() + " from the product of G_i*, " + via_graphs.str() +
                           " through the iterated graphs",
                       dump);
  }
  return true;
}

bool suite_coincidence(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto Y = rng() % 2 ? random_cone(rng, 4) : random_poset(rng, std::min<std::size_t>(X.size(), 4));
  const auto F = random_usc_with_maxima(rng, X, Y);
  const auto G = random_usc_with_maxima(rng, X, Y);
  const auto dump = dump_space("X", X) + dump_space("Y", Y) + dump_multimap("F", F) + dump_multimap("G", G);
  const auto f = random_continuous_map(rng, X, Y);
  record_theorem(c, corollary_multimap_coincidence(f, F, 1 + static_cast<int>(rng() % 2)), dump + dump_map("f", f));
  for (int which = 1; which <= 3; ++which) {
    try {
      record_theorem(c, theorem_310(F, G, which), dump);
    } catch (const NoSelector&) {
      c.counterexample("usc multimap with maxima reported without selector", dump);
    }
  }
  return true;
}

bool suite_dynamics(Rng& rng, Corpus& c) {
  const bool deep = rng() % 3 == 0;
  const auto X = random_poset(rng, deep ? 3 : c.max_size());
  const auto tower = build_tower(X, deep ? 2 : 1);
  std::string dump = dump_space("X0", X);
  c.informative();
  for (int n = 0; n < tower.depth(); ++n) {
    const auto cert = is_vietoris_like_map(tower.h_maps[static_cast<std::size_t>(n)]);
    if (!cert.ok) c.counterexample("h_" + std::to_string(n) + " " + certificate_text(cert, tower.levels[n]), dump);
  }
  for (int n = 0; n < tower.depth(); ++n) {
    for (int m = n + 1; m <= tower.depth(); ++m) {
      const auto H = fiber_H(tower, n, m);
      const auto cert = is_vietoris_like_multimap(H);
      if (!cert.ok) c.counterexample("H_{" + std::to_string(n) + "," + std::to_string(m) + "} not certified", dump);
      // h_{n,m*} composed with its inverse gives the identity, Λ = χ.
      const auto top = space_homology(tower.levels[static_cast<std::size_t>(m)]);
      const auto bottom = space_homology(tower.levels[static_cast<std::size_t>(n)]);
      const auto h_star = induced_map(compose_h(tower, n, m), top, bottom);
      const auto round = compose(h_star, invert(h_star));
      const auto chi = euler_characteristic(tower.levels[static_cast<std::size_t>(n)]);
      if (!round.is_identity() || lefschetz_number(round) != chi)
        c.counterexample("h_* o h_*^-1 is not the identity", dump);
    }
  }
  // Level maps f_{n,n+1} = g_n o h_{n,n+1} for random endomorphisms g_n.
  std::vector<PosetMap> level_maps;
  for (int n = 0; n < tower.depth(); ++n) {
    const auto& Xn = tower.levels[static_cast<std::size_t>(n)];
    const auto g = random_continuous_map(rng, Xn, Xn);
    dump += dump_map("g" + std::to_string(n), g);
    level_maps.push_back(compose(g, tower.h_maps[static_cast<std::size_t>(n)]));
  }
  ApproximativeSequence seq;
  try {
    seq = attach_level_maps(tower, level_maps);
  } catch (const CertificationFailed& e) {
    c.counterexample(e.what(), dump);
    return true;
  }
  for (int n = 0; n < tower.depth(); ++n) {
    const auto& F = seq.F_maps[static_cast<std::size_t>(n)];
    const auto level = space_homology(tower.levels[static_cast<std::size_t>(n + 1)]);
    const auto lambda_F = lefschetz_number(induced_multimap_homology(F, level, level));
    const auto lambda = lambda_nm(seq, n, n + 1);
    if (lambda != lambda_F)
      c.counterexample("Λ_{n,n+1} = " + lambda.str() + " but Λ(F_*) = " + lambda_F.str() + " at n = " +
                           std::to_string(n),
                       dump);
    const auto fixed = fixed_points(F);
    auto coincide = coincidence_points(seq.f_maps[static_cast<std::size_t>(n)], tower.h_maps[static_cast<std::size_t>(n)]);
    std::sort(coincide.begin(), coincide.end());
    if (fixed != coincide) c.counterexample("fixed points of F differ from coincidences of (f, h)", dump);
  }
  return true;
}

// Problems with a Smith normal form of m, or nothing.
std::optional<std::string> smith_problem(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  if (!(snf.U * m * snf.V == snf.S)) return "S != U M V";
  if (!(snf.U * snf.U_inv).is_identity() || !(snf.U_inv * snf.U).is_identity()) return "U not unimodular";
  if (!(snf.V * snf.V_inv).is_identity() || !(snf.V_inv * snf.V).is_identity()) return "V not unimodular";
  for (std::size_t i = 0; i < snf.S.rows(); ++i) {
    for (std::size_t j = 0; j < snf.S.cols(); ++j) {
      if (i != j && snf.S(i, j) != 0) return "S not diagonal";
    }
  }
  const auto d = snf.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) return "non-positive invariant factor";
    if (i + 1 < d.size() && d[i + 1] % d[i] != 0) return "invariant factors do not divide";
  }
  if (snf.rank != rational_rank(m)) return "rank differs from the elimination rank";
  return std::nullopt;
}

std::size_t simplex_total(const SimplicialComplex& K) {
  std::size_t n = 0;
  for (int d = 0; d <= K.dimension(); ++d) n += K.count(d);
  return n;
}

void check_complex(Corpus& c, const SimplicialComplex& K, const std::string& dump) {
  for (int d = 0; d <= K.dimension() + 1; ++d) {
    const auto bd = boundary_matrix(K, d);
    if (d >= 1 && !(boundary_matrix(K, d - 1) * bd).is_zero())
      c.counterexample("boundary of boundary nonzero in dimension " + std::to_string(d), dump);
    if (const auto problem = smith_problem(bd))
      c.counterexample("Smith form of d_" + std::to_string(d) + ": " + *problem, dump);
  }
}

bool suite_homology_engine(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto dump = dump_space("X", X);
  c.informative();
  check_complex(c, order_complex(X), dump);
  const auto sub = barycentric_subdivision_space(X);
  const auto K2 = order_complex(sub);
  if (simplex_total(K2) <= 400) check_complex(c, K2, dump);
  // A random dense matrix exercises torsion and the arbitrary precision path.
  const std::size_t rows = 1 + rng() % 6;
  const std::size_t cols = 1 + rng() % 6;
  IntMatrix m(rows, cols);
  const bool huge = rng() % 4 == 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Integer v = static_cast<long long>(rng() % 21) - 10;
      if (huge) v *= Integer(1) << 62;
      m(i, j) = v;
    }
  }
  if (const auto problem = smith_problem(m)) {
    std::ostringstream os;
    os << m;
    c.counterexample("Smith form of a random matrix: " + *problem, os.str());
  }
  return true;
}

bool suite_subdivision(Rng& rng, Corpus& c) {
  const auto X = random_poset(rng, c.max_size());
  const auto sub = barycentric_subdivision_space(X);
  const auto counts = chain_counts(sub);
  long long total = 0;
  for (auto n : counts) total += n;
  if (total > 1500) return false;
  c.informative();
  const auto before = homology(order_complex(X)).summary();
  const auto after = homology(order_complex(sub)).summary();
  auto strip = [](HomologySummary s) {
    s.betti = trimmed(s.betti);
    s.torsion.resize(s.betti.size());
    return s;
  };
  if (!(strip(before) == strip(after)))
    c.counterexample("homology changed under subdivision: " + tuple_text(trimmed(before.betti)) + " vs " +
                         tuple_text(trimmed(after.betti)),
                     dump_space("X", X));
  return true;
}

struct SuiteEntry {
  PropertySuiteInfo info;
  bool (*body)(Rng&, Corpus&);
  void (*fixed)(Corpus&);
};

const std::vector<SuiteEntry>& suite_table() {
  static const std::vector<SuiteEntry> table = {
      {{"lefschetz_chi", "Λ(f) = χ(Fix(f)) for continuous endomorphisms", 500, 8}, suite_lefschetz_chi, nullptr},
      {{"vietoris_iso", "Vietoris-like maps induce invertible matrices; non-invertible ones fail the check", 200, 7},
       suite_vietoris_iso, known_failures},
      {{"susc_acyclic", "susc multimaps with acyclic values are Vietoris-like", 200, 7}, suite_susc_acyclic, nullptr},
      {{"usc_maxima", "usc multimaps whose values have maxima are Vietoris-like", 200, 7}, suite_usc_maxima, nullptr},
      {{"composition_closure", "g o f Vietoris-like for Vietoris-like f, g; f, g o f Vietoris-like force g", 200, 7},
       suite_composition, nullptr},
      {{"gf_lemma", "G o f Vietoris-like for continuous f and Vietoris-like G", 200, 7}, suite_gf_lemma, nullptr},
      {{"selector_lambda", "every selector g of a usc multimap with maxima has Λ(g) = Λ(F_*)", 200, 7},
       suite_selector_lambda, nullptr},
      {{"theorem_a", "coincidences of (f, g) when f is Vietoris-like and Λ != 0", 200, 7}, suite_theorem_a, nullptr},
      {{"theorem_b", "fixed points of Vietoris-like multimaps when Λ != 0", 200, 7}, suite_theorem_b, nullptr},
      {{"theorem_c", "fixed points of composites of Vietoris-like multimaps when Λ != 0", 200, 5}, suite_theorem_c,
       nullptr},
      {{"coincidence", "multimap coincidence results, all modes and cases", 100, 6}, suite_coincidence, nullptr},
      {{"dynamics", "subdivision towers: certified h and H, Λ consistency, fixed points as coincidences", 40, 6},
       suite_dynamics, nullptr},
      {{"homology_engine", "boundary of boundary vanishes; Smith forms reconstruct with unimodular factors", 100, 6},
       suite_homology_engine, nullptr},
      {{"subdivision_invariance", "homology of K(X) equals homology of K(X')", 100, 6}, suite_subdivision, nullptr},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& example_case_names() {
  static const std::vector<std::string> names = {"ex2_3", "ex2_5",  "exW",      "ex2_8", "ex2_12",
                                                 "ex2_16", "ex3_9", "ex_postA", "ex4_2", "ex4_3"};
  return names;
}

SuiteResult run_example_case(std::string_view name) {
  const auto& table = example_table();
  const auto it = table.find(name);
  if (it == table.end()) throw Error("no example case named '" + std::string(name) + "'");
  const auto start = Clock::now();
  Checks checks;
  try {
    it->second(checks);
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    checks.add("runs without error", false, e.what());
  }
  SuiteResult result;
  result.name = std::string(name);
  result.instances = 1;
  result.informative = 1;
  result.checks = std::move(checks.out);
  result.seconds = seconds_since(start);
  return result;
}

const std::vector<PropertySuiteInfo>& property_suites() {
  static const std::vector<PropertySuiteInfo> infos = [] {
    std::vector<PropertySuiteInfo> out;
    for (const auto& e : suite_table()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteResult run_property_suite(std::string_view name, std::uint64_t seed, std::size_t instances) {
  for (const auto& e : suite_table()) {
    if (e.info.name != name) continue;
    Corpus corpus(e.info.name, seed, instances ? instances : e.info.default_instances, e.info.max_size);
    if (e.fixed) e.fixed(corpus);
    return corpus.run(e.body);
  }
  throw Error("no property suite named '" + std::string(name) + "'");
}

}  // namespace finspace
