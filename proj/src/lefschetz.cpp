#include "finspace/lefschetz.hpp"

#include <algorithm>

#include "finspace/errors.hpp"

namespace finspace {

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Confirmed: return "confirmed";
    case Outcome::Inconclusive: return "inconclusive";
    case Outcome::HypothesisFailed: return "hypothesis_failed";
    case Outcome::Falsified: return "falsified";
  }
  return "unknown";
}

bool TheoremReport::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

namespace {

void check_same_spaces(const FinitePoset& a_src, const FinitePoset& a_tgt, const FinitePoset& b_src,
                       const FinitePoset& b_tgt) {
  if (!(a_src == b_src) || !(a_tgt == b_tgt))
    throw NotComposable("maps must share source and target");
}

Hypothesis continuity_hypothesis(const std::string& name, const PosetMap& f) {
  const auto check = check_continuous(f);
  Hypothesis h{name, check.continuous, std::nullopt, ""};
  if (!check.continuous) {
    const auto [x, y] = *check.violation;
    h.detail = f.source().name(x) + " <= " + f.source().name(y) + " is not preserved";
  }
  return h;
}

Hypothesis vietoris_hypothesis(const std::string& name, const PosetMap& f) {
  const auto check = check_continuous(f);
  if (!check.continuous) {
    Hypothesis h = continuity_hypothesis(name, f);
    h.detail = "not continuous: " + h.detail;
    return h;
  }
  auto cert = is_vietoris_like_map(f);
  Hypothesis h{name, cert.ok, cert, ""};
  if (!cert.ok) h.detail = "fails on chain " + chain_name(f.target(), *cert.failing_chain);
  return h;
}

Hypothesis vietoris_multimap_hypothesis(const std::string& name, const MultiMap& F) {
  const auto g = graph(F);
  auto cert = is_vietoris_like_map(g.p);
  Hypothesis h{name, cert.ok, cert, ""};
  if (!cert.ok) h.detail = "fails on chain " + chain_name(F.source(), *cert.failing_chain);
  return h;
}

void set_witnesses(TheoremReport& report, const FinitePoset& space, const std::vector<int>& witnesses) {
  report.witnesses = witnesses;
  report.witness_names.clear();
  for (int x : witnesses) report.witness_names.push_back(space.name(x));
}

template <typename Pred>
std::vector<int> scan(const FinitePoset& space, Pred&& pred) {
  std::vector<int> out;
  for (int x : space.linear_extension()) {
    if (pred(x)) out.push_back(x);
  }
  return out;
}

void finish(TheoremReport& report) {
  if (!report.hypotheses_hold()) {
    report.outcome = Outcome::HypothesisFailed;
  } else if (!report.lambda || *report.lambda == 0) {
    report.outcome = Outcome::Inconclusive;
  } else if (!report.witnesses.empty()) {
    report.outcome = Outcome::Confirmed;
  } else {
    report.outcome = Outcome::Falsified;
  }
  report.conclusion_verified = report.outcome == Outcome::Confirmed;
}

std::optional<InducedMap> try_invert(const InducedMap& m) {
  try {
    return invert(m);
  } catch (const NotInvertible&) {
    return std::nullopt;
  }
}

// F_*^{-1} = p_* o q_*^{-1}, when q_* is invertible.
std::optional<InducedMap> multimap_inverse(const MultiMap& F, const SpaceHomology& source,
                                           const SpaceHomology& target) {
  const auto g = graph(F);
  const auto on_graph = space_homology(g.space);
  const auto q_inv = try_invert(induced_map(g.q, on_graph, target));
  if (!q_inv) return std::nullopt;
  return compose(induced_map(g.p, on_graph, source), *q_inv);
}

std::optional<InducedMap> try_multimap_homology(const MultiMap& F, const SpaceHomology& source,
                                                const SpaceHomology& target) {
  try {
    return induced_multimap_homology(F, source, target);
  } catch (const ProjectionNotIso&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<int> coincidence_points(const PosetMap& f, const PosetMap& g) {
  check_same_spaces(f.source(), f.target(), g.source(), g.target());
  return scan(f.source(), [&](int x) { return f(x) == g(x); });
}

TheoremReport theorem_A(const PosetMap& f, const PosetMap& g) {
  check_same_spaces(f.source(), f.target(), g.source(), g.target());
  TheoremReport report;
  report.theorem = "A";
  report.hypotheses.push_back(vietoris_hypothesis("f Vietoris-like", f));
  report.hypotheses.push_back(continuity_hypothesis("g continuous", g));
  if (check_continuous(f).continuous && check_continuous(g).continuous) {
    const auto sx = space_homology(f.source());
    const auto sy = space_homology(f.target());
    if (auto f_inv = try_invert(induced_map(f, sx, sy)))
      report.lambda = lefschetz_number(compose(induced_map(g, sx, sy), *f_inv));
  }
  set_witnesses(report, f.source(), coincidence_points(f, g));
  finish(report);
  return report;
}

TheoremReport theorem_B(const MultiMap& F) {
  if (!(F.source() == F.target())) throw NotComposable("fixed points need a multimap from a space to itself");
  TheoremReport report;
  report.theorem = "B";
  report.hypotheses.push_back(vietoris_multimap_hypothesis("F Vietoris-like", F));
  const auto sx = space_homology(F.source());
  if (auto star = try_multimap_homology(F, sx, sx)) report.lambda = lefschetz_number(*star);
  set_witnesses(report, F.source(), scan(F.source(), [&](int x) { return F.contains(x, x); }));
  finish(report);
  return report;
}

namespace {
MultiMap compose_all(const std::vector<MultiMap>& factors) {
  if (factors.empty()) throw NotComposable("empty composition");
  MultiMap composed = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) composed = compose_multimaps(composed, factors[i]);
  return composed;
}
}  // namespace

TheoremReport theorem_C(const std::vector<MultiMap>& factors) {
  const MultiMap composed = compose_all(factors);
  if (!(composed.source() == composed.target()))
    throw NotComposable("composition must start and end at the same space");
  TheoremReport report;
  report.theorem = "C";
  for (std::size_t i = 0; i < factors.size(); ++i)
    report.hypotheses.push_back(vietoris_multimap_hypothesis("G" + std::to_string(i) + " Vietoris-like", factors[i]));

  std::vector<SpaceHomology> spaces;
  spaces.push_back(space_homology(factors.front().source()));
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) spaces.push_back(space_homology(factors[i].target()));
  spaces.push_back(spaces.front());

  std::optional<InducedMap> product = identity_map(spaces.front().profile);
  for (std::size_t i = 0; i < factors.size() && product; ++i) {
    auto star = try_multimap_homology(factors[i], spaces[i], spaces[i + 1]);
    if (!star) {
      product.reset();
      break;
    }
    product = compose(*star, *product);
  }
  if (product) report.lambda = lefschetz_number(*product);
  set_witnesses(report, composed.source(), scan(composed.source(), [&](int x) { return composed.contains(x, x); }));
  finish(report);
  return report;
}

Integer composition_lambda_via_graphs(const std::vector<MultiMap>& factors) {
  const MultiMap composed = compose_all(factors);
  if (!(composed.source() == composed.target()))
    throw NotComposable("composition must start and end at the same space");
  GraphSpace current = graph(factors.front());
  PosetMap p_total = current.p;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    GraphSpace next = graph(compose_multimaps(current.q, factors[i]));
    p_total = compose(p_total, next.p);
    current = std::move(next);
  }
  const auto base = space_homology(composed.source());
  const auto top = space_homology(current.space);
  InducedMap p_inv;
  try {
    p_inv = invert(induced_map(p_total, top, base));
  } catch (const NotInvertible& e) {
    throw ProjectionNotIso("composite projection is not a homology isomorphism (dimension " +
                           std::to_string(e.dimension()) + ")");
  }
  return lefschetz_number(compose(induced_map(current.q, top, base), p_inv));
}

TheoremReport classical_lefschetz(const PosetMap& f) {
  if (!(f.source() == f.target())) throw NotComposable("Lefschetz number needs an endomorphism");
  require_continuous(f, "map");
  TheoremReport report;
  report.theorem = "classical";
  report.hypotheses.push_back(continuity_hypothesis("f continuous", f));
  const auto sx = space_homology(f.source());
  report.lambda = lefschetz_number(induced_map(f, sx, sx));
  const auto fixed = scan(f.source(), [&](int x) { return f(x) == x; });
  set_witnesses(report, f.source(), fixed);
  std::vector<int> sorted = fixed;
  std::sort(sorted.begin(), sorted.end());
  report.chi_fix = euler_characteristic(induced_subposet(f.source(), sorted));
  report.outcome = (*report.lambda == *report.chi_fix) ? Outcome::Confirmed : Outcome::Falsified;
  report.conclusion_verified = report.outcome == Outcome::Confirmed;
  return report;
}

TheoremReport corollary_multimap_coincidence(const PosetMap& f, const MultiMap& F, int mode) {
  check_same_spaces(f.source(), f.target(), F.source(), F.target());
  if (mode != 1 && mode != 2) throw Error("coincidence corollary mode must be 1 or 2");
  TheoremReport report;
  report.theorem = "corollary-" + std::to_string(mode);
  const auto sx = space_homology(f.source());
  const auto sy = space_homology(f.target());
  const bool f_continuous = check_continuous(f).continuous;
  if (mode == 1) {
    report.hypotheses.push_back(vietoris_hypothesis("f Vietoris-like", f));
    if (f_continuous) {
      const auto f_inv = try_invert(induced_map(f, sx, sy));
      const auto star = try_multimap_homology(F, sx, sy);
      if (f_inv && star) report.lambda = lefschetz_number(compose(*star, *f_inv));
    }
  } else {
    report.hypotheses.push_back(continuity_hypothesis("f continuous", f));
    const auto g = graph(F);
    auto cert = is_vietoris_like_map(g.q);
    Hypothesis h{"second projection of graph(F) Vietoris-like", cert.ok, cert, ""};
    if (!cert.ok) h.detail = "fails on chain " + chain_name(F.target(), *cert.failing_chain);
    report.hypotheses.push_back(std::move(h));
    if (f_continuous) {
      if (const auto inverse = multimap_inverse(F, sx, sy))
        report.lambda = lefschetz_number(compose(induced_map(f, sx, sy), *inverse));
    }
  }
  set_witnesses(report, f.source(), scan(f.source(), [&](int x) { return F.contains(x, f(x)); }));
  finish(report);
  return report;
}

namespace {

std::optional<PosetMap> first_vietoris_selector(const std::vector<PosetMap>& selectors) {
  for (const auto& s : selectors) {
    if (is_vietoris_like_map(s).ok) return s;
  }
  return std::nullopt;
}

}  // namespace

TheoremReport theorem_310(const MultiMap& F, const MultiMap& G, int which) {
  if (!(F.source() == G.source()) || !(F.target() == G.target()))
    throw NotComposable("multimaps must share source and target");
  if (which < 1 || which > 3) throw Error("coincidence theorem case must be 1, 2 or 3");
  TheoremReport report;
  report.theorem = "3.10-case-" + std::to_string(which);
  const auto sx = space_homology(F.source());
  const auto sy = space_homology(F.target());

  const auto g_selectors = enumerate_selectors(G);
  if (g_selectors.empty()) throw NoSelector("G has no continuous selector");

  if (which == 1 || which == 3) {
    const auto g = first_vietoris_selector(g_selectors);
    report.hypotheses.push_back({"G has a Vietoris-like selector", g.has_value(), std::nullopt,
                                 g ? "" : "none of the continuous selectors of G is Vietoris-like"});
    if (which == 1) report.hypotheses.push_back(vietoris_multimap_hypothesis("F Vietoris-like", F));
    std::optional<PosetMap> f_selector;
    if (which == 3) {
      const auto f_selectors = enumerate_selectors(F);
      if (f_selectors.empty()) throw NoSelector("F has no continuous selector");
      f_selector = f_selectors.front();
    }
    if (g) {
      if (const auto g_inv = try_invert(induced_map(*g, sx, sy))) {
        if (which == 1) {
          if (const auto star = try_multimap_homology(F, sx, sy))
            report.lambda = lefschetz_number(compose(*star, *g_inv));
        } else {
          report.lambda = lefschetz_number(compose(induced_map(*f_selector, sx, sy), *g_inv));
        }
      }
    }
  } else {
    const auto g = graph(F);
    auto cert = is_vietoris_like_map(g.q);
    Hypothesis h{"second projection of graph(F) Vietoris-like", cert.ok, cert, ""};
    if (!cert.ok) h.detail = "fails on chain " + chain_name(F.target(), *cert.failing_chain);
    report.hypotheses.push_back(std::move(h));
    if (const auto inverse = multimap_inverse(F, sx, sy))
      report.lambda = lefschetz_number(compose(induced_map(g_selectors.front(), sx, sy), *inverse));
  }

  set_witnesses(report, F.source(), scan(F.source(), [&](int x) {
                  const auto& a = F(x);
                  const auto& b = G(x);
                  std::vector<int> common;
                  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                  return !common.empty();
                }));
  finish(report);
  return report;
}

}  // namespace finspace
