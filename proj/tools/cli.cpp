#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "finspace/complex.hpp"
#include "finspace/dynamics.hpp"
#include "finspace/errors.hpp"
#include "finspace/hash.hpp"
#include "finspace/homology.hpp"
#include "finspace/lefschetz.hpp"
#include "finspace/maps.hpp"
#include "finspace/suites.hpp"
#include "finspace/text_format.hpp"

namespace finspace::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string emit = "text";
  std::string poset, source, target, map, f, g;
  std::string kind = "map";
  std::string mode = "theorem-a";
  std::vector<std::string> spaces, maps, only;
  std::string maps_dir, out_dir;
  int depth = 1;
  int n = 0;
  int m = 1;
  int from = 0;
  std::uint64_t seed = 1;
  std::size_t instances = 0;
  bool no_core = false;
  bool cross_check = false;
  bool certify = false;
};

struct Report {
  json command = json::array();
  json inputs = json::object();
  json results = json::object();
  json checks = json::array();
  bool failed = false;

  void check(const std::string& name, bool ok, const std::string& detail = {}) {
    checks.push_back({{"name", name}, {"passed", ok}, {"detail", detail}});
    failed = failed || !ok;
  }
};

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << v;
  return os.str();
}

std::string read_input(Report& report, const std::string& role, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + role + " file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  Fnv1a h;
  h.add(os.str());
  report.inputs[role] = {{"path", path}, {"fnv1a", hex(h.value())}};
  return os.str();
}

FinitePoset load_poset(Report& r, const std::string& role, const std::string& path) {
  return parse_poset(read_input(r, role, path));
}

std::size_t budget_from_env() {
  const char* v = std::getenv("FINSPACE_BUDGET");
  if (!v || !*v) return kDefaultChainBudget;
  char* end = nullptr;
  const auto parsed = std::strtoull(v, &end, 10);
  if (*end != '\0' || parsed == 0) throw InputError(std::string("FINSPACE_BUDGET must be a positive integer, got '") + v + "'");
  return static_cast<std::size_t>(parsed);
}

json names_json(const FinitePoset& space, const std::vector<int>& xs) {
  json out = json::array();
  for (int x : xs) out.push_back(space.name(x));
  return out;
}

json summary_json(const HomologySummary& s) {
  json torsion = json::array();
  for (const auto& t : s.torsion) {
    json row = json::array();
    for (const auto& v : t) row.push_back(v.str());
    torsion.push_back(row);
  }
  return {{"betti", s.betti}, {"torsion", torsion}};
}

json certificate_json(const Certificate& cert, const FinitePoset& target) {
  json out = {{"ok", cert.ok}, {"chains_checked", cert.chains_checked}};
  if (cert.failing_chain) out["failing_chain"] = names_json(target, *cert.failing_chain);
  if (cert.empty_fiber) out["empty_fiber"] = true;
  if (cert.profile) out["profile"] = summary_json(*cert.profile);
  return out;
}

json lambda_json(const std::optional<Integer>& lambda) {
  return lambda ? json(lambda->str()) : json(nullptr);
}

json theorem_json(const TheoremReport& t, const FinitePoset& source) {
  json hyps = json::array();
  for (const auto& h : t.hypotheses) {
    json entry = {{"name", h.name}, {"holds", h.holds}};
    if (!h.detail.empty()) entry["detail"] = h.detail;
    hyps.push_back(entry);
  }
  json out = {{"theorem", t.theorem},
              {"outcome", to_string(t.outcome)},
              {"lambda", lambda_json(t.lambda)},
              {"hypotheses", hyps},
              {"witnesses", names_json(source, t.witnesses)}};
  if (t.chi_fix) out["chi_fix"] = *t.chi_fix;
  return out;
}

void theorem_check(Report& r, const TheoremReport& t) {
  std::string detail = to_string(t.outcome);
  if (t.lambda) detail += ", Λ = " + t.lambda->str();
  r.check("theorem " + t.theorem + " not falsified", t.outcome != Outcome::Falsified, detail);
}

// ---------------------------------------------------------------------------

void cmd_homology(const Options& o, Report& r) {
  const auto X = load_poset(r, "poset", o.poset);
  const auto sh = space_homology(X, !o.no_core);
  const auto s = sh.profile.summary();
  r.results["points"] = X.size();
  r.results["core_points"] = sh.reduction.core.size();
  r.results["contractible"] = sh.reduction.core.size() == 1;
  r.results["homology"] = summary_json(s);
  r.results["euler_characteristic"] = s.euler_characteristic();
  r.results["chain_counts"] = chain_counts(X);
  const auto chi = euler_characteristic(X);
  r.check("χ from chain counts equals χ from Betti numbers", chi == s.euler_characteristic(),
          std::to_string(chi) + " vs " + std::to_string(s.euler_characteristic()));
}

void cmd_check(const Options& o, Report& r, std::size_t budget) {
  const auto X = load_poset(r, "source", o.source);
  const auto Y = o.target.empty() ? X : load_poset(r, "target", o.target);
  if (o.kind == "map") {
    const auto f = parse_map(read_input(r, "map", o.map), X, Y);
    const auto cont = check_continuous(f);
    r.results["continuous"] = cont.continuous;
    if (cont.violation)
      r.results["violation"] = {X.name(cont.violation->first), X.name(cont.violation->second)};
    r.results["surjective"] = is_surjective(f);
    if (cont.continuous) r.results["vietoris_like"] = certificate_json(is_vietoris_like_map(f, budget), Y);
  } else if (o.kind == "multimap") {
    const auto F = parse_multimap(read_input(r, "map", o.map), X, Y);
    const auto cls = classify_continuity(F);
    r.results["usc"] = cls.usc;
    r.results["lsc"] = cls.lsc;
    r.results["susc"] = cls.susc;
    r.results["slsc"] = cls.slsc;
    bool acyclic = true;
    for (const auto& v : F.values()) acyclic = acyclic && is_acyclic(induced_subposet(Y, v));
    r.results["values_acyclic"] = acyclic;
    r.results["vietoris_like"] = certificate_json(is_vietoris_like_multimap(F, budget), X);
    r.results["selectors"] = enumerate_selectors(F, budget).size();
  } else {
    throw InputError("--kind must be map or multimap");
  }
}

void cmd_lefschetz(const Options& o, Report& r) {
  const auto X = load_poset(r, "poset", o.poset);
  const auto f = parse_map(read_input(r, "map", o.map), X, X);
  require_continuous(f, "map");
  const auto t = classical_lefschetz(f);
  r.results["lambda"] = lambda_json(t.lambda);
  r.results["fixed_points"] = names_json(X, t.witnesses);
  r.results["chi_fix"] = *t.chi_fix;
  r.check("Λ(f) = χ(Fix(f))", t.outcome == Outcome::Confirmed,
          "Λ = " + t.lambda->str() + ", χ(Fix) = " + std::to_string(*t.chi_fix));
}

void cmd_coincide(const Options& o, Report& r) {
  const auto X = load_poset(r, "source", o.source);
  const auto Y = o.target.empty() ? X : load_poset(r, "target", o.target);
  const auto f_text = read_input(r, "f", o.f);
  const auto g_text = read_input(r, "g", o.g);
  TheoremReport t;
  if (o.mode == "theorem-a") {
    t = theorem_A(parse_map(f_text, X, Y), parse_map(g_text, X, Y));
  } else if (o.mode == "corollary-1" || o.mode == "corollary-2") {
    t = corollary_multimap_coincidence(parse_map(f_text, X, Y), parse_multimap(g_text, X, Y), o.mode.back() - '0');
  } else if (o.mode == "case-1" || o.mode == "case-2" || o.mode == "case-3") {
    t = theorem_310(parse_multimap(f_text, X, Y), parse_multimap(g_text, X, Y), o.mode.back() - '0');
  } else {
    throw InputError("unknown --mode '" + o.mode + "'");
  }
  r.results = theorem_json(t, X);
  theorem_check(r, t);
}

void cmd_compose(const Options& o, Report& r) {
  if (o.spaces.empty() || o.maps.size() != o.spaces.size())
    throw InputError("compose needs one space per multimap: G_i goes from space i to space i+1, the last back to the first");
  std::vector<FinitePoset> spaces;
  for (std::size_t i = 0; i < o.spaces.size(); ++i)
    spaces.push_back(load_poset(r, "space_" + std::to_string(i), o.spaces[i]));
  std::vector<MultiMap> factors;
  for (std::size_t i = 0; i < o.maps.size(); ++i) {
    const auto& target = spaces[(i + 1) % spaces.size()];
    factors.push_back(parse_multimap(read_input(r, "multimap_" + std::to_string(i), o.maps[i]), spaces[i], target));
  }
  const auto t = theorem_C(factors);
  r.results = theorem_json(t, spaces.front());
  MultiMap composite = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) composite = compose_multimaps(composite, factors[i]);
  r.results["composite"] = write_multimap(composite);
  r.results["composite_vietoris_like"] = is_vietoris_like_multimap(composite).ok;
  theorem_check(r, t);
  if (o.cross_check && t.lambda) {
    const auto via_graphs = composition_lambda_via_graphs(factors);
    r.results["lambda_via_graphs"] = via_graphs.str();
    r.check("Λ agrees with the iterated-graph route", via_graphs == *t.lambda, via_graphs.str());
  }
}

std::vector<PosetMap> load_level_maps(const Options& o, Report& r, const Tower& tower) {
  if (o.maps_dir.empty()) throw InputError("--maps DIR is required");
  std::vector<PosetMap> out;
  for (int n = 0; n < tower.depth(); ++n) {
    const auto path = (fs::path(o.maps_dir) / ("f_" + std::to_string(n) + ".txt")).string();
    out.push_back(parse_map(read_input(r, "f_" + std::to_string(n), path), tower.levels[static_cast<std::size_t>(n + 1)],
                            tower.levels[static_cast<std::size_t>(n)]));
  }
  return out;
}

void cmd_tower(const std::string& verb, const Options& o, Report& r) {
  const auto X = load_poset(r, "poset", o.poset);
  const auto tower = build_tower(X, o.depth);
  json sizes = json::array();
  for (const auto& level : tower.levels) sizes.push_back(level.size());
  r.results["level_sizes"] = sizes;
  if (!tower.warnings.empty()) r.results["warnings"] = tower.warnings;

  if (verb == "build") {
    if (o.certify) {
      json certified = json::array();
      for (int n = 0; n < tower.depth(); ++n) {
        const auto cert = is_vietoris_like_map(tower.h_maps[static_cast<std::size_t>(n)]);
        certified.push_back(cert.ok);
        r.check("h_" + std::to_string(n) + " Vietoris-like", cert.ok);
      }
      r.results["h_certified"] = certified;
    }
    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
      for (std::size_t n = 0; n < tower.levels.size(); ++n) {
        std::ofstream(fs::path(o.out_dir) / ("level_" + std::to_string(n) + ".txt")) << write_poset(tower.levels[n]);
      }
      for (std::size_t n = 0; n < tower.h_maps.size(); ++n) {
        std::ofstream(fs::path(o.out_dir) / ("h_" + std::to_string(n) + ".txt")) << write_map(tower.h_maps[n]);
      }
      r.results["written_to"] = o.out_dir;
    }
    return;
  }

  const auto seq = attach_level_maps(tower, load_level_maps(o, r, tower));
  if (verb == "attach") {
    json levels = json::array();
    for (std::size_t n = 0; n < seq.F_maps.size(); ++n) {
      const auto& F = seq.F_maps[n];
      std::vector<int> fixed;
      for (std::size_t x = 0; x < F.source().size(); ++x) {
        if (F.contains(static_cast<int>(x), static_cast<int>(x))) fixed.push_back(static_cast<int>(x));
      }
      levels.push_back({{"level", n + 1},
                        {"certified", seq.certificates[n].ok},
                        {"fixed_points", names_json(F.source(), fixed)}});
    }
    r.results["levels"] = levels;
  } else if (verb == "lambda") {
    r.results["n"] = o.n;
    r.results["m"] = o.m;
    r.results["lambda"] = lambda_nm(seq, o.n, o.m).str();
  } else if (verb == "fixed-chains") {
    json chains = json::array();
    for (const auto& xs : fixed_chain_search(seq, o.from)) {
      json names = json::array();
      for (std::size_t k = 0; k < xs.size(); ++k) names.push_back(tower.levels[k].name(xs[k]));
      chains.push_back(names);
    }
    r.results["from"] = o.from;
    r.results["count"] = chains.size();
    r.results["chains"] = chains;
  }
}

void cmd_complex_export(const Options& o, Report& r) {
  const auto X = load_poset(r, "poset", o.poset);
  const auto K = order_complex(X);
  json f_vector = json::array();
  for (int d = 0; d <= K.dimension(); ++d) f_vector.push_back(K.count(d));
  r.results["dimension"] = K.dimension();
  r.results["f_vector"] = f_vector;
  r.results["simplices"] = export_complex(K);
}

void cmd_paper_suite(const Options& o, Report& r) {
  auto wanted = [&](const std::string& name) {
    return o.only.empty() || std::find(o.only.begin(), o.only.end(), name) != o.only.end();
  };
  auto suite_json = [](const SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return json{{"name", s.name},          {"passed", s.passed()},      {"instances", s.instances},
                {"informative", s.informative}, {"checks", checks}};
  };
  r.results["seed"] = o.seed;
  json examples = json::array();
  for (const auto& name : example_case_names()) {
    if (!wanted(name)) continue;
    const auto s = run_example_case(name);
    examples.push_back(suite_json(s));
    std::string detail;
    for (const auto& c : s.checks) {
      if (!c.passed) detail += (detail.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    }
    r.check(name, s.passed(), detail);
  }
  json suites = json::array();
  for (const auto& info : property_suites()) {
    if (!wanted(info.name)) continue;
    const auto s = run_property_suite(info.name, o.seed, o.instances);
    suites.push_back(suite_json(s));
    r.check(info.name, s.passed(), s.checks.front().detail);
  }
  r.results["examples"] = examples;
  r.results["suites"] = suites;
}

// ---------------------------------------------------------------------------

std::string error_kind(const std::exception& e) {
#define FINSPACE_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  FINSPACE_KIND(InputError)
  FINSPACE_KIND(ParseError)
  FINSPACE_KIND(CycleError)
  FINSPACE_KIND(DuplicateElement)
  FINSPACE_KIND(UnknownElement)
  FINSPACE_KIND(BudgetExceeded)
  FINSPACE_KIND(SizeBudgetExceeded)
  FINSPACE_KIND(NotContinuous)
  FINSPACE_KIND(EmptyValue)
  FINSPACE_KIND(NotSurjective)
  FINSPACE_KIND(NoSelector)
  FINSPACE_KIND(NotComposable)
  FINSPACE_KIND(IndexRange)
  FINSPACE_KIND(LevelNotContinuous)
  FINSPACE_KIND(CertificationFailed)
  FINSPACE_KIND(LevelError)
  FINSPACE_KIND(NotInvertible)
  FINSPACE_KIND(ProjectionNotIso)
#undef FINSPACE_KIND
  return "Error";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetExceeded*>(&e) || dynamic_cast<const SizeBudgetExceeded*>(&e)) return kBudgetExceeded;
  if (dynamic_cast<const CertificationFailed*>(&e)) return kFailure;
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const CycleError*>(&e) || dynamic_cast<const DuplicateElement*>(&e) ||
      dynamic_cast<const UnknownElement*>(&e) || dynamic_cast<const NotContinuous*>(&e) ||
      dynamic_cast<const EmptyValue*>(&e) || dynamic_cast<const NotSurjective*>(&e) ||
      dynamic_cast<const NoSelector*>(&e) || dynamic_cast<const NotComposable*>(&e) ||
      dynamic_cast<const IndexRange*>(&e) || dynamic_cast<const LevelError*>(&e))
    return kInputError;
  return kFailure;
}

bool is_suite_list(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& s) {
           return s.is_object() && s.contains("name") && s.contains("checks");
         });
}

// Suite results: one header per suite, one line per check. Multi-line
// details (instance dumps) are indented under their check.
void render_suites(std::ostream& out, const std::string& key, const json& suites) {
  out << key << ":" << (suites.empty() ? " none" : "") << '\n';
  for (const auto& s : suites) {
    out << "  " << s["name"].get<std::string>() << " (" << s["instances"].get<std::size_t>() << " instances, "
        << s["informative"].get<std::size_t>() << " informative)\n";
    for (const auto& c : s["checks"]) {
      out << "    " << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>();
      std::istringstream detail(c["detail"].get<std::string>());
      std::string line;
      if (std::getline(detail, line) && !line.empty()) out << ": " << line;
      out << '\n';
      while (std::getline(detail, line)) out << "        " << line << '\n';
    }
  }
}

void render_value(std::ostream& out, const std::string& key, const json& v) {
  if (is_suite_list(v)) {
    render_suites(out, key, v);
  } else if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find('\n') != std::string::npos) {
      out << key << ":\n" << s;
      if (!s.empty() && s.back() != '\n') out << '\n';
    } else {
      out << key << ": " << s << '\n';
    }
  } else {
    out << key << ": " << v.dump() << '\n';
  }
}

void render_text(std::ostream& out, const json& doc) {
  std::string command;
  for (const auto& a : doc["command"]) command += (command.empty() ? "" : " ") + a.get<std::string>();
  out << "command: " << command << '\n';
  for (const auto& [role, info] : doc["inputs"].items())
    out << "input " << role << ": " << info["path"].get<std::string>() << " (fnv1a " << info["fnv1a"].get<std::string>()
        << ")\n";
  for (const auto& [key, value] : doc["results"].items()) render_value(out, key, value);
  for (const auto& c : doc["checks"]) {
    out << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>();
    const auto detail = c["detail"].get<std::string>();
    if (!detail.empty()) out << ": " << detail;
    out << '\n';
  }
  if (doc.contains("error"))
    out << "error (" << doc["error"]["kind"].get<std::string>() << "): " << doc["error"]["message"].get<std::string>()
        << '\n';
  out << "exit status: " << doc["exit_status"].get<int>() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite T0 spaces: homology, Vietoris-like maps, Lefschetz numbers, subdivision towers", "finspace"};
  app.require_subcommand(1);
  // Subcommands hand unknown options to the parent, so --emit works anywhere.
  app.fallthrough();
  app.add_option("--emit", o.emit, "Report format")->check(CLI::IsMember({"json", "text"}));

  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers, torsion and χ of K(X)");
  homology_cmd->add_option("--poset", o.poset, "Poset file")->required();
  homology_cmd->add_flag("--no-core", o.no_core, "Compute on K(X) itself instead of on the core");

  auto* check_cmd = app.add_subcommand("check", "Continuity classes and the Vietoris-like certificate");
  check_cmd->add_option("--kind", o.kind, "map or multimap")->check(CLI::IsMember({"map", "multimap"}));
  check_cmd->add_option("--source", o.source, "Source poset file")->required();
  check_cmd->add_option("--target", o.target, "Target poset file (default: the source)");
  check_cmd->add_option("--map", o.map, "Map or multimap file")->required();

  auto* lefschetz_cmd = app.add_subcommand("lefschetz", "Λ(f), Fix(f) and χ(Fix(f)) of an endomorphism");
  lefschetz_cmd->add_option("--poset", o.poset, "Poset file")->required();
  lefschetz_cmd->add_option("--map", o.map, "Map file")->required();

  auto* coincide_cmd = app.add_subcommand("coincide", "Coincidence theorems for maps and multimaps");
  coincide_cmd->add_option("--source", o.source, "Source poset file")->required();
  coincide_cmd->add_option("--target", o.target, "Target poset file (default: the source)");
  coincide_cmd->add_option("--f", o.f, "First map or multimap file")->required();
  coincide_cmd->add_option("--g", o.g, "Second map or multimap file")->required();
  coincide_cmd
      ->add_option("--mode", o.mode,
                   "theorem-a (two maps), corollary-1|corollary-2 (map, multimap), case-1|case-2|case-3 (two multimaps)")
      ->check(CLI::IsMember({"theorem-a", "corollary-1", "corollary-2", "case-1", "case-2", "case-3"}));

  auto* compose_cmd = app.add_subcommand("compose", "Fixed points of a composite of Vietoris-like multimaps");
  compose_cmd->add_option("--spaces", o.spaces, "Poset files X_0 ... X_n")->required();
  compose_cmd->add_option("--maps", o.maps, "Multimap files G_i: X_i -o X_{i+1}, the last into X_0")->required();
  compose_cmd->add_flag("--cross-check", o.cross_check, "Also compute Λ through the iterated graphs");

  auto* tower_cmd = app.add_subcommand("tower", "Barycentric subdivision towers");
  tower_cmd->require_subcommand(1);
  auto tower_common = [&](CLI::App* sub) {
    sub->add_option("--poset", o.poset, "Base poset file")->required();
    sub->add_option("--depth", o.depth, "Number of subdivisions")->check(CLI::Range(0, 8));
  };
  auto* tower_build = tower_cmd->add_subcommand("build", "Build the tower and optionally write its levels");
  tower_common(tower_build);
  tower_build->add_option("--out", o.out_dir, "Directory for level_n.txt and h_n.txt");
  tower_build->add_flag("--certify", o.certify, "Certify every h as Vietoris-like");
  auto* tower_attach = tower_cmd->add_subcommand("attach", "Attach level maps f_n.txt: X^{n+1} -> X^n");
  tower_common(tower_attach);
  tower_attach->add_option("--maps", o.maps_dir, "Directory with f_0.txt ... f_{depth-1}.txt")->required();
  auto* tower_lambda = tower_cmd->add_subcommand("lambda", "Λ_{n,m} = Λ(f_{n,m*} o h_{n,m*}^-1)");
  tower_common(tower_lambda);
  tower_lambda->add_option("--maps", o.maps_dir, "Directory with level maps")->required();
  tower_lambda->add_option("--n", o.n, "Lower level")->required();
  tower_lambda->add_option("--m", o.m, "Upper level")->required();
  auto* tower_chains = tower_cmd->add_subcommand("fixed-chains", "Sequences x_n = h(x_{n+1}) fixed from level m on");
  tower_common(tower_chains);
  tower_chains->add_option("--maps", o.maps_dir, "Directory with level maps")->required();
  tower_chains->add_option("--from", o.from, "First level that must be fixed");

  auto* complex_cmd = app.add_subcommand("complex", "Simplicial complexes");
  complex_cmd->require_subcommand(1);
  auto* complex_export = complex_cmd->add_subcommand("export", "Write the simplices of K(X)");
  complex_export->add_option("--poset", o.poset, "Poset file")->required();

  auto* suite_cmd = app.add_subcommand("paper-suite", "Worked examples and randomized property suites");
  suite_cmd->add_option("--seed", o.seed, "Seed for the randomized suites");
  suite_cmd->add_option("--instances", o.instances, "Instances per randomized suite (0: suite default)");
  suite_cmd->add_option("--only", o.only, "Run only the named examples or suites");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  Report report;
  for (const auto& a : args) report.command.push_back(a);
  int status = kPass;
  json error;
  try {
    const auto budget = budget_from_env();
    if (homology_cmd->parsed()) cmd_homology(o, report);
    else if (check_cmd->parsed()) cmd_check(o, report, budget);
    else if (lefschetz_cmd->parsed()) cmd_lefschetz(o, report);
    else if (coincide_cmd->parsed()) cmd_coincide(o, report);
    else if (compose_cmd->parsed()) cmd_compose(o, report);
    else if (tower_build->parsed()) cmd_tower("build", o, report);
    else if (tower_attach->parsed()) cmd_tower("attach", o, report);
    else if (tower_lambda->parsed()) cmd_tower("lambda", o, report);
    else if (tower_chains->parsed()) cmd_tower("fixed-chains", o, report);
    else if (complex_export->parsed()) cmd_complex_export(o, report);
    else if (suite_cmd->parsed()) cmd_paper_suite(o, report);
    status = report.failed ? kFailure : kPass;
  } catch (const std::exception& e) {
    status = exit_code_for(e);
    error = {{"kind", error_kind(e)}, {"message", e.what()}};
    err << "error: " << e.what() << '\n';
  }

  json doc = {{"command", report.command},
              {"inputs", report.inputs},
              {"results", report.results},
              {"checks", report.checks}};
  if (!error.is_null()) doc["error"] = error;
  doc["exit_status"] = status;
  if (o.emit == "json")
    out << doc.dump(2) << '\n';
  else
    render_text(out, doc);
  return status;
}

}  // namespace finspace::cli
