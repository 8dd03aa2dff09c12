#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "khtot/cube.hpp"
#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/json_io.hpp"
#include "khtot/perturbations.hpp"
#include "khtot/rules.hpp"
#include "khtot/sampling.hpp"
#include "khtot/uniqueness.hpp"

namespace khtot::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  int max_crossings = -1;
  std::string rules;
  std::string pd;
  std::string file;
  std::string fixture;
  int n = 0;
  int k = 0;
  int l = 0;
  int index = 0;
  std::string which;
  std::string scope = "dim2";
  bool normalize = false;
  int samples = 0;
  std::optional<int> q;
};

using Input = std::variant<PlanarDiagram, ResolutionConfiguration>;

Input load_input(const Options& o) {
  const int given = !o.pd.empty() + !o.file.empty() + !o.fixture.empty();
  if (given != 1) throw UsageError("exactly one of --pd, --file, --fixture is required");
  if (!o.pd.empty()) return parse_pd(o.pd);
  if (!o.fixture.empty()) {
    FixtureSpec spec{o.fixture, o.n, o.k, o.l, o.index, o.fixture};
    return fixture(spec);
  }
  std::ifstream in(o.file);
  if (!in) throw UsageError("cannot open " + o.file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSyntax, e.what());
  }
  if (j.is_object() && j.contains("circles")) return configuration_from_json(j);
  return diagram_from_json(j);
}

PlanarDiagram as_diagram(const Input& in) {
  if (const auto* d = std::get_if<PlanarDiagram>(&in)) return *d;
  return configuration_to_diagram(std::get<ResolutionConfiguration>(in));
}

ResolutionConfiguration as_configuration(const Input& in) {
  if (const auto* c = std::get_if<ResolutionConfiguration>(&in)) return *c;
  throw UsageError("this subcommand needs a configuration (catalog2 fixture or --file)");
}

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::Tree: return "tree";
    case ComponentKind::DualTree: return "dual_tree";
    case ComponentKind::Neither: return "neither";
  }
  return "?";
}

std::string monomial_text(Monomial m, int circles) {
  if (m == 0) return "1";
  std::string s;
  for (int i = 0; i < circles; ++i) {
    if (m >> i & 1) s += "x" + std::to_string(i);
  }
  return s;
}

std::string vector_text(const CubeVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [u, m] : v) {
    if (!s.empty()) s += " + ";
    s += "[" + std::to_string(u) + "]" + monomial_text(m, 64);
  }
  return s;
}

std::string config_text(const ResolutionConfiguration& c) {
  std::ostringstream os;
  for (int i = 0; i < c.circle_count(); ++i) {
    os << "  circle " << i << ":";
    for (int e : c.circle(i)) os << ' ' << arc_of(e) << (e & 1 ? 'b' : 'a') << side_char(c.side(e));
    os << '\n';
  }
  return os.str();
}

Json classification_json(const Classification& cl) {
  Json j = Json::array();
  for (const auto& comp : cl.components) {
    j.push_back({{"circles", comp.circles}, {"arcs", comp.arcs}, {"kind", kind_name(comp.kind)}});
  }
  return j;
}

// ---------------------------------------------------------------------------

int cmd_parse(const Options& o, std::ostream& out) {
  const Input in = load_input(o);
  if (const auto* dp = std::get_if<PlanarDiagram>(&in)) {
    PlanarDiagram d = *dp;
    if (o.normalize && !d.oriented()) d = with_inferred_orientation(d);
    const bool planar = is_planar(d);
    if (o.json) {
      out << Json{{"diagram", to_json(d)}, {"pd", to_pd_text(d)}, {"planar", planar},
                  {"n_plus", d.oriented() ? d.positive_crossings() : 0},
                  {"n_minus", d.oriented() ? d.negative_crossings() : 0}}
                 .dump(2)
          << '\n';
    } else {
      out << "name       " << (d.name.empty() ? "-" : d.name) << '\n'
          << "pd         " << to_pd_text(d) << '\n'
          << "crossings  " << d.crossing_count() << '\n'
          << "free loops " << d.free_loops << '\n'
          << "planar     " << (planar ? "yes" : "no") << '\n';
      if (d.oriented()) {
        out << "n+ n-      " << d.positive_crossings() << ' ' << d.negative_crossings() << '\n';
      }
    }
    return planar ? 0 : 1;
  }
  const auto& c = std::get<ResolutionConfiguration>(in);
  const bool planar = is_planar(c);
  const auto cl = classify(c);
  if (o.json) {
    out << Json{{"configuration", to_json(c)}, {"planar", planar},
                {"starting", c.circle_count()}, {"ending", cl.ending.count},
                {"components", classification_json(cl)}}
               .dump(2)
        << '\n';
  } else {
    out << "dimension  " << c.dimension() << '\n'
        << "circles    " << c.circle_count() << " -> " << cl.ending.count << '\n'
        << "planar     " << (planar ? "yes" : "no") << '\n'
        << config_text(c);
    for (const auto& comp : cl.components) {
      out << "  component of " << comp.arcs.size() << " arcs: " << kind_name(comp.kind) << '\n';
    }
  }
  return planar ? 0 : 1;
}

int cmd_homology(const Options& o, std::ostream& out) {
  PlanarDiagram d = as_diagram(load_input(o));
  if (o.normalize && !d.oriented()) d = with_inferred_orientation(d);
  const int limit = o.max_crossings > 0 ? o.max_crossings : 10;
  const auto table = khovanov_homology(d, limit);
  const auto euler = euler_characteristic(table);
  const auto expected = bracket_to_euler(d, kauffman_bracket(d, std::max(limit, 16)));
  const bool match = euler == expected;
  if (o.json) {
    Json e = Json::object();
    Json b = Json::object();
    for (const auto& [q, c] : euler) e[std::to_string(q)] = c;
    for (const auto& [q, c] : expected) b[std::to_string(q)] = c;
    out << Json{{"diagram", d.name}, {"table", to_json(table)},
                {"bracket_check", {{"euler", e}, {"bracket", b}, {"match", match}}}}
               .dump(2)
        << '\n';
  } else {
    out << std::setw(4) << "h" << std::setw(5) << "q" << std::setw(6) << "rank" << '\n';
    for (const auto& [hq, r] : table) {
      out << std::setw(4) << hq.first << std::setw(5) << hq.second << std::setw(6) << r << '\n';
    }
    out << "euler vs bracket: " << (match ? "match" : "MISMATCH") << '\n';
  }
  return match ? 0 : 1;
}

int cmd_identities(const Options& o, std::ostream& out) {
  const PlanarDiagram d = as_diagram(load_input(o));
  std::vector<Identity> which;
  if (o.which.empty() || o.which == "all") {
    which = all_identities();
  } else {
    std::istringstream list(o.which);
    std::string item;
    while (std::getline(list, item, ',')) {
      const auto id = identity_from_string(item);
      if (!id) throw UsageError("unknown identity '" + item + "'");
      which.push_back(*id);
    }
  }
  const CubeComplex cube(d, o.max_crossings > 0 ? o.max_crossings : 8);
  bool pass = true;
  Json reports = Json::array();
  for (auto id : which) {
    const auto r = check_identity(cube, id);
    pass = pass && r.pass;
    if (o.json) {
      reports.push_back(to_json(r));
      continue;
    }
    out << std::left << std::setw(16) << to_string(id) << std::right << (r.pass ? "pass" : "FAIL")
        << std::setw(8) << r.elapsed_ms << " ms  " << r.generators_checked << " generators\n";
    if (r.witness) {
      out << "  witness [" << r.witness->vertex << "]" << monomial_text(r.witness->monomial, 64)
          << " -> " << vector_text(r.witness->value) << '\n';
    }
  }
  if (o.json) out << (reports.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return pass ? 0 : 1;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  std::string which = o.which;
  if (which.empty()) which = o.fixture;
  LemmaReport r;
  if (which == "figure4" || which == "lemma35") {
    r = lemma35(o.n);
  } else if (which == "figure5" || which == "lemma36") {
    r = lemma36(o.k, o.l);
  } else if (which == "figure6" || which == "lemma38") {
    r = lemma38(o.k, o.l);
  } else {
    throw UsageError("lemma needs --fixture figure4|figure5|figure6");
  }
  if (o.json) {
    out << to_json(r).dump(2) << '\n';
  } else {
    auto faces = [](const CompositionResult& c) {
      std::string s;
      for (const auto& p : c.contributions) s += " " + std::to_string(p.middle);
      return s.empty() ? std::string(" none") : s;
    };
    out << "input         " << vector_text(r.input) << '\n'
        << "h o d1        " << vector_text(r.h_d1.total) << "  (expected "
        << vector_text(r.expected_h_d1) << ")\n"
        << "  via" << faces(r.h_d1) << '\n'
        << "d1 o h        " << vector_text(r.d1_h.total) << "  (expected "
        << vector_text(r.expected_d1_h) << ")\n"
        << "  via" << faces(r.d1_h) << '\n'
        << "status        " << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  return r.pass() ? 0 : 1;
}

void print_report_text(const UniquenessReport& r, std::ostream& out) {
  out << r.family << " at (" << r.bidegree.h << "," << r.bidegree.q << "): " << r.variables
      << " variables, " << r.relations << " relations, rules";
  for (auto rule : r.rules) out << ' ' << to_string(rule);
  out << '\n';
  for (const auto& e : r.entries) {
    out << "  " << std::left << std::setw(14) << e.id << std::right << "dim " << e.dim
        << (e.agrees_with_sss ? "  agrees" : "  DISAGREES") << '\n';
  }
}

int cmd_uniqueness(const Options& o, std::ostream& out) {
  UniquenessScope scope;
  if (o.scope == "dim2") {
    scope.kind = UniquenessScope::Kind::Dim2;
  } else if (o.scope == "trees_up_to") {
    scope.kind = UniquenessScope::Kind::TreesUpTo;
    scope.n = o.n;
  } else if (o.scope == "custom") {
    const auto c = as_configuration(load_input(o));
    scope.kind = UniquenessScope::Kind::Custom;
    scope.family = close_under_duality({c}, {"input"});
    scope.bidegree = {c.dimension(), o.q.value_or(2 * c.dimension())};
  } else {
    throw UsageError("--scope must be dim2, trees_up_to or custom");
  }
  const auto cert = o.rules.empty() ? verify_uniqueness(scope)
                                    : verify_uniqueness(scope, parse_rules(o.rules));
  if (o.json) {
    if (cert.reports.size() == 1) {
      out << to_json(cert.reports[0]).dump(2) << '\n';
    } else {
      Json reports = Json::array();
      for (const auto& r : cert.reports) reports.push_back(to_json(r));
      out << Json{{"reports", reports}, {"pass", cert.pass()}}.dump(2) << '\n';
    }
  } else {
    for (const auto& r : cert.reports) print_report_text(r, out);
    out << (cert.pass() ? "pass" : "FAIL") << '\n';
  }
  return cert.pass() ? 0 : 1;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  std::vector<Rule> wanted{Rule::Filtration, Rule::Duality, Rule::Extension, Rule::Naturality};
  if (!o.rules.empty()) wanted = parse_rules(o.rules);
  auto selected = [&](const std::vector<RuleReport>& all) {
    std::vector<RuleReport> keep;
    for (const auto& r : all) {
      for (auto w : wanted) {
        if (r.rule == to_string(w)) keep.push_back(r);
      }
    }
    return keep;
  };
  const auto cat = catalog2();
  bool pass = true;
  Json entries = Json::array();
  if (!o.json) {
    out << "entry  t  s  kind       dual  sss  rules\n";
  }
  for (int i = 0; i < 8; ++i) {
    const auto& c = cat.entries[i];
    const auto cl = classify(c);
    const auto reports = selected(sss_compliance(c));
    const bool sss_nonzero = !sss_map(c).is_zero();
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.pass;
    pass = pass && ok;
    const char* kind = cl.components.empty() ? "passive" : kind_name(cl.components.front().kind);
    if (o.json) {
      Json rj = Json::array();
      for (const auto& r : reports) rj.push_back(to_json(r));
      entries.push_back({{"index", i + 1}, {"config", to_json(c)}, {"starting", c.circle_count()},
                         {"ending", cl.ending.count}, {"kind", kind}, {"dual", cat.partner[i] + 1},
                         {"sss_nonzero", sss_nonzero}, {"rules", rj}});
    } else {
      out << std::setw(5) << i + 1 << std::setw(3) << c.circle_count() << std::setw(3)
          << cl.ending.count << "  " << std::left << std::setw(11) << kind << std::right
          << std::setw(4) << cat.partner[i] + 1 << std::setw(5) << (sss_nonzero ? "yes" : "no")
          << "  " << (ok ? "pass" : "FAIL") << '\n';
    }
  }

  Json failures = Json::array();
  int failed_faces = 0;
  if (o.samples > 0) {
    const auto diagrams = small_fixture_diagrams();
    for (const auto& s : random_faces(diagrams, o.seed, o.samples)) {
      for (const auto& r : selected(sss_compliance(s.face.config))) {
        if (r.pass) continue;
        ++failed_faces;
        failures.push_back({{"diagram", diagrams[s.diagram].name}, {"u", s.u}, {"v", s.v},
                            {"report", to_json(r)}});
        break;
      }
    }
    pass = pass && failed_faces == 0;
    if (!o.json) {
      out << "random faces (seed " << o.seed << "): " << o.samples - failed_faces << "/"
          << o.samples << " pass\n";
    }
  }
  if (o.json) {
    out << Json{{"entries", entries},
                {"faces", {{"seed", o.seed}, {"count", o.samples}, {"failures", failures}}},
                {"pass", pass}}
               .dump(2)
        << '\n';
  }
  return pass ? 0 : 1;
}

int cmd_dualize(const Options& o, std::ostream& out) {
  const auto c = as_configuration(load_input(o));
  const auto dm = dual_mirror(c);
  const bool involutive = is_isomorphic(dual_mirror(dm.config).config, c);
  const bool self_dual = is_isomorphic(dm.config, c);
  if (o.json) {
    out << Json{{"dual", to_json(dm.config)}, {"end_to_start", dm.end_to_start},
                {"self_dual", self_dual}, {"involutive", involutive}}
               .dump(2)
        << '\n';
  } else {
    out << "dual mirror (" << dm.config.circle_count() << " circles, " << dm.config.arc_count()
        << " arcs)\n"
        << config_text(dm.config) << "self dual  " << (self_dual ? "yes" : "no") << '\n'
        << "involutive " << (involutive ? "yes" : "no") << '\n';
  }
  return involutive ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khovanov resolution-configuration calculus over F2", "khtot"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool input) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--seed", o.seed, "seed for randomized runs");
    sub->add_option("--max-crossings", o.max_crossings, "crossing guard rail")
        ->check(CLI::Range(1, 20));
    sub->add_option("--rules", o.rules, "comma separated rule subset");
    if (!input) return;
    sub->add_option("--pd", o.pd, "inline PD code");
    sub->add_option("--file", o.file, "diagram or configuration JSON");
    sub->add_option("--fixture", o.fixture, "named fixture");
    sub->add_option("--n", o.n);
    sub->add_option("--k", o.k);
    sub->add_option("--l", o.l);
    sub->add_option("--index", o.index);
  };

  auto* parse = app.add_subcommand("parse", "parse and validate an input");
  add_common(parse, true);
  parse->add_flag("--normalize", o.normalize, "infer orientation");
  auto* homology = app.add_subcommand("homology", "Khovanov homology with bracket cross-check");
  add_common(homology, true);
  homology->add_flag("--normalize", o.normalize, "infer orientation and shift gradings");
  auto* identities = app.add_subcommand("identities", "check the total complex identities");
  add_common(identities, true);
  identities->add_option("--which", o.which, "identity name, list or all");
  auto* lemma = app.add_subcommand("lemma", "element computations on figure fixtures");
  add_common(lemma, true);
  lemma->add_option("--which", o.which);
  auto* uniqueness = app.add_subcommand("uniqueness", "solve the rule constraint system");
  add_common(uniqueness, true);
  uniqueness->add_option("--scope", o.scope)->check(CLI::IsMember({"dim2", "trees_up_to", "custom"}));
  uniqueness->add_option("--q", o.q, "quantum degree for custom scope");
  auto* catalog = app.add_subcommand("catalog", "dimension 2 catalog and rule compliance");
  add_common(catalog, false);
  catalog->add_option("--samples", o.samples, "random faces to check")->check(CLI::Range(0, 100000));
  auto* dualize = app.add_subcommand("dualize", "dual mirror of a configuration");
  add_common(dualize, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (parse->parsed()) return cmd_parse(o, out);
    if (homology->parsed()) return cmd_homology(o, out);
    if (identities->parsed()) return cmd_identities(o, out);
    if (lemma->parsed()) return cmd_lemma(o, out);
    if (uniqueness->parsed()) return cmd_uniqueness(o, out);
    if (catalog->parsed()) return cmd_catalog(o, out);
    if (dualize->parsed()) return cmd_dualize(o, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace khtot::cli
