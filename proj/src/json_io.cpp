#include "khtot/json_io.hpp"

#include <string>

#include "khtot/error.hpp"

namespace khtot {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorKind::MalformedSyntax, "json: " + what);
}

}  // namespace

Json to_json(const PlanarDiagram& d) {
  Json j;
  j["name"] = d.name;
  j["crossings"] = Json::array();
  for (const auto& x : d.crossings) j["crossings"].push_back({x[0], x[1], x[2], x[3]});
  j["free_loops"] = d.free_loops;
  if (d.oriented()) j["signs"] = d.signs;
  return j;
}

PlanarDiagram diagram_from_json(const Json& j) {
  if (!j.is_object()) schema_error("diagram must be an object");
  PlanarDiagram d;
  try {
    d.name = j.value("name", "");
    d.free_loops = j.value("free_loops", 0);
    for (const auto& x : j.at("crossings")) {
      if (!x.is_array() || x.size() != 4) schema_error("each crossing needs four labels");
      d.crossings.push_back({x[0].get<int>(), x[1].get<int>(), x[2].get<int>(), x[3].get<int>()});
    }
    if (j.contains("signs")) d.signs = j.at("signs").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  validate(d);
  return normalize_labels(d);
}

Json to_json(const ResolutionConfiguration& c) {
  Json j;
  j["circles"] = c.circles();
  j["arcs"] = Json::array();
  for (int a = 0; a < c.arc_count(); ++a) {
    Json ends = Json::array();
    for (int end = 0; end < 2; ++end) {
      const int e = endpoint_id(a, end);
      const auto pos = c.position(e);
      ends.push_back({pos.circle, pos.index, std::string(1, side_char(c.side(e)))});
    }
    j["arcs"].push_back({{"ends", ends}});
  }
  return j;
}

ResolutionConfiguration configuration_from_json(const Json& j) {
  if (!j.is_object()) schema_error("configuration must be an object");
  try {
    const auto& circles_json = j.at("circles");
    const auto& arcs_json = j.at("arcs");
    const int arcs = static_cast<int>(arcs_json.size());
    // Slots are rebuilt from the arc ends so the two descriptions must agree.
    std::vector<std::vector<int>> circles;
    for (const auto& c : circles_json) circles.push_back(std::vector<int>(c.size(), -1));
    std::vector<Side> sides(2 * arcs, Side::L);
    for (int a = 0; a < arcs; ++a) {
      const auto& ends = arcs_json[a].at("ends");
      if (ends.size() != 2) schema_error("arc needs two ends");
      for (int end = 0; end < 2; ++end) {
        const int circle = ends[end][0].get<int>();
        const int pos = ends[end][1].get<int>();
        const auto side = ends[end][2].get<std::string>();
        if (side != "L" && side != "R") schema_error("side must be L or R");
        if (circle < 0 || circle >= static_cast<int>(circles.size()) || pos < 0 ||
            pos >= static_cast<int>(circles[circle].size())) {
          throw Error(ErrorKind::BadIndex, "arc end outside the circle list");
        }
        if (circles[circle][pos] != -1) throw Error(ErrorKind::BadIndex, "slot used twice");
        circles[circle][pos] = endpoint_id(a, end);
        sides[endpoint_id(a, end)] = side == "L" ? Side::L : Side::R;
      }
    }
    for (std::size_t c = 0; c < circles.size(); ++c) {
      for (std::size_t p = 0; p < circles[c].size(); ++p) {
        const int listed = circles_json[c][p].get<int>();
        if (circles[c][p] == -1) throw Error(ErrorKind::BadIndex, "slot without an arc");
        if (listed != circles[c][p]) throw Error(ErrorKind::BadIndex, "circle slot disagrees with arcs");
      }
    }
    return ResolutionConfiguration(std::move(circles), std::move(sides));
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
}

Json to_json(const BigradedMap& f) {
  Json j;
  j["bidegree"] = {f.bidegree().h, f.bidegree().q};
  j["entries"] = Json::array();
  for (const auto& [a, b] : f.entries()) j["entries"].push_back({a, b});
  return j;
}

Json to_json(const HomologyTable& t) {
  Json j = Json::array();
  for (const auto& [hq, rank] : t) j.push_back({{"h", hq.first}, {"q", hq.second}, {"rank", rank}});
  return j;
}

Json to_json(const CubeVector& v) {
  Json j = Json::array();
  for (const auto& [u, m] : v) j.push_back({{"vertex", u}, {"monomial", m}});
  return j;
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["identity"] = to_string(r.identity);
  j["status"] = r.pass ? "pass" : "fail";
  if (r.witness) {
    j["witness"] = {{"vertex", r.witness->vertex},
                    {"monomial", r.witness->monomial},
                    {"value", to_json(r.witness->value)}};
  } else {
    j["witness"] = nullptr;
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const RuleReport& r) {
  Json j;
  j["rule"] = r.rule;
  j["pass"] = r.pass;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) {
    Json wj{{"in", w.in}, {"out", w.out}};
    if (w.point >= 0) wj["point"] = w.point;
    if (w.symmetry >= 0) wj["symmetry"] = w.symmetry;
    j["witnesses"].push_back(wj);
  }
  return j;
}

Json to_json(const ConstraintSystem& s) {
  Json j;
  j["bidegree"] = {s.bidegree.h, s.bidegree.q};
  j["variables"] = Json::array();
  for (int v = 0; v < static_cast<int>(s.variables.size()); ++v) j["variables"].push_back(s.variable_name(v));
  j["relations"] = Json::array();
  for (std::size_t r = 0; r < s.relations.size(); ++r) {
    j["relations"].push_back({{"rule", s.relation_rule[r]}, {"vars", s.relations[r]}});
  }
  return j;
}

Json to_json(const UniquenessReport& r) {
  Json j;
  j["family"] = r.family;
  j["bidegree"] = {r.bidegree.h, r.bidegree.q};
  j["entries"] = Json::array();
  for (const auto& e : r.entries) {
    Json basis = Json::array();
    for (const auto& b : e.basis) basis.push_back(to_json(b)["entries"]);
    j["entries"].push_back(
        {{"config", e.id}, {"dim", e.dim}, {"agrees_with_sss", e.agrees_with_sss}, {"basis", basis}});
  }
  j["variables"] = r.variables;
  j["relations"] = r.relations;
  j["rules"] = Json::array();
  for (auto rule : r.rules) j["rules"].push_back(to_string(rule));
  j["pass"] = r.pass;
  return j;
}

Json to_json(const LemmaReport& r) {
  auto contributions = [](const CompositionResult& c) {
    Json j = Json::array();
    for (const auto& p : c.contributions) j.push_back({{"via", p.middle}, {"value", to_json(p.value)}});
    return j;
  };
  Json j;
  j["lemma"] = r.name;
  j["input"] = to_json(r.input);
  j["h_d1"] = {{"value", to_json(r.h_d1.total)}, {"expected", to_json(r.expected_h_d1)},
               {"faces", contributions(r.h_d1)}, {"expected_faces", r.expected_h_d1_faces}};
  j["d1_h"] = {{"value", to_json(r.d1_h.total)}, {"expected", to_json(r.expected_d1_h)},
               {"faces", contributions(r.d1_h)}, {"expected_faces", r.expected_d1_h_faces}};
  j["status"] = r.pass() ? "pass" : "fail";
  return j;
}

}  // namespace khtot
