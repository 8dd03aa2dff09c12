#include <doctest.h>

#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/json_io.hpp"

using namespace khtot;

TEST_CASE("diagram round trip") {
  for (const auto& name : named_knot_names()) {
    const auto d = named_knot(name);
    const auto back = diagram_from_json(Json::parse(to_json(d).dump()));
    CHECK(back == d);
  }
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"crossings":[[1,2,3]]})")), Error);
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"crossings":[[1,2,3,4]]})")), Error);
  CHECK_THROWS_AS(diagram_from_json(Json::parse("[1]")), Error);
}

TEST_CASE("configuration round trip") {
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    CHECK(configuration_from_json(Json::parse(to_json(c).dump())) == c);
  }
  const auto c = figure6_configuration(2, 1);
  CHECK(configuration_from_json(to_json(c)) == c);
  auto j = to_json(catalog2_entry(2));
  j["arcs"][0]["ends"][0][2] = "Q";
  CHECK_THROWS_AS(configuration_from_json(j), Error);
  auto k = to_json(catalog2_entry(2));
  k["arcs"][0]["ends"][0][1] = 5;
  CHECK_THROWS_AS(configuration_from_json(k), Error);
}

TEST_CASE("report schemas") {
  const auto f = sss_map(catalog2_entry(2));
  const auto jf = to_json(f);
  CHECK(jf["bidegree"] == Json::array({2, 4}));
  CHECK(jf["entries"] == Json::parse("[[7,1]]"));

  const auto jt = to_json(khovanov_homology(named_knot("unknot")));
  CHECK(jt == Json::parse(R"([{"h":0,"q":-1,"rank":1},{"h":0,"q":1,"rank":1}])"));

  const auto ji = to_json(check_identity(named_knot("trefoil"), Identity::H1H2));
  CHECK(ji["identity"] == "h1h2");
  CHECK(ji["status"] == "pass");
  CHECK(ji["witness"].is_null());
  CHECK(ji["elapsed_ms"].is_number_integer());

  const auto c8 = catalog2_entry(8);
  const auto jr = to_json(check_filtration(
      c8, BigradedMap(basis_of(c8, BasisSide::Start), basis_of(c8, BasisSide::End), {2, 4}, {{1, 0}})));
  CHECK(jr["rule"] == "filtration");
  CHECK(jr["pass"] == false);
  CHECK(jr["witnesses"].size() >= 1);

  const auto sys = rule_constraints(catalog2_family(), {2, 4}, core_rules());
  const auto js = to_json(sys);
  CHECK(js["variables"].size() == sys.variables.size());
  CHECK(js["relations"].size() == sys.relations.size());

  const auto ju = to_json(verify_uniqueness({UniquenessScope::Kind::Dim2}).reports[0]);
  CHECK(ju["bidegree"] == Json::array({2, 4}));
  CHECK(ju["pass"] == true);
  CHECK(ju["entries"].size() == 8);
  CHECK(ju["entries"][1]["dim"] == 1);
  CHECK(ju["entries"][1]["agrees_with_sss"] == true);
}
