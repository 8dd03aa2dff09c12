#include <doctest.h>

#include "khtot/cube.hpp"
#include "khtot/diagram.hpp"
#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "oracles.hpp"

using namespace khtot;

namespace {

ErrorKind kind_of(std::string_view text) {
  try {
    parse_pd(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::MalformedSyntax;
}

std::uint32_t all_ones(int n) { return (1u << n) - 1; }

}  // namespace

TEST_CASE("parse_pd accepts the smallest kink") {
  const auto d = parse_pd("X(1,2,2,1)");
  CHECK(d.crossing_count() == 1);
  CHECK(d.edge_count() == 2);
}

TEST_CASE("parse_pd trefoil uses every label twice") {
  const auto d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  CHECK(d.crossing_count() == 3);
  std::map<int, int> seen;
  for (const auto& x : d.crossings) {
    for (int a : x) ++seen[a];
  }
  CHECK(seen.size() == 6);
  for (const auto& [label, count] : seen) CHECK(count == 2);
  CHECK(is_planar(d));
}

TEST_CASE("parse_pd errors") {
  CHECK(kind_of("X(1,2,3)") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("X(1,2,3,4") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("Y(1,2,2,1)") == ErrorKind::MalformedSyntax);
  CHECK(kind_of("X(1,2,3,4)") == ErrorKind::BadIncidence);
  CHECK(kind_of("") == ErrorKind::EmptyDiagram);
}

TEST_CASE("free loops and round trip through text") {
  const auto u = parse_pd("U");
  CHECK(u.crossing_count() == 0);
  CHECK(u.free_loops == 1);
  for (const auto& name : named_knot_names()) {
    const auto d = named_knot(name);
    const auto back = parse_pd(to_pd_text(d));
    CHECK(back.crossings == d.crossings);
    CHECK(back.free_loops == d.free_loops);
  }
}

TEST_CASE("labels are renumbered by first appearance") {
  const auto d = parse_pd("X(7,3,3,7)");
  CHECK(d.crossings[0] == std::array<int, 4>{1, 2, 2, 1});
}

TEST_CASE("mirror is an involution and swaps smoothings") {
  std::vector<PlanarDiagram> ds{named_knot("kink"), named_knot("trefoil"), figure4_diagram(2),
                                named_knot("figure_eight")};
  for (const auto& d : ds) {
    const auto m = mirror_diagram(d);
    CHECK(normalize_labels(mirror_diagram(m)).crossings == normalize_labels(d).crossings);
    const int n = d.crossing_count();
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      CHECK(oracle::circle_count(m, u) == oracle::circle_count(d, all_ones(n) ^ u));
    }
  }
}

TEST_CASE("kink mirror and figure4 mirror, traced") {
  const auto kink = named_knot("kink");
  CHECK(resolve(mirror_diagram(kink), {0}).circle_count() == resolve(kink, {1}).circle_count());
  const auto f = figure4_diagram(2);
  CHECK(resolve(mirror_diagram(f), {1, 1, 1}).circle_count() ==
        resolve(f, {0, 0, 0}).circle_count());
}

TEST_CASE("configuration_to_diagram realizes the configuration") {
  const ResolutionConfiguration merge({{0}, {1}}, {Side::R, Side::R});
  const auto dm = configuration_to_diagram(merge);
  CHECK(dm.crossing_count() == 1);
  CHECK(oracle::circle_count(dm, 0) == 2);

  const auto d8 = configuration_to_diagram(catalog2_entry(8));
  CHECK(d8.crossing_count() == 2);
  CHECK(oracle::circle_count(d8, 0) == 1);
  CHECK(oracle::circle_count(d8, 3) == 1);

  const auto d4 = configuration_to_diagram(figure4_configuration(2));
  CHECK(d4.crossing_count() == 3);
  CHECK(oracle::circle_count(d4, 0) == 3);
}

TEST_CASE("resolve agrees with the label-gluing oracle") {
  for (const auto& d : {named_knot("trefoil"), named_knot("figure_eight"), named_knot("hopf"),
                        figure5_diagram(2, 1), figure6_diagram(2, 1)}) {
    const int n = d.crossing_count();
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
      Choice c(n);
      for (int i = 0; i < n; ++i) c[i] = u >> i & 1;
      CHECK(resolve(d, c).circle_count() == oracle::circle_count(d, u));
    }
  }
}

TEST_CASE("orientation signs") {
  const auto t = named_knot("trefoil");
  REQUIRE(t.oriented());
  CHECK((t.positive_crossings() == 3 || t.negative_crossings() == 3));
  const auto e = named_knot("figure_eight");
  CHECK(e.positive_crossings() == 2);
  CHECK(e.negative_crossings() == 2);
  const auto h = named_knot("hopf");
  CHECK((h.positive_crossings() == 2 || h.negative_crossings() == 2));
  // Mirroring flips every sign.
  const auto m = with_inferred_orientation(mirror_diagram(t));
  CHECK(m.positive_crossings() == t.negative_crossings());
}

TEST_CASE("the oriented smoothing of a knot diagram is its Seifert state") {
  // A crossing is positive iff its 0-smoothing is oriented, so the state
  // with bit i = (sign_i < 0) follows the orientation everywhere. For the
  // trefoil the Seifert circles number 2.
  const auto t = named_knot("trefoil");
  std::uint32_t u = 0;
  for (int i = 0; i < t.crossing_count(); ++i) {
    if (t.signs[i] < 0) u |= 1u << i;
  }
  CHECK(oracle::circle_count(t, u) == 2);
}
