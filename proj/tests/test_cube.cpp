#include <doctest.h>

#include "khtot/cube.hpp"
#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "oracles.hpp"

using namespace khtot;

namespace {

ResolutionConfiguration merge1() { return ResolutionConfiguration({{0}, {1}}, {Side::R, Side::R}); }
ResolutionConfiguration split1() { return ResolutionConfiguration({{0, 1}}, {Side::L, Side::L}); }

int ending_count(const ResolutionConfiguration& c) { return ending_circles(c).count; }

}  // namespace

TEST_CASE("resolve") {
  CHECK(resolve(named_knot("unknot"), {}).circle_count() == 1);
  const auto f = figure4_diagram(2);
  CHECK(resolve(f, {0, 0, 0}).circle_count() == 3);
  CHECK(resolve(f, {1, 1, 1}).circle_count() == 2);
}

TEST_CASE("face_configuration") {
  const auto f = figure4_diagram(2);
  const auto same = face_configuration(f, {0, 1, 0}, {0, 1, 0});
  CHECK(same.config.dimension() == 0);
  for (int c = 0; c < same.config.circle_count(); ++c) CHECK(same.config.is_passive(c));

  const auto full = face_configuration(f, {0, 0, 0}, {1, 1, 1}).config;
  CHECK(full.dimension() == 3);
  CHECK(full.circle_count() == 3);
  CHECK(ending_count(full) == 2);
  const auto cl = classify(full);
  CHECK(cl.components.size() == 1);
  CHECK(cl.passive_circles.empty());
  CHECK(cl.components[0].kind == ComponentKind::Neither);

  // The three faces out of I that drop one of x_1, x_n or the center arc
  // are trees.
  const auto j1 = classify(face_configuration(f, {0, 0, 0}, {0, 1, 1}).config);
  CHECK(j1.components.size() == 1);
  CHECK(j1.components[0].kind == ComponentKind::Tree);

  CHECK_THROWS_AS(face_configuration(f, {1, 0, 0}, {0, 1, 1}), Error);
}

TEST_CASE("face_configuration rejects non-faces and bad lengths") {
  const auto f = figure4_diagram(2);
  try {
    face_configuration(f, {1, 0, 0}, {0, 0, 0});
    FAIL("expected NotAFace");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAFace);
  }
  try {
    face_configuration(f, {0, 0}, {0, 0, 1});
    FAIL("expected LengthMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
}

TEST_CASE("surgery") {
  const auto m = surgery(merge1(), 0);
  CHECK(m.dimension() == 0);
  CHECK(m.circle_count() == 1);
  const auto s = surgery(split1(), 0);
  CHECK(s.circle_count() == 2);
  for (int arc = 0; arc < 2; ++arc) {
    const auto t = surgery(catalog2_entry(2), arc);
    CHECK(t.dimension() == 1);
    CHECK(t.circle_count() == 2);
    const auto cl = classify(t);
    CHECK(cl.components.size() == 1);
    CHECK(ending_count(t) == 1);
  }
}

TEST_CASE("surgery changes the circle count by one") {
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    for (int a = 0; a < c.arc_count(); ++a) {
      const int diff = surgery(c, a).circle_count() - c.circle_count();
      CHECK((diff == 1 || diff == -1));
    }
  }
}

TEST_CASE("planarity") {
  for (int i = 1; i <= 8; ++i) CHECK(is_planar(catalog2_entry(i)));
  // Two interleaved chords on the same side of one circle need a handle.
  const ResolutionConfiguration bad({{0, 2, 1, 3}}, {Side::L, Side::L, Side::L, Side::L});
  CHECK_FALSE(is_planar(bad));
  try {
    require_planar(bad);
    FAIL("expected NonPlanar");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPlanar);
  }
}

TEST_CASE("dual_mirror") {
  const auto d = dual_mirror(merge1());
  CHECK(d.config.circle_count() == 1);
  CHECK(d.config.dimension() == 1);
  CHECK(ending_count(d.config) == 2);
  CHECK(is_isomorphic(d.config, split1()));

  // Computed pairing of the dimension 2 catalog: 2<->4, 3<->5, others self dual.
  const int partner[] = {1, 4, 5, 2, 3, 6, 7, 8};
  for (int i = 1; i <= 8; ++i) {
    const auto dm = dual_mirror(catalog2_entry(i)).config;
    CHECK(is_isomorphic(dm, catalog2_entry(partner[i - 1])));
  }
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    CHECK(is_isomorphic(dual_mirror(dual_mirror(c).config).config, c));
  }
}

TEST_CASE("duality swaps starting and ending circle counts") {
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    const auto dm = dual_mirror(c).config;
    CHECK(dm.circle_count() == ending_count(c));
    CHECK(ending_count(dm) == c.circle_count());
  }
}

TEST_CASE("classify") {
  const auto c3 = classify(catalog2_entry(3));
  REQUIRE(c3.components.size() == 1);
  CHECK(c3.components[0].kind == ComponentKind::Tree);
  const auto c8 = classify(catalog2_entry(8));
  REQUIRE(c8.components.size() == 1);
  CHECK(c8.components[0].kind == ComponentKind::Neither);
  const ComponentKind kinds[] = {ComponentKind::Neither,  ComponentKind::Tree,
                                 ComponentKind::Tree,     ComponentKind::DualTree,
                                 ComponentKind::DualTree, ComponentKind::Neither,
                                 ComponentKind::Neither,  ComponentKind::Neither};
  for (int i = 1; i <= 8; ++i) {
    CHECK(classify(catalog2_entry(i)).components.at(0).kind == kinds[i - 1]);
  }
}

TEST_CASE("passive circles and disjoint components") {
  // merge plus a passive circle, then two disjoint merges
  const ResolutionConfiguration mp({{0}, {1}, {}}, {Side::R, Side::R});
  const auto cl = classify(mp);
  CHECK(cl.components.size() == 1);
  CHECK(cl.passive_circles == std::vector<int>{2});
  const ResolutionConfiguration two({{0}, {1}, {2}, {3}}, {Side::R, Side::R, Side::R, Side::R});
  CHECK(classify(two).components.size() == 2);
  CHECK(classify(two).trees_and_dual_trees());
}

TEST_CASE("automorphisms against brute force") {
  const auto m = merge1();
  CHECK(automorphisms(m).size() == 2);
  CHECK(oracle::count_isomorphisms(m, m) == 2);

  const auto t = catalog2_entry(2);
  std::vector<std::vector<int>> circles = t.circles();
  std::vector<Side> sides = t.sides();
  const int shift = 2 * t.arc_count();
  const int base = t.circle_count();
  for (int c = 0; c < base; ++c) {
    std::vector<int> w;
    for (int e : t.circle(c)) w.push_back(e + shift);
    circles.push_back(w);
  }
  sides.insert(sides.end(), t.sides().begin(), t.sides().end());
  const ResolutionConfiguration tt(circles, sides);
  const auto autos = automorphisms(tt);
  CHECK(static_cast<long long>(autos.size()) == oracle::count_isomorphisms(tt, tt));
  bool swaps_components = false;
  for (const auto& s : autos) swaps_components = swaps_components || s.circle_map[0] >= base;
  CHECK(swaps_components);

  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    CHECK(static_cast<long long>(automorphisms(c).size()) == oracle::count_isomorphisms(c, c));
    for (int j = 1; j <= 8; ++j) {
      const auto b = catalog2_entry(j);
      CHECK(static_cast<long long>(isomorphisms(c, b).size()) == oracle::count_isomorphisms(c, b));
    }
  }
}

TEST_CASE("automorphism groups are closed under composition") {
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    const auto autos = automorphisms(c);
    for (const auto& a : autos) {
      for (const auto& b : autos) {
        const auto ab = compose(c, a, b);
        CHECK(std::find(autos.begin(), autos.end(), ab) != autos.end());
      }
    }
  }
}

TEST_CASE("mirror reverses every word") {
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    CHECK(mirror(mirror(c)) == c);
    CHECK(ending_count(mirror(c)) == ending_count(c));
  }
}
