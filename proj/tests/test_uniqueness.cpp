#include <doctest.h>

#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/perturbations.hpp"
#include "khtot/uniqueness.hpp"

using namespace khtot;

TEST_CASE("catalog pairing is found by search") {
  const auto cat = catalog2();
  REQUIRE(cat.entries.size() == 8);
  CHECK(cat.partner == std::vector<int>{0, 3, 4, 1, 2, 5, 6, 7});
  for (int i = 0; i < 8; ++i) {
    CHECK(cat.partner[cat.partner[i]] == i);
    CHECK(is_isomorphic(dual_mirror(cat.entries[i]).config, cat.entries[cat.partner[i]]));
  }
}

TEST_CASE("dim2 scope") {
  const auto cert = verify_uniqueness({UniquenessScope::Kind::Dim2});
  REQUIRE(cert.reports.size() == 1);
  const auto& r = cert.reports[0];
  CHECK(r.bidegree == Bigrading{2, 4});
  std::vector<int> dims;
  for (const auto& e : r.entries) dims.push_back(e.dim);
  CHECK(dims == std::vector<int>{0, 1, 1, 1, 1, 0, 0, 0});
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const auto& e = r.entries[i];
    CHECK(e.agrees_with_sss);
    if (e.dim == 1) CHECK(e.basis[0] == sss_map(catalog2_entry(static_cast<int>(i) + 1)));
  }
  CHECK(cert.pass());
}

TEST_CASE("core rules alone give the same answer on the catalog") {
  const auto r = solve_rule_space(catalog2_family(), {2, 4}, core_rules());
  CHECK(r.pass);
}

TEST_CASE("rule ablation on the catalog") {
  const auto none = solve_rule_space(catalog2_family(), {2, 4}, {});
  CHECK_FALSE(none.pass);
  int total = 0;
  for (const auto& e : none.entries) total += e.dim;
  CHECK(static_cast<std::size_t>(total) == none.variables);
  // Filtration alone already pins dimension 2.
  CHECK(solve_rule_space(catalog2_family(), {2, 4}, {Rule::Filtration}).pass);
  CHECK_FALSE(solve_rule_space(catalog2_family(), {2, 4}, {Rule::Duality, Rule::Naturality}).pass);
}

TEST_CASE("trees up to four") {
  const auto cert = verify_uniqueness({UniquenessScope::Kind::TreesUpTo, 4});
  CHECK(cert.reports.size() == 8);
  for (const auto& r : cert.reports) {
    const bool low = r.bidegree.q == 2 * r.bidegree.h;
    for (const auto& e : r.entries) CHECK(e.dim == (low ? 1 : 0));
    CHECK(r.pass);
  }
  CHECK_THROWS_AS(verify_uniqueness({UniquenessScope::Kind::TreesUpTo, 9}), Error);
}

TEST_CASE("tree family members are trees and dual trees") {
  for (int n = 1; n <= 5; ++n) {
    const auto family = tree_family(n);
    for (const auto& m : family) {
      const auto cl = classify(m.config);
      REQUIRE(cl.components.size() == 1);
      CHECK(cl.components[0].kind != ComponentKind::Neither);
      CHECK(family[m.partner].partner >= 0);
    }
  }
}

TEST_CASE("custom: the full face of figure4(2) is forced to zero") {
  const auto full = face_configuration(figure4_diagram(2), {0, 0, 0}, {1, 1, 1}).config;
  UniquenessScope scope{UniquenessScope::Kind::Custom, 0, close_under_duality({full}), {3, 6}};
  const auto cert = verify_uniqueness(scope);
  REQUIRE(cert.reports.size() == 1);
  for (const auto& e : cert.reports[0].entries) CHECK(e.dim == 0);
  CHECK(cert.pass());
}

TEST_CASE("sss compliance on the catalog") {
  for (int i = 1; i <= 8; ++i) {
    for (const auto& r : sss_compliance(catalog2_entry(i))) CHECK(r.pass);
  }
}
