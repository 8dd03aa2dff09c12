#include <doctest.h>

#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/perturbations.hpp"
#include "khtot/rules.hpp"
#include "khtot/sampling.hpp"
#include "khtot/uniqueness.hpp"
#include "oracles.hpp"

using namespace khtot;

namespace {

ResolutionConfiguration merge1() { return ResolutionConfiguration({{0}, {1}}, {Side::R, Side::R}); }

BigradedMap typed(const ResolutionConfiguration& c, std::vector<Entry> e = {}) {
  const int k = c.dimension();
  return BigradedMap(basis_of(c, BasisSide::Start), basis_of(c, BasisSide::End), {k, 2 * k},
                     std::move(e));
}

std::vector<Entry> admissible(const ResolutionConfiguration& c) {
  const auto z = typed(c);
  std::vector<Entry> out;
  for (Monomial a = 0; a < z.domain().dimension(); ++a) {
    for (Monomial b = 0; b < z.codomain().dimension(); ++b) {
      if (z.admissible(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

BigradedMap random_map(const ResolutionConfiguration& c, oracle::Rng& rng) {
  std::vector<Entry> e;
  for (const auto& p : admissible(c)) {
    if (rng.coin()) e.push_back(p);
  }
  return typed(c, e);
}

// f on c carried to d along the symmetry s : d -> c.
BigradedMap pull_back(const ResolutionConfiguration& d, const ResolutionConfiguration& c,
                      const Symmetry& s, const BigradedMap& f) {
  const auto emap = ending_map(d, c, s);
  std::vector<Entry> e;
  for (const auto& [a, b] : admissible(d)) {
    if (f.coefficient(map_start(s, a), map_monomial(emap, b))) e.emplace_back(a, b);
  }
  return typed(d, e);
}

BigradedMap member_map(const ConstraintSystem& sys, const FamilyMember& m, int member,
                       const std::vector<std::uint8_t>& x) {
  std::vector<Entry> e;
  for (int v = sys.member_offset[member]; v < sys.member_offset[member + 1]; ++v) {
    if (x[v]) e.emplace_back(sys.variables[v].in, sys.variables[v].out);
  }
  return typed(m.config, e);
}

std::vector<std::uint8_t> random_kernel_element(const ConstraintSystem& sys, oracle::Rng& rng) {
  std::vector<std::uint8_t> x(sys.variables.size(), 0);
  for (const auto& k : solve_kernel(sys)) {
    if (!rng.coin()) continue;
    for (int v : k) x[v] ^= 1;
  }
  return x;
}

std::vector<ResolutionConfiguration> small_configurations() {
  std::vector<ResolutionConfiguration> out;
  for (int i = 1; i <= 8; ++i) out.push_back(catalog2_entry(i));
  out.push_back(merge1());
  const auto diagrams = small_fixture_diagrams();
  for (const auto& s : random_faces(diagrams, 99, 400)) {
    const auto& c = s.face.config;
    if (c.dimension() <= 3 && c.circle_count() <= 4 && ending_circles(c).count <= 4) out.push_back(c);
    if (out.size() >= 40) break;
  }
  return out;
}

}  // namespace

TEST_CASE("rule names") {
  for (auto r : all_rules()) CHECK(rule_from_string(to_string(r)) == r);
  CHECK(parse_rules("filtration,duality,naturality") ==
        std::vector<Rule>{Rule::Filtration, Rule::Duality, Rule::Naturality});
  CHECK_THROWS_AS(parse_rules("filtration,bogus"), Error);
}

TEST_CASE("filtration") {
  const auto m = merge1();
  CHECK(check_filtration(m, typed(m)).pass);
  // d1 on the merge, verified over every (point, input, output) triple by hand:
  // both segments end on the single ending circle.
  const auto d1 = khovanov_d1(m);
  const BigradedMap as_f(d1.domain(), d1.codomain(), {1, 0}, d1.entries());
  const auto r = check_filtration(m, as_f);
  CHECK(r.pass);
  CHECK(r.witnesses.empty());

  const auto c8 = catalog2_entry(8);
  const auto bad = check_filtration(c8, typed(c8, {{1, 0}}));
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses[0].in == 1);
  CHECK(bad.witnesses[0].out == 0);
}

TEST_CASE("filtration is monotone under entry removal") {
  oracle::Rng rng(21);
  for (const auto& c : small_configurations()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto f = random_map(c, rng);
      if (!check_filtration(c, f).pass) continue;
      std::vector<Entry> e;
      for (const auto& p : f.entries()) {
        if (rng.coin()) e.push_back(p);
      }
      CHECK(check_filtration(c, typed(c, e)).pass);
    }
  }
}

TEST_CASE("duality") {
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    const auto dm = dual_mirror(c);
    CHECK(check_duality(c, sss_map(c), sss_map(dm.config)).pass);
  }
  const auto tree = catalog2_entry(2);
  const auto dm = dual_mirror(tree);
  auto e = sss_map(tree).entries();
  e.emplace_back(0b011, 0);
  const auto r = check_duality(tree, typed(tree, e), sss_map(dm.config));
  CHECK_FALSE(r.pass);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].in == 0b011);
  CHECK(r.witnesses[0].out == 0);
}

TEST_CASE("dual transport satisfies the duality rule") {
  oracle::Rng rng(4);
  for (const auto& c : small_configurations()) {
    const auto f = random_map(c, rng);
    CHECK(check_duality(c, f, dual_transport(c, f)).pass);
  }
}

TEST_CASE("extension") {
  const auto t = catalog2_entry(2);
  auto circles = t.circles();
  circles.push_back({});
  const ResolutionConfiguration tp(circles, t.sides());
  CHECK(check_structural(tp, sss_map(tp), Rule::Extension).pass);

  const ResolutionConfiguration mp({{0}, {1}, {}}, {Side::R, Side::R});
  const auto cl = classify(mp);
  REQUIRE(cl.passive_ending.size() == 1);
  const auto f = typed(mp, {{0b011, Monomial{1} << cl.passive_ending[0]}});
  CHECK_FALSE(check_structural(mp, f, Rule::Extension).pass);
}

TEST_CASE("naturality") {
  const auto m = merge1();
  CHECK_FALSE(check_structural(m, typed(m, {{0b01, 0}}), Rule::Naturality).pass);
  CHECK(check_structural(m, typed(m, {{0b01, 0}, {0b10, 0}}), Rule::Naturality).pass);
  for (int i = 1; i <= 8; ++i) {
    const auto c = catalog2_entry(i);
    CHECK(check_structural(c, sss_map(c), Rule::Naturality).pass);
  }
}

TEST_CASE("conjugation and disoriented always pass") {
  oracle::Rng rng(8);
  const auto c = catalog2_entry(1);
  const auto f = random_map(c, rng);
  CHECK(check_structural(c, f, Rule::Conjugation).pass);
  CHECK(check_structural(c, f, Rule::Disoriented).pass);
}

TEST_CASE("disconnected") {
  const ResolutionConfiguration two({{0}, {1}, {2}, {3}}, {Side::R, Side::R, Side::R, Side::R});
  const auto f = sss_map(two);
  CHECK_FALSE(f.is_zero());
  CHECK_FALSE(check_structural(two, f, Rule::Disconnected, DisconnectedMode::Literal).pass);
  CHECK(check_structural(two, f, Rule::Disconnected, DisconnectedMode::SssRegime).pass);
  CHECK(check_structural(two, typed(two), Rule::Disconnected).pass);
  const auto c8 = catalog2_entry(8);
  CHECK(check_structural(c8, sss_map(c8), Rule::Disconnected, DisconnectedMode::SssRegime).pass);
}

TEST_CASE("transported maps keep filtration, symmetrized maps pass all three") {
  oracle::Rng rng(31);
  for (const auto& c : small_configurations()) {
    const auto family = close_under_duality({c});
    const auto sys = rule_constraints(family, {c.dimension(), 2 * c.dimension()},
                                      {Rule::Filtration, Rule::Naturality});
    for (int trial = 0; trial < 3; ++trial) {
      const auto f = member_map(sys, family[0], 0, random_kernel_element(sys, rng));
      REQUIRE(check_filtration(c, f).pass);
      const auto dm = dual_mirror(c);
      CHECK(check_filtration(dm.config, dual_transport(c, f)).pass);
      if (family[0].partner != 0) continue;
      const auto s = self_dual_symmetrization(c, f);
      CHECK(check_filtration(c, s).pass);
      CHECK(check_structural(c, s, Rule::Naturality).pass);
      const auto psi = isomorphisms(dm.config, c).front();
      CHECK(check_duality(c, s, pull_back(dm.config, c, psi, s)).pass);
    }
  }
}

TEST_CASE("constraint system examples") {
  const auto c8 = catalog2_entry(8);
  const auto sys8 = rule_constraints({{c8, 0, "8"}}, {2, 4}, {Rule::Filtration});
  CHECK(sys8.variables.size() > 0);
  CHECK(solve_kernel(sys8).empty());

  const auto tree = catalog2_entry(2);
  const auto pair = close_under_duality({tree});
  REQUIRE(pair.size() == 2);
  const auto sys = rule_constraints(pair, {2, 4}, all_rules());
  CHECK(solve_kernel(sys).size() == 1);

  const auto none = rule_constraints(pair, {2, 4}, {});
  CHECK(none.relations.empty());
  CHECK(solve_kernel(none).size() == none.variables.size());

  CHECK_THROWS_AS(rule_constraints({{tree, 1, "2"}}, {2, 4}, {Rule::Duality}), Error);
  CHECK_THROWS_AS(rule_constraints({{tree, 0, "2"}}, {3, 6}, {}), Error);
}

TEST_CASE("kernel elements satisfy the system") {
  oracle::Rng rng(2);
  const auto family = catalog2_family();
  const auto sys = rule_constraints(family, {2, 4}, all_rules());
  for (int trial = 0; trial < 20; ++trial) CHECK(sys.satisfied_by(random_kernel_element(sys, rng)));
}

TEST_CASE("predicates agree with the constraint system") {
  oracle::Rng rng(0);
  int checked = 0;
  for (const auto& c : small_configurations()) {
    const auto family = close_under_duality({c});
    const Bigrading bd{c.dimension(), 2 * c.dimension()};
    const auto dm = dual_mirror(c);
    for (int trial = 0; trial < 14; ++trial) {
      const bool from_kernel = trial % 2 == 0;
      for (Rule rule : {Rule::Filtration, Rule::Naturality, Rule::Extension, Rule::Disconnected,
                        Rule::Duality}) {
        const auto sys = rule_constraints(family, bd, {rule});
        std::vector<std::uint8_t> x;
        if (from_kernel) {
          x = random_kernel_element(sys, rng);
        } else {
          x.assign(sys.variables.size(), 0);
          for (auto& b : x) b = rng.coin();
        }
        const auto f = member_map(sys, family[0], 0, x);
        bool pass = true;
        if (rule == Rule::Filtration) {
          for (std::size_t m = 0; m < family.size(); ++m) {
            pass = pass && check_filtration(family[m].config,
                                            member_map(sys, family[m], static_cast<int>(m), x))
                               .pass;
          }
        } else if (rule == Rule::Duality) {
          BigradedMap g;
          if (family[0].partner == 0) {
            g = pull_back(dm.config, c, isomorphisms(dm.config, c).front(), f);
          } else {
            g = member_map(sys, family[1], 1, x);
          }
          pass = check_duality(c, f, g).pass;
        } else {
          for (std::size_t m = 0; m < family.size(); ++m) {
            pass = pass && check_structural(family[m].config,
                                            member_map(sys, family[m], static_cast<int>(m), x), rule)
                               .pass;
          }
        }
        CHECK(pass == sys.satisfied_by(x));
        ++checked;
      }
    }
  }
  CHECK(checked >= 500);
}
