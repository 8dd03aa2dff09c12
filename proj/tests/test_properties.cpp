#include <doctest.h>

#include "khtot/fixtures.hpp"
#include "khtot/perturbations.hpp"
#include "khtot/rules.hpp"
#include "khtot/sampling.hpp"
#include "khtot/uniqueness.hpp"
#include "oracles.hpp"

using namespace khtot;

namespace {

struct Generated {
  const PlanarDiagram* diagram;
  Choice u;
  Choice v;
  ResolutionConfiguration config;
};

// Random cube face: u uniform, v raises a nonempty subset of u's zeros.
Generated gen_face(oracle::Rng& rng, const std::vector<PlanarDiagram>& ds) {
  const auto& d = ds[rng.below(static_cast<int>(ds.size()))];
  const int n = d.crossing_count();
  for (;;) {
    Choice u(n), v(n);
    bool raised = false;
    for (int i = 0; i < n; ++i) {
      u[i] = rng.coin();
      v[i] = u[i] || rng.coin();
      raised = raised || v[i] != u[i];
    }
    if (raised) return {&d, u, v, face_configuration(d, u, v).config};
  }
}

// Relabels a diagram by a random permutation of its edge labels.
PlanarDiagram shuffled(const PlanarDiagram& d, oracle::Rng& rng) {
  std::vector<int> perm(d.edge_count() + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = d.edge_count(); i > 1; --i) std::swap(perm[i], perm[1 + rng.below(i)]);
  PlanarDiagram out = d;
  for (auto& x : out.crossings) {
    for (int& a : x) a = perm[a];
  }
  return out;
}

}  // namespace

TEST_CASE("dual_mirror is an involution and s = t + k mod 2 on 1000 faces") {
  oracle::Rng rng(0);
  const auto ds = small_fixture_diagrams();
  for (int i = 0; i < 1000; ++i) {
    const auto g = gen_face(rng, ds);
    const auto& c = g.config;
    const int t = c.circle_count();
    const int s = ending_circles(c).count;
    CHECK((s - t - c.dimension()) % 2 == 0);
    const auto dm = dual_mirror(c).config;
    CHECK(dm.circle_count() == s);
    CHECK(ending_circles(dm).count == t);
    CHECK(is_isomorphic(dual_mirror(dm).config, c));
  }
}

TEST_CASE("ending circles of a face match the target resolution") {
  oracle::Rng rng(1);
  const auto ds = small_fixture_diagrams();
  for (int i = 0; i < 300; ++i) {
    const auto g = gen_face(rng, ds);
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    for (std::size_t j = 0; j < g.u.size(); ++j) {
      u |= std::uint32_t{g.u[j]} << j;
      v |= std::uint32_t{g.v[j]} << j;
    }
    CHECK(g.config.circle_count() == oracle::circle_count(*g.diagram, u));
    CHECK(ending_circles(g.config).count == oracle::circle_count(*g.diagram, v));
    CHECK(is_planar(g.config));
  }
}

TEST_CASE("sss_map passes filtration, duality, extension and naturality on 500 faces") {
  oracle::Rng rng(2);
  const auto ds = small_fixture_diagrams();
  for (int i = 0; i < 500; ++i) {
    const auto g = gen_face(rng, ds);
    for (const auto& r : sss_compliance(g.config)) {
      INFO("face " << i << " rule " << r.rule);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("automorphism counts match brute force on small faces") {
  oracle::Rng rng(3);
  const auto ds = small_fixture_diagrams();
  int checked = 0;
  while (checked < 150) {
    const auto g = gen_face(rng, ds);
    if (g.config.dimension() > 4) continue;
    CHECK(static_cast<long long>(automorphisms(g.config).size()) ==
          oracle::count_isomorphisms(g.config, g.config));
    ++checked;
  }
}

TEST_CASE("surgery moves the circle count by one on random faces") {
  oracle::Rng rng(4);
  const auto ds = small_fixture_diagrams();
  for (int i = 0; i < 300; ++i) {
    const auto g = gen_face(rng, ds);
    const int a = rng.below(g.config.arc_count());
    const auto s = surgery(g.config, a);
    CHECK(std::abs(s.circle_count() - g.config.circle_count()) == 1);
    CHECK(ending_circles(s).count == ending_circles(g.config).count);
  }
}

TEST_CASE("PD text round trip and invariance under relabeling") {
  oracle::Rng rng(5);
  const auto ds = small_fixture_diagrams();
  for (int i = 0; i < 100; ++i) {
    const auto& d = ds[rng.below(static_cast<int>(ds.size()))];
    const auto s = shuffled(d, rng);
    const auto p = parse_pd(to_pd_text(s));
    CHECK(p.crossing_count() == d.crossing_count());
    const int n = d.crossing_count();
    const std::uint32_t u = static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1);
    CHECK(oracle::circle_count(p, u) == oracle::circle_count(d, u));
    CHECK(normalize_labels(p) == p);
  }
}

TEST_CASE("random sss maps have bidegree (k, 2k) and vanish exactly off trees and dual trees") {
  oracle::Rng rng(6);
  const auto ds = small_fixture_diagrams();
  for (int i = 0; i < 300; ++i) {
    const auto g = gen_face(rng, ds);
    const auto f = sss_map(g.config);
    const int k = g.config.dimension();
    CHECK(f.bidegree() == Bigrading{k, 2 * k});
    for (const auto& [a, b] : f.entries()) {
      CHECK(f.codomain().gr_q(b) - f.domain().gr_q(a) == 2 * k);
    }
    CHECK(f.is_zero() == !classify(g.config).trees_and_dual_trees());
  }
}

TEST_CASE("library face sampler is reproducible") {
  const auto ds = small_fixture_diagrams();
  const auto a = random_faces(ds, 42, 20);
  const auto b = random_faces(ds, 42, 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].u == b[i].u);
    CHECK(a[i].v == b[i].v);
    CHECK(a[i].face.config == b[i].face.config);
  }
}
