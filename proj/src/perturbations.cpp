#include "khtot/perturbations.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>

#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/kernels.hpp"

namespace khtot {

namespace {

Monomial bit(int i) { return Monomial{1} << i; }

// Extends entries on the active part identically over the passive circles.
std::vector<Entry> extend_over_passive(const Classification& cl, const std::vector<Entry>& active) {
  const int p = static_cast<int>(cl.passive_circles.size());
  if (p > 20) throw Error(ErrorKind::TooLarge, "more than 20 passive circles");
  std::vector<Entry> out;
  out.reserve(active.size() << p);
  for (Monomial v = 0; v < (Monomial{1} << p); ++v) {
    Monomial in = 0, on = 0;
    for (int i = 0; i < p; ++i) {
      if (v & bit(i)) {
        in |= bit(cl.passive_circles[i]);
        on |= bit(cl.passive_ending[i]);
      }
    }
    for (const auto& [a, b] : active) out.emplace_back(a | in, b | on);
  }
  return out;
}

std::uint32_t reverse_bits(Vertex u, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    if (u & (Vertex{1} << i)) r |= std::uint32_t{1} << (n - 1 - i);
  }
  return r;
}

}  // namespace

BigradedMap khovanov_d1(const ResolutionConfiguration& c) {
  if (c.dimension() != 1) {
    throw Error(ErrorKind::WrongDimension,
                "d1 needs a 1-dimensional configuration, got " + std::to_string(c.dimension()));
  }
  const auto cl = classify(c);
  const auto& comp = cl.components.front();
  std::vector<Entry> active;
  if (comp.circles.size() == 2) {
    const Monomial a = bit(comp.circles[0]), b = bit(comp.circles[1]);
    const Monomial y = bit(comp.ending_circles[0]);
    active = {{0, 0}, {a, y}, {b, y}};
  } else {
    const Monomial a = bit(comp.circles[0]);
    const Monomial y1 = bit(comp.ending_circles[0]), y2 = bit(comp.ending_circles[1]);
    active = {{0, y1}, {0, y2}, {a, y1 | y2}};
  }
  return BigradedMap(basis_of(c, BasisSide::Start), basis_of(c, BasisSide::End), {1, 0},
                     extend_over_passive(cl, active));
}

BigradedMap sss_map(const ResolutionConfiguration& c) {
  const int k = c.dimension();
  auto dom = basis_of(c, BasisSide::Start);
  auto cod = basis_of(c, BasisSide::End);
  const auto cl = classify(c);
  if (!cl.trees_and_dual_trees()) return BigradedMap(dom, cod, {k, 2 * k});
  Monomial a = 0, b = 0;
  for (const auto& comp : cl.components) {
    if (comp.kind != ComponentKind::Tree) continue;
    for (int circle : comp.circles) a |= bit(circle);
    b |= bit(comp.ending_circles.front());
  }
  return BigradedMap(dom, cod, {k, 2 * k}, extend_over_passive(cl, {{a, b}}));
}

void canonicalize(CubeVector& v) {
  std::sort(v.begin(), v.end());
  CubeVector out;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  v = std::move(out);
}

// ---------------------------------------------------------------------------

CubeComplex::CubeComplex(PlanarDiagram d, int max_crossings) : d_(std::move(d)) {
  validate(d_);
  n_ = d_.crossing_count();
  if (n_ > max_crossings || n_ > 24) {
    throw Error(ErrorKind::TooLarge, std::to_string(n_) + " crossings exceeds bound " +
                                         std::to_string(std::min(max_crossings, 24)));
  }
  vertices_.resize(std::size_t{1} << n_);
  for (Vertex u = 0; u < vertex_count(); ++u) vertices_[u] = resolve(d_, choice(u));
  for (const auto& r : vertices_) {
    if (r.circle_count() > 30) throw Error(ErrorKind::TooLarge, "resolution with over 30 circles");
  }
}

Choice CubeComplex::choice(Vertex u) const {
  Choice c(n_);
  for (int i = 0; i < n_; ++i) c[i] = (u >> i) & 1;
  return c;
}

int CubeComplex::gr_q(Vertex u, Monomial m) const {
  return circles(u) - 2 * std::popcount(m) + std::popcount(u);
}

Bigrading CubeComplex::normalization() const {
  if (!d_.oriented()) return {0, 0};
  const int np = d_.positive_crossings();
  const int nm = d_.negative_crossings();
  return {-nm, np - 2 * nm};
}

AssembledTerm CubeComplex::assemble(TermKind kind, int dimension, Execution exec) const {
  AssembledTerm t;
  t.kind = kind;
  t.dimension = dimension;
  t.label = kind == TermKind::D1 ? CoefficientLabel{0, 0} : CoefficientLabel{1, dimension - 1};
  t.from.assign(vertex_count(), {});
  if (kind == TermKind::D1 && dimension != 1) {
    throw Error(ErrorKind::WrongDimension, "d1 term has dimension 1");
  }
  if (dimension < 1 || dimension > n_) return t;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    const Vertex free = (vertex_count() - 1) & ~u;
    // Enumerate subsets of the free coordinates of the requested size.
    for (Vertex s = free;; s = (s - 1) & free) {
      if (std::popcount(s) == dimension) pairs.emplace_back(u, u | s);
      if (s == 0) break;
    }
  }
  std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return std::pair(reverse_bits(a.first, n_), reverse_bits(a.second, n_)) <
           std::pair(reverse_bits(b.first, n_), reverse_bits(b.second, n_));
  });

  std::vector<FaceMap> all(pairs.size());
  for_each_index(pairs.size(), exec, [&](std::size_t i) {
    const auto [u, v] = pairs[i];
    const auto face = face_configuration(d_, vertices_[u], vertices_[v]);
    const auto map = kind == TermKind::D1 ? khovanov_d1(face.config) : sss_map(face.config);
    FaceMap fm{u, v, {}};
    fm.entries.reserve(map.entries().size());
    for (const auto& [a, b] : map.entries()) {
      Monomial out = 0;
      for (int j = 0; j < map.codomain().size(); ++j) {
        if (b & bit(j)) out |= bit(face.end_to_vertex_circle[j]);
      }
      fm.entries.emplace_back(a, out);
    }
    std::sort(fm.entries.begin(), fm.entries.end());
    all[i] = std::move(fm);
  });
  for (auto& fm : all) {
    if (fm.entries.empty()) continue;
    t.from[fm.u].push_back(static_cast<int>(t.faces.size()));
    t.faces.push_back(std::move(fm));
  }
  return t;
}

const AssembledTerm& CubeComplex::term(TermKind kind, int dimension) const {
  const auto key = std::pair(static_cast<int>(kind), dimension);
  auto it = cache_.find(key);
  if (it == cache_.end()) it = cache_.emplace(key, assemble(kind, dimension)).first;
  return it->second;
}

CubeVector CubeComplex::apply(const AssembledTerm& t, const CubeVector& x) const {
  CubeVector out;
  for (const auto& [u, m] : x) {
    for (int fi : t.from[u]) {
      const auto& f = t.faces[fi];
      auto it = std::lower_bound(f.entries.begin(), f.entries.end(), Entry{m, 0});
      for (; it != f.entries.end() && it->first == m; ++it) out.emplace_back(f.v, it->second);
    }
  }
  canonicalize(out);
  return out;
}

GradedComplex CubeComplex::khovanov_complex() const {
  const auto shift = normalization();
  GradedComplex c;
  c.h_min = shift.h;
  c.q_of.assign(n_ + 1, {});
  // Generator index of (u, 0) inside its degree.
  std::vector<int> offset(vertex_count(), 0);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    auto& q = c.q_of[std::popcount(u)];
    offset[u] = static_cast<int>(q.size());
    for (Monomial m = 0; m < (Monomial{1} << circles(u)); ++m) q.push_back(gr_q(u, m) + shift.q);
  }
  const auto& d1 = term(TermKind::D1, 1);
  c.d.resize(n_);
  for (int h = 0; h < n_; ++h) {
    c.d[h].cols = static_cast<int>(c.q_of[h].size());
    c.d[h].rows = static_cast<int>(c.q_of[h + 1].size());
    c.d[h].columns.resize(c.d[h].cols);
  }
  for (Vertex u = 0; u < vertex_count(); ++u) {
    const int h = std::popcount(u);
    if (h == n_) continue;
    for (Monomial m = 0; m < (Monomial{1} << circles(u)); ++m) {
      auto& col = c.d[h].columns[offset[u] + static_cast<int>(m)];
      for (const auto& [v, out] : apply(d1, {{u, m}})) col.push_back(offset[v] + static_cast<int>(out));
      std::sort(col.begin(), col.end());
    }
  }
  return c;
}

AssembledTerm assemble_term(const PlanarDiagram& d, TermKind kind, int i) {
  return CubeComplex(d).assemble(kind, i);
}

// ---------------------------------------------------------------------------

std::string to_string(Identity id) {
  switch (id) {
    case Identity::D1Squared: return "d1_squared";
    case Identity::H1Squared: return "h1_squared";
    case Identity::D1H1: return "d1h1";
    case Identity::H1H2: return "h1h2";
    case Identity::H1H3H2Squared: return "h1h3_h2sq";
  }
  return "?";
}

std::optional<Identity> identity_from_string(std::string_view s) {
  for (auto id : all_identities()) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

std::vector<Identity> all_identities() {
  return {Identity::D1Squared, Identity::H1Squared, Identity::D1H1, Identity::H1H2,
          Identity::H1H3H2Squared};
}

namespace {

struct TermRef {
  TermKind kind;
  int dim;
};

// Each product is applied right to left: {A, B} means A o B.
std::vector<std::pair<TermRef, TermRef>> products(Identity id) {
  const TermRef d1{TermKind::D1, 1}, h1{TermKind::H, 1}, h2{TermKind::H, 2}, h3{TermKind::H, 3};
  switch (id) {
    case Identity::D1Squared: return {{d1, d1}};
    case Identity::H1Squared: return {{h1, h1}};
    case Identity::D1H1: return {{d1, h1}, {h1, d1}};
    case Identity::H1H2: return {{h1, h2}, {h2, h1}};
    case Identity::H1H3H2Squared: return {{h1, h3}, {h3, h1}, {h2, h2}};
  }
  return {};
}

}  // namespace

IdentityReport check_identity(const CubeComplex& cube, Identity which, Execution exec) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto prods = products(which);
  std::vector<std::pair<const AssembledTerm*, const AssembledTerm*>> terms;
  for (const auto& [a, b] : prods) {
    terms.emplace_back(&cube.term(a.kind, a.dim), &cube.term(b.kind, b.dim));
  }
  const Vertex count = cube.vertex_count();
  std::vector<std::optional<IdentityWitness>> first_failure(count);
  std::vector<std::size_t> checked(count, 0);
  for_each_index(count, exec, [&](std::size_t ui) {
    const auto u = static_cast<Vertex>(ui);
    for (Monomial m = 0; m < (Monomial{1} << cube.circles(u)); ++m) {
      ++checked[u];
      CubeVector total;
      for (const auto& [outer, inner] : terms) {
        auto v = cube.apply(*outer, cube.apply(*inner, {{u, m}}));
        total.insert(total.end(), v.begin(), v.end());
      }
      canonicalize(total);
      if (!total.empty()) {
        first_failure[u] = IdentityWitness{u, m, std::move(total)};
        return;
      }
    }
  });
  IdentityReport r{which, true, std::nullopt, 0, 0};
  for (Vertex u = 0; u < count; ++u) {
    r.generators_checked += checked[u];
    if (first_failure[u] && !r.witness) {
      r.pass = false;
      r.witness = first_failure[u];
    }
  }
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

IdentityReport check_identity(const PlanarDiagram& d, Identity which, int max_crossings,
                              Execution exec) {
  const auto t0 = std::chrono::steady_clock::now();
  CubeComplex cube(d, max_crossings);
  auto r = check_identity(cube, which, exec);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

// ---------------------------------------------------------------------------

CompositionResult compose_on(const CubeComplex& cube, const AssembledTerm& first,
                             const AssembledTerm& second, const CubeVector& x) {
  std::map<Vertex, CubeVector> by_middle;
  for (const auto& [v, m] : cube.apply(first, x)) by_middle[v].emplace_back(v, m);
  CompositionResult r;
  for (const auto& [middle, vec] : by_middle) {
    auto value = cube.apply(second, vec);
    if (value.empty()) continue;
    r.total.insert(r.total.end(), value.begin(), value.end());
    r.contributions.push_back({middle, std::move(value)});
  }
  canonicalize(r.total);
  return r;
}

namespace {

void require_range(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::FixtureRangeError, what);
}

LemmaReport run_lemma(std::string name, const PlanarDiagram& d, Monomial input_bits,
                      Monomial target_bits, std::vector<Vertex> hd1_faces,
                      std::vector<Vertex> d1h_faces) {
  CubeComplex cube(d, 16);
  const int n = cube.crossing_count() - 1;
  LemmaReport r;
  r.name = std::move(name);
  r.start = 0;
  r.target = cube.vertex_count() - 1;
  r.input = {{r.start, input_bits}};
  r.expected_h_d1 = {{r.target, target_bits}};
  r.expected_d1_h = {{r.target, target_bits}};
  const auto& d1 = cube.term(TermKind::D1, 1);
  const auto& hn = cube.term(TermKind::H, n);
  r.h_d1 = compose_on(cube, d1, hn, r.input);
  r.d1_h = compose_on(cube, hn, d1, r.input);
  r.expected_h_d1_faces = std::move(hd1_faces);
  r.expected_d1_h_faces = std::move(d1h_faces);
  std::sort(r.expected_h_d1_faces.begin(), r.expected_h_d1_faces.end());
  std::sort(r.expected_d1_h_faces.begin(), r.expected_d1_h_faces.end());
  auto middles = [](const CompositionResult& c) {
    std::vector<Vertex> v;
    for (const auto& p : c.contributions) v.push_back(p.middle);
    return v;
  };
  r.faces_match = middles(r.h_d1) == r.expected_h_d1_faces &&
                  middles(r.d1_h) == r.expected_d1_h_faces;
  return r;
}

}  // namespace

LemmaReport lemma35(int n) {
  require_range(n >= 2 && n <= 12, "lemma35 needs 2 <= n <= 12");
  const auto d = figure4_diagram(n);
  const Vertex all = (Vertex{1} << (n + 1)) - 1;
  const Vertex j1 = all & ~Vertex{1};
  const Vertex j2 = all & ~(Vertex{1} << (n - 1));
  const Vertex j3 = all & ~(Vertex{1} << n);
  auto r = run_lemma("lemma35(" + std::to_string(n) + ")", d, (Monomial{1} << (n + 1)) - 1, 0b11,
                     {}, {j1, j2, j3});
  r.expected_h_d1.clear();
  r.values_match = r.h_d1.total.empty() && r.d1_h.total == r.expected_d1_h;
  // Each tree face contributes y1 y2 on its own.
  for (const auto& c : r.d1_h.contributions) r.faces_match = r.faces_match && c.value == r.expected_d1_h;
  return r;
}

LemmaReport lemma36(int k, int l) {
  require_range(k >= 1 && l >= 1 && k + l + 1 <= 12, "lemma36 needs k, l >= 1 and k + l <= 11");
  const auto d = figure5_diagram(k, l);
  const int crossings = k + l + 1;
  const Vertex all = (Vertex{1} << crossings) - 1;
  CubeComplex probe(d, 16);
  const Monomial in = (Monomial{1} << probe.circles(0)) - 1;
  const Monomial out = (Monomial{1} << probe.circles(all)) - 1;
  auto r = run_lemma("lemma36(" + std::to_string(k) + "," + std::to_string(l) + ")", d, in, out,
                     {Vertex{1}}, {all & ~Vertex{1}});
  r.values_match = r.h_d1.total == r.expected_h_d1 && r.d1_h.total == r.expected_d1_h;
  return r;
}

LemmaReport lemma38(int k, int l) {
  require_range(k >= 1 && l >= 1 && k + l + 1 <= 12, "lemma38 needs k, l >= 1 and k + l <= 11");
  const auto d = figure6_diagram(k, l);
  const int crossings = k + l + 1;
  const Vertex all = (Vertex{1} << crossings) - 1;
  CubeComplex probe(d, 16);
  // x on the star x_1 with its leaves, 1 on z_1.
  const Monomial in = (Monomial{1} << (k + 1)) - 1;
  const auto face = face_configuration(d, probe.resolution(0), probe.resolution(all));
  const int end_of_x1 = ending_circles(face.config).of_segment[face.config.segment_id(0, 0)];
  const Monomial out = Monomial{1} << face.end_to_vertex_circle[end_of_x1];
  auto r = run_lemma("lemma38(" + std::to_string(k) + "," + std::to_string(l) + ")", d, in, out,
                     {Vertex{2}}, {all & ~Vertex{1}});
  r.values_match = r.h_d1.total == r.expected_h_d1 && r.d1_h.total == r.expected_d1_h;
  return r;
}

// ---------------------------------------------------------------------------

HomologyTable khovanov_homology(const PlanarDiagram& d, int max_crossings, Execution exec) {
  CubeComplex cube(d, max_crossings);
  return homology_ranks(cube.khovanov_complex(), exec);
}

namespace {

int uf_find(std::map<int, int>& parent, int x) {
  auto it = parent.find(x);
  if (it == parent.end()) {
    parent[x] = x;
    return x;
  }
  if (it->second == x) return x;
  const int root = uf_find(parent, it->second);
  parent[x] = root;
  return root;
}

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Laurent kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
  validate(d);
  const int n = d.crossing_count();
  if (n > max_crossings) throw Error(ErrorKind::TooLarge, "too many crossings for the state sum");
  const Laurent loop{{2, -1}, {-2, -1}};
  std::vector<Laurent> loop_power{{{0, 1}}};
  Laurent total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::map<int, int> parent;
    int a_smoothings = 0;
    for (int i = 0; i < n; ++i) {
      const auto& x = d.crossings[i];
      if (((state >> i) & 1) == 0) {
        ++a_smoothings;
        parent[uf_find(parent, x[0])] = uf_find(parent, x[1]);
        parent[uf_find(parent, x[2])] = uf_find(parent, x[3]);
      } else {
        parent[uf_find(parent, x[0])] = uf_find(parent, x[3]);
        parent[uf_find(parent, x[1])] = uf_find(parent, x[2]);
      }
    }
    int loops = d.free_loops;
    std::vector<int> labels;
    for (const auto& [label, p] : parent) labels.push_back(label);
    for (int label : labels) loops += uf_find(parent, label) == label ? 1 : 0;
    while (static_cast<int>(loop_power.size()) <= loops) {
      loop_power.push_back(multiply(loop_power.back(), loop));
    }
    const int e = a_smoothings - (n - a_smoothings);
    for (const auto& [exp, coeff] : loop_power[loops]) total[exp + e] += coeff;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

std::map<int, long long> bracket_to_euler(const PlanarDiagram& d, const Laurent& bracket) {
  const int n = d.crossing_count();
  int sign = 1, q_shift = 0;
  if (d.oriented()) {
    const int np = d.positive_crossings();
    const int nm = d.negative_crossings();
    sign = nm % 2 == 0 ? 1 : -1;
    q_shift = np - 2 * nm;
  }
  std::map<int, long long> chi;
  for (const auto& [e, c] : bracket) {
    const int j = (n - e) / 2;
    chi[j + q_shift] += sign * (j % 2 == 0 ? c : -c);
  }
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  return chi;
}

}  // namespace khtot
