#include "khtot/fixtures.hpp"

#include <string>

#include "khtot/error.hpp"

namespace khtot {

namespace {

constexpr Side L = Side::L;
constexpr Side R = Side::R;

// Largest arc count any generated family may reach; monomials are 64-bit sets.
constexpr int kMaxArcs = 40;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ParamOutOfRange, what);
}

}  // namespace

ResolutionConfiguration catalog2_entry(int index) {
  using S = SlotSpec;
  switch (index) {
    case 1:
      return ResolutionConfiguration::from_slots({{S{1, 0, R}, S{0, 0, R}}, {S{0, 1, R}, S{1, 1, R}}});
    case 2:
      return ResolutionConfiguration::from_slots(
          {{S{0, 0, R}}, {S{1, 0, R}}, {S{1, 1, R}, S{0, 1, R}}});
    case 3:
      return ResolutionConfiguration::from_slots(
          {{S{0, 0, R}}, {S{0, 1, L}, S{1, 1, R}}, {S{1, 0, R}}});
    case 4:
      return ResolutionConfiguration::from_slots(
          {{S{0, 1, L}, S{0, 0, L}, S{1, 0, L}, S{1, 1, L}}});
    case 5:
      return ResolutionConfiguration::from_slots(
          {{S{0, 1, L}, S{0, 0, L}, S{1, 0, R}, S{1, 1, R}}});
    case 6:
      return ResolutionConfiguration::from_slots(
          {{S{0, 1, L}, S{1, 0, R}, S{0, 0, L}}, {S{1, 1, R}}});
    case 7:
      return ResolutionConfiguration::from_slots(
          {{S{0, 0, L}, S{1, 0, L}, S{1, 1, L}}, {S{0, 1, R}}});
    case 8:
      return ResolutionConfiguration::from_slots(
          {{S{0, 1, L}, S{1, 0, R}, S{0, 0, L}, S{1, 1, R}}});
    default:
      throw Error(ErrorKind::ParamOutOfRange,
                  "catalog2 index " + std::to_string(index) + " not in 1..8");
  }
}

ResolutionConfiguration figure4_configuration(int n) {
  require(n >= 2 && n + 1 <= kMaxArcs, "figure4 needs n >= 2");
  std::vector<std::vector<int>> circles(n + 1);
  const int bottom = n;  // arc joining x_1 and x_n
  circles[0] = {endpoint_id(bottom, 0), endpoint_id(0, 0)};
  for (int i = 1; i + 1 < n; ++i) circles[i] = {endpoint_id(i, 0)};
  circles[n - 1] = {endpoint_id(n - 1, 0), endpoint_id(bottom, 1)};
  for (int i = n - 1; i >= 0; --i) circles[n].push_back(endpoint_id(i, 1));
  return ResolutionConfiguration(std::move(circles), std::vector<Side>(2 * (n + 1), R));
}

ResolutionConfiguration figure5_configuration(int k, int l) {
  require(k >= 1 && l >= 1 && k + l + 1 <= kMaxArcs, "figure5 needs k, l >= 1");
  std::vector<std::vector<int>> circles(1);
  std::vector<Side> sides(2 * (k + l + 1), R);
  sides[endpoint_id(0, 0)] = sides[endpoint_id(0, 1)] = L;
  circles[0].push_back(endpoint_id(0, 0));
  for (int i = 1; i <= k; ++i) circles[0].push_back(endpoint_id(i, 0));
  circles[0].push_back(endpoint_id(0, 1));
  for (int i = k + 1; i <= k + l; ++i) circles[0].push_back(endpoint_id(i, 0));
  for (int i = 1; i <= k + l; ++i) circles.push_back({endpoint_id(i, 1)});
  return ResolutionConfiguration(std::move(circles), std::move(sides));
}

ResolutionConfiguration figure6_configuration(int k, int l) {
  require(k >= 1 && l >= 1 && k + l + 1 <= kMaxArcs, "figure6 needs k, l >= 1");
  const int arcs = k + l + 1;
  std::vector<std::vector<int>> circles(k + 2);
  std::vector<Side> sides(2 * arcs, R);
  auto chord = [&](int j) { return j == 1 ? 1 : k + j; };  // j-th chord from the left, j = 1..l
  for (int j = 1; j <= l; ++j) sides[endpoint_id(chord(j), 0)] = sides[endpoint_id(chord(j), 1)] = L;

  circles[0].push_back(endpoint_id(0, 0));
  for (int i = 0; i < k; ++i) {
    circles[0].push_back(endpoint_id(2 + i, 0));
    circles[1 + i] = {endpoint_id(2 + i, 1)};
  }
  auto& z = circles[k + 1];
  for (int j = l; j >= 2; --j) z.push_back(endpoint_id(chord(j), 0));
  z.push_back(endpoint_id(1, 0));
  z.push_back(endpoint_id(0, 1));
  z.push_back(endpoint_id(1, 1));
  for (int j = 2; j <= l; ++j) z.push_back(endpoint_id(chord(j), 1));
  return ResolutionConfiguration(std::move(circles), std::move(sides));
}

PlanarDiagram figure4_diagram(int n) {
  auto d = configuration_to_diagram(figure4_configuration(n));
  d.name = "figure4(" + std::to_string(n) + ")";
  return d;
}

PlanarDiagram figure5_diagram(int k, int l) {
  auto d = configuration_to_diagram(figure5_configuration(k, l));
  d.name = "figure5(" + std::to_string(k) + "," + std::to_string(l) + ")";
  return d;
}

PlanarDiagram figure6_diagram(int k, int l) {
  auto d = configuration_to_diagram(figure6_configuration(k, l));
  d.name = "figure6(" + std::to_string(k) + "," + std::to_string(l) + ")";
  return d;
}

std::vector<std::string> named_knot_names() {
  return {"trefoil", "figure_eight", "kink", "unknot", "hopf"};
}

PlanarDiagram named_knot(std::string_view name) {
  std::string pd;
  if (name == "trefoil") {
    pd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
  } else if (name == "figure_eight" || name == "figure-eight") {
    pd = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
  } else if (name == "kink") {
    pd = "X(1,2,2,1)";
  } else if (name == "unknot") {
    pd = "U";
  } else if (name == "hopf") {
    pd = "X(4,1,3,2) X(2,3,1,4)";
  } else {
    throw Error(ErrorKind::UnknownFixture, "no knot named '" + std::string(name) + "'");
  }
  auto d = with_inferred_orientation(parse_pd(pd));
  d.name = std::string(name);
  return d;
}

std::variant<PlanarDiagram, ResolutionConfiguration> fixture(const FixtureSpec& spec) {
  const auto& f = spec.family;
  if (f == "catalog2") return catalog2_entry(spec.index);
  if (f == "figure4") return figure4_diagram(spec.n);
  if (f == "figure5") return figure5_diagram(spec.k, spec.l);
  if (f == "figure6") return figure6_diagram(spec.k, spec.l);
  if (f == "named_knot") return named_knot(spec.name);
  for (const auto& name : named_knot_names()) {
    if (f == name) return named_knot(name);
  }
  if (f == "figure-eight") return named_knot(f);
  throw Error(ErrorKind::UnknownFixture, "unknown fixture family '" + f + "'");
}

}  // namespace khtot
