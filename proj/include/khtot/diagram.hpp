#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace khtot {

class ResolutionConfiguration;

// A planar link diagram in PD form. Each crossing lists its four edge labels
// counterclockwise. The 0-smoothing of (a,b,c,d) joins a-b and c-d, the
// 1-smoothing joins a-d and b-c.
struct PlanarDiagram {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;
  std::string name;
  // Optional orientation annotation, +1/-1 per crossing. Empty means
  // unoriented and the normalization shift is (0, 0).
  std::vector<int> signs;

  int crossing_count() const noexcept { return static_cast<int>(crossings.size()); }
  int edge_count() const noexcept { return 2 * crossing_count(); }
  bool oriented() const noexcept { return !signs.empty(); }
  int positive_crossings() const;
  int negative_crossings() const;

  friend bool operator==(const PlanarDiagram& a, const PlanarDiagram& b) {
    return a.crossings == b.crossings && a.free_loops == b.free_loops && a.signs == b.signs;
  }
};

// Grammar: whitespace separated `X(i,j,k,l)` terms with positive labels and
// `U` terms, each adding one free loop. Labels are renumbered 1..2n in order of
// first appearance.
PlanarDiagram parse_pd(std::string_view text);
std::string to_pd_text(const PlanarDiagram& d);

// Checks incidence and non-emptiness; throws BadIncidence / EmptyDiagram.
void validate(const PlanarDiagram& d);
PlanarDiagram normalize_labels(const PlanarDiagram& d);

// Reverses the cyclic order of every crossing: (a,b,c,d) -> (a,d,c,b).
PlanarDiagram mirror_diagram(const PlanarDiagram& d);

// Euler characteristic check of the 4-valent graph, per connected component.
bool is_planar(const PlanarDiagram& d);

// Orients every component (following increasing labels where possible) and
// records crossing signs. A crossing is positive when its 0-smoothing is the
// oriented smoothing.
PlanarDiagram with_inferred_orientation(const PlanarDiagram& d);

// Realizes c as a diagram: arc i becomes crossing i, whose 0-smoothing
// reproduces the configuration. Passive circles become free loops.
PlanarDiagram configuration_to_diagram(const ResolutionConfiguration& c);

}  // namespace khtot
