#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "khtot/configuration.hpp"
#include "khtot/diagram.hpp"

namespace khtot {

// The eight connected 2-dimensional configurations, index 1..8.
ResolutionConfiguration catalog2_entry(int index);

// figure4(n), n >= 2: circles x_1..x_n then the center x_{n+1}; arc i-1 joins
// x_i to the center, arc n joins x_1 to x_n.
ResolutionConfiguration figure4_configuration(int n);

// figure5(k,l): a circle X split by arc 0, with k leaves on one side of the
// chord and l on the other (arcs 1..k+l, leaf circles 1..k+l).
ResolutionConfiguration figure5_configuration(int k, int l);

// figure6(k,l): a k-leaf star around x_1 (circle 0, leaves 1..k) and a circle
// z_1 (circle k+1) with l parallel chords. Arc 0 is gamma from x_1 to z_1,
// arc 1 is the chord gamma' cutting off the region gamma lands in, arcs
// 2..k+1 are the leaves, arcs k+2.. the remaining chords.
ResolutionConfiguration figure6_configuration(int k, int l);

PlanarDiagram figure4_diagram(int n);
PlanarDiagram figure5_diagram(int k, int l);
PlanarDiagram figure6_diagram(int k, int l);

// trefoil, figure_eight, kink, unknot, hopf
PlanarDiagram named_knot(std::string_view name);
std::vector<std::string> named_knot_names();

struct FixtureSpec {
  std::string family;  // figure4, figure5, figure6, catalog2, named_knot (or a knot name)
  int n = 0;
  int k = 0;
  int l = 0;
  int index = 0;
  std::string name;
};

// catalog2 yields a configuration, every other family a diagram.
std::variant<PlanarDiagram, ResolutionConfiguration> fixture(const FixtureSpec& spec);

}  // namespace khtot
