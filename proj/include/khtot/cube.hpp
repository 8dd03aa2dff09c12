#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "khtot/configuration.hpp"
#include "khtot/diagram.hpp"

namespace khtot {

using Choice = std::vector<std::uint8_t>;

// One corner of a smoothing: the circle enters crossing `crossing` at position
// `from` and leaves at `to`.
struct Junction {
  int crossing;
  int from;
  int to;
};

// A circle of a resolution: edges[i] is followed by junctions[i].
// Free loops have no edges.
struct ResolvedCircle {
  std::vector<int> edges;
  std::vector<Junction> junctions;
};

struct Resolution {
  Choice choice;
  std::vector<ResolvedCircle> circles;

  int circle_count() const noexcept { return static_cast<int>(circles.size()); }
};

// Circles are ordered by least edge label; free loops come last.
Resolution resolve(const PlanarDiagram& d, const Choice& choice);

// ---------------------------------------------------------------------------
// Surgery tracing

struct Piece {
  enum class Kind : std::uint8_t { Segment, Slot, Strand };
  Kind kind;
  int a;  // Segment: circle; Slot: endpoint; Strand: arc
  int b;  // Segment: index on circle; Strand: 0 = left copy, 1 = right copy (seen from end 0)
  bool reversed;
};

struct TracedCircle {
  std::vector<Piece> pieces;
};

// Circles obtained by surgering along the arcs flagged in `surger`. Output order
// is by least segment id, which puts each new circle at its lowest parent.
std::vector<TracedCircle> trace_surgery(const ResolutionConfiguration& c,
                                        const std::vector<bool>& surger);

struct EndingCircles {
  int count = 0;
  std::vector<int> of_segment;  // indexed by segment id
};

EndingCircles ending_circles(const ResolutionConfiguration& c);

// ---------------------------------------------------------------------------
// Configuration calculus

bool is_planar(const ResolutionConfiguration& c);
void require_planar(const ResolutionConfiguration& c);

ResolutionConfiguration surgery(const ResolutionConfiguration& c, int arc);
ResolutionConfiguration mirror(const ResolutionConfiguration& c);

// m(C*). Starting circles of the result are the ending circles of c, in
// ending_circles order; end_to_start[j] names the starting circle of c that
// corresponds to ending circle j of the result.
struct DualMirror {
  ResolutionConfiguration config;
  std::vector<int> end_to_start;
};

DualMirror dual_mirror(const ResolutionConfiguration& c);

struct Face {
  ResolutionConfiguration config;
  std::vector<int> end_to_vertex_circle;  // ending circle -> circle of resolve(d, v)
};

// Starting circles are the circles of resolve(d, u) in the same order; arc j is
// the j-th crossing (ascending) where u and v differ.
Face face_configuration(const PlanarDiagram& d, const Choice& u, const Choice& v);
Face face_configuration(const PlanarDiagram& d, const Resolution& ru, const Resolution& rv);

enum class ComponentKind : std::uint8_t { Tree, DualTree, Neither };

struct Component {
  std::vector<int> circles;
  std::vector<int> arcs;
  std::vector<int> ending_circles;
  ComponentKind kind;
};

struct Classification {
  std::vector<Component> components;
  std::vector<int> passive_circles;
  std::vector<int> passive_ending;  // ending circle of each passive circle
  EndingCircles ending;

  bool trees_and_dual_trees() const;
};

Classification classify(const ResolutionConfiguration& c);

// ---------------------------------------------------------------------------
// Symmetries

// An orientation-preserving identification of two configurations: circle c
// goes to circle_map[c] with its slot i landing at rotation[c] + i (or
// rotation[c] - i when reversed[c]); arc a goes to arc_map[a], ends swapped
// when arc_swap[a].
struct Symmetry {
  std::vector<int> circle_map;
  std::vector<int> arc_map;
  std::vector<std::uint8_t> arc_swap;
  std::vector<std::uint8_t> reversed;
  std::vector<int> rotation;

  friend auto operator<=>(const Symmetry&, const Symmetry&) = default;
};

// Image of each segment of `from` under the symmetry.
std::vector<int> segment_map(const ResolutionConfiguration& from, const ResolutionConfiguration& to,
                             const Symmetry& s);
// Induced bijection between ending circles.
std::vector<int> ending_map(const ResolutionConfiguration& from, const ResolutionConfiguration& to,
                            const Symmetry& s);

// All isomorphisms from a to b (sorted), at most `limit`; throws TooLarge past it.
std::vector<Symmetry> isomorphisms(const ResolutionConfiguration& a,
                                   const ResolutionConfiguration& b, std::size_t limit = 200000);
std::optional<Symmetry> find_isomorphism(const ResolutionConfiguration& a,
                                         const ResolutionConfiguration& b);
bool is_isomorphic(const ResolutionConfiguration& a, const ResolutionConfiguration& b);

// Throws TooLarge when c has more than max_circles circles.
std::vector<Symmetry> automorphisms(const ResolutionConfiguration& c, int max_circles = 12);

// second o first, both automorphisms of c.
Symmetry compose(const ResolutionConfiguration& c, const Symmetry& second, const Symmetry& first);

}  // namespace khtot
