#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "khtot/cube.hpp"
#include "khtot/diagram.hpp"

namespace khtot {

// Fixture diagrams with at most six crossings: trefoil, figure_eight,
// figure4(2..4), figure5(1,1), figure5(2,1), figure6(1,1), figure6(2,1).
std::vector<PlanarDiagram> small_fixture_diagrams();

struct SampledFace {
  int diagram;  // index into the diagram list
  Choice u;
  Choice v;
  Face face;
};

// u uniform, v obtained by raising a nonempty random subset of the zeros of u.
SampledFace random_face(const std::vector<PlanarDiagram>& diagrams, std::mt19937_64& rng);
std::vector<SampledFace> random_faces(const std::vector<PlanarDiagram>& diagrams,
                                      std::uint64_t seed, int count);

}  // namespace khtot
