#include "khtot/sampling.hpp"

#include "khtot/fixtures.hpp"

namespace khtot {

std::vector<PlanarDiagram> small_fixture_diagrams() {
  std::vector<PlanarDiagram> out{named_knot("trefoil"), named_knot("figure_eight")};
  for (int n = 2; n <= 4; ++n) out.push_back(figure4_diagram(n));
  out.push_back(figure5_diagram(1, 1));
  out.push_back(figure5_diagram(2, 1));
  out.push_back(figure6_diagram(1, 1));
  out.push_back(figure6_diagram(2, 1));
  return out;
}

SampledFace random_face(const std::vector<PlanarDiagram>& diagrams, std::mt19937_64& rng) {
  SampledFace s;
  s.diagram = static_cast<int>(rng() % diagrams.size());
  const auto& d = diagrams[s.diagram];
  const int n = d.crossing_count();
  for (;;) {
    s.u.assign(n, 0);
    s.v.assign(n, 0);
    for (int i = 0; i < n; ++i) s.u[i] = rng() & 1;
    bool raised = false;
    for (int i = 0; i < n; ++i) {
      s.v[i] = s.u[i];
      if (!s.u[i] && (rng() & 1)) {
        s.v[i] = 1;
        raised = true;
      }
    }
    if (raised) break;
  }
  s.face = face_configuration(d, s.u, s.v);
  return s;
}

std::vector<SampledFace> random_faces(const std::vector<PlanarDiagram>& diagrams,
                                      std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<SampledFace> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_face(diagrams, rng));
  return out;
}

}  // namespace khtot
