#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khtot/cube.hpp"
#include "khtot/diagram.hpp"
#include "khtot/f2linalg.hpp"

namespace khtot {

BigradedMap khovanov_d1(const ResolutionConfiguration& c);
BigradedMap sss_map(const ResolutionConfiguration& c);

// Powers of H and W attached to a term of the total differential.
struct CoefficientLabel {
  int h_power = 0;
  int w_power = 0;
  friend auto operator<=>(const CoefficientLabel&, const CoefficientLabel&) = default;
};

enum class TermKind { D1, H };

// Cube vertices are bitmasks: bit i is the smoothing of crossing i.
using Vertex = std::uint32_t;

// One face map with both sides expressed in vertex monomials (circle order of
// resolve()), entries sorted by input.
struct FaceMap {
  Vertex u;
  Vertex v;
  std::vector<Entry> entries;
};

struct AssembledTerm {
  TermKind kind;
  int dimension;
  CoefficientLabel label;
  std::vector<FaceMap> faces;            // lexicographic on (u, v)
  std::vector<std::vector<int>> from;    // vertex -> indices into faces
};

// Chain-level vector: set of (vertex, monomial) generators, sorted.
using CubeVector = std::vector<std::pair<Vertex, Monomial>>;
void canonicalize(CubeVector& v);

class CubeComplex {
 public:
  // Throws TooLarge past max_crossings.
  explicit CubeComplex(PlanarDiagram d, int max_crossings = 10);

  const PlanarDiagram& diagram() const noexcept { return d_; }
  int crossing_count() const noexcept { return n_; }
  Vertex vertex_count() const noexcept { return Vertex{1} << n_; }
  const Resolution& resolution(Vertex u) const { return vertices_.at(u); }
  int circles(Vertex u) const { return vertices_.at(u).circle_count(); }
  Choice choice(Vertex u) const;
  int gr_q(Vertex u, Monomial m) const;
  // (n_-, n_+ - 2 n_-) for oriented diagrams, (0, 0) otherwise.
  Bigrading normalization() const;

  AssembledTerm assemble(TermKind kind, int dimension, Execution exec = Execution::Parallel) const;
  // Cached assembly.
  const AssembledTerm& term(TermKind kind, int dimension) const;

  CubeVector apply(const AssembledTerm& t, const CubeVector& x) const;
  // Restricted to faces ending at a chosen vertex set is done by callers.

  GradedComplex khovanov_complex() const;

 private:
  PlanarDiagram d_;
  int n_;
  std::vector<Resolution> vertices_;
  mutable std::map<std::pair<int, int>, AssembledTerm> cache_;
};

AssembledTerm assemble_term(const PlanarDiagram& d, TermKind kind, int i);

// ---------------------------------------------------------------------------
// Identities

enum class Identity { D1Squared, H1Squared, D1H1, H1H2, H1H3H2Squared };

std::string to_string(Identity id);
std::optional<Identity> identity_from_string(std::string_view s);
std::vector<Identity> all_identities();

struct IdentityWitness {
  Vertex vertex;
  Monomial monomial;
  CubeVector value;
};

struct IdentityReport {
  Identity identity;
  bool pass;
  std::optional<IdentityWitness> witness;
  long long elapsed_ms;
  std::size_t generators_checked;
};

IdentityReport check_identity(const CubeComplex& cube, Identity which,
                              Execution exec = Execution::Parallel);
IdentityReport check_identity(const PlanarDiagram& d, Identity which, int max_crossings = 8,
                              Execution exec = Execution::Parallel);

// ---------------------------------------------------------------------------
// Element computations along specific cube paths

struct PathContribution {
  Vertex middle;
  CubeVector value;  // contribution at the final vertex
};

struct CompositionResult {
  CubeVector total;
  std::vector<PathContribution> contributions;  // nonzero ones only, by middle vertex
};

// (second o first)(x) split by the intermediate vertex.
CompositionResult compose_on(const CubeComplex& cube, const AssembledTerm& first,
                             const AssembledTerm& second, const CubeVector& x);

struct LemmaReport {
  std::string name;
  Vertex start = 0;
  Vertex target = 0;
  CubeVector input;
  CubeVector expected_h_d1;
  CubeVector expected_d1_h;
  CompositionResult h_d1;  // h_n o d_1
  CompositionResult d1_h;  // d_1 o h_n
  std::vector<Vertex> expected_h_d1_faces;
  std::vector<Vertex> expected_d1_h_faces;
  bool values_match = false;
  bool faces_match = false;
  bool pass() const { return values_match && faces_match; }
};

LemmaReport lemma35(int n);
LemmaReport lemma36(int k, int l);
LemmaReport lemma38(int k, int l);

// ---------------------------------------------------------------------------
// Homology and the bracket oracle

// Normalized by the diagram's orientation data when present.
HomologyTable khovanov_homology(const PlanarDiagram& d, int max_crossings = 10,
                                Execution exec = Execution::Parallel);

// Laurent polynomial in A, exponent -> coefficient, with <O> = -A^2 - A^-2 per loop.
using Laurent = std::map<int, long long>;
Laurent kauffman_bracket(const PlanarDiagram& d, int max_crossings = 16);
// Converts the bracket to the q-polynomial the Euler characteristic should
// equal (including normalization shifts when the diagram is oriented).
std::map<int, long long> bracket_to_euler(const PlanarDiagram& d, const Laurent& bracket);

}  // namespace khtot
