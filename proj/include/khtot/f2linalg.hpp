#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "khtot/configuration.hpp"

namespace khtot {

// Bit i set means circle i carries x; clear means 1.
using Monomial = std::uint64_t;

struct Bigrading {
  int h = 0;
  int q = 0;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

struct MonomialBasis {
  std::vector<int> circles;  // circle identifiers, bit i <-> circles[i]
  int h_base = 0;
  int q_shift = 0;

  static MonomialBasis of_size(int n, int h_base = 0, int q_shift = 0);

  int size() const noexcept { return static_cast<int>(circles.size()); }
  std::uint64_t dimension() const noexcept { return std::uint64_t{1} << circles.size(); }
  bool contains(Monomial m) const noexcept { return size() >= 64 || (m >> size()) == 0; }
  int gr_q(Monomial m) const noexcept { return size() - 2 * std::popcount(m) + q_shift; }
  Bigrading grading(Monomial m) const noexcept { return {h_base, gr_q(m)}; }
  Monomial all_x() const noexcept { return size() >= 64 ? ~Monomial{0} : (Monomial{1} << size()) - 1; }

  friend bool operator==(const MonomialBasis&, const MonomialBasis&) = default;
};

enum class BasisSide { Start, End };

// Start: one circle per starting circle, h_base 0, q_shift 0. End: one per
// ending circle (ending_circles order), h_base = q_shift = dimension.
MonomialBasis basis_of(const ResolutionConfiguration& c, BasisSide side);

// Complements the membership set within `circles` bits.
Monomial star(Monomial m, int circles);

using Entry = std::pair<Monomial, Monomial>;

// Sparse F2-linear map between monomial bases. Entries are kept sorted and
// deduplicated; inserting an entry twice cancels it.
class BigradedMap {
 public:
  BigradedMap() = default;
  // Throws BidegreeViolation if the bases disagree with the homological part
  // of `bidegree` or an entry has the wrong quantum shift.
  BigradedMap(MonomialBasis domain, MonomialBasis codomain, Bigrading bidegree,
              std::vector<Entry> entries = {});

  const MonomialBasis& domain() const noexcept { return domain_; }
  const MonomialBasis& codomain() const noexcept { return codomain_; }
  Bigrading bidegree() const noexcept { return bidegree_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  bool coefficient(Monomial in, Monomial out) const;
  // Images of one input monomial, sorted.
  std::vector<Monomial> image(Monomial in) const;
  // Applies to an F2 vector given as a set of monomials.
  std::vector<Monomial> apply(const std::vector<Monomial>& v) const;
  // Whether (in, out) would respect the bidegree.
  bool admissible(Monomial in, Monomial out) const;

  friend bool operator==(const BigradedMap& a, const BigradedMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.entries_ == b.entries_ &&
           (a.bidegree_ == b.bidegree_ || a.entries_.empty());
  }

 private:
  MonomialBasis domain_;
  MonomialBasis codomain_;
  Bigrading bidegree_;
  std::vector<Entry> entries_;
};

// Sorts and cancels pairs over F2.
void canonicalize(std::vector<Entry>& entries);
void canonicalize(std::vector<Monomial>& v);

BigradedMap compose(const BigradedMap& g, const BigradedMap& f);  // g o f
BigradedMap add(const BigradedMap& f, const BigradedMap& g);
BigradedMap commutator(const BigradedMap& f, const BigradedMap& g);
// Circles of g come after those of f; throws CircleCollision on shared ids.
BigradedMap tensor(const BigradedMap& f, const BigradedMap& g);
BigradedMap identity_map(const MonomialBasis& b);

// ---------------------------------------------------------------------------
// Chain complexes and homology

// Columns of a sparse F2 matrix; each column lists its nonzero rows, sorted.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> columns;
};

// Generators in each homological degree carry a quantum grading; d[i] goes
// from degree h_min + i to h_min + i + 1 and preserves q.
struct GradedComplex {
  int h_min = 0;
  std::vector<std::vector<int>> q_of;  // per degree, per generator
  std::vector<SparseMatrix> d;
};

using HomologyTable = std::map<std::pair<int, int>, int>;  // (h, q) -> rank

// Ranks of F2 matrices given as dense rows of 64-bit words.
struct DenseBlock {
  int cols = 0;
  std::vector<std::vector<std::uint64_t>> rows;
};
int f2_rank(DenseBlock block);

// Witness for a failed d o d = 0 check: degree and generator index.
struct ComplexWitness {
  int h;
  int generator;
};
std::optional<ComplexWitness> complex_defect(const GradedComplex& c);

enum class Execution { Serial, Parallel };

// Throws NotAComplex when some d o d is nonzero.
HomologyTable homology_ranks(const GradedComplex& c, Execution exec = Execution::Parallel);
// Maps arranged by gr_h: maps[i] goes from maps[i].domain() to maps[i+1].domain().
HomologyTable homology_ranks(const std::vector<BigradedMap>& maps,
                             Execution exec = Execution::Parallel);

// Graded Euler characteristic: q exponent -> coefficient.
std::map<int, long long> euler_characteristic(const HomologyTable& t);

}  // namespace khtot
