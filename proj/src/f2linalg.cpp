#include "khtot/f2linalg.hpp"

#include <algorithm>
#include <string>

#include "khtot/cube.hpp"
#include "khtot/error.hpp"
#include "khtot/kernels.hpp"

namespace khtot {

MonomialBasis MonomialBasis::of_size(int n, int h_base, int q_shift) {
  MonomialBasis b;
  b.circles.resize(n);
  for (int i = 0; i < n; ++i) b.circles[i] = i;
  b.h_base = h_base;
  b.q_shift = q_shift;
  return b;
}

MonomialBasis basis_of(const ResolutionConfiguration& c, BasisSide side) {
  if (side == BasisSide::Start) return MonomialBasis::of_size(c.circle_count());
  const int k = c.dimension();
  return MonomialBasis::of_size(ending_circles(c).count, k, k);
}

Monomial star(Monomial m, int circles) {
  const Monomial mask = circles >= 64 ? ~Monomial{0} : (Monomial{1} << circles) - 1;
  return ~m & mask;
}

void canonicalize(std::vector<Entry>& entries) {
  std::sort(entries.begin(), entries.end());
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j] == entries[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(entries[i]);
    i = j;
  }
  entries = std::move(out);
}

void canonicalize(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end());
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(v[i]);
    i = j;
  }
  v = std::move(out);
}

BigradedMap::BigradedMap(MonomialBasis domain, MonomialBasis codomain, Bigrading bidegree,
                         std::vector<Entry> entries)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      bidegree_(bidegree),
      entries_(std::move(entries)) {
  if (codomain_.h_base - domain_.h_base != bidegree_.h) {
    throw Error(ErrorKind::BidegreeViolation,
                "bases differ by " + std::to_string(codomain_.h_base - domain_.h_base) +
                    " in gr_h, declared " + std::to_string(bidegree_.h));
  }
  canonicalize(entries_);
  for (const auto& [in, out] : entries_) {
    if (!domain_.contains(in) || !codomain_.contains(out)) {
      throw Error(ErrorKind::BasisMismatch, "entry outside its basis");
    }
    if (!admissible(in, out)) {
      throw Error(ErrorKind::BidegreeViolation,
                  "entry (" + std::to_string(in) + "," + std::to_string(out) + ") shifts gr_q by " +
                      std::to_string(codomain_.gr_q(out) - domain_.gr_q(in)));
    }
  }
}

bool BigradedMap::admissible(Monomial in, Monomial out) const {
  return codomain_.gr_q(out) - domain_.gr_q(in) == bidegree_.q;
}

bool BigradedMap::coefficient(Monomial in, Monomial out) const {
  return std::binary_search(entries_.begin(), entries_.end(), Entry{in, out});
}

std::vector<Monomial> BigradedMap::image(Monomial in) const {
  std::vector<Monomial> out;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{in, 0});
  for (; it != entries_.end() && it->first == in; ++it) out.push_back(it->second);
  return out;
}

std::vector<Monomial> BigradedMap::apply(const std::vector<Monomial>& v) const {
  std::vector<Monomial> out;
  for (Monomial m : v) {
    auto img = image(m);
    out.insert(out.end(), img.begin(), img.end());
  }
  canonicalize(out);
  return out;
}

BigradedMap compose(const BigradedMap& g, const BigradedMap& f) {
  if (!(f.codomain() == g.domain())) {
    throw Error(ErrorKind::BasisMismatch, "codomain of f differs from domain of g");
  }
  std::vector<Entry> entries;
  for (const auto& [a, b] : f.entries()) {
    for (Monomial c : g.image(b)) entries.emplace_back(a, c);
  }
  return BigradedMap(f.domain(), g.codomain(),
                     {f.bidegree().h + g.bidegree().h, f.bidegree().q + g.bidegree().q},
                     std::move(entries));
}

BigradedMap add(const BigradedMap& f, const BigradedMap& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
    throw Error(ErrorKind::BasisMismatch, "maps have different bases");
  }
  Bigrading deg = f.bidegree();
  if (f.is_zero()) {
    deg = g.bidegree();
  } else if (!g.is_zero() && !(f.bidegree() == g.bidegree())) {
    throw Error(ErrorKind::BasisMismatch, "maps have different bidegrees");
  }
  std::vector<Entry> entries = f.entries();
  entries.insert(entries.end(), g.entries().begin(), g.entries().end());
  return BigradedMap(f.domain(), f.codomain(), deg, std::move(entries));
}

BigradedMap commutator(const BigradedMap& f, const BigradedMap& g) {
  return add(compose(f, g), compose(g, f));
}

BigradedMap tensor(const BigradedMap& f, const BigradedMap& g) {
  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::none_of(a.begin(), a.end(),
                        [&](int x) { return std::find(b.begin(), b.end(), x) != b.end(); });
  };
  if (!disjoint(f.domain().circles, g.domain().circles) ||
      !disjoint(f.codomain().circles, g.codomain().circles)) {
    throw Error(ErrorKind::CircleCollision, "tensor factors share a circle");
  }
  if (f.domain().size() + g.domain().size() > 64 || f.codomain().size() + g.codomain().size() > 64) {
    throw Error(ErrorKind::TooLarge, "more than 64 circles");
  }
  auto join = [](const MonomialBasis& a, const MonomialBasis& b) {
    MonomialBasis out = a;
    out.circles.insert(out.circles.end(), b.circles.begin(), b.circles.end());
    out.h_base += b.h_base;
    out.q_shift += b.q_shift;
    return out;
  };
  const int fd = f.domain().size();
  const int fc = f.codomain().size();
  std::vector<Entry> entries;
  for (const auto& [a, b] : f.entries()) {
    for (const auto& [c, d] : g.entries()) entries.emplace_back(a | (c << fd), b | (d << fc));
  }
  return BigradedMap(join(f.domain(), g.domain()), join(f.codomain(), g.codomain()),
                     {f.bidegree().h + g.bidegree().h, f.bidegree().q + g.bidegree().q},
                     std::move(entries));
}

BigradedMap identity_map(const MonomialBasis& b) {
  if (b.size() > 24) throw Error(ErrorKind::TooLarge, "identity on more than 24 circles");
  std::vector<Entry> entries;
  for (Monomial m = 0; m < b.dimension(); ++m) entries.emplace_back(m, m);
  return BigradedMap(b, b, {0, 0}, std::move(entries));
}

// ---------------------------------------------------------------------------

int f2_rank(DenseBlock block) {
  auto& rows = block.rows;
  int rank = 0;
  const int words = (block.cols + 63) / 64;
  for (int col = 0; col < block.cols && rank < static_cast<int>(rows.size()); ++col) {
    const int w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][w] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][w] & bit) {
        for (int k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::optional<ComplexWitness> complex_defect(const GradedComplex& c) {
  for (std::size_t i = 0; i + 1 < c.d.size(); ++i) {
    const auto& first = c.d[i];
    const auto& second = c.d[i + 1];
    for (int j = 0; j < first.cols; ++j) {
      std::vector<int> acc;
      for (int r : first.columns[j]) {
        acc.insert(acc.end(), second.columns[r].begin(), second.columns[r].end());
      }
      std::sort(acc.begin(), acc.end());
      for (std::size_t a = 0; a < acc.size();) {
        std::size_t b = a;
        while (b < acc.size() && acc[b] == acc[a]) ++b;
        if ((b - a) % 2 == 1) return ComplexWitness{c.h_min + static_cast<int>(i), j};
        a = b;
      }
    }
  }
  return std::nullopt;
}

HomologyTable homology_ranks(const GradedComplex& c, Execution exec) {
  if (auto w = complex_defect(c)) {
    throw Error(ErrorKind::NotAComplex, "d o d nonzero on generator " + std::to_string(w->generator) +
                                            " in degree " + std::to_string(w->h));
  }
  const int degrees = static_cast<int>(c.q_of.size());
  // Local index of each generator inside its q-block.
  std::vector<std::vector<int>> local(degrees);
  std::vector<std::map<int, int>> block_size(degrees);
  for (int i = 0; i < degrees; ++i) {
    for (int q : c.q_of[i]) local[i].push_back(block_size[i][q]++);
  }
  struct BlockKey {
    int degree;
    int q;
  };
  std::vector<BlockKey> keys;
  std::vector<DenseBlock> blocks;
  for (int i = 0; i < static_cast<int>(c.d.size()) && i + 1 < degrees; ++i) {
    const auto& m = c.d[i];
    std::map<int, int> block_of_q;
    for (const auto& [q, n] : block_size[i]) {
      if (!block_size[i + 1].count(q)) continue;
      block_of_q[q] = static_cast<int>(blocks.size());
      keys.push_back({i, q});
      DenseBlock b;
      b.cols = n;
      b.rows.assign(block_size[i + 1].at(q), std::vector<std::uint64_t>((n + 63) / 64, 0));
      blocks.push_back(std::move(b));
    }
    for (int j = 0; j < m.cols; ++j) {
      const int q = c.q_of[i][j];
      for (int r : m.columns[j]) {
        if (c.q_of[i + 1][r] != q) {
          throw Error(ErrorKind::BidegreeViolation, "differential does not preserve gr_q");
        }
        const int col = local[i][j];
        blocks[block_of_q.at(q)].rows[local[i + 1][r]][col / 64] ^= std::uint64_t{1} << (col % 64);
      }
    }
  }
  const auto ranks = block_ranks(blocks, exec);
  std::map<std::pair<int, int>, int> rank_of;
  for (std::size_t b = 0; b < keys.size(); ++b) rank_of[{keys[b].degree, keys[b].q}] = ranks[b];
  HomologyTable table;
  for (int i = 0; i < degrees; ++i) {
    for (const auto& [q, n] : block_size[i]) {
      int h = n;
      if (auto it = rank_of.find({i, q}); it != rank_of.end()) h -= it->second;
      if (auto it = rank_of.find({i - 1, q}); it != rank_of.end()) h -= it->second;
      if (h > 0) table[{c.h_min + i, q}] = h;
    }
  }
  return table;
}

HomologyTable homology_ranks(const std::vector<BigradedMap>& maps, Execution exec) {
  GradedComplex c;
  if (maps.empty()) return {};
  std::vector<MonomialBasis> groups;
  for (const auto& m : maps) groups.push_back(m.domain());
  groups.push_back(maps.back().codomain());
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!(maps[i].codomain() == maps[i + 1].domain())) {
      throw Error(ErrorKind::BasisMismatch, "consecutive maps do not share a basis");
    }
  }
  c.h_min = groups.front().h_base;
  for (const auto& g : groups) {
    if (g.size() > 24) throw Error(ErrorKind::TooLarge, "chain group too large");
    std::vector<int> q;
    for (Monomial m = 0; m < g.dimension(); ++m) q.push_back(g.gr_q(m));
    c.q_of.push_back(std::move(q));
  }
  for (const auto& m : maps) {
    SparseMatrix s;
    s.cols = static_cast<int>(m.domain().dimension());
    s.rows = static_cast<int>(m.codomain().dimension());
    s.columns.resize(s.cols);
    for (const auto& [a, b] : m.entries()) s.columns[a].push_back(static_cast<int>(b));
    c.d.push_back(std::move(s));
  }
  return homology_ranks(c, exec);
}

std::map<int, long long> euler_characteristic(const HomologyTable& t) {
  std::map<int, long long> chi;
  for (const auto& [hq, rank] : t) {
    chi[hq.second] += (hq.first % 2 == 0 ? 1 : -1) * static_cast<long long>(rank);
  }
  std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
  return chi;
}

}  // namespace khtot
