#include "khtot/rules.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "khtot/error.hpp"

namespace khtot {

namespace {

Monomial bit(int i) { return Monomial{1} << i; }

void require_typed(const ResolutionConfiguration& c, const BigradedMap& f) {
  if (f.domain().size() != c.circle_count() ||
      f.codomain().size() != ending_circles(c).count) {
    throw Error(ErrorKind::BasisMismatch, "map is not typed on this configuration");
  }
}

void add_witness(RuleReport& r, RuleWitness w) {
  r.pass = false;
  if (r.witnesses.size() < RuleReport::kMaxWitnesses) r.witnesses.push_back(w);
}

// Dual-side monomial on the ending circles of m(C*) for a starting monomial of C.
Monomial to_dual_end(const DualMirror& dm, Monomial a_star) {
  Monomial out = 0;
  for (std::size_t j = 0; j < dm.end_to_start.size(); ++j) {
    if (a_star & bit(dm.end_to_start[j])) out |= bit(static_cast<int>(j));
  }
  return out;
}

Monomial from_dual_end(const DualMirror& dm, Monomial b) {
  Monomial out = 0;
  for (std::size_t j = 0; j < dm.end_to_start.size(); ++j) {
    if (b & bit(static_cast<int>(j))) out |= bit(dm.end_to_start[j]);
  }
  return out;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Naturality: return "naturality";
    case Rule::Conjugation: return "conjugation";
    case Rule::Duality: return "duality";
    case Rule::Filtration: return "filtration";
    case Rule::Disoriented: return "disoriented";
    case Rule::Extension: return "extension";
    case Rule::Disconnected: return "disconnected";
  }
  return "?";
}

std::vector<Rule> all_rules() {
  return {Rule::Naturality, Rule::Conjugation, Rule::Duality,    Rule::Filtration,
          Rule::Disoriented, Rule::Extension,  Rule::Disconnected};
}

std::optional<Rule> rule_from_string(std::string_view s) {
  for (auto r : all_rules()) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::vector<Rule> parse_rules(std::string_view list) {
  std::vector<Rule> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto word = list.substr(0, comma);
    if (!word.empty()) {
      auto r = rule_from_string(word);
      if (!r) throw Error(ErrorKind::ParamOutOfRange, "unknown rule '" + std::string(word) + "'");
      if (std::find(out.begin(), out.end(), *r) == out.end()) out.push_back(*r);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

Monomial map_monomial(const std::vector<int>& perm, Monomial m) {
  Monomial out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (m & bit(static_cast<int>(i))) out |= bit(perm[i]);
  }
  return out;
}

Monomial map_start(const Symmetry& s, Monomial m) { return map_monomial(s.circle_map, m); }

// ---------------------------------------------------------------------------
// Predicates

RuleReport check_filtration(const ResolutionConfiguration& c, const BigradedMap& f) {
  require_typed(c, f);
  RuleReport r{"filtration", true, {}};
  const auto ending = ending_circles(c);
  for (const auto& [a, b] : f.entries()) {
    for (int seg = 0; seg < c.segment_count(); ++seg) {
      const Monomial x = bit(c.circle_of_segment(seg));
      const Monomial y = bit(ending.of_segment[seg]);
      if ((a & x) && !(b & y)) add_witness(r, {seg, -1, a, b});
    }
  }
  return r;
}

RuleReport check_duality(const ResolutionConfiguration& c, const BigradedMap& f,
                         const BigradedMap& f_dual) {
  require_typed(c, f);
  const auto dm = dual_mirror(c);
  require_typed(dm.config, f_dual);
  const int t = c.circle_count();
  const int s = dm.config.circle_count();
  RuleReport r{"duality", true, {}};
  std::set<Entry> bad;
  for (const auto& [a, b] : f.entries()) {
    if (!f_dual.coefficient(star(b, s), to_dual_end(dm, star(a, t)))) bad.insert({a, b});
  }
  for (const auto& [bs, as] : f_dual.entries()) {
    const Monomial a = star(from_dual_end(dm, as), t);
    const Monomial b = star(bs, s);
    if (!f.coefficient(a, b)) bad.insert({a, b});
  }
  for (const auto& [a, b] : bad) add_witness(r, {-1, -1, a, b});
  return r;
}

RuleReport check_structural(const ResolutionConfiguration& c, const BigradedMap& f, Rule rule,
                            DisconnectedMode mode) {
  require_typed(c, f);
  RuleReport r{to_string(rule), true, {}};
  switch (rule) {
    case Rule::Conjugation:
    case Rule::Disoriented:
      // Configurations carry no orientations, so there is nothing to compare.
      return r;
    case Rule::Filtration:
      return check_filtration(c, f);
    case Rule::Duality:
      throw Error(ErrorKind::ParamOutOfRange, "duality needs the dual map; use check_duality");
    case Rule::Disconnected: {
      const auto cl = classify(c);
      const bool forced_zero = mode == DisconnectedMode::Literal ? cl.components.size() >= 2
                                                                 : !cl.trees_and_dual_trees();
      if (forced_zero) {
        for (const auto& [a, b] : f.entries()) add_witness(r, {-1, -1, a, b});
      }
      return r;
    }
    case Rule::Extension: {
      const auto cl = classify(c);
      const int p = static_cast<int>(cl.passive_circles.size());
      if (p > 20) throw Error(ErrorKind::TooLarge, "more than 20 passive circles");
      Monomial passive_in = 0, passive_out = 0;
      for (int i = 0; i < p; ++i) {
        passive_in |= bit(cl.passive_circles[i]);
        passive_out |= bit(cl.passive_ending[i]);
      }
      std::map<Entry, std::size_t> seen;
      for (const auto& [a, b] : f.entries()) {
        bool aligned = true;
        for (int i = 0; i < p; ++i) {
          if (((a >> cl.passive_circles[i]) & 1) != ((b >> cl.passive_ending[i]) & 1)) aligned = false;
        }
        if (!aligned) {
          add_witness(r, {-1, -1, a, b});
          continue;
        }
        ++seen[{a & ~passive_in, b & ~passive_out}];
      }
      const std::size_t copies = std::size_t{1} << p;
      for (const auto& [e, count] : seen) {
        if (count != copies) add_witness(r, {-1, -1, e.first, e.second});
      }
      return r;
    }
    case Rule::Naturality: {
      const auto autos = automorphisms(c);
      for (std::size_t i = 0; i < autos.size(); ++i) {
        const auto emap = ending_map(c, c, autos[i]);
        for (const auto& [a, b] : f.entries()) {
          const Monomial sa = map_start(autos[i], a);
          const Monomial sb = map_monomial(emap, b);
          if (!f.coefficient(sa, sb)) add_witness(r, {-1, static_cast<int>(i), a, b});
        }
      }
      return r;
    }
  }
  return r;
}

BigradedMap dual_transport(const ResolutionConfiguration& c, const BigradedMap& f) {
  require_typed(c, f);
  const auto dm = dual_mirror(c);
  const int t = c.circle_count();
  const int s = dm.config.circle_count();
  std::vector<Entry> entries;
  for (const auto& [a, b] : f.entries()) {
    entries.emplace_back(star(b, s), to_dual_end(dm, star(a, t)));
  }
  return BigradedMap(basis_of(dm.config, BasisSide::Start), basis_of(dm.config, BasisSide::End),
                     f.bidegree(), std::move(entries));
}

BigradedMap self_dual_symmetrization(const ResolutionConfiguration& c, const BigradedMap& f) {
  const auto dm = dual_mirror(c);
  const auto isos = isomorphisms(dm.config, c);
  if (isos.empty()) throw Error(ErrorKind::InconsistentFamily, "configuration is not self-dual");
  const auto& psi = isos.front();
  const auto emap = ending_map(dm.config, c, psi);
  const auto fd = dual_transport(c, f);
  std::vector<Entry> entries;
  for (const auto& [a, b] : fd.entries()) {
    entries.emplace_back(map_start(psi, a), map_monomial(emap, b));
  }
  return add(f, BigradedMap(f.domain(), f.codomain(), f.bidegree(), std::move(entries)));
}

// ---------------------------------------------------------------------------
// Constraint systems

int ConstraintSystem::index_of(int member, Monomial in, Monomial out) const {
  const auto first = variables.begin() + member_offset.at(member);
  const auto last = variables.begin() + member_offset.at(member + 1);
  auto it = std::lower_bound(first, last, Entry{in, out}, [](const Variable& v, const Entry& e) {
    return Entry{v.in, v.out} < e;
  });
  if (it == last || it->in != in || it->out != out) return -1;
  return static_cast<int>(it - variables.begin());
}

bool ConstraintSystem::satisfied_by(const std::vector<std::uint8_t>& assignment) const {
  for (const auto& row : relations) {
    int parity = 0;
    for (int v : row) parity ^= assignment.at(v);
    if (parity) return false;
  }
  return true;
}

std::vector<std::uint8_t> ConstraintSystem::assignment_of(int member, const BigradedMap& f) const {
  std::vector<std::uint8_t> x(variables.size(), 0);
  for (const auto& [a, b] : f.entries()) {
    const int v = index_of(member, a, b);
    if (v < 0) throw Error(ErrorKind::BidegreeViolation, "entry is not a variable of the system");
    x[v] ^= 1;
  }
  return x;
}

std::string ConstraintSystem::variable_name(int v) const {
  const auto& var = variables.at(v);
  return "m" + std::to_string(var.member) + ":" + std::to_string(var.in) + "->" +
         std::to_string(var.out);
}

ConstraintSystem rule_constraints(const std::vector<FamilyMember>& family, Bigrading bidegree,
                                  const std::vector<Rule>& rules, DisconnectedMode mode,
                                  std::size_t max_variables) {
  auto has = [&](Rule r) { return std::find(rules.begin(), rules.end(), r) != rules.end(); };
  const int members = static_cast<int>(family.size());
  ConstraintSystem sys;
  sys.bidegree = bidegree;

  std::vector<EndingCircles> ending(members);
  for (int i = 0; i < members; ++i) {
    const auto& c = family[i].config;
    ending[i] = ending_circles(c);
    if (c.dimension() != bidegree.h) {
      throw Error(ErrorKind::InconsistentFamily, "member " + std::to_string(i) + " has dimension " +
                                                     std::to_string(c.dimension()));
    }
    if (c.circle_count() > 30 || ending[i].count > 30) {
      throw Error(ErrorKind::TooLarge, "member " + std::to_string(i) + " has too many circles");
    }
  }

  // Variables: all bidegree-admissible entries, sorted per member.
  for (int i = 0; i < members; ++i) {
    sys.member_offset.push_back(static_cast<int>(sys.variables.size()));
    const auto& c = family[i].config;
    const int t = c.circle_count();
    const int s = ending[i].count;
    const int k = c.dimension();
    for (Monomial a = 0; a < (Monomial{1} << t); ++a) {
      const int twice = s + k - t + 2 * std::popcount(a) - bidegree.q;
      if (twice % 2 != 0 || twice < 0 || twice > 2 * s) continue;
      const int w = twice / 2;
      if (w == 0) {
        sys.variables.push_back({i, a, 0});
      } else {
        // Subsets of size w in increasing order.
        for (Monomial b = (Monomial{1} << w) - 1; b < (Monomial{1} << s);) {
          sys.variables.push_back({i, a, b});
          const Monomial lowest = b & (~b + 1);
          const Monomial ripple = b + lowest;
          b = (((ripple ^ b) >> 2) / lowest) | ripple;
        }
      }
      if (sys.variables.size() > max_variables) {
        throw Error(ErrorKind::TooLarge, "more than " + std::to_string(max_variables) + " variables");
      }
    }
  }
  sys.member_offset.push_back(static_cast<int>(sys.variables.size()));

  auto emit = [&](std::vector<int> row, const char* rule) {
    std::sort(row.begin(), row.end());
    if (row.size() == 2 && row[0] == row[1]) return;
    sys.relations.push_back(std::move(row));
    sys.relation_rule.emplace_back(rule);
  };
  auto member_vars = [&](int i) {
    return std::pair(sys.member_offset[i], sys.member_offset[i + 1]);
  };

  if (has(Rule::Duality)) {
    for (int i = 0; i < members; ++i) {
      const int j = family[i].partner;
      if (j < 0 || j >= members || family[j].partner != i) {
        throw Error(ErrorKind::InconsistentFamily, "partner of member " + std::to_string(i) +
                                                       " is not reciprocal");
      }
      const auto dm = dual_mirror(family[i].config);
      const auto isos = isomorphisms(dm.config, family[j].config);
      if (isos.empty()) {
        throw Error(ErrorKind::InconsistentFamily, "dual of member " + std::to_string(i) +
                                                       " is not isomorphic to member " +
                                                       std::to_string(j));
      }
      if (j < i) continue;
      const auto& phi = isos.front();
      const auto emap = ending_map(dm.config, family[j].config, phi);
      const int t = family[i].config.circle_count();
      const int s = ending[i].count;
      const auto [lo, hi] = member_vars(i);
      for (int v = lo; v < hi; ++v) {
        const auto& var = sys.variables[v];
        const Monomial in = map_start(phi, star(var.out, s));
        const Monomial out = map_monomial(emap, to_dual_end(dm, star(var.in, t)));
        const int w = sys.index_of(j, in, out);
        emit(w < 0 ? std::vector<int>{v} : std::vector<int>{v, w}, "duality");
      }
    }
  }

  for (int i = 0; i < members; ++i) {
    const auto& c = family[i].config;
    const auto [lo, hi] = member_vars(i);
    if (has(Rule::Filtration)) {
      for (int v = lo; v < hi; ++v) {
        const auto& var = sys.variables[v];
        for (int seg = 0; seg < c.segment_count(); ++seg) {
          if ((var.in & bit(c.circle_of_segment(seg))) && !(var.out & bit(ending[i].of_segment[seg]))) {
            emit({v}, "filtration");
            break;
          }
        }
      }
    }
    if (has(Rule::Disconnected)) {
      const auto cl = classify(c);
      const bool forced_zero = mode == DisconnectedMode::Literal ? cl.components.size() >= 2
                                                                 : !cl.trees_and_dual_trees();
      if (forced_zero) {
        for (int v = lo; v < hi; ++v) emit({v}, "disconnected");
      }
    }
    if (has(Rule::Extension)) {
      const auto cl = classify(c);
      Monomial passive_in = 0, passive_out = 0;
      for (std::size_t p = 0; p < cl.passive_circles.size(); ++p) {
        passive_in |= bit(cl.passive_circles[p]);
        passive_out |= bit(cl.passive_ending[p]);
      }
      for (int v = lo; v < hi; ++v) {
        const auto& var = sys.variables[v];
        bool aligned = true;
        for (std::size_t p = 0; p < cl.passive_circles.size(); ++p) {
          if (((var.in >> cl.passive_circles[p]) & 1) != ((var.out >> cl.passive_ending[p]) & 1)) {
            aligned = false;
          }
        }
        if (!aligned) {
          emit({v}, "extension");
          continue;
        }
        const int w = sys.index_of(i, var.in & ~passive_in, var.out & ~passive_out);
        emit(w < 0 ? std::vector<int>{v} : std::vector<int>{v, w}, "extension");
      }
    }
    if (has(Rule::Naturality)) {
      const auto autos = automorphisms(c);
      for (const auto& sigma : autos) {
        const auto emap = ending_map(c, c, sigma);
        for (int v = lo; v < hi; ++v) {
          const auto& var = sys.variables[v];
          const int w = sys.index_of(i, map_start(sigma, var.in), map_monomial(emap, var.out));
          emit(w < 0 ? std::vector<int>{v} : std::vector<int>{v, w}, "naturality");
        }
      }
    }
  }
  return sys;
}

std::vector<std::vector<int>> solve_kernel(const ConstraintSystem& sys) {
  const int n = static_cast<int>(sys.variables.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> zero(n, 0);
  std::vector<const std::vector<int>*> wide;
  for (const auto& row : sys.relations) {
    if (row.size() == 1) {
      zero[row[0]] = 1;
    } else if (row.size() == 2) {
      parent[find_root(parent, row[0])] = find_root(parent, row[1]);
    } else if (!row.empty()) {
      wide.push_back(&row);
    }
  }
  std::vector<char> class_zero(n, 0);
  for (int v = 0; v < n; ++v) {
    if (zero[v]) class_zero[find_root(parent, v)] = 1;
  }
  // Surviving classes become the unknowns of the remaining relations.
  std::vector<int> class_index(n, -1);
  std::vector<std::vector<int>> members;
  for (int v = 0; v < n; ++v) {
    const int r = find_root(parent, v);
    if (class_zero[r]) continue;
    if (class_index[r] < 0) {
      class_index[r] = static_cast<int>(members.size());
      members.emplace_back();
    }
    members[class_index[r]].push_back(v);
  }
  const int m = static_cast<int>(members.size());

  std::vector<std::vector<int>> class_kernel;
  if (wide.empty()) {
    for (int c = 0; c < m; ++c) class_kernel.push_back({c});
  } else {
    const int words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto* row : wide) {
      std::vector<std::uint64_t> dense(words, 0);
      for (int v : *row) {
        const int c = class_index[find_root(parent, v)];
        if (c >= 0) dense[c / 64] ^= std::uint64_t{1} << (c % 64);
      }
      rows.push_back(std::move(dense));
    }
    // Reduced row echelon form.
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < m && rank < static_cast<int>(rows.size()); ++col) {
      const std::uint64_t b = std::uint64_t{1} << (col % 64);
      int p = -1;
      for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][col / 64] & b) {
          p = r;
          break;
        }
      }
      if (p < 0) continue;
      std::swap(rows[rank], rows[p]);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (r != rank && (rows[r][col / 64] & b)) {
          for (int w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
      }
      pivot_col.push_back(col);
      ++rank;
    }
    std::vector<char> is_pivot(m, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    for (int f = 0; f < m; ++f) {
      if (is_pivot[f]) continue;
      std::vector<int> vec{f};
      for (int r = 0; r < rank; ++r) {
        if (rows[r][f / 64] & (std::uint64_t{1} << (f % 64))) vec.push_back(pivot_col[r]);
      }
      std::sort(vec.begin(), vec.end());
      class_kernel.push_back(std::move(vec));
    }
  }

  std::vector<std::vector<int>> out;
  for (const auto& cls : class_kernel) {
    std::vector<int> vars;
    for (int c : cls) vars.insert(vars.end(), members[c].begin(), members[c].end());
    std::sort(vars.begin(), vars.end());
    out.push_back(std::move(vars));
  }
  return out;
}

}  // namespace khtot
