#include "khtot/uniqueness.hpp"

#include <algorithm>
#include <string>

#include "khtot/error.hpp"
#include "khtot/fixtures.hpp"
#include "khtot/perturbations.hpp"

namespace khtot {

namespace {

ResolutionConfiguration star_tree(int n) {
  std::vector<std::vector<int>> circles(n + 1);
  for (int i = 0; i < n; ++i) {
    circles[0].push_back(endpoint_id(i, 0));
    circles[i + 1] = {endpoint_id(i, 1)};
  }
  return ResolutionConfiguration(std::move(circles), std::vector<Side>(2 * n, Side::R));
}

// Circles side by side, arc i joining circle i to circle i+1.
ResolutionConfiguration chain_tree(int n) {
  std::vector<std::vector<int>> circles(n + 1);
  for (int i = 0; i < n; ++i) {
    circles[i].push_back(endpoint_id(i, 0));
    circles[i + 1].push_back(endpoint_id(i, 1));
  }
  return ResolutionConfiguration(std::move(circles), std::vector<Side>(2 * n, Side::R));
}

// Concentric circles, arc i running from circle i out to circle i+1.
ResolutionConfiguration nested_tree(int n) {
  std::vector<std::vector<int>> circles(n + 1);
  std::vector<Side> sides(2 * n, Side::R);
  for (int i = 0; i < n; ++i) {
    circles[i].push_back(endpoint_id(i, 0));
    circles[i + 1].push_back(endpoint_id(i, 1));
    sides[endpoint_id(i, 1)] = Side::L;
  }
  return ResolutionConfiguration(std::move(circles), std::move(sides));
}

}  // namespace

Catalog2 catalog2() {
  Catalog2 cat;
  for (int i = 1; i <= 8; ++i) cat.entries.push_back(catalog2_entry(i));
  for (int i = 0; i < 8; ++i) {
    const auto dm = dual_mirror(cat.entries[i]);
    int partner = -1;
    for (int j = 0; j < 8 && partner < 0; ++j) {
      if (is_isomorphic(dm.config, cat.entries[j])) partner = j;
    }
    cat.partner.push_back(partner);
  }
  return cat;
}

std::vector<FamilyMember> catalog2_family() {
  const auto cat = catalog2();
  std::vector<FamilyMember> family;
  for (int i = 0; i < 8; ++i) {
    if (cat.partner[i] < 0) throw Error(ErrorKind::InconsistentFamily, "catalog entry without dual");
    family.push_back({cat.entries[i], cat.partner[i], std::to_string(i + 1)});
  }
  return family;
}

std::vector<FamilyMember> close_under_duality(const std::vector<ResolutionConfiguration>& configs,
                                              const std::vector<std::string>& ids) {
  std::vector<FamilyMember> family;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    family.push_back({configs[i], -1, i < ids.size() ? ids[i] : std::to_string(i + 1)});
  }
  const std::size_t given = family.size();
  for (std::size_t i = 0; i < given; ++i) {
    if (family[i].partner >= 0) continue;
    const auto dm = dual_mirror(family[i].config);
    if (is_isomorphic(dm.config, family[i].config)) {
      family[i].partner = static_cast<int>(i);
      continue;
    }
    for (std::size_t j = i + 1; j < given && family[i].partner < 0; ++j) {
      if (family[j].partner < 0 && is_isomorphic(dm.config, family[j].config)) {
        family[i].partner = static_cast<int>(j);
        family[j].partner = static_cast<int>(i);
      }
    }
    if (family[i].partner < 0) {
      family[i].partner = static_cast<int>(family.size());
      family.push_back({dm.config, static_cast<int>(i), family[i].id + "*"});
    }
  }
  return family;
}

std::vector<FamilyMember> tree_family(int n) {
  if (n < 1 || n > 12) throw Error(ErrorKind::ParamOutOfRange, "tree dimension must be 1..12");
  std::vector<ResolutionConfiguration> trees;
  std::vector<std::string> ids;
  const std::pair<const char*, ResolutionConfiguration> shapes[] = {
      {"star", star_tree(n)}, {"chain", chain_tree(n)}, {"nested", nested_tree(n)}};
  for (const auto& [name, t] : shapes) {
    const bool dup = std::any_of(trees.begin(), trees.end(),
                                 [&](const auto& other) { return is_isomorphic(other, t); });
    if (dup) continue;
    trees.push_back(t);
    ids.push_back(std::string(name) + "(" + std::to_string(n) + ")");
  }
  return close_under_duality(trees, ids);
}

std::vector<Rule> core_rules() { return {Rule::Filtration, Rule::Duality, Rule::Naturality}; }

UniquenessReport solve_rule_space(const std::vector<FamilyMember>& family, Bigrading bidegree,
                                  const std::vector<Rule>& rules, std::string description,
                                  DisconnectedMode mode) {
  const auto sys = rule_constraints(family, bidegree, rules, mode);
  const auto kernel = solve_kernel(sys);
  UniquenessReport report;
  report.family = std::move(description);
  report.bidegree = bidegree;
  report.variables = sys.variables.size();
  report.relations = sys.relations.size();
  report.rules = rules;
  report.pass = true;

  for (int i = 0; i < static_cast<int>(family.size()); ++i) {
    const int lo = sys.member_offset[i];
    const int hi = sys.member_offset[i + 1];
    const int width = hi - lo;
    const int words = (width + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& vec : kernel) {
      std::vector<std::uint64_t> row(words, 0);
      bool any = false;
      for (int v : vec) {
        if (v >= lo && v < hi) {
          row[(v - lo) / 64] ^= std::uint64_t{1} << ((v - lo) % 64);
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
    // Reduced echelon form of the projected span.
    int rank = 0;
    for (int col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
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
      ++rank;
    }
    rows.resize(rank);

    const auto& c = family[i].config;
    const auto sss = sss_map(c);
    UniquenessEntry e;
    e.id = family[i].id;
    e.dim = rank;
    e.sss_nonzero = !sss.is_zero();
    for (const auto& row : rows) {
      std::vector<Entry> entries;
      for (int col = 0; col < width; ++col) {
        if (row[col / 64] & (std::uint64_t{1} << (col % 64))) {
          const auto& var = sys.variables[lo + col];
          entries.emplace_back(var.in, var.out);
        }
      }
      e.basis.emplace_back(basis_of(c, BasisSide::Start), basis_of(c, BasisSide::End), bidegree,
                           std::move(entries));
    }
    const bool expect_line = e.sss_nonzero && bidegree.q == 2 * bidegree.h;
    if (expect_line) {
      e.agrees_with_sss = e.dim == 1 && e.basis.front().entries() == sss.entries();
    } else {
      e.agrees_with_sss = e.dim == 0;
    }
    report.pass = report.pass && e.agrees_with_sss;
    report.entries.push_back(std::move(e));
  }
  return report;
}

bool UniquenessCertificate::pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

UniquenessCertificate verify_uniqueness(const UniquenessScope& scope) {
  auto rules = core_rules();
  rules.push_back(Rule::Extension);
  return verify_uniqueness(scope, rules);
}

UniquenessCertificate verify_uniqueness(const UniquenessScope& scope,
                                        const std::vector<Rule>& rules) {
  UniquenessCertificate cert;
  switch (scope.kind) {
    case UniquenessScope::Kind::Dim2:
      cert.reports.push_back(solve_rule_space(catalog2_family(), {2, 4}, rules, "catalog2"));
      break;
    case UniquenessScope::Kind::TreesUpTo:
      if (scope.n < 1 || scope.n > 8) {
        throw Error(ErrorKind::TooLarge, "trees_up_to supports n in 1..8");
      }
      for (int m = 1; m <= scope.n; ++m) {
        const auto family = tree_family(m);
        const std::string name = "trees(" + std::to_string(m) + ")";
        cert.reports.push_back(solve_rule_space(family, {m, 2 * m}, rules, name));
        cert.reports.push_back(solve_rule_space(family, {m, 2 * m + 2}, rules, name));
      }
      break;
    case UniquenessScope::Kind::Custom:
      cert.reports.push_back(solve_rule_space(scope.family, scope.bidegree, rules, "custom"));
      break;
  }
  return cert;
}

std::vector<RuleReport> sss_compliance(const ResolutionConfiguration& c) {
  const auto f = sss_map(c);
  const auto dm = dual_mirror(c);
  return {check_filtration(c, f), check_duality(c, f, sss_map(dm.config)),
          check_structural(c, f, Rule::Extension), check_structural(c, f, Rule::Naturality)};
}

}  // namespace khtot
