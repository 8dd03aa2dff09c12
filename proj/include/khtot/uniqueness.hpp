#pragma once

#include <string>
#include <vector>

#include "khtot/f2linalg.hpp"
#include "khtot/rules.hpp"

namespace khtot {

// The eight connected 2-dimensional configurations; partner[i] is the
// (0-based) entry isomorphic to dual_mirror(entry i), found by search.
struct Catalog2 {
  std::vector<ResolutionConfiguration> entries;
  std::vector<int> partner;
};

Catalog2 catalog2();
std::vector<FamilyMember> catalog2_family();

// n-dimensional trees (star, chain, nested chain; duplicates removed) each
// followed by its dual tree, paired with each other.
std::vector<FamilyMember> tree_family(int n);

// Pairs every configuration with dual_mirror of itself (appended) unless a
// member of the list already is its dual.
std::vector<FamilyMember> close_under_duality(const std::vector<ResolutionConfiguration>& configs,
                                              const std::vector<std::string>& ids = {});

struct UniquenessEntry {
  std::string id;
  int dim = 0;
  bool sss_nonzero = false;
  bool agrees_with_sss = false;
  std::vector<BigradedMap> basis;
};

struct UniquenessReport {
  std::string family;
  Bigrading bidegree;
  std::vector<UniquenessEntry> entries;
  std::size_t variables = 0;
  std::size_t relations = 0;
  std::vector<Rule> rules;
  bool pass = false;
};

std::vector<Rule> core_rules();  // filtration, duality, naturality

UniquenessReport solve_rule_space(const std::vector<FamilyMember>& family, Bigrading bidegree,
                                  const std::vector<Rule>& rules, std::string description = "",
                                  DisconnectedMode mode = DisconnectedMode::Literal);

struct UniquenessScope {
  enum class Kind { Dim2, TreesUpTo, Custom } kind = Kind::Dim2;
  int n = 0;                                  // TreesUpTo
  std::vector<FamilyMember> family;           // Custom
  Bigrading bidegree;                         // Custom
};

// One report per (family, bidegree) solved; overall verdict is all_pass().
struct UniquenessCertificate {
  std::vector<UniquenessReport> reports;
  bool pass() const;
};

UniquenessCertificate verify_uniqueness(const UniquenessScope& scope);
UniquenessCertificate verify_uniqueness(const UniquenessScope& scope,
                                        const std::vector<Rule>& rules);

// sss_map(c) against the filtration, duality (with sss_map of the dual
// mirror), extension and naturality predicates, in that order.
std::vector<RuleReport> sss_compliance(const ResolutionConfiguration& c);

}  // namespace khtot
