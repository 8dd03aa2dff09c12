#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "khtot/configuration.hpp"
#include "khtot/cube.hpp"
#include "khtot/f2linalg.hpp"

namespace khtot {

enum class Rule { Naturality, Conjugation, Duality, Filtration, Disoriented, Extension, Disconnected };

std::string to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);
// Comma separated list, e.g. "filtration,duality,naturality". Throws ParamOutOfRange.
std::vector<Rule> parse_rules(std::string_view list);
std::vector<Rule> all_rules();

// Literal: zero whenever the active part splits into two unlinked pieces.
// SssRegime: zero unless every component is a tree or a dual tree.
enum class DisconnectedMode { Literal, SssRegime };

struct RuleWitness {
  int point = -1;      // segment id for filtration witnesses
  int symmetry = -1;   // automorphism index for naturality witnesses
  Monomial in = 0;
  Monomial out = 0;
};

struct RuleReport {
  std::string rule;
  bool pass = true;
  std::vector<RuleWitness> witnesses;  // capped at kMaxWitnesses
  static constexpr std::size_t kMaxWitnesses = 64;
};

// f must be typed on basis_of(c, Start) -> basis_of(c, End).
RuleReport check_filtration(const ResolutionConfiguration& c, const BigradedMap& f);
// f_dual is typed on dual_mirror(c).config.
RuleReport check_duality(const ResolutionConfiguration& c, const BigradedMap& f,
                         const BigradedMap& f_dual);
// rule is one of Extension, Disconnected, Naturality, Conjugation, Disoriented.
RuleReport check_structural(const ResolutionConfiguration& c, const BigradedMap& f, Rule rule,
                            DisconnectedMode mode = DisconnectedMode::Literal);

// The map on m(C*) determined by f through the duality rule.
BigradedMap dual_transport(const ResolutionConfiguration& c, const BigradedMap& f);
// f + psi^-1 o F_{m(C*)} o psi for the least identification psi of m(C*) with c.
// Throws InconsistentFamily if c is not self-dual.
BigradedMap self_dual_symmetrization(const ResolutionConfiguration& c, const BigradedMap& f);

// Images of monomials under a symmetry between configurations.
Monomial map_start(const Symmetry& s, Monomial m);
Monomial map_monomial(const std::vector<int>& perm, Monomial m);

// ---------------------------------------------------------------------------
// Constraint systems

struct FamilyMember {
  ResolutionConfiguration config;
  int partner;  // index of the member isomorphic to dual_mirror(config)
  std::string id;
};

struct Variable {
  int member;
  Monomial in;
  Monomial out;
};

// Each relation says the XOR of its variables vanishes.
struct ConstraintSystem {
  Bigrading bidegree;
  std::vector<Variable> variables;
  std::vector<int> member_offset;  // first variable of each member, plus a final sentinel
  std::vector<std::vector<int>> relations;
  std::vector<std::string> relation_rule;

  // -1 when (in, out) is not bidegree-admissible for that member.
  int index_of(int member, Monomial in, Monomial out) const;
  bool satisfied_by(const std::vector<std::uint8_t>& assignment) const;
  // Entry vector of one member's map (other members zero).
  std::vector<std::uint8_t> assignment_of(int member, const BigradedMap& f) const;
  std::string variable_name(int v) const;
};

ConstraintSystem rule_constraints(const std::vector<FamilyMember>& family, Bigrading bidegree,
                                  const std::vector<Rule>& rules,
                                  DisconnectedMode mode = DisconnectedMode::Literal,
                                  std::size_t max_variables = std::size_t{1} << 20);

// Kernel basis of the system; each element lists the variables set to 1.
std::vector<std::vector<int>> solve_kernel(const ConstraintSystem& sys);

}  // namespace khtot
