#pragma once

#include <json.hpp>

#include "khtot/configuration.hpp"
#include "khtot/diagram.hpp"
#include "khtot/f2linalg.hpp"
#include "khtot/perturbations.hpp"
#include "khtot/rules.hpp"
#include "khtot/uniqueness.hpp"

namespace khtot {

using Json = nlohmann::json;

Json to_json(const PlanarDiagram& d);
// Throws MalformedSyntax on schema errors and validates the diagram.
PlanarDiagram diagram_from_json(const Json& j);

Json to_json(const ResolutionConfiguration& c);
ResolutionConfiguration configuration_from_json(const Json& j);

Json to_json(const BigradedMap& f);
Json to_json(const HomologyTable& t);
Json to_json(const IdentityReport& r);
Json to_json(const RuleReport& r);
Json to_json(const ConstraintSystem& s);
Json to_json(const UniquenessReport& r);
Json to_json(const LemmaReport& r);
Json to_json(const CubeVector& v);

}  // namespace khtot
