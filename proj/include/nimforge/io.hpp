#pragma once

#include "nimforge/fusion_ring.hpp"
#include "nimforge/glm.hpp"
#include "nimforge/group.hpp"
#include "nimforge/jl.hpp"
#include "nimforge/nimrep.hpp"

#include <json.hpp>

#include <string>

namespace nimforge {

using Json = nlohmann::ordered_json;

/// {"abelian": [2, 2]} for groups built from invariant factors, else
/// {"order": n, "table": [[...]], "name": ...}.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {"family", "group", "p" | "delta", "basis", "unit", "dual", "invertible", "N": [[i, j, k, v], ...]}.
/// JL and GLM rings are rebuilt from their family data and checked against "N".
Json ring_to_json(const FusionRing& r);
RingPtr ring_from_json(const Json& j);

/// {"dim", "labels", "matrices": {label: [[...]]}}; rows are outer arrays.
Json nimrep_to_json(const NimRep& m);
NimRep nimrep_from_json(const RingPtr& ring, const Json& j);

/// Nonzero multiplicities keyed by ring label.
Json algebra_to_json(const FusionRing& ring, const AlgebraObject& a);
AlgebraObject algebra_from_json(const FusionRing& ring, const Json& j);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json jl_params_to_json(const JlParams& p);
Json glm_params_to_json(const GlmParams& p);

/// Subgroup as a list of element labels.
Json subgroup_to_json(const FiniteGroup& g, const Subgroup& h);

/// Edge label "X_1 (×2)"; the unit's loops are omitted.
std::string to_dot(const FusionRing& ring, const NimGraph& g, const std::string& name);

/// One edge per (source, target, label), multiplicity kept as an attribute.
std::string to_dot(const FusionRing& ring, const NimOrbitGraph& g, const std::string& name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace nimforge
