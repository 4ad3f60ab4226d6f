#pragma once

#include <set>
#include <string>

#include <json.hpp>

#include "czc/ceresa.hpp"
#include "czc/graph.hpp"

namespace czc::fixtures {

/// K4 with centre 0 and outer triangle 1, 2, 3. Edges 1..3 run around the
/// triangle (2->3, 3->1, 1->2); edges 4..6 are the spokes 0->1, 0->2, 0->3.
MultiGraph k4_graph();
std::set<EdgeId> k4_tree();
/// Vertices 0, 1, 2 pairwise joined by two edges:
/// 1: 2->1, 2: 1->0, 3: 2->0, 4: 2->0, 5: 0->1, 6: 1->2.
MultiGraph l3_graph();
std::set<EdgeId> l3_tree();

CycleBasisContext k4_context();
CycleBasisContext l3_context();

/// Shipped cocycle representatives, valid for the labelings above only.
CeresaCocycle v_tau_k4();
CeresaCocycle v_tau_l3();

/// True when G equals `fixture` up to renaming vertices: same edge ids with
/// corresponding endpoints in the same orientation.
bool matches_labeling(const MultiGraph& G, const MultiGraph& fixture);

/// "K4" or "L3" attached to G. Throws PreconditionError when G does not
/// carry the fixture labeling or the name is unknown.
CeresaCocycle builtin_cocycle(const std::string& name, const MultiGraph& G);

/// {graph, tree, b:[{i,j,k,poly}]}
nlohmann::json cocycle_to_json(const CeresaCocycle& v);
/// Missing "tree" means the default spanning tree. Throws ParseError.
CeresaCocycle cocycle_from_json(const nlohmann::json& j);

}  // namespace czc::fixtures
