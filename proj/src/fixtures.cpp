#include "czc/fixtures.hpp"

#include "czc/errors.hpp"
#include "czc/graph_io.hpp"

namespace czc::fixtures {

namespace {

IntPolynomial x(EdgeId e) { return IntPolynomial::variable(e); }

}  // namespace

MultiGraph k4_graph() {
  return MultiGraph::from_edges({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {4, 0, 1}, {5, 0, 2}, {6, 0, 3}});
}

std::set<EdgeId> k4_tree() { return {4, 5, 6}; }

MultiGraph l3_graph() {
  return MultiGraph::from_edges({{1, 2, 1}, {2, 1, 0}, {3, 2, 0}, {4, 2, 0}, {5, 0, 1}, {6, 1, 2}});
}

std::set<EdgeId> l3_tree() { return {5, 6}; }

CycleBasisContext k4_context() { return CycleBasisContext::build(k4_graph(), k4_tree()); }
CycleBasisContext l3_context() { return CycleBasisContext::build(l3_graph(), l3_tree()); }

CeresaCocycle v_tau_k4() {
  return CeresaCocycle(k4_context(), {{{1, 1, 2}, x(2)},
                                      {{2, 1, 2}, -x(5)},
                                      {{2, 2, 3}, -x(5)},
                                      {{2, 1, 3}, x(5)}});
}

CeresaCocycle v_tau_l3() {
  return CeresaCocycle(l3_context(), {{{2, 2, 3}, x(6)},
                                      {{2, 2, 4}, x(6)},
                                      {{2, 1, 2}, -x(6)},
                                      {{1, 1, 2}, -x(5)},
                                      {{1, 1, 3}, -x(5)},
                                      {{1, 1, 4}, -x(5)}});
}

bool matches_labeling(const MultiGraph& G, const MultiGraph& fixture) {
  if (G.edge_count() != fixture.edge_count() || G.vertex_count() != fixture.vertex_count())
    return false;
  std::map<VertexId, VertexId> forward;
  std::map<VertexId, VertexId> backward;
  auto bind = [&](VertexId a, VertexId b) {
    auto [f, fresh_f] = forward.emplace(a, b);
    auto [r, fresh_r] = backward.emplace(b, a);
    return f->second == b && r->second == a;
  };
  for (const auto& e : G.edges()) {
    if (!fixture.has_edge(e.id)) return false;
    const Edge& target = fixture.edge(e.id);
    if (!bind(e.tail, target.tail) || !bind(e.head, target.head)) return false;
  }
  return true;
}

CeresaCocycle builtin_cocycle(const std::string& name, const MultiGraph& G) {
  const bool k4 = name == "K4";
  if (!k4 && name != "L3")
    throw PreconditionError("unknown builtin cocycle '" + name + "' (expected K4 or L3)");
  const MultiGraph fixture = k4 ? k4_graph() : l3_graph();
  if (!matches_labeling(G, fixture))
    throw PreconditionError("builtin:" + name + " needs the pinned " + name +
                            " edge labeling and orientation");
  const CeresaCocycle shipped = k4 ? v_tau_k4() : v_tau_l3();
  return CeresaCocycle(CycleBasisContext::build(G, k4 ? k4_tree() : l3_tree()), shipped.b());
}

nlohmann::json cocycle_to_json(const CeresaCocycle& v) {
  nlohmann::json b = nlohmann::json::array();
  for (const auto& [idx, p] : v.b())
    b.push_back({{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"poly", p.to_string()}});
  return {{"graph", graph_to_json(v.context().graph())},
          {"tree", v.context().tree_edges()},
          {"b", std::move(b)}};
}

CeresaCocycle cocycle_from_json(const nlohmann::json& j) {
  try {
    const MultiGraph G = parse_graph_json(j.at("graph")).graph;
    std::optional<std::set<EdgeId>> tree;
    if (j.contains("tree")) tree = j.at("tree").get<std::set<EdgeId>>();
    CoefficientMap b;
    for (const auto& entry : j.at("b")) {
      const IndexTriple idx{entry.at("i").get<int>(), entry.at("j").get<int>(),
                            entry.at("k").get<int>()};
      b[idx] += IntPolynomial::parse(entry.at("poly").get<std::string>());
    }
    return CeresaCocycle(CycleBasisContext::build(G, tree), std::move(b));
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("cocycle JSON: ") + ex.what());
  }
}

}  // namespace czc::fixtures
