#include "czc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "czc/errors.hpp"

namespace czc {

namespace {

class DisjointSets {
 public:
  VertexId find(VertexId v) {
    auto it = parent_.find(v);
    if (it == parent_.end()) {
      parent_.emplace(v, v);
      return v;
    }
    if (it->second == v) return v;
    const VertexId root = find(it->second);
    parent_[v] = root;
    return root;
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::map<VertexId, VertexId> parent_;
};

std::string edge_name(EdgeId e) { return "edge " + std::to_string(e); }

}  // namespace

bool is_connected(const std::set<VertexId>& vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) return false;
  DisjointSets sets;
  std::size_t components = vertices.size();
  for (const auto& e : edges)
    if (sets.unite(e.tail, e.head)) --components;
  return components == 1;
}

// ------------------------------------------------------------- MultiGraph

MultiGraph::MultiGraph(std::set<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw PreconditionError("graph has no vertices");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!index_.emplace(e.id, i).second)
      throw PreconditionError("duplicate " + edge_name(e.id));
    if (!vertices_.contains(e.tail) || !vertices_.contains(e.head))
      throw PreconditionError(edge_name(e.id) + " has an endpoint outside the vertex set");
  }
  if (!is_connected(vertices_, edges_)) throw DisconnectedGraph("graph is not connected");
}

MultiGraph MultiGraph::from_edges(std::vector<Edge> edges) {
  std::set<VertexId> vertices;
  for (const auto& e : edges) {
    vertices.insert(e.tail);
    vertices.insert(e.head);
  }
  return MultiGraph(std::move(vertices), std::move(edges));
}

const Edge& MultiGraph::edge(EdgeId e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw PreconditionError("unknown " + edge_name(e));
  return edges_[it->second];
}

std::vector<EdgeId> MultiGraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.id);
  return out;
}

int MultiGraph::valence(VertexId v) const {
  int out = 0;
  for (const auto& e : edges_) out += (e.tail == v) + (e.head == v);
  return out;
}

std::vector<EdgeId> MultiGraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_)
    if (e.tail == v || e.head == v) out.push_back(e.id);
  return out;
}

EdgeId MultiGraph::max_edge_id() const {
  EdgeId out = 0;
  for (const auto& e : edges_) out = std::max(out, e.id);
  return out;
}

int genus(const MultiGraph& G) {
  return static_cast<int>(G.edge_count()) - static_cast<int>(G.vertex_count()) + 1;
}

// ------------------------------------------------------------ minor steps

MultiGraph contract_edge(const MultiGraph& G, EdgeId f) {
  const Edge& target = G.edge(f);
  if (target.is_loop()) throw PreconditionError("cannot contract loop " + edge_name(f));
  const VertexId keep = std::min(target.tail, target.head);
  const VertexId drop = std::max(target.tail, target.head);
  std::set<VertexId> vertices = G.vertices();
  vertices.erase(drop);
  std::vector<Edge> edges;
  edges.reserve(G.edge_count() - 1);
  for (Edge e : G.edges()) {
    if (e.id == f) continue;
    if (e.tail == drop) e.tail = keep;
    if (e.head == drop) e.head = keep;
    edges.push_back(e);
  }
  return MultiGraph(std::move(vertices), std::move(edges));
}

MultiGraph delete_edge(const MultiGraph& G, EdgeId f) {
  G.edge(f);
  std::vector<Edge> edges;
  for (const auto& e : G.edges())
    if (e.id != f) edges.push_back(e);
  if (!is_connected(G.vertices(), edges))
    throw DisconnectedGraph("deleting " + edge_name(f) + " disconnects the graph");
  return MultiGraph(G.vertices(), std::move(edges));
}

Subdivision subdivide_edge(const MultiGraph& G, EdgeId f) {
  const Edge target = G.edge(f);
  const VertexId middle = G.max_vertex_id() + 1;
  const EdgeId second = G.max_edge_id() + 1;
  std::set<VertexId> vertices = G.vertices();
  vertices.insert(middle);
  std::vector<Edge> edges;
  for (const auto& e : G.edges()) {
    if (e.id == f) {
      edges.push_back({f, target.tail, middle});
      edges.push_back({second, middle, target.head});
    } else {
      edges.push_back(e);
    }
  }
  return {MultiGraph(std::move(vertices), std::move(edges)), f, second, middle};
}

// ------------------------------------------------------ block structure

namespace {

struct BlockSearch {
  const MultiGraph& G;
  std::map<VertexId, std::vector<const Edge*>> adjacency;
  std::map<VertexId, int> order;
  std::map<VertexId, int> low;
  std::vector<EdgeId> stack;
  std::vector<std::vector<EdgeId>> components;
  int clock = 0;

  explicit BlockSearch(const MultiGraph& graph) : G(graph) {
    for (const auto& e : G.edges()) {
      if (e.is_loop()) continue;
      adjacency[e.tail].push_back(&e);
      adjacency[e.head].push_back(&e);
    }
  }

  void visit(VertexId v, EdgeId via) {
    order[v] = low[v] = ++clock;
    for (const Edge* e : adjacency[v]) {
      if (e->id == via) continue;
      const VertexId w = e->other(v);
      if (!order.contains(w)) {
        stack.push_back(e->id);
        visit(w, e->id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= order[v]) {
          std::vector<EdgeId> component;
          EdgeId popped;
          do {
            popped = stack.back();
            stack.pop_back();
            component.push_back(popped);
          } while (popped != e->id);
          components.push_back(std::move(component));
        }
      } else if (order[w] < order[v]) {
        stack.push_back(e->id);
        low[v] = std::min(low[v], order[w]);
      }
    }
  }
};

MultiGraph subgraph(const MultiGraph& G, const std::vector<EdgeId>& ids) {
  std::set<EdgeId> wanted(ids.begin(), ids.end());
  std::vector<Edge> edges;
  for (const auto& e : G.edges())
    if (wanted.contains(e.id)) edges.push_back(e);
  return MultiGraph::from_edges(std::move(edges));
}

}  // namespace

std::vector<MultiGraph> blocks(const MultiGraph& G) {
  BlockSearch search(G);
  search.visit(*G.vertices().begin(), -1);
  std::vector<std::vector<EdgeId>> components = std::move(search.components);
  for (const auto& e : G.edges())
    if (e.is_loop()) components.push_back({e.id});
  for (auto& c : components) std::sort(c.begin(), c.end());
  std::sort(components.begin(), components.end());
  std::vector<MultiGraph> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(subgraph(G, c));
  return out;
}

std::vector<EdgeId> bridges(const MultiGraph& G) {
  std::vector<EdgeId> out;
  for (const auto& b : blocks(G))
    if (b.edge_count() == 1 && !b.edges().front().is_loop()) out.push_back(b.edges().front().id);
  std::sort(out.begin(), out.end());
  return out;
}

MultiGraph two_edge_connectivization(const MultiGraph& G) {
  MultiGraph out = G;
  for (EdgeId b : bridges(G)) out = contract_edge(out, b);
  return out;
}

// ----------------------------------------------------------- stabilization

bool is_stable(const MultiGraph& G) {
  return std::all_of(G.vertices().begin(), G.vertices().end(),
                     [&](VertexId v) { return G.valence(v) >= 3; });
}

namespace {

struct Reduction {
  std::set<VertexId> vertices;
  std::vector<Edge> edges;
  std::map<EdgeId, Integer> lengths;  // empty when reducing a bare graph
};

int valence_in(const std::vector<Edge>& edges, VertexId v) {
  int out = 0;
  for (const auto& e : edges) out += (e.tail == v) + (e.head == v);
  return out;
}

// One tropical-equivalence move; false when already stable.
bool reduce_once(Reduction& r) {
  for (VertexId v : r.vertices) {
    const int valence = valence_in(r.edges, v);
    if (valence == 1) {
      auto it = std::find_if(r.edges.begin(), r.edges.end(),
                             [v](const Edge& e) { return e.tail == v || e.head == v; });
      r.lengths.erase(it->id);
      r.edges.erase(it);
      r.vertices.erase(v);
      return true;
    }
    if (valence != 2) continue;
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < r.edges.size(); ++i)
      if (r.edges[i].tail == v || r.edges[i].head == v) at.push_back(i);
    if (at.size() != 2) continue;  // a lone loop: genus-1 component
    std::size_t keep = at[0];
    std::size_t drop = at[1];
    if (r.edges[drop].id < r.edges[keep].id) std::swap(keep, drop);
    const Edge kept = r.edges[keep];
    const VertexId far = r.edges[drop].other(v);
    Edge merged = kept;
    if (kept.head == v) {
      merged.head = far;
    } else {
      merged.tail = far;
    }
    if (!r.lengths.empty()) {
      r.lengths[kept.id] += r.lengths[r.edges[drop].id];
      r.lengths.erase(r.edges[drop].id);
    }
    r.edges[keep] = merged;
    r.edges.erase(r.edges.begin() + static_cast<std::ptrdiff_t>(drop));
    r.vertices.erase(v);
    return true;
  }
  return false;
}

void require_genus_two(const MultiGraph& G) {
  if (genus(G) < 2)
    throw PreconditionError("stabilization needs genus >= 2, got " + std::to_string(genus(G)));
}

}  // namespace

MultiGraph stabilize(const MultiGraph& G) {
  require_genus_two(G);
  Reduction r{G.vertices(), G.edges(), {}};
  while (reduce_once(r)) {
  }
  return MultiGraph(std::move(r.vertices), std::move(r.edges));
}

// ----------------------------------------------------------- TropicalCurve

TropicalCurve::TropicalCurve(MultiGraph graph, std::map<EdgeId, Integer> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
  for (const auto& [e, c] : lengths_)
    if (!graph_.has_edge(e)) throw PreconditionError("length given for unknown " + edge_name(e));
  for (const auto& e : graph_.edges()) {
    auto it = lengths_.find(e.id);
    if (it == lengths_.end()) throw PreconditionError("no length for " + edge_name(e.id));
    if (it->second < 1) throw PreconditionError("non-positive length on " + edge_name(e.id));
  }
}

TropicalCurve TropicalCurve::positional(MultiGraph graph, const std::vector<Integer>& lengths) {
  if (lengths.size() != graph.edge_count())
    throw PreconditionError("expected " + std::to_string(graph.edge_count()) +
                            " lengths, got " + std::to_string(lengths.size()));
  std::map<EdgeId, Integer> by_id;
  for (std::size_t i = 0; i < lengths.size(); ++i) by_id[graph.edges()[i].id] = lengths[i];
  return TropicalCurve(std::move(graph), std::move(by_id));
}

TropicalCurve TropicalCurve::unit(MultiGraph graph) {
  std::map<EdgeId, Integer> ones;
  for (const auto& e : graph.edges()) ones[e.id] = 1;
  return TropicalCurve(std::move(graph), std::move(ones));
}

const Integer& TropicalCurve::length(EdgeId e) const {
  auto it = lengths_.find(e);
  if (it == lengths_.end()) throw PreconditionError("no length for " + edge_name(e));
  return it->second;
}

TropicalCurve stabilize(const TropicalCurve& curve) {
  require_genus_two(curve.graph());
  Reduction r{curve.graph().vertices(), curve.graph().edges(), curve.lengths()};
  while (reduce_once(r)) {
  }
  return TropicalCurve(MultiGraph(std::move(r.vertices), std::move(r.edges)),
                       std::move(r.lengths));
}

}  // namespace czc
