#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "czc/polyring.hpp"

namespace czc {

using VertexId = int;

/// Oriented edge; tail == head for a loop.
struct Edge {
  EdgeId id;
  VertexId tail;
  VertexId head;

  bool is_loop() const noexcept { return tail == head; }
  VertexId other(VertexId v) const noexcept { return v == tail ? head : tail; }
  bool operator==(const Edge&) const = default;
};

/// Connected multigraph with loops and parallel edges. The stored (tail, head)
/// order of an edge is its orientation. Edges keep their insertion order.
class MultiGraph {
 public:
  /// Throws PreconditionError on duplicate edge ids, dangling endpoints or an
  /// empty vertex set, and DisconnectedGraph when not connected.
  MultiGraph(std::set<VertexId> vertices, std::vector<Edge> edges);

  /// Vertex set inferred from the edge endpoints.
  static MultiGraph from_edges(std::vector<Edge> edges);

  const std::set<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_edge(EdgeId e) const { return index_.contains(e); }
  /// Throws PreconditionError for an unknown id.
  const Edge& edge(EdgeId e) const;
  std::vector<EdgeId> edge_ids() const;

  /// Number of half-edges at v; a loop counts twice.
  int valence(VertexId v) const;
  /// Edges incident to v, loops listed once.
  std::vector<EdgeId> incident_edges(VertexId v) const;

  EdgeId max_edge_id() const;
  VertexId max_vertex_id() const { return *vertices_.rbegin(); }

  bool operator==(const MultiGraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::set<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<EdgeId, std::size_t> index_;
};

/// True when the edges join all listed vertices into one component.
bool is_connected(const std::set<VertexId>& vertices, const std::vector<Edge>& edges);

/// First Betti number |E| - |V| + 1.
int genus(const MultiGraph& G);

/// Merges the endpoints of f (the larger vertex id into the smaller) and drops
/// f. Other edges keep id and orientation. Throws PreconditionError for a loop.
MultiGraph contract_edge(const MultiGraph& G, EdgeId f);

/// Throws DisconnectedGraph when f is a bridge.
MultiGraph delete_edge(const MultiGraph& G, EdgeId f);

struct Subdivision {
  MultiGraph graph;
  EdgeId first;        ///< keeps the id of the subdivided edge: tail -> middle
  EdgeId second;       ///< new edge: middle -> head
  VertexId middle;
};

/// Splits f with a new vertex (max id + 1); the second half gets max edge id + 1.
Subdivision subdivide_edge(const MultiGraph& G, EdgeId f);

/// Non-loop edges whose removal disconnects G.
std::vector<EdgeId> bridges(const MultiGraph& G);

/// Biconnected components. Each loop is its own block; a bridge is a block
/// with one edge. Returned in order of their smallest edge id. The
/// single-vertex graph without edges has no blocks.
std::vector<MultiGraph> blocks(const MultiGraph& G);

/// Contracts every bridge.
MultiGraph two_edge_connectivization(const MultiGraph& G);

/// Every vertex has valence at least three (loops count twice).
bool is_stable(const MultiGraph& G);

/// Removes 1-valent vertices and smooths 2-valent ones until stable. A
/// smoothed pair keeps the smaller edge id, oriented along that edge.
/// Throws PreconditionError when genus < 2.
MultiGraph stabilize(const MultiGraph& G);

/// Graph with positive integer edge lengths.
class TropicalCurve {
 public:
  /// Throws PreconditionError unless every edge has a length >= 1 and no
  /// length is given for an unknown edge.
  TropicalCurve(MultiGraph graph, std::map<EdgeId, Integer> lengths);
  /// Lengths assigned positionally in edge order.
  static TropicalCurve positional(MultiGraph graph, const std::vector<Integer>& lengths);
  static TropicalCurve unit(MultiGraph graph);

  const MultiGraph& graph() const noexcept { return graph_; }
  const std::map<EdgeId, Integer>& lengths() const noexcept { return lengths_; }
  const Integer& length(EdgeId e) const;

 private:
  MultiGraph graph_;
  std::map<EdgeId, Integer> lengths_;
};

/// Tropically equivalent stable curve; smoothed edges add their lengths.
TropicalCurve stabilize(const TropicalCurve& curve);

}  // namespace czc
