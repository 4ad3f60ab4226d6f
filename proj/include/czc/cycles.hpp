#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "czc/graph.hpp"
#include "czc/intlin.hpp"
#include "czc/polyring.hpp"

namespace czc {

/// Default spanning tree: greedy over edges by descending id, skipping loops
/// and edges that would close a cycle.
std::set<EdgeId> default_spanning_tree(const MultiGraph& G);

/// Throws PreconditionError unless `tree` is a spanning tree of G.
void require_spanning_tree(const MultiGraph& G, const std::set<EdgeId>& tree);

/// Spanning tree, edge ordering, oriented fundamental cycles and the
/// polynomial period matrix Q of a graph. Immutable once built.
///
/// Ordering: the g non-tree edges by ascending id come first (these are the
/// basis edges e_1..e_g), then the tree edges by ascending id. Cycle j runs
/// along e_j from tail to head and returns through the tree.
/// Indices i, j below are 1-based.
class CycleBasisContext {
 public:
  static CycleBasisContext build(const MultiGraph& G,
                                 const std::optional<std::set<EdgeId>>& tree_hint = std::nullopt);

  const MultiGraph& graph() const noexcept { return graph_; }
  int genus() const noexcept { return genus_; }
  const std::vector<EdgeId>& ordering() const noexcept { return ordering_; }
  std::vector<EdgeId> basis_edges() const;
  const std::set<EdgeId>& tree_edges() const noexcept { return tree_; }
  bool is_tree_edge(EdgeId e) const { return tree_.contains(e); }
  /// e_j for 1 <= j <= g.
  EdgeId basis_edge(int j) const;

  /// Signed incidence of e in cycle j: +1 along, -1 against, 0 if unused.
  int incidence(int j, EdgeId e) const;
  /// Cycle j as edge -> sign (only nonzero entries).
  const std::map<EdgeId, int>& cycle(int j) const;
  /// The beta-class of the dual curve of e, as cycle index -> sign.
  std::map<int, int> beta_class(EdgeId e) const;

  const IntPolynomial& q(int i, int j) const;
  const std::vector<std::vector<IntPolynomial>>& Q() const noexcept { return Q_; }

 private:
  CycleBasisContext(MultiGraph G) : graph_(std::move(G)) {}
  void check_index(int j) const;

  MultiGraph graph_;
  int genus_ = 0;
  std::set<EdgeId> tree_;
  std::vector<EdgeId> ordering_;
  std::vector<std::map<EdgeId, int>> cycles_;
  std::vector<std::vector<IntPolynomial>> Q_;
};

/// Q with every x_e replaced by the length of e.
IntMatrix specialize_Q(const CycleBasisContext& ctx, const TropicalCurve& curve);

/// Throws PreconditionError unless the curve's graph is ctx's graph.
void require_same_graph(const CycleBasisContext& ctx, const MultiGraph& G);

}  // namespace czc
