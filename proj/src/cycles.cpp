#include "czc/cycles.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "czc/errors.hpp"

namespace czc {

namespace {

// Union-find over arbitrary vertex ids.
struct Forest {
  std::map<VertexId, VertexId> parent;
  VertexId find(VertexId v) {
    auto [it, fresh] = parent.try_emplace(v, v);
    if (fresh || it->second == v) return v;
    return it->second = find(it->second);
  }
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Tree path from `from` to `to` as (edge, +1 when walked tail -> head).
std::vector<std::pair<EdgeId, int>> tree_path(const MultiGraph& G, const std::set<EdgeId>& tree,
                                              VertexId from, VertexId to) {
  std::map<VertexId, std::vector<const Edge*>> adjacency;
  for (EdgeId id : tree) {
    const Edge& e = G.edge(id);
    adjacency[e.tail].push_back(&e);
    adjacency[e.head].push_back(&e);
  }
  std::map<VertexId, const Edge*> reached_by;
  std::set<VertexId> seen{from};
  std::deque<VertexId> queue{from};
  while (!queue.empty() && !seen.contains(to)) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (const Edge* e : adjacency[v]) {
      const VertexId w = e->other(v);
      if (seen.insert(w).second) {
        reached_by[w] = e;
        queue.push_back(w);
      }
    }
  }
  std::vector<std::pair<EdgeId, int>> path;
  for (VertexId v = to; v != from;) {
    const Edge* e = reached_by.at(v);
    path.emplace_back(e->id, e->head == v ? +1 : -1);
    v = e->other(v);
  }
  return {path.rbegin(), path.rend()};
}

}  // namespace

std::set<EdgeId> default_spanning_tree(const MultiGraph& G) {
  std::vector<Edge> edges = G.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id > b.id; });
  Forest forest;
  std::set<EdgeId> tree;
  for (const auto& e : edges)
    if (!e.is_loop() && forest.unite(e.tail, e.head)) tree.insert(e.id);
  return tree;
}

void require_spanning_tree(const MultiGraph& G, const std::set<EdgeId>& tree) {
  if (tree.size() + 1 != G.vertex_count())
    throw PreconditionError("tree hint has " + std::to_string(tree.size()) +
                            " edges; a spanning tree needs " +
                            std::to_string(G.vertex_count() - 1));
  Forest forest;
  for (EdgeId id : tree) {
    if (!G.has_edge(id)) throw PreconditionError("tree hint names unknown edge " + std::to_string(id));
    const Edge& e = G.edge(id);
    if (!forest.unite(e.tail, e.head))
      throw PreconditionError("tree hint contains a cycle through edge " + std::to_string(id));
  }
}

void require_same_graph(const CycleBasisContext& ctx, const MultiGraph& G) {
  if (!(ctx.graph() == G)) throw PreconditionError("graph does not match the cycle basis context");
}

CycleBasisContext CycleBasisContext::build(const MultiGraph& G,
                                           const std::optional<std::set<EdgeId>>& tree_hint) {
  CycleBasisContext ctx(G);
  if (tree_hint) {
    require_spanning_tree(G, *tree_hint);
    ctx.tree_ = *tree_hint;
  } else {
    ctx.tree_ = default_spanning_tree(G);
  }
  ctx.genus_ = czc::genus(G);

  std::vector<EdgeId> ids = G.edge_ids();
  std::sort(ids.begin(), ids.end());
  for (EdgeId id : ids)
    if (!ctx.tree_.contains(id)) ctx.ordering_.push_back(id);
  for (EdgeId id : ids)
    if (ctx.tree_.contains(id)) ctx.ordering_.push_back(id);

  for (int j = 0; j < ctx.genus_; ++j) {
    const Edge& e = G.edge(ctx.ordering_[static_cast<std::size_t>(j)]);
    std::map<EdgeId, int> cycle{{e.id, +1}};
    for (const auto& [t, sign] : tree_path(G, ctx.tree_, e.head, e.tail)) cycle[t] = sign;
    ctx.cycles_.push_back(std::move(cycle));
  }

  const auto g = static_cast<std::size_t>(ctx.genus_);
  ctx.Q_.assign(g, std::vector<IntPolynomial>(g));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i; j < g; ++j) {
      IntPolynomial entry;
      for (const auto& [e, si] : ctx.cycles_[i]) {
        auto it = ctx.cycles_[j].find(e);
        if (it != ctx.cycles_[j].end()) entry.add_term(Monomial::variable(e), si * it->second);
      }
      ctx.Q_[i][j] = entry;
      ctx.Q_[j][i] = std::move(entry);
    }
  return ctx;
}

std::vector<EdgeId> CycleBasisContext::basis_edges() const {
  return {ordering_.begin(), ordering_.begin() + genus_};
}

void CycleBasisContext::check_index(int j) const {
  if (j < 1 || j > genus_)
    throw PreconditionError("cycle index " + std::to_string(j) + " outside 1.." +
                            std::to_string(genus_));
}

EdgeId CycleBasisContext::basis_edge(int j) const {
  check_index(j);
  return ordering_[static_cast<std::size_t>(j - 1)];
}

const std::map<EdgeId, int>& CycleBasisContext::cycle(int j) const {
  check_index(j);
  return cycles_[static_cast<std::size_t>(j - 1)];
}

int CycleBasisContext::incidence(int j, EdgeId e) const {
  const auto& c = cycle(j);
  auto it = c.find(e);
  return it == c.end() ? 0 : it->second;
}

std::map<int, int> CycleBasisContext::beta_class(EdgeId e) const {
  graph_.edge(e);
  std::map<int, int> out;
  for (int j = 1; j <= genus_; ++j)
    if (int s = incidence(j, e)) out[j] = s;
  return out;
}

const IntPolynomial& CycleBasisContext::q(int i, int j) const {
  check_index(i);
  check_index(j);
  return Q_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

IntMatrix specialize_Q(const CycleBasisContext& ctx, const TropicalCurve& curve) {
  require_same_graph(ctx, curve.graph());
  const auto g = static_cast<std::size_t>(ctx.genus());
  IntMatrix out(g, g);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) out(i, j) = poly_eval(ctx.Q()[i][j], curve.lengths());
  return out;
}

}  // namespace czc
