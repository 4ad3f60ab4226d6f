#include "czc/minors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "czc/errors.hpp"

namespace czc {

std::string to_string(MinorPattern p) { return p == MinorPattern::K4 ? "K4" : "L3"; }

MinorPattern parse_pattern(const std::string& name) {
  if (name == "K4") return MinorPattern::K4;
  if (name == "L3") return MinorPattern::L3;
  throw PreconditionError("unknown minor pattern '" + name + "' (expected K4 or L3)");
}

MultiGraph pattern_graph(MinorPattern p) {
  if (p == MinorPattern::K4)
    return MultiGraph::from_edges({{1, 0, 1}, {2, 0, 2}, {3, 0, 3}, {4, 1, 2}, {5, 1, 3}, {6, 2, 3}});
  return MultiGraph::from_edges({{1, 0, 1}, {2, 0, 1}, {3, 0, 2}, {4, 0, 2}, {5, 1, 2}, {6, 1, 2}});
}

// ------------------------------------------------------------ minor search

namespace {

struct PartitionSearch {
  const MultiGraph& G;
  int parts;
  int multiplicity;
  std::vector<VertexId> vertices;
  std::map<VertexId, std::size_t> position;
  std::vector<int> block;  // vertex position -> part
  std::optional<MinorWitness> witness;
  MinorPattern pattern;

  PartitionSearch(const MultiGraph& graph, MinorPattern p)
      : G(graph),
        parts(p == MinorPattern::K4 ? 4 : 3),
        multiplicity(p == MinorPattern::K4 ? 1 : 2),
        vertices(graph.vertices().begin(), graph.vertices().end()),
        pattern(p) {
    for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = i;
    block.assign(vertices.size(), -1);
  }

  int part_of(VertexId v) const { return block[position.at(v)]; }

  bool parts_connected() const {
    for (int p = 0; p < parts; ++p) {
      std::set<VertexId> members;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (block[i] == p) members.insert(vertices[i]);
      std::vector<Edge> inside;
      for (const auto& e : G.edges())
        if (part_of(e.tail) == p && part_of(e.head) == p) inside.push_back(e);
      if (!is_connected(members, inside)) return false;
    }
    return true;
  }

  bool enough_edges() const {
    std::map<std::pair<int, int>, int> between;
    for (const auto& e : G.edges()) {
      const int a = part_of(e.tail);
      const int b = part_of(e.head);
      if (a != b) ++between[{std::min(a, b), std::max(a, b)}];
    }
    for (int a = 0; a < parts; ++a)
      for (int b = a + 1; b < parts; ++b)
        if (between[{a, b}] < multiplicity) return false;
    return true;
  }

  void record() {
    MinorWitness w{pattern, {}, {}, std::vector<std::set<VertexId>>(static_cast<std::size_t>(parts))};
    for (std::size_t i = 0; i < vertices.size(); ++i)
      w.branch_sets[static_cast<std::size_t>(block[i])].insert(vertices[i]);

    std::set<EdgeId> kept;
    std::map<std::pair<int, int>, int> used;
    for (const auto& e : G.edges()) {
      const int a = part_of(e.tail);
      const int b = part_of(e.head);
      if (a == b) continue;
      int& n = used[{std::min(a, b), std::max(a, b)}];
      if (n < multiplicity) {
        ++n;
        kept.insert(e.id);
      }
    }
    // Spanning tree of each branch set; these edges get contracted.
    for (const auto& members : w.branch_sets) {
      std::set<VertexId> seen{*members.begin()};
      std::deque<VertexId> queue{*members.begin()};
      while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const auto& e : G.edges()) {
          if (e.is_loop() || (e.tail != v && e.head != v)) continue;
          const VertexId u = e.other(v);
          if (!members.contains(u) || !seen.insert(u).second) continue;
          w.contracted.push_back(e.id);
          queue.push_back(u);
        }
      }
    }
    kept.insert(w.contracted.begin(), w.contracted.end());
    for (const auto& e : G.edges())
      if (!kept.contains(e.id)) w.deleted.push_back(e.id);
    witness = std::move(w);
  }

  // Restricted growth strings: vertex i joins an existing part or opens
  // the next one.
  bool assign(std::size_t i, int opened) {
    const auto n = vertices.size();
    if (static_cast<int>(n - i) < parts - opened) return false;
    if (i == n) {
      if (parts_connected() && enough_edges()) {
        record();
        return true;
      }
      return false;
    }
    for (int p = 0; p < std::min(opened + 1, parts); ++p) {
      block[i] = p;
      if (assign(i + 1, std::max(opened, p + 1))) return true;
    }
    block[i] = -1;
    return false;
  }
};

}  // namespace

MinorSearch has_minor(const MultiGraph& G, MinorPattern pattern) {
  const int needed_genus = pattern == MinorPattern::K4 ? 3 : 4;
  const std::size_t needed_vertices = pattern == MinorPattern::K4 ? 4 : 3;
  if (genus(G) < needed_genus || G.vertex_count() < needed_vertices) return {};
  if (pattern == MinorPattern::K4 && !has_k4_minor_series_parallel(G)) return {};
  PartitionSearch search(G, pattern);
  if (!search.assign(0, 0)) {
    if (pattern == MinorPattern::K4)
      throw InvariantError("series-parallel test and branch-set search disagree on K4");
    return {};
  }
  return {true, std::move(search.witness)};
}

bool has_k4_minor_series_parallel(const MultiGraph& G) {
  // Underlying simple graph; repeatedly drop vertices of degree <= 2,
  // bridging a degree-2 vertex's neighbours. Empty at the end iff K4-free.
  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : G.vertices()) adj[v];
  for (const auto& e : G.edges())
    if (!e.is_loop()) {
      adj[e.tail].insert(e.head);
      adj[e.head].insert(e.tail);
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end(); ++it) {
      if (it->second.size() > 2) continue;
      const VertexId v = it->first;
      const std::vector<VertexId> nbrs(it->second.begin(), it->second.end());
      for (VertexId u : nbrs) adj[u].erase(v);
      if (nbrs.size() == 2) {
        adj[nbrs[0]].insert(nbrs[1]);
        adj[nbrs[1]].insert(nbrs[0]);
      }
      adj.erase(it);
      changed = true;
      break;
    }
  }
  return !adj.empty();
}

MultiGraph replay_minor(const MultiGraph& G, const MinorWitness& w) {
  MultiGraph out = G;
  for (EdgeId e : w.deleted) out = delete_edge(out, e);
  for (EdgeId e : w.contracted) out = contract_edge(out, e);
  return out;
}

bool verify_minor_witness(const MultiGraph& G, const MinorWitness& w) {
  try {
    return isomorphic(replay_minor(G, w), pattern_graph(w.pattern));
  } catch (const PreconditionError&) {
    return false;
  }
}

bool is_hyperelliptic_type(const MultiGraph& G) {
  if (genus(G) >= 3 && has_k4_minor_series_parallel(G)) return false;
  return !has_minor(G, MinorPattern::L3).found;
}

// -------------------------------------------------------------- isomorphism

namespace {

// Minimizes the sorted pair list over relabelings that keep vertices ordered
// by decreasing valence (the valence sequence is an invariant).
class Canonizer {
 public:
  explicit Canonizer(const MultiGraph& G) : G_(G) {
    std::vector<std::pair<int, VertexId>> order;
    for (VertexId v : G.vertices()) order.emplace_back(-G.valence(v), v);
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      std::vector<VertexId> cls;
      while (j < order.size() && order[j].first == order[i].first) cls.push_back(order[j++].second);
      classes_.push_back(std::move(cls));
      i = j;
    }
  }

  CanonicalForm run() {
    label_.clear();
    search(0);
    CanonicalForm out{{static_cast<int>(G_.vertex_count()), static_cast<int>(G_.edge_count())}};
    out.insert(out.end(), best_.begin(), best_.end());
    return out;
  }

 private:
  void search(std::size_t c) {
    if (c == classes_.size()) {
      CanonicalForm pairs;
      pairs.reserve(G_.edge_count());
      for (const auto& e : G_.edges()) {
        const int a = label_.at(e.tail);
        const int b = label_.at(e.head);
        pairs.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(pairs.begin(), pairs.end());
      if (!have_best_ || pairs < best_) {
        best_ = std::move(pairs);
        have_best_ = true;
      }
      return;
    }
    std::vector<VertexId> cls = classes_[c];
    const int base = static_cast<int>(label_.size());
    do {
      for (std::size_t i = 0; i < cls.size(); ++i) label_[cls[i]] = base + static_cast<int>(i);
      search(c + 1);
      for (VertexId v : cls) label_.erase(v);
    } while (std::next_permutation(cls.begin(), cls.end()));
  }

  const MultiGraph& G_;
  std::vector<std::vector<VertexId>> classes_;
  std::map<VertexId, int> label_;
  CanonicalForm best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const MultiGraph& G) { return Canonizer(G).run(); }

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// -------------------------------------------------------------- enumeration

namespace {

class Enumerator {
 public:
  Enumerator(int vertices, int edges, const std::function<void(const MultiGraph&)>& emit,
             std::set<CanonicalForm>& seen)
      : n_(vertices), emit_(emit), seen_(seen) {
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v) pairs_.emplace_back(u, v);
    count_.assign(pairs_.size(), 0);
    valence_.assign(static_cast<std::size_t>(n_), 0);
    run(0, edges);
  }

 private:
  // Pairs are ordered (0,0),(0,1),..,(0,n-1),(1,1),..; vertex u's valence is
  // final once the last pair (u, n-1) has been decided.
  void run(std::size_t p, int remaining) {
    if (p > 0 && pairs_[p - 1].second == n_ - 1) {
      const int u = pairs_[p - 1].first;
      const int val = valence_[static_cast<std::size_t>(u)];
      if (val < 3) return;
      if (u > 0 && val > valence_[static_cast<std::size_t>(u - 1)]) return;
    }
    if (p == pairs_.size()) {
      if (remaining == 0) finish();
      return;
    }
    const auto [u, v] = pairs_[p];
    for (int k = 0; k <= remaining; ++k) {
      count_[p] = k;
      valence_[static_cast<std::size_t>(u)] += k;
      valence_[static_cast<std::size_t>(v)] += k;
      run(p + 1, remaining - k);
      valence_[static_cast<std::size_t>(u)] -= k;
      valence_[static_cast<std::size_t>(v)] -= k;
    }
    count_[p] = 0;
  }

  void finish() {
    std::set<VertexId> vertices;
    for (int v = 0; v < n_; ++v) vertices.insert(v);
    std::vector<Edge> edges;
    EdgeId id = 0;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      for (int k = 0; k < count_[p]; ++k) edges.push_back({++id, pairs_[p].first, pairs_[p].second});
    if (!is_connected(vertices, edges)) return;
    const MultiGraph G(std::move(vertices), std::move(edges));
    CanonicalForm form = canonical_form(G);
    if (!seen_.insert(form).second) return;
    std::vector<Edge> canonical;
    for (std::size_t i = 1; i < form.size(); ++i)
      canonical.push_back({static_cast<EdgeId>(i), form[i].first, form[i].second});
    std::set<VertexId> labels;
    for (int v = 0; v < n_; ++v) labels.insert(v);
    emit_(MultiGraph(std::move(labels), std::move(canonical)));
  }

  int n_;
  const std::function<void(const MultiGraph&)>& emit_;
  std::set<CanonicalForm>& seen_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> count_;
  std::vector<int> valence_;
};

}  // namespace

void for_each_graph(int max_edges, int min_genus, int max_genus,
                    const std::function<void(const MultiGraph&)>& visit) {
  std::set<CanonicalForm> seen;
  for (int e = 1; e <= max_edges; ++e)
    for (int v = 1; 3 * v <= 2 * e; ++v) {
      const int g = e - v + 1;
      if (g < min_genus || g > max_genus) continue;
      Enumerator(v, e, visit, seen);
    }
}

std::vector<MultiGraph> enumerate_graphs(int max_edges, int min_genus, int max_genus) {
  std::vector<MultiGraph> out;
  for_each_graph(max_edges, min_genus, max_genus, [&](const MultiGraph& G) { out.push_back(G); });
  return out;
}

}  // namespace czc
