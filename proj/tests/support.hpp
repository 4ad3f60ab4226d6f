#pragma once

// Seeded random instances shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "czc/ceresa.hpp"
#include "czc/extalg.hpp"
#include "czc/graph.hpp"

namespace support {

using namespace czc;

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Connected multigraph of the given genus on 1..max_vertices vertices with
/// scattered vertex and edge ids, random orientations, loops and parallels.
inline MultiGraph random_graph(std::mt19937& rng, int genus, int max_vertices = 5) {
  const int n = uniform(rng, 1, max_vertices);
  std::vector<VertexId> ids(30);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(n));

  std::vector<std::pair<VertexId, VertexId>> ends;
  for (int i = 1; i < n; ++i)
    ends.emplace_back(ids[static_cast<std::size_t>(i)],
                      ids[static_cast<std::size_t>(uniform(rng, 0, i - 1))]);
  for (int k = 0; k < genus; ++k)
    ends.emplace_back(ids[static_cast<std::size_t>(uniform(rng, 0, n - 1))],
                      ids[static_cast<std::size_t>(uniform(rng, 0, n - 1))]);

  std::vector<EdgeId> edge_ids(60);
  std::iota(edge_ids.begin(), edge_ids.end(), 1);
  std::shuffle(edge_ids.begin(), edge_ids.end(), rng);
  std::shuffle(ends.begin(), ends.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    auto [a, b] = ends[i];
    if (uniform(rng, 0, 1)) std::swap(a, b);
    edges.push_back({edge_ids[i], a, b});
  }
  return MultiGraph(std::set<VertexId>(ids.begin(), ids.end()), std::move(edges));
}

/// Stable graph (every valence >= 3) of the given genus, by rejection.
inline MultiGraph random_stable_graph(std::mt19937& rng, int genus) {
  while (true) {
    MultiGraph G = random_graph(rng, genus, 2 * genus - 2);
    if (is_stable(G)) return G;
  }
}

inline IntPolynomial random_linear_form(std::mt19937& rng, const MultiGraph& G) {
  IntPolynomial out;
  for (const auto& e : G.edges())
    if (uniform(rng, 0, 2) == 0) out.add_term(Monomial::variable(e.id), uniform(rng, -2, 2));
  return out;
}

inline IntPolynomial random_polynomial(std::mt19937& rng, int max_var = 6, int terms = 4,
                                       unsigned max_exp = 2) {
  IntPolynomial out;
  const int n = uniform(rng, 0, terms);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Power> powers;
    const int vars = uniform(rng, 0, 3);
    for (int v = 0; v < vars; ++v)
      powers.emplace_back(uniform(rng, 1, max_var), static_cast<unsigned>(uniform(rng, 1, static_cast<int>(max_exp))));
    out.add_term(Monomial(std::move(powers)), uniform(rng, -5, 5));
  }
  return out;
}

/// Random alpha^beta^beta cocycle coefficients (linear forms).
inline CoefficientMap random_cocycle_coeffs(std::mt19937& rng, const MultiGraph& G, int genus,
                                            int entries = 5) {
  CoefficientMap b;
  for (int n = 0; n < entries; ++n) {
    const int i = uniform(rng, 1, genus);
    int j = uniform(rng, 1, genus);
    int k = uniform(rng, 1, genus);
    if (j == k) continue;
    if (j > k) std::swap(j, k);
    b[{i, j, k}] += random_linear_form(rng, G);
  }
  return b;
}

/// Random coefficients on alpha_i^alpha_j^beta_k, i < j.
inline CoefficientMap random_aab_coeffs(std::mt19937& rng, const MultiGraph& G, int genus,
                                        bool constants_only) {
  CoefficientMap a;
  for (int n = 0; n < 4; ++n) {
    int i = uniform(rng, 1, genus);
    int j = uniform(rng, 1, genus);
    const int k = uniform(rng, 1, genus);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    a[{i, j, k}] += constants_only ? IntPolynomial(uniform(rng, -3, 3)) : random_linear_form(rng, G);
  }
  return a;
}

inline HElement random_h(std::mt19937& rng, const MultiGraph& G, int genus) {
  HElement h(genus);
  for (int i = 1; i <= genus; ++i) {
    h[SymplecticLabel::alpha(i)] = uniform(rng, 0, 1) ? random_linear_form(rng, G) : IntPolynomial(uniform(rng, -2, 2));
    h[SymplecticLabel::beta(i)] = random_linear_form(rng, G);
  }
  return h;
}

/// Random element whose every term has at least q beta factors.
inline LElement random_L_in_filtration(std::mt19937& rng, const MultiGraph& G, int genus, int q) {
  LElement x;
  for (int n = 0; n < 5; ++n) {
    std::array<SymplecticLabel, 3> labels{};
    const int betas = uniform(rng, q, 3);
    for (int s = 0; s < 3; ++s)
      labels[static_cast<std::size_t>(s)] = s < betas ? SymplecticLabel::beta(uniform(rng, 1, genus))
                                                      : SymplecticLabel::alpha(uniform(rng, 1, genus));
    x.add(labels[0], labels[1], labels[2], IntPolynomial(uniform(rng, -3, 3)) + random_linear_form(rng, G));
  }
  return x;
}

/// A cocycle whose class is trivial by construction: the alpha^beta^beta
/// part of (delta_G - I)(u) for an integer alpha^alpha^beta element u.
/// Returns the cocycle coefficients and u's coefficients.
inline std::pair<CoefficientMap, IntegerCertificate> trivial_cocycle_coeffs(
    std::mt19937& rng, const CycleBasisContext& ctx) {
  IntegerCertificate u;
  for (int n = 0; n < 3; ++n) {
    int i = uniform(rng, 1, ctx.genus());
    int j = uniform(rng, 1, ctx.genus());
    const int k = uniform(rng, 1, ctx.genus());
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    u[{i, j, k}] += uniform(rng, -3, 3);
  }
  CoefficientMap a;
  for (const auto& [idx, v] : u)
    if (v != 0) a[idx] = IntPolynomial(v);
  const LElement x = alpha_alpha_beta_element(a);
  const LElement image = delta_G_L(ctx, x) - x;
  const LElement middle = image.graded_part(2);
  CoefficientMap b;
  for (const auto& [t, p] : middle.terms())
    b[{t.labels()[0].index, t.labels()[1].index, t.labels()[2].index}] = p;
  return {b, u};
}

inline TropicalCurve random_curve(std::mt19937& rng, const MultiGraph& G, int max_length = 4) {
  std::map<EdgeId, Integer> lengths;
  for (const auto& e : G.edges()) lengths[e.id] = uniform(rng, 1, max_length);
  return TropicalCurve(G, lengths);
}

/// A random spanning tree (random edge order, greedy).
inline std::set<EdgeId> random_tree(std::mt19937& rng, const MultiGraph& G) {
  std::vector<Edge> edges = G.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  std::map<VertexId, VertexId> parent;
  auto find = [&](VertexId v) {
    while (parent.contains(v) && parent[v] != v) v = parent[v];
    return v;
  };
  std::set<EdgeId> tree;
  for (const auto& e : edges) {
    const VertexId a = find(e.tail);
    const VertexId b = find(e.head);
    if (a == b) continue;
    parent[a] = b;
    tree.insert(e.id);
  }
  return tree;
}

}  // namespace support
