#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "czc/graph.hpp"

namespace czc {

enum class MinorPattern { K4, L3 };

std::string to_string(MinorPattern p);
/// Accepts "K4" and "L3"; anything else throws PreconditionError.
MinorPattern parse_pattern(const std::string& name);

/// K4 on vertices 0..3, or L3: vertices 0..2 pairwise joined by two edges.
MultiGraph pattern_graph(MinorPattern p);

/// A minor realized by deleting `deleted` and then contracting `contracted`.
/// branch_sets[k] is the set of original vertices merged into pattern vertex k.
struct MinorWitness {
  MinorPattern pattern;
  std::vector<EdgeId> contracted;
  std::vector<EdgeId> deleted;
  std::vector<std::set<VertexId>> branch_sets;
};

struct MinorSearch {
  bool found = false;
  std::optional<MinorWitness> witness;
};

/// Searches for connected branch sets covering V(G), pairwise joined by
/// enough distinct edges (one for K4, two for L3).
MinorSearch has_minor(const MultiGraph& G, MinorPattern pattern);

/// Decides K4-minor containment by series-parallel reduction.
bool has_k4_minor_series_parallel(const MultiGraph& G);

/// Applies the witness' deletions then contractions.
MultiGraph replay_minor(const MultiGraph& G, const MinorWitness& w);
/// True when the replay succeeds and yields a graph isomorphic to the pattern.
bool verify_minor_witness(const MultiGraph& G, const MinorWitness& w);

/// No K4 minor and no L3 minor.
bool is_hyperelliptic_type(const MultiGraph& G);

/// Isomorphism invariant: sorted (u, v) endpoint pairs under the vertex
/// relabeling that minimizes them. Orientation and edge ids are ignored.
using CanonicalForm = std::vector<std::pair<int, int>>;
CanonicalForm canonical_form(const MultiGraph& G);
bool isomorphic(const MultiGraph& a, const MultiGraph& b);

/// Every isomorphism class of connected stable multigraph with at most
/// max_edges edges and genus in [min_genus, max_genus], once each. Vertices
/// are 0..V-1, edge ids 1..E, edges oriented from the smaller endpoint.
std::vector<MultiGraph> enumerate_graphs(int max_edges, int min_genus, int max_genus);
void for_each_graph(int max_edges, int min_genus, int max_genus,
                    const std::function<void(const MultiGraph&)>& visit);

}  // namespace czc
