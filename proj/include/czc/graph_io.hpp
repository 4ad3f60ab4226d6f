#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "czc/graph.hpp"

namespace czc {

/// A graph file: the graph plus whatever edge lengths it carried.
struct GraphFile {
  MultiGraph graph;
  std::map<EdgeId, Integer> lengths;  ///< may cover only some edges

  bool has_all_lengths() const { return lengths.size() == graph.edge_count(); }
  bool operator==(const GraphFile&) const = default;
};

/// Text format, one record per line:
///   v <id>                         optional; endpoints are added implicitly
///   e <id> <tail> <head> [length]
/// '#' starts a comment. Throws ParseError with the offending line number;
/// graph invariants (connectivity, unique ids) throw PreconditionError.
GraphFile parse_graph_text(std::string_view text);
/// Emits every vertex as a `v` line, then the edges in stored order.
std::string graph_to_text(const MultiGraph& G, const std::map<EdgeId, Integer>& lengths = {});

/// {"vertices":[...], "edges":[{"id","tail","head","length"?}]}
GraphFile parse_graph_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const MultiGraph& G, const std::map<EdgeId, Integer>& lengths = {});

/// Picks the format by the first non-blank character ('{' means JSON).
GraphFile parse_graph(std::string_view text);
/// Reads a file; throws PreconditionError when it cannot be opened.
GraphFile load_graph_file(const std::string& path);
std::string read_file(const std::string& path);

/// Integer JSON values are emitted as numbers when they fit in 64 bits and
/// as decimal strings otherwise; both forms are accepted on input.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace czc
