#include "czc/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "czc/errors.hpp"

namespace czc {

namespace {

long parse_long(const std::string& token, int line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty())
    throw ParseError(std::string("bad ") + what + " '" + token + "'", line);
  return v;
}

Integer parse_integer(const std::string& token, int line) {
  Integer v;
  if (token.empty() || v.set_str(token, 10) != 0)
    throw ParseError("bad length '" + token + "'", line);
  return v;
}

}  // namespace

GraphFile parse_graph_text(std::string_view text) {
  std::set<VertexId> vertices;
  std::vector<Edge> edges;
  std::map<EdgeId, Integer> lengths;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError("expected 'v <id>'", line);
      vertices.insert(static_cast<VertexId>(parse_long(tok[1], line, "vertex id")));
    } else if (tok[0] == "e") {
      if (tok.size() != 4 && tok.size() != 5)
        throw ParseError("expected 'e <id> <tail> <head> [length]'", line);
      const Edge e{static_cast<EdgeId>(parse_long(tok[1], line, "edge id")),
                   static_cast<VertexId>(parse_long(tok[2], line, "tail")),
                   static_cast<VertexId>(parse_long(tok[3], line, "head"))};
      for (const auto& seen : edges)
        if (seen.id == e.id) throw ParseError("duplicate edge id " + tok[1], line);
      vertices.insert(e.tail);
      vertices.insert(e.head);
      edges.push_back(e);
      if (tok.size() == 5) lengths[e.id] = parse_integer(tok[4], line);
    } else {
      throw ParseError("unknown record '" + tok[0] + "'", line);
    }
  }
  if (vertices.empty()) throw ParseError("graph has no vertices", line);
  return {MultiGraph(std::move(vertices), std::move(edges)), std::move(lengths)};
}

std::string graph_to_text(const MultiGraph& G, const std::map<EdgeId, Integer>& lengths) {
  std::string out;
  for (VertexId v : G.vertices()) out += "v " + std::to_string(v) + "\n";
  for (const auto& e : G.edges()) {
    out += "e " + std::to_string(e.id) + " " + std::to_string(e.tail) + " " +
           std::to_string(e.head);
    if (auto it = lengths.find(e.id); it != lengths.end()) out += " " + it->second.get_str();
    out += "\n";
  }
  return out;
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

GraphFile parse_graph_json(const nlohmann::json& j) {
  try {
    std::set<VertexId> vertices;
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) vertices.insert(v.get<VertexId>());
    std::vector<Edge> edges;
    std::map<EdgeId, Integer> lengths;
    for (const auto& e : j.at("edges")) {
      Edge edge{e.at("id").get<EdgeId>(), e.at("tail").get<VertexId>(), e.at("head").get<VertexId>()};
      vertices.insert(edge.tail);
      vertices.insert(edge.head);
      if (e.contains("length")) lengths[edge.id] = integer_from_json(e.at("length"));
      edges.push_back(edge);
    }
    if (vertices.empty()) throw ParseError("graph has no vertices");
    return {MultiGraph(std::move(vertices), std::move(edges)), std::move(lengths)};
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("graph JSON: ") + ex.what());
  }
}

nlohmann::json graph_to_json(const MultiGraph& G, const std::map<EdgeId, Integer>& lengths) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : G.edges()) {
    nlohmann::json record = {{"id", e.id}, {"tail", e.tail}, {"head", e.head}};
    if (auto it = lengths.find(e.id); it != lengths.end())
      record["length"] = integer_to_json(it->second);
    edges.push_back(std::move(record));
  }
  return {{"vertices", G.vertices()}, {"edges", std::move(edges)}};
}

GraphFile parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
      throw ParseError(std::string("graph JSON: ") + ex.what());
    }
    return parse_graph_json(j);
  }
  return parse_graph_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

GraphFile load_graph_file(const std::string& path) { return parse_graph(read_file(path)); }

}  // namespace czc
