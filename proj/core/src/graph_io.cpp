#include "wordrep/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "wordrep/error.hpp"

namespace wordrep {

namespace {

Symbol parse_symbol(const std::string& token, std::size_t line_no) {
  if (!Symbol::is_valid(token)) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": invalid node name '" + token + "'");
  }
  return Symbol(token);
}

nlohmann::json graph_json(const Graph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& s : g.nodes()) nodes.push_back(s.str());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a.str(), b.str()});
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

}  // namespace

Graph read_edges(std::istream& in) {
  std::set<Symbol> nodes;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.size() > 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                             ": expected 'u v' or 'u', got " +
                                             std::to_string(parts.size()) + " tokens");
    }
    auto u = parse_symbol(parts[0], line_no);
    nodes.insert(u);
    if (parts.size() == 2) {
      auto v = parse_symbol(parts[1], line_no);
      if (u == v) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) + ": self-loop on '" + u.str() + "'");
      }
      nodes.insert(v);
      edges.emplace_back(std::move(u), std::move(v));
    }
  }
  return Graph(std::vector<Symbol>(nodes.begin(), nodes.end()), edges);
}

Graph read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed graph JSON: ") + e.what());
  }
  auto bad = [](const std::string& what) {
    return Error(ErrorKind::ParseError, "graph JSON: " + what);
  };
  if (!doc.is_object()) throw bad("top level must be an object");
  auto symbol_of = [&](const nlohmann::json& v) {
    if (!v.is_string() || !Symbol::is_valid(v.get<std::string>())) {
      throw bad("invalid node name " + v.dump());
    }
    return Symbol(v.get<std::string>());
  };
  std::set<Symbol> nodes;
  std::vector<Edge> edges;
  if (doc.contains("nodes")) {
    if (!doc["nodes"].is_array()) throw bad("\"nodes\" must be an array");
    for (const auto& v : doc["nodes"]) nodes.insert(symbol_of(v));
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw bad("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw bad("each edge must be a 2-array");
      auto u = symbol_of(e[0]);
      auto v = symbol_of(e[1]);
      if (u == v) throw bad("self-loop on '" + u.str() + "'");
      nodes.insert(u);
      nodes.insert(v);
      edges.emplace_back(std::move(u), std::move(v));
    }
  }
  return Graph(std::vector<Symbol>(nodes.begin(), nodes.end()), edges);
}

Graph read_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::Json ? read_json(in) : read_edges(in);
}

GraphFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? GraphFormat::Json : GraphFormat::Edges;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open graph file '" + path.string() + "'");
  return read_graph(in, format_for_path(path));
}

void write_edges(std::ostream& out, const Graph& g) {
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.degree(i) == 0) out << g.nodes()[i] << '\n';
  }
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

void write_json(std::ostream& out, const Graph& g) { out << graph_json(g).dump() << '\n'; }

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    write_json(out, g);
  } else {
    write_edges(out, g);
  }
}

std::string to_json_string(const Graph& g) { return graph_json(g).dump(); }

}  // namespace wordrep
