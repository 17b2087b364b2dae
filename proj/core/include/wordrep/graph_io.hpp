#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "wordrep/graph.hpp"

namespace wordrep {

enum class GraphFormat { Edges, Json };

/// Edge-list text: one "u v" edge or isolated "u" node per line, '#'
/// comments. Throws Error(ParseError) with the offending line number.
Graph read_edges(std::istream& in);

/// {"nodes": [...], "edges": [[u, v], ...]}. Edge endpoints missing from
/// "nodes" are added. Throws Error(ParseError).
Graph read_json(std::istream& in);

Graph read_graph(std::istream& in, GraphFormat format);

/// ".json" selects JSON; anything else is read as an edge list.
GraphFormat format_for_path(const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);

/// Isolated nodes are written on their own line so the file round-trips.
void write_edges(std::ostream& out, const Graph& g);
void write_json(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

std::string to_json_string(const Graph& g);

}  // namespace wordrep
