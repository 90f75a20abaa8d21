#pragma once

#include <string>

#include "ngspread/graph.hpp"

namespace ngspread {

/// graph6 ASCII encoding (nauty-compatible), orders 1..64.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

/// {"n": int, "edges": [[u,v],...]} with u < v, edges sorted lexicographically.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// Accepts either format: JSON if the first non-space byte is '{',
/// graph6 otherwise.
Graph parse_graph_auto(const std::string& text);

/// Reads a whole file and parses it with parse_graph_auto.
Graph load_graph_file(const std::string& path);

} // namespace ngspread
