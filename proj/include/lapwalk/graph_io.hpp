#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "lapwalk/graph.hpp"

namespace lapwalk::io {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_real(double x);

/// {"n": int, "edges": [[u,v] | [u,v,w]], "loops": [[u,w]]}
std::string to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// "n <count>" header, then one "u v [w]" line per edge; "u u w" is a loop.
std::string to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

/// Reads either format, sniffing on the first non-blank character.
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

/// {"cells": [[...], ...]}
std::vector<std::vector<int>> cells_from_json(const std::string& text);
std::string cells_to_json(const std::vector<std::vector<int>>& cells);

/// One CSV row per matrix row, full round-trip precision.
void write_csv(std::ostream& os, const Eigen::MatrixXd& m);

std::string read_file(const std::string& path);

}  // namespace lapwalk::io
