#include "lapwalk/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace lapwalk::io {

using nlohmann::json;

std::string format_real(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, end);
}

std::string to_json(const Graph& g) {
  std::string s = "{\n  \"n\": " + std::to_string(g.order()) + ",\n  \"edges\": [";
  bool first = true;
  for (const auto& e : g.edges()) {
    s += first ? "" : ",";
    first = false;
    s += "[" + std::to_string(e.u) + "," + std::to_string(e.v);
    if (e.weight != 1.0) s += "," + format_real(e.weight);
    s += "]";
  }
  s += "],\n  \"loops\": [";
  first = true;
  for (const auto& [v, w] : g.loops()) {
    s += first ? "" : ",";
    first = false;
    s += "[" + std::to_string(v) + "," + format_real(w) + "]";
  }
  s += "]\n}\n";
  return s;
}

Graph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw GraphError(std::string("graph JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw GraphError("graph JSON: missing integer field \"n\"");
  }
  std::vector<Edge> edges;
  std::map<int, double> loops;
  try {
    if (j.contains("edges")) {
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
          throw GraphError("graph JSON: edge must be [u,v] or [u,v,w]");
        }
        Edge x{e[0].get<int>(), e[1].get<int>(), 1.0};
        if (e.size() == 3) x.weight = e[2].get<double>();
        edges.push_back(x);
      }
    }
    if (j.contains("loops")) {
      for (const auto& l : j["loops"]) {
        if (!l.is_array() || l.size() != 2) throw GraphError("graph JSON: loop must be [u,w]");
        if (!loops.emplace(l[0].get<int>(), l[1].get<double>()).second) {
          throw GraphError("graph JSON: duplicate loop");
        }
      }
    }
  } catch (const json::exception& ex) {
    throw GraphError(std::string("graph JSON: ") + ex.what());
  }
  return Graph(j["n"].get<int>(), std::move(edges), std::move(loops));
}

std::string to_edge_list(const Graph& g) {
  std::string s = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    s += std::to_string(e.u) + " " + std::to_string(e.v);
    if (e.weight != 1.0) s += " " + format_real(e.weight);
    s += "\n";
  }
  for (const auto& [v, w] : g.loops()) {
    s += std::to_string(v) + " " + std::to_string(v) + " " + format_real(w) + "\n";
  }
  return s;
}

Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  std::map<int, double> loops;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto bad = [&](const std::string& why) {
      return GraphError("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (n < 0) {
      if (tok.size() != 2 || tok[0] != "n") throw bad("expected header \"n <count>\"");
      n = std::stoi(tok[1]);
      continue;
    }
    if (tok.size() != 2 && tok.size() != 3) throw bad("expected \"u v [w]\"");
    int u = 0, v = 0;
    double w = 1.0;
    try {
      u = std::stoi(tok[0]);
      v = std::stoi(tok[1]);
      if (tok.size() == 3) w = std::stod(tok[2]);
    } catch (const std::exception&) {
      throw bad("unparseable number");
    }
    if (u == v) {
      if (tok.size() != 3) throw bad("loop needs a weight");
      if (!loops.emplace(u, w).second) throw bad("duplicate loop");
    } else {
      edges.push_back({u, v, w});
    }
  }
  if (n < 0) throw GraphError("edge list: missing header");
  return Graph(n, std::move(edges), std::move(loops));
}

Graph parse_graph(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') return graph_from_json(text);
  return graph_from_edge_list(text);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw GraphError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GraphError("cannot write " + path);
  const bool as_json = path.size() >= 5 && path.substr(path.size() - 5) == ".json";
  f << (as_json ? to_json(g) : to_edge_list(g));
}

std::vector<std::vector<int>> cells_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw GraphError(std::string("partition JSON: ") + ex.what());
  }
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array()) {
    throw GraphError("partition JSON: missing \"cells\" array");
  }
  try {
    return j["cells"].get<std::vector<std::vector<int>>>();
  } catch (const json::exception& ex) {
    throw GraphError(std::string("partition JSON: ") + ex.what());
  }
}

std::string cells_to_json(const std::vector<std::vector<int>>& cells) {
  return json{{"cells", cells}}.dump() + "\n";
}

void write_csv(std::ostream& os, const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << ',';
      os << format_real(m(i, j));
    }
    os << '\n';
  }
}

}  // namespace lapwalk::io
