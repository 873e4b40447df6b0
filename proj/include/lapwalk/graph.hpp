#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapwalk {

/// Raised for malformed input: bad vertex ids, duplicate edges, weighted
/// graphs handed to operations that need simple ones, and so on.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Ordered vertex pair used for transfer queries (from -> to).
struct VertexPair {
  int from = 0;
  int to = 0;
};

/// Simple undirected graph on vertices 0..n-1 with optional edge weights and
/// weighted self-loops.
///
/// Graphs are immutable values. Edges are kept sorted lexicographically by
/// (u, v); that order is the canonical edge order used by the line graph and
/// the incidence matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::vector<Edge> edges, std::map<int, double> loops = {});

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<int, double>& loops() const { return loops_; }
  const std::vector<int>& neighbors(int u) const { return adj_.at(u); }

  bool has_edge(int u, int v) const;
  /// Weight of edge {u,v}; 0 when absent.
  double weight(int u, int v) const;
  /// Number of neighbours (loops are not counted).
  int degree(int u) const { return static_cast<int>(adj_.at(u).size()); }
  std::vector<int> degrees() const;

  /// True when every edge has weight 1 and there are no loops.
  bool is_simple() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.loops_ == b.loops_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::map<int, double> loops_;
  std::vector<std::vector<int>> adj_;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph hypercube(int dim);
/// i ~ j iff (i - j) mod n lies in gens. gens must be closed under negation.
Graph circulant(int n, const std::set<int>& gens);
/// Circ(Z_{2m}, S_m), a (2m, m-1)-regular circulant.
Graph circulant_family(int m);
std::set<int> circulant_family_generators(int m);

Graph complement(const Graph& g);
/// h's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
/// Vertex (a, b) gets id a * h.order() + b.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph weak_product(const Graph& g, const Graph& h);

inline int product_vertex(const Graph& h, int a, int b) { return a * h.order() + b; }

struct LineGraph {
  Graph graph;
  /// edge_of[k] is the edge of the base graph represented by vertex k.
  std::vector<Edge> edge_of;

  /// Line-graph vertex of the base edge {u, v}; -1 if absent.
  int vertex_of(int u, int v) const;
};

LineGraph line_graph(const Graph& g);

/// A graph with two distinguished vertices.
struct MarkedGraph {
  Graph graph;
  int first = 0;
  int second = 0;
};

/// Triangle with a pendant path of m edges on two of its corners. Vertices
/// 0..2m+1 run left to right along the long path, 2m+2 is the apex of the
/// triangle; the marked pair is the two path endpoints (0 and 2m+1).
MarkedGraph odd_unicyclic(int m);
/// Same shape with arms of m1 and m2 edges; triangle corners at m1, m1 + 1.
MarkedGraph odd_unicyclic(int m1, int m2);

/// K1 + P4 (cone vertex 0, path 1-2-3-4) with a pendant path of m edges
/// hanging off vertex 4 and labelled 5..4+m. Marked pair: vertex 1 and the
/// far end of the pendant path.
MarkedGraph cone_p4_with_pendant(int m);

/// Complement-of-K2 joined with h; the two cone vertices are 0 and 1.
inline Graph double_cone(const Graph& h) { return join(empty(2), h); }
/// K2 joined with h; the two cone vertices are 0 and 1.
inline Graph connected_double_cone(const Graph& h) { return join(complete(2), h); }

/// Erdos-Renyi G(n, p) from a seeded 64-bit Mersenne twister; the same
/// seed gives the same graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

std::string describe(const Graph& g);

}  // namespace lapwalk
