#include "lapwalk/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <sstream>

namespace lapwalk {

namespace {

void require_simple(const Graph& g, const char* op) {
  if (!g.is_simple()) {
    throw GraphError(std::string(op) + ": graph must be unweighted and loop-free");
  }
}

}  // namespace

Graph::Graph(int n) : Graph(n, {}, {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::map<int, double> loops)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {
  if (n_ < 0) throw GraphError("negative vertex count");
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} out of range for n=" + std::to_string(n_));
    }
    if (e.u == e.v) throw GraphError("self-loop given as edge; use loops");
    if (!std::isfinite(e.weight)) throw GraphError("non-finite edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw GraphError("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + "}");
    }
  }
  for (const auto& [v, w] : loops_) {
    if (v < 0 || v >= n_) throw GraphError("loop vertex out of range");
    if (!std::isfinite(w)) throw GraphError("non-finite loop weight");
  }
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

double Graph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v},
                             [](const Edge& a, const Edge& b) {
                               return a.u != b.u ? a.u < b.u : a.v < b.v;
                             });
  if (it != edges_.end() && it->u == u && it->v == v) return it->weight;
  return 0.0;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int u = 0; u < n_; ++u) d[u] = degree(u);
  return d;
}

bool Graph::is_simple() const {
  return loops_.empty() &&
         std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight == 1.0; });
}

bool Graph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<char> seen(n_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n_;
}

Graph path(int n) {
  if (n < 1) throw GraphError("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  if (n < 0) throw GraphError("complete needs n >= 0");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph empty(int n) {
  if (n < 0) throw GraphError("empty needs n >= 0");
  return Graph(n);
}

Graph hypercube(int dim) {
  if (dim < 0 || dim > 20) throw GraphError("hypercube dimension out of range");
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int x = 0; x < n; ++x)
    for (int b = 0; b < dim; ++b) {
      int y = x ^ (1 << b);
      if (x < y) e.push_back({x, y});
    }
  return Graph(n, std::move(e));
}

Graph circulant(int n, const std::set<int>& gens) {
  if (n < 1) throw GraphError("circulant needs n >= 1");
  for (int s : gens) {
    if (s <= 0 || s >= n) throw GraphError("circulant generator outside 1..n-1");
    if (!gens.count(n - s)) throw GraphError("circulant generators not closed under negation");
  }
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (gens.count(((i - j) % n + n) % n)) e.push_back({i, j});
  return Graph(n, std::move(e));
}

std::set<int> circulant_family_generators(int m) {
  if (m < 2) throw GraphError("circulant_family needs m >= 2");
  const int n = 2 * m;
  std::set<int> s;
  const int half = ((m - 1) % 2 == 0) ? (m - 1) / 2 : (m - 2) / 2;
  for (int k = 1; k <= half; ++k) {
    s.insert(k);
    s.insert(n - k);
  }
  if ((m - 1) % 2 == 1) s.insert(m);
  return s;
}

Graph circulant_family(int m) { return circulant(2 * m, circulant_family_generators(m)); }

Graph complement(const Graph& g) {
  require_simple(g, "complement");
  std::vector<Edge> e;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) e.push_back({i, j});
  return Graph(g.order(), std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  require_simple(g, "disjoint_union");
  require_simple(h, "disjoint_union");
  std::vector<Edge> e = g.edges();
  const int off = g.order();
  for (const auto& x : h.edges()) e.push_back({x.u + off, x.v + off});
  return Graph(g.order() + h.order(), std::move(e));
}

Graph join(const Graph& g, const Graph& h) {
  require_simple(g, "join");
  require_simple(h, "join");
  std::vector<Edge> e = disjoint_union(g, h).edges();
  const int off = g.order();
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b) e.push_back({a, b + off});
  return Graph(g.order() + h.order(), std::move(e));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_simple(g, "cartesian_product");
  require_simple(h, "cartesian_product");
  std::vector<Edge> e;
  for (const auto& x : g.edges())
    for (int b = 0; b < h.order(); ++b)
      e.push_back({product_vertex(h, x.u, b), product_vertex(h, x.v, b)});
  for (int a = 0; a < g.order(); ++a)
    for (const auto& y : h.edges())
      e.push_back({product_vertex(h, a, y.u), product_vertex(h, a, y.v)});
  return Graph(g.order() * h.order(), std::move(e));
}

Graph weak_product(const Graph& g, const Graph& h) {
  require_simple(g, "weak_product");
  require_simple(h, "weak_product");
  std::vector<Edge> e;
  for (const auto& x : g.edges())
    for (const auto& y : h.edges()) {
      e.push_back({product_vertex(h, x.u, y.u), product_vertex(h, x.v, y.v)});
      e.push_back({product_vertex(h, x.u, y.v), product_vertex(h, x.v, y.u)});
    }
  return Graph(g.order() * h.order(), std::move(e));
}

int LineGraph::vertex_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t k = 0; k < edge_of.size(); ++k)
    if (edge_of[k].u == u && edge_of[k].v == v) return static_cast<int>(k);
  return -1;
}

LineGraph line_graph(const Graph& g) {
  require_simple(g, "line_graph");
  LineGraph out;
  out.edge_of = g.edges();
  const auto& es = out.edge_of;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      int shared = (es[i].u == es[j].u) + (es[i].u == es[j].v) + (es[i].v == es[j].u) +
                   (es[i].v == es[j].v);
      if (shared == 1) e.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  out.graph = Graph(static_cast<int>(es.size()), std::move(e));
  return out;
}

MarkedGraph odd_unicyclic(int m) {
  if (m < 1) throw GraphError("odd_unicyclic needs m >= 1");
  return odd_unicyclic(m, m);
}

MarkedGraph odd_unicyclic(int m1, int m2) {
  if (m1 < 0 || m2 < 0) throw GraphError("odd_unicyclic arms must be nonnegative");
  const int line = m1 + m2 + 2;
  const int apex = line;
  std::vector<Edge> e;
  for (int i = 0; i + 1 < line; ++i) e.push_back({i, i + 1});
  e.push_back({m1, apex});
  e.push_back({m1 + 1, apex});
  return {Graph(line + 1, std::move(e)), 0, line - 1};
}

MarkedGraph cone_p4_with_pendant(int m) {
  if (m < 0) throw GraphError("cone_p4_with_pendant needs m >= 0");
  std::vector<Edge> e{{1, 2}, {2, 3}, {3, 4}, {0, 1}, {0, 2}, {0, 3}, {0, 4}};
  for (int k = 0; k < m; ++k) e.push_back({4 + k, 5 + k});
  return {Graph(5 + m, std::move(e)), 1, 4 + m};
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) e.push_back({i, j});
    }
  return Graph(n, std::move(e));
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " m=" << g.size() << " degrees=[";
  for (int u = 0; u < g.order(); ++u) os << (u ? "," : "") << g.degree(u);
  os << "]";
  if (!g.loops().empty()) os << " loops=" << g.loops().size();
  os << (g.is_connected() ? " connected" : " disconnected");
  return os.str();
}

}  // namespace lapwalk
