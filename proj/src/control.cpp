#include "lapwalk/control.hpp"

#include <cmath>

#include "lapwalk/operators.hpp"
#include "lapwalk/pst.hpp"
#include "lapwalk/spectral.hpp"

namespace lapwalk {

WalkMatrix walk_matrix(const Graph& g, const std::vector<int>& subset) {
  if (!g.is_simple()) throw GraphError("walk_matrix: graph must be unweighted and loop-free");
  const int n = g.order();
  WalkMatrix w;
  w.subset = subset;
  w.entries.assign(n, std::vector<BigInt>(n, 0));
  std::vector<BigInt> col(n, 0);
  for (int u : subset) {
    if (u < 0 || u >= n) throw GraphError("walk_matrix: subset vertex out of range");
    col[u] = 1;
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) w.entries[i][k] = col[i];
    std::vector<BigInt> next(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j : g.neighbors(i)) next[i] += col[j];
    col = std::move(next);
  }
  return w;
}

int exact_rank(BigMatrix m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const BigInt& p = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[i][j] * p - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = p;
    ++rank;
  }
  return static_cast<int>(rank);
}

bool is_controllable(const Graph& g, const std::vector<int>& subset) {
  return exact_rank(walk_matrix(g, subset)) == g.order();
}

bool controllable_vertex(const Graph& g, int u) { return is_controllable(g, {u}); }

int eigen_support(const Graph& g, int u, double tol) {
  const auto d = eigendecompose(adjacency(g));
  int count = 0;
  for (const auto& s : d.spaces)
    if (s.projector.col(u).norm() > tol) ++count;
  return count;
}

ChaseReport eigenvector_chase_check(int m) {
  ChaseReport r;
  r.m = m;
  r.expected = m % 3 == 2;
  const Graph g = cone_p4_with_pendant(m).graph;
  const auto d = eigendecompose(adjacency(g));
  r.min_overlap = INFINITY;
  for (const auto& s : d.spaces) {
    if (s.multiplicity > 1) {
      r.repeated_eigenvalue = true;
      continue;
    }
    r.min_overlap = std::min(r.min_overlap, s.projector.col(1).norm());
  }
  r.vanishing_eigenvector = r.repeated_eigenvalue || r.min_overlap < 1e-8;
  return r;
}

UnicyclicReport unicyclic_pipeline(int arm1, int arm2, double t_max) {
  UnicyclicReport r;
  r.arm1 = arm1;
  r.arm2 = arm2;
  const MarkedGraph u = odd_unicyclic(arm1, arm2);
  const LineGraph lg = line_graph(u.graph);
  r.line = lg.graph;
  r.end_a = lg.vertex_of(u.first, u.graph.neighbors(u.first).front());
  r.end_b = lg.vertex_of(u.second, u.graph.neighbors(u.second).front());
  r.rank_a = exact_rank(walk_matrix(lg.graph, {r.end_a}));
  r.rank_b = exact_rank(walk_matrix(lg.graph, {r.end_b}));
  r.controllable_a = r.rank_a == lg.graph.order();
  r.controllable_b = r.rank_b == lg.graph.order();

  SearchOptions opt;
  opt.t_max = t_max;
  const auto c = search_pst(signless_laplacian(u.graph), {u.first, u.second}, opt);
  r.scan_magnitude = c.magnitude;
  r.scan_time = c.time;
  r.scan_below = c.magnitude < 1.0 - kScanRefuteGap;

  const bool hypothesis = arm1 % 3 != 0 || arm2 % 3 != 0;
  r.verdict = hypothesis && r.controllable_a && r.controllable_b ? UnicyclicVerdict::NoPst
                                                                 : UnicyclicVerdict::Inconclusive;
  return r;
}

}  // namespace lapwalk
