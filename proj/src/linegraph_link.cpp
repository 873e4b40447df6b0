#include "lapwalk/linegraph_link.hpp"

#include <algorithm>

#include "lapwalk/operators.hpp"
#include "lapwalk/spectral.hpp"

namespace lapwalk {

IntertwineDeviation intertwine_check(const Graph& g, double t) {
  const LineGraph lg = line_graph(g);
  const Eigen::MatrixXcd b = incidence(g).matrix.cast<Complex>();
  const Eigen::MatrixXcd bt = b.transpose();
  const Eigen::MatrixXcd uq = walk(signless_laplacian(g), t).matrix;
  const Eigen::MatrixXcd ul = walk(adjacency(lg.graph), t).matrix;
  const Complex phase = std::polar(1.0, -2.0 * t);
  IntertwineDeviation d;
  d.a = max_abs(Eigen::MatrixXcd(bt * uq - phase * ul * bt));
  d.b = max_abs(Eigen::MatrixXcd(uq * b - phase * b * ul));
  d.c = max_abs(Eigen::MatrixXcd(bt * uq * b - phase * ul * bt * b));
  return d;
}

IncidenceIdentityDeviation incidence_identities(const Graph& g) {
  const Eigen::MatrixXd b = incidence(g).matrix;
  const Eigen::MatrixXd q = signless_laplacian(g).matrix;
  const Eigen::MatrixXd al = adjacency(line_graph(g).graph).matrix;
  IncidenceIdentityDeviation d;
  d.gram_vertices = max_abs(Eigen::MatrixXd(b * b.transpose() - 0.5 * q));
  d.gram_edges = max_abs(Eigen::MatrixXd(b.transpose() * b - 0.5 * al -
                                         Eigen::MatrixXd::Identity(b.cols(), b.cols())));
  return d;
}

LineTransferReport pst_transfer_to_line(const Graph& g, int u1, int u2, double t) {
  if (g.degree(u1) != 1) throw GraphError("pst_transfer_to_line: u1 must have degree one");
  LineTransferReport r;
  r.degenerate = g.size() <= 1;
  r.signless = verify_pst(signless_laplacian(g), {u1, u2}, t);
  r.u2_degree_one = g.degree(u2) == 1;
  if (r.degenerate || !r.signless.pst) return r;
  if (!r.u2_degree_one) {
    r.consistent = false;
    return r;
  }
  const LineGraph lg = line_graph(g);
  r.e1 = lg.vertex_of(u1, g.neighbors(u1).front());
  r.e2 = lg.vertex_of(u2, g.neighbors(u2).front());
  r.line = verify_pst(adjacency(lg.graph), {r.e1, r.e2}, t);
  r.consistent = r.line.pst;
  return r;
}

std::vector<PathRefutationRow> path_signless_refutation(int n_min, int n_max, double t_max) {
  std::vector<PathRefutationRow> rows;
  SearchOptions opt;
  opt.t_max = t_max;
  for (int n = n_min; n <= n_max; ++n) {
    const auto c = search_pst(signless_laplacian(path(n)), {0, n - 1}, opt);
    rows.push_back({n, c.magnitude, c.time, c.magnitude < 1.0 - kScanRefuteGap});
  }
  return rows;
}

}  // namespace lapwalk
