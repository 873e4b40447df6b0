#include "lapwalk/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lapwalk/spectral.hpp"

namespace lapwalk {

void validate_cells(const Graph& g, const Cells& cells) {
  std::vector<int> seen(g.order(), 0);
  for (const auto& c : cells) {
    if (c.empty()) throw PartitionError("partition has an empty cell");
    for (int u : c) {
      if (u < 0 || u >= g.order()) throw PartitionError("partition vertex " + std::to_string(u) + " out of range");
      if (seen[u]++) throw PartitionError("vertex " + std::to_string(u) + " appears in two cells");
    }
  }
  for (int u = 0; u < g.order(); ++u)
    if (!seen[u]) throw PartitionError("vertex " + std::to_string(u) + " is not covered");
}

namespace {

PartitionCheck check_counts(const Graph& g, const Cells& cells, bool require_diagonal) {
  if (!g.is_simple()) throw PartitionError("partitions need an unweighted, loop-free graph");
  validate_cells(g, cells);
  const int m = static_cast<int>(cells.size());
  Partition p;
  p.cells = cells;
  p.cell_of.assign(g.order(), -1);
  for (int k = 0; k < m; ++k)
    for (int u : cells[k]) p.cell_of[u] = k;
  p.counts.assign(m, std::vector<int>(m, 0));
  p.equitable = true;

  std::vector<int> into(m);
  for (int j = 0; j < m; ++j) {
    bool first = true;
    for (int u : cells[j]) {
      std::fill(into.begin(), into.end(), 0);
      for (int w : g.neighbors(u)) ++into[p.cell_of[w]];
      if (first) {
        p.counts[j] = into;
        first = false;
        continue;
      }
      for (int k = 0; k < m; ++k) {
        if (into[k] == p.counts[j][k] || p.counts[j][k] < 0) continue;
        if (k == j && !require_diagonal) {
          p.counts[j][k] = -1;
          p.equitable = false;
          continue;
        }
        return PartitionViolation{u, j, k,
                                  "vertex " + std::to_string(u) + " in cell " + std::to_string(j) + " has " +
                                      std::to_string(into[k]) + " neighbours in cell " + std::to_string(k) +
                                      ", expected " + std::to_string(p.counts[j][k])};
      }
    }
  }
  return p;
}

}  // namespace

PartitionCheck check_equitable(const Graph& g, const Cells& cells) { return check_counts(g, cells, true); }

PartitionCheck check_almost_equitable(const Graph& g, const Cells& cells) {
  return check_counts(g, cells, false);
}

Partition coarsest_equitable_refinement(const Graph& g, const Cells& initial) {
  validate_cells(g, initial);
  Cells cells = initial;
  for (auto& c : cells) std::sort(c.begin(), c.end());
  while (true) {
    std::vector<int> cell_of(g.order());
    for (std::size_t k = 0; k < cells.size(); ++k)
      for (int u : cells[k]) cell_of[u] = static_cast<int>(k);
    Cells next;
    for (const auto& c : cells) {
      std::map<std::vector<int>, std::vector<int>> split;
      for (int u : c) {
        std::vector<int> sig(cells.size(), 0);
        for (int w : g.neighbors(u)) ++sig[cell_of[w]];
        split[sig].push_back(u);
      }
      for (auto& [sig, members] : split) next.push_back(std::move(members));
    }
    if (next.size() == cells.size()) break;
    cells = std::move(next);
  }
  auto check = check_equitable(g, cells);
  return std::get<Partition>(check);
}

Eigen::MatrixXd partition_matrix(const Partition& p, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, p.size());
  for (int k = 0; k < p.size(); ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(p.cells[k].size()));
    for (int u : p.cells[k]) m(u, k) = s;
  }
  return m;
}

QuotientMatrix quotient(const Graph& g, const Partition& p, OperatorKind kind) {
  const int m = p.size();
  QuotientMatrix q;
  q.kind = kind;
  q.matrix = Eigen::MatrixXd::Zero(m, m);
  switch (kind) {
    case OperatorKind::Adjacency:
    case OperatorKind::SignlessLaplacian:
      if (!p.equitable) throw PartitionError("quotient: adjacency/signless quotients need an equitable partition");
      break;
    case OperatorKind::StandardLaplacian:
      break;
    default:
      throw PartitionError("quotient: only adjacency, laplacian and signless quotients are defined");
  }
  for (int j = 0; j < m; ++j) {
    int off = 0;
    for (int k = 0; k < m; ++k) {
      if (k == j) continue;
      off += p.count(j, k);
      const double b = std::sqrt(static_cast<double>(p.count(j, k)) * p.count(k, j));
      q.matrix(j, k) = kind == OperatorKind::StandardLaplacian ? -b : b;
    }
    switch (kind) {
      case OperatorKind::Adjacency: q.matrix(j, j) = p.count(j, j); break;
      case OperatorKind::StandardLaplacian: q.matrix(j, j) = off; break;
      case OperatorKind::SignlessLaplacian: q.matrix(j, j) = 2.0 * p.count(j, j) + off; break;
      default: break;
    }
  }
  const Eigen::MatrixXd pm = partition_matrix(p, g.order());
  const Eigen::MatrixXd op = build_operator(g, kind).matrix;
  q.intertwining_deviation = max_abs(Eigen::MatrixXd(op * pm - pm * q.matrix));
  if (q.intertwining_deviation > 1e-10) {
    throw PartitionError("quotient: intertwining M P = P B fails (deviation " +
                         std::to_string(q.intertwining_deviation) + ")");
  }
  return q;
}

double lift_check(const Graph& g, const Partition& p, OperatorKind kind, int u, int v, double t) {
  if (p.cells.at(p.cell_of.at(u)).size() != 1 || p.cells.at(p.cell_of.at(v)).size() != 1) {
    throw PartitionError("lift_check: endpoints must be singleton cells");
  }
  const QuotientMatrix q = quotient(g, p, kind);
  const Complex big = amplitude(eigendecompose(build_operator(g, kind)), {u, v}, t);
  const Complex small =
      amplitude(eigendecompose(Hamiltonian{OperatorKind::Custom, q.matrix}), {p.cell_of[u], p.cell_of[v]}, t);
  return std::abs(big - small);
}

Cells cycle_fold_cells(int m) {
  Cells cells{{0}};
  for (int k = 1; k < m; ++k) cells.push_back({k, 2 * m - k});
  cells.push_back({m});
  return cells;
}

PathCycleReport path_cycle_correspondence(int n, const std::vector<double>& times) {
  if (n < 2) throw GraphError("path_cycle_correspondence needs n >= 2");
  PathCycleReport r;
  r.n = n;
  const int m = n - 1;
  const Hamiltonian norm = normalized_laplacian(path(n));
  Eigen::MatrixXd fold;
  Hamiltonian cycle_adj;
  double dilation = 0.5;
  if (n == 2) {
    // C2 is not simple; its multigraph adjacency is 2 A(K2).
    r.degenerate = true;
    fold = 2.0 * adjacency(complete(2)).matrix;
    cycle_adj = adjacency(complete(2));
    dilation = 1.0;
  } else {
    const Graph c = cycle(2 * m);
    const auto p = std::get<Partition>(check_equitable(c, cycle_fold_cells(m)));
    fold = quotient(c, p, OperatorKind::Adjacency).matrix;
    cycle_adj = adjacency(c);
  }
  const Eigen::MatrixXd expect = Eigen::MatrixXd::Identity(n, n) - 0.5 * fold;
  r.matrix_deviation = max_abs(Eigen::MatrixXd(norm.matrix - expect));

  const auto dn = eigendecompose(norm);
  const auto dc = eigendecompose(cycle_adj);
  for (double t : times) {
    const double lhs = fidelity(dn, {0, n - 1}, t).magnitude;
    const double rhs = fidelity(dc, {0, m}, -dilation * t).magnitude;
    r.walk_deviation = std::max(r.walk_deviation, std::abs(lhs - rhs));
  }
  return r;
}

}  // namespace lapwalk
