#pragma once

#include <vector>

#include "lapwalk/graph.hpp"
#include "lapwalk/pst.hpp"

namespace lapwalk {

/// Max-norm residuals of the three signless/line-graph intertwinings:
///   a) B^T exp(-itQ) = e^{-2it} exp(-itA(l)) B^T
///   b) exp(-itQ) B = e^{-2it} B exp(-itA(l))
///   c) B^T exp(-itQ) B = e^{-2it} exp(-itA(l)) B^T B
struct IntertwineDeviation {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double max() const { return std::max(a, std::max(b, c)); }
};

IntertwineDeviation intertwine_check(const Graph& g, double t);

/// Residuals of B B^T = Q/2 and B^T B = A(l)/2 + I.
struct IncidenceIdentityDeviation {
  double gram_vertices = 0.0;
  double gram_edges = 0.0;
};

IncidenceIdentityDeviation incidence_identities(const Graph& g);

struct LineTransferReport {
  /// Single-edge graphs: the line graph is K1, nothing to transfer.
  bool degenerate = false;
  PstCertificate signless;
  bool u2_degree_one = false;
  int e1 = -1;
  int e2 = -1;
  /// Only meaningful when signless.pst and u2_degree_one.
  PstCertificate line;
  /// Theorem consequence holds (or is vacuous).
  bool consistent = true;
};

/// If Q(g) has PST u1 -> u2 at t (deg u1 = 1), u2 must be a leaf and A(l(g))
/// must have PST between the two pendant edges at the same t.
LineTransferReport pst_transfer_to_line(const Graph& g, int u1, int u2, double t);

struct PathRefutationRow {
  int n = 0;
  double best_magnitude = 0.0;
  double best_time = 0.0;
  bool refuted = false;
};

/// Endpoint scans of Q(P_n) over [0, t_max] for n >= 5.
std::vector<PathRefutationRow> path_signless_refutation(int n_min, int n_max, double t_max);

}  // namespace lapwalk
