#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "lapwalk/graph.hpp"

namespace lapwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = std::vector<std::vector<BigInt>>;

/// [e_S | A e_S | ... | A^{n-1} e_S] in exact integer arithmetic, stored
/// row-major.
struct WalkMatrix {
  std::vector<int> subset;
  BigMatrix entries;

  int order() const { return static_cast<int>(entries.size()); }
};

WalkMatrix walk_matrix(const Graph& g, const std::vector<int>& subset);

/// Rank over Q by fraction-free (Bareiss) elimination. Exact.
int exact_rank(BigMatrix m);
inline int exact_rank(const WalkMatrix& w) { return exact_rank(w.entries); }

bool is_controllable(const Graph& g, const std::vector<int>& subset);
bool controllable_vertex(const Graph& g, int u);

/// Number of distinct adjacency eigenvalues whose projector does not kill
/// e_u (threshold 1e-8). Equals the rank of the walk matrix of {u}.
int eigen_support(const Graph& g, int u, double tol = 1e-8);

struct ChaseReport {
  int m = 0;
  /// Some adjacency eigenvector of cone_p4_with_pendant(m) vanishes at vertex 1.
  bool vanishing_eigenvector = false;
  bool expected = false;
  /// Smallest |E_k e_1| over simple eigenvalues.
  double min_overlap = 0.0;
  bool repeated_eigenvalue = false;
};

ChaseReport eigenvector_chase_check(int m);

enum class UnicyclicVerdict { NoPst, Inconclusive };

struct UnicyclicReport {
  int arm1 = 0;
  int arm2 = 0;
  Graph line;
  /// Line-graph vertices of the two pendant edges at the marked endpoints.
  int end_a = -1;
  int end_b = -1;
  int rank_a = 0;
  int rank_b = 0;
  bool controllable_a = false;
  bool controllable_b = false;
  double scan_magnitude = 0.0;
  double scan_time = 0.0;
  /// scan_magnitude < 1 - 1e-6
  bool scan_below = false;
  UnicyclicVerdict verdict = UnicyclicVerdict::Inconclusive;
};

/// Controllability route to "no antipodal signless PST" on the odd
/// unicyclic graph with arms of arm1, arm2 edges, plus a numeric scan of the
/// signless endpoint fidelity over [0, t_max].
UnicyclicReport unicyclic_pipeline(int arm1, int arm2, double t_max);
inline UnicyclicReport unicyclic_no_pst_pipeline(int m, double t_max) {
  return unicyclic_pipeline(m, m, t_max);
}

}  // namespace lapwalk
