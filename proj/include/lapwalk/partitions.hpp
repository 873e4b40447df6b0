#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>
#include <vector>

#include "lapwalk/graph.hpp"
#include "lapwalk/operators.hpp"

namespace lapwalk {

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Cells = std::vector<std::vector<int>>;

/// A vertex partition whose neighbour counts d(j, k) = |N(u) cap V_k|, u in
/// V_j, are constant. For an almost-equitable partition the diagonal counts
/// may vary; such entries are stored as -1.
struct Partition {
  Cells cells;
  std::vector<int> cell_of;
  std::vector<std::vector<int>> counts;
  bool equitable = false;

  int size() const { return static_cast<int>(cells.size()); }
  int count(int j, int k) const { return counts[j][k]; }
};

/// First vertex found whose count into target_cell differs from the rest of
/// its cell.
struct PartitionViolation {
  int vertex = -1;
  int cell = -1;
  int target_cell = -1;
  std::string message;
};

using PartitionCheck = std::variant<Partition, PartitionViolation>;

/// Throws PartitionError if cells are not a partition of 0..n-1.
void validate_cells(const Graph& g, const Cells& cells);

PartitionCheck check_equitable(const Graph& g, const Cells& cells);
PartitionCheck check_almost_equitable(const Graph& g, const Cells& cells);

/// Coarsest equitable partition refining `initial`, by repeated splitting on
/// neighbour-count signatures. Split cells keep the parent's position and are
/// ordered lexicographically by signature.
Partition coarsest_equitable_refinement(const Graph& g, const Cells& initial);

/// n x m matrix with entry 1/sqrt|V_k| at (u, k) for u in V_k.
Eigen::MatrixXd partition_matrix(const Partition& p, int n);

struct QuotientMatrix {
  OperatorKind kind = OperatorKind::Adjacency;
  Eigen::MatrixXd matrix;
  /// max |M P - P B|, checked on construction.
  double intertwining_deviation = 0.0;
};

/// Quotient operator from the counts. Adjacency and signless need an
/// equitable partition, the standard Laplacian an almost-equitable one.
QuotientMatrix quotient(const Graph& g, const Partition& p, OperatorKind kind);

/// |U_G(t)[v,u] - U_{G/p}(t)[p(v),p(u)]| for u, v in singleton cells.
double lift_check(const Graph& g, const Partition& p, OperatorKind kind, int u, int v, double t);

struct PathCycleReport {
  int n = 0;
  bool degenerate = false;
  /// max |N(P_n) - (I - B/2)| with B the quotient of C_{2(n-1)}.
  double matrix_deviation = 0.0;
  /// max over times of | |exp(-it N(P_n))[0,n-1]| - |exp(i(t/2) A(C))[0,n-1]| |.
  double walk_deviation = 0.0;
};

/// Normalized-Laplacian path versus adjacency even cycle. n = 2 is handled
/// as K2 on both sides.
PathCycleReport path_cycle_correspondence(int n, const std::vector<double>& times);

/// The cycle partition {0}, {k, 2m-k}, {m} on C_{2m}.
Cells cycle_fold_cells(int m);

}  // namespace lapwalk
