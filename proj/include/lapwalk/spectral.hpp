#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

#include "lapwalk/graph.hpp"
#include "lapwalk/operators.hpp"

namespace lapwalk {

using Complex = std::complex<double>;

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One distinct eigenvalue (after clustering) with its orthogonal projector.
struct Eigenspace {
  double value = 0.0;
  int multiplicity = 0;
  Eigen::MatrixXd basis;      // n x multiplicity, orthonormal columns
  Eigen::MatrixXd projector;  // basis * basis^T
};

struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending, with repetition
  std::vector<Eigenspace> spaces;
  double cluster_tol = 0.0;

  int order() const { return static_cast<int>(eigenvalues.size()); }
  double spectral_range() const {
    return eigenvalues.size() ? eigenvalues(eigenvalues.size() - 1) - eigenvalues(0) : 0.0;
  }
  /// Distinct eigenvalues in ascending order.
  std::vector<double> distinct_values() const;
  Eigen::MatrixXd reconstruct() const;
};

/// Symmetric eigensolve with eigenvalue clustering. Consecutive eigenvalues
/// closer than cluster_tol (default 1e-8 * spectral range) share a projector.
EigenDecomposition eigendecompose(const Hamiltonian& h, std::optional<double> cluster_tol = {});

struct WalkOperator {
  double time = 0.0;
  Eigen::MatrixXcd matrix;
};

/// U(t) = exp(-i t M) = sum_k exp(-i t lambda_k) E_k. t == 0 yields I exactly.
WalkOperator walk(const EigenDecomposition& d, double t);
WalkOperator walk(const Hamiltonian& h, double t);

/// U(t)[to, from].
Complex amplitude(const EigenDecomposition& d, VertexPair pair, double t);

struct Fidelity {
  double magnitude = 0.0;
  double phase = 0.0;
};

Fidelity fidelity(const EigenDecomposition& d, VertexPair pair, double t);
Fidelity fidelity(const Hamiltonian& h, VertexPair pair, double t);

/// Closed-form antipodal amplitude <2| exp(-i t A(P3 + alpha loop)) |0>.
Complex p3_alpha_fidelity(double alpha, double t);
/// |exp(-i t alpha/2) cos(Delta t) + 1| < 1e-9 with Delta = sqrt((alpha/2)^2 + 2).
bool p3_alpha_pst_condition(double alpha, double t);

/// <u| exp(-i t L(G + H)) |v> for u, v in G, from the spectral data of L(G)
/// alone; m = |V(G)|, n = |V(H)|.
Complex join_walk_entry(const EigenDecomposition& laplacian_of_g, int m, int n, VertexPair pair,
                        double t);
/// <u| exp(-i t L(G + H)) |y> for u in G, y in H.
Complex join_cross_entry(int m, int n, double t);

/// max-norm of exp(-itM(G box H)) - exp(-itM(G)) (x) exp(-itM(H)). kind must
/// be Adjacency, StandardLaplacian or SignlessLaplacian.
double cartesian_walk_check(const Graph& g, const Graph& h, OperatorKind kind, double t);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Largest entry magnitude; 0 for an empty matrix.
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? static_cast<double>(m.cwiseAbs().maxCoeff()) : 0.0;
}

}  // namespace lapwalk
