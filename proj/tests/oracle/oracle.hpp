#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library's spectral or control code; Eigen is used only as a
// container.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// exp(A) by Taylor series with scaling and squaring.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// exp(-i t M) through expm().
Eigen::MatrixXcd walk_series(const Eigen::MatrixXd& m, double t);

struct EigenPairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns
};

/// Cyclic Jacobi rotations on a symmetric matrix.
EigenPairs jacobi(const Eigen::MatrixXd& m);

/// exp(-i t M) = V diag(e^{-i t lambda}) V^T from jacobi().
Eigen::MatrixXcd walk_jacobi(const Eigen::MatrixXd& m, double t);

/// Rank over Q by Gaussian elimination on exact rationals.
int rational_rank(const std::vector<std::vector<boost::multiprecision::cpp_int>>& rows);

/// Dense brute-force maximum of |U(t)[to, from]| on a uniform grid.
double grid_max(const Eigen::MatrixXd& m, int from, int to, double t_max, int samples);

}  // namespace oracle
