#include "lapwalk/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace lapwalk {

std::vector<double> EigenDecomposition::distinct_values() const {
  std::vector<double> v;
  v.reserve(spaces.size());
  for (const auto& s : spaces) v.push_back(s.value);
  return v;
}

Eigen::MatrixXd EigenDecomposition::reconstruct() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(order(), order());
  for (const auto& s : spaces) m += s.value * s.projector;
  return m;
}

EigenDecomposition eigendecompose(const Hamiltonian& h, std::optional<double> cluster_tol) {
  const auto& m = h.matrix;
  if (m.rows() != m.cols()) throw SpectralError("eigendecompose: matrix not square");
  EigenDecomposition out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw SpectralError("eigendecompose: eigensolver did not converge");
  out.eigenvalues = solver.eigenvalues();
  const Eigen::MatrixXd& vecs = solver.eigenvectors();
  const Eigen::Index n = m.rows();
  const double range = out.eigenvalues(n - 1) - out.eigenvalues(0);
  out.cluster_tol = cluster_tol.value_or(std::max(1e-8 * range, 1e-14));

  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && out.eigenvalues(end) - out.eigenvalues(end - 1) < out.cluster_tol) ++end;
    Eigenspace s;
    s.multiplicity = static_cast<int>(end - start);
    s.value = out.eigenvalues.segment(start, end - start).mean();
    s.basis = vecs.middleCols(start, end - start);
    s.projector = s.basis * s.basis.transpose();
    out.spaces.push_back(std::move(s));
    start = end;
  }
  return out;
}

WalkOperator walk(const EigenDecomposition& d, double t) {
  const int n = d.order();
  WalkOperator w{t, Eigen::MatrixXcd::Zero(n, n)};
  if (t == 0.0) {
    w.matrix = Eigen::MatrixXcd::Identity(n, n);
    return w;
  }
  for (const auto& s : d.spaces) {
    const Complex phase = std::polar(1.0, -t * s.value);
    w.matrix += phase * s.projector.cast<Complex>();
  }
  return w;
}

WalkOperator walk(const Hamiltonian& h, double t) { return walk(eigendecompose(h), t); }

Complex amplitude(const EigenDecomposition& d, VertexPair pair, double t) {
  if (t == 0.0) return pair.from == pair.to ? 1.0 : 0.0;
  Complex a = 0.0;
  for (const auto& s : d.spaces) a += std::polar(1.0, -t * s.value) * s.projector(pair.to, pair.from);
  return a;
}

Fidelity fidelity(const EigenDecomposition& d, VertexPair pair, double t) {
  if (pair.from < 0 || pair.to < 0 || pair.from >= d.order() || pair.to >= d.order()) {
    throw std::out_of_range("fidelity: vertex out of range");
  }
  const Complex a = amplitude(d, pair, t);
  return {std::abs(a), std::arg(a)};
}

Fidelity fidelity(const Hamiltonian& h, VertexPair pair, double t) {
  return fidelity(eigendecompose(h), pair, t);
}

Complex p3_alpha_fidelity(double alpha, double t) {
  const double half = alpha / 2.0;
  const double delta = std::sqrt(half * half + 2.0);
  const Complex inner(std::cos(delta * t), (half / delta) * std::sin(delta * t));
  return -0.5 + 0.5 * std::polar(1.0, -t * half) * inner;
}

bool p3_alpha_pst_condition(double alpha, double t) {
  const double half = alpha / 2.0;
  const double delta = std::sqrt(half * half + 2.0);
  return std::abs(std::polar(1.0, -t * half) * std::cos(delta * t) + 1.0) < 1e-9;
}

Complex join_walk_entry(const EigenDecomposition& laplacian_of_g, int m, int n, VertexPair pair,
                        double t) {
  const double mn = m + n;
  const Complex inner = amplitude(laplacian_of_g, pair, t);
  const Complex e_total = std::polar(1.0, -t * mn);
  const Complex e_n = std::polar(1.0, -t * n);
  return e_n * inner + (e_total - e_n) / static_cast<double>(m) + (1.0 - e_total) / mn;
}

Complex join_cross_entry(int m, int n, double t) {
  const double mn = m + n;
  return (1.0 - std::polar(1.0, -t * mn)) / mn;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}


double cartesian_walk_check(const Graph& g, const Graph& h, OperatorKind kind, double t) {
  if (kind != OperatorKind::Adjacency && kind != OperatorKind::StandardLaplacian &&
      kind != OperatorKind::SignlessLaplacian) {
    throw std::invalid_argument("cartesian_walk_check: kind must be adjacency, laplacian or signless");
  }
  const auto direct = walk(build_operator(cartesian_product(g, h), kind), t).matrix;
  const auto ug = walk(build_operator(g, kind), t).matrix;
  const auto uh = walk(build_operator(h, kind), t).matrix;
  return max_abs(Eigen::MatrixXcd(direct - kron(ug, uh)));
}

}  // namespace lapwalk
