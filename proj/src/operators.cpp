#include "lapwalk/operators.hpp"

#include <cmath>
#include <queue>

namespace lapwalk {

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Adjacency: return "adjacency";
    case OperatorKind::StandardLaplacian: return "laplacian";
    case OperatorKind::SignlessLaplacian: return "signless";
    case OperatorKind::NormalizedLaplacian: return "normalized";
    case OperatorKind::Custom: return "custom";
  }
  return "custom";
}

OperatorKind parse_kind(std::string_view name) {
  if (name == "adjacency" || name == "A") return OperatorKind::Adjacency;
  if (name == "laplacian" || name == "standard" || name == "L") return OperatorKind::StandardLaplacian;
  if (name == "signless" || name == "Q") return OperatorKind::SignlessLaplacian;
  if (name == "normalized" || name == "N") return OperatorKind::NormalizedLaplacian;
  if (name == "custom") return OperatorKind::Custom;
  throw std::invalid_argument("unknown operator kind: " + std::string(name));
}

Hamiltonian adjacency(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  for (const auto& [v, w] : g.loops()) a(v, v) = w;
  return {OperatorKind::Adjacency, std::move(a)};
}

Eigen::VectorXd degree_vector(const Graph& g) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(g.order());
  for (const auto& e : g.edges()) {
    d(e.u) += e.weight;
    d(e.v) += e.weight;
  }
  for (const auto& [v, w] : g.loops()) d(v) += w;
  return d;
}

Eigen::MatrixXd degree_matrix(const Graph& g) { return degree_vector(g).asDiagonal(); }

Hamiltonian standard_laplacian(const Graph& g) {
  Eigen::MatrixXd m = degree_matrix(g) - adjacency(g).matrix;
  return {OperatorKind::StandardLaplacian, std::move(m)};
}

Hamiltonian signless_laplacian(const Graph& g) {
  Eigen::MatrixXd m = degree_matrix(g) + adjacency(g).matrix;
  return {OperatorKind::SignlessLaplacian, std::move(m)};
}

Hamiltonian normalized_laplacian(const Graph& g) {
  if (!g.is_simple()) throw GraphError("normalized Laplacian is only defined here for unweighted, loop-free graphs");
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) == 0) {
      throw GraphError("normalized Laplacian undefined: vertex " + std::to_string(u) + " is isolated");
    }
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const auto& e : g.edges()) {
    const double x = -1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * g.degree(e.v));
    m(e.u, e.v) = x;
    m(e.v, e.u) = x;
  }
  return {OperatorKind::NormalizedLaplacian, std::move(m)};
}

Hamiltonian build_operator(const Graph& g, OperatorKind kind) {
  switch (kind) {
    case OperatorKind::Adjacency: return adjacency(g);
    case OperatorKind::StandardLaplacian: return standard_laplacian(g);
    case OperatorKind::SignlessLaplacian: return signless_laplacian(g);
    case OperatorKind::NormalizedLaplacian: return normalized_laplacian(g);
    case OperatorKind::Custom: break;
  }
  throw std::invalid_argument("build_operator: Custom has no graph construction");
}

Hamiltonian custom_hamiltonian(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Hamiltonian must be square");
  if (m != m.transpose()) throw std::invalid_argument("Hamiltonian must be symmetric");
  return {OperatorKind::Custom, std::move(m)};
}

Hamiltonian weighted_p3(double alpha) {
  Eigen::MatrixXd m(3, 3);
  m << 0, 1, 0,
       1, alpha, 1,
       0, 1, 0;
  return {OperatorKind::Custom, std::move(m)};
}

IncidenceMatrix incidence(const Graph& g) {
  if (!g.is_simple()) throw GraphError("incidence: graph must be unweighted and loop-free");
  IncidenceMatrix b;
  b.edge_of = g.edges();
  b.matrix = Eigen::MatrixXd::Zero(g.order(), static_cast<Eigen::Index>(g.size()));
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < b.edge_of.size(); ++k) {
    b.matrix(b.edge_of[k].u, static_cast<Eigen::Index>(k)) = s;
    b.matrix(b.edge_of[k].v, static_cast<Eigen::Index>(k)) = s;
  }
  return b;
}

std::optional<Eigen::VectorXd> bipartite_signing(const Graph& g) {
  const int n = g.order();
  Eigen::VectorXd sign = Eigen::VectorXd::Zero(n);
  for (int root = 0; root < n; ++root) {
    if (sign(root) != 0) continue;
    sign(root) = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (sign(w) == 0) {
          sign(w) = -sign(u);
          q.push(w);
        } else if (sign(w) == sign(u)) {
          return std::nullopt;
        }
      }
    }
  }
  return sign;
}

}  // namespace lapwalk
