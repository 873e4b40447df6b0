#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lapwalk/graph.hpp"

namespace lapwalk {

enum class OperatorKind { Adjacency, StandardLaplacian, SignlessLaplacian, NormalizedLaplacian, Custom };

std::string_view to_string(OperatorKind kind);
/// Accepts "adjacency", "laplacian"/"standard", "signless", "normalized", "custom".
OperatorKind parse_kind(std::string_view name);

/// A real symmetric matrix tagged with the operator it came from.
struct Hamiltonian {
  OperatorKind kind = OperatorKind::Custom;
  Eigen::MatrixXd matrix;

  int order() const { return static_cast<int>(matrix.rows()); }
};

/// Loop weights land on the diagonal.
Hamiltonian adjacency(const Graph& g);
/// Weighted degree; a loop of weight w contributes w.
Eigen::VectorXd degree_vector(const Graph& g);
Eigen::MatrixXd degree_matrix(const Graph& g);
Hamiltonian standard_laplacian(const Graph& g);
Hamiltonian signless_laplacian(const Graph& g);
/// I - D^{-1/2} A D^{-1/2}. Throws GraphError on isolated vertices or
/// weighted input.
Hamiltonian normalized_laplacian(const Graph& g);
Hamiltonian build_operator(const Graph& g, OperatorKind kind);

/// Wraps an arbitrary matrix; throws unless it is square and exactly symmetric.
Hamiltonian custom_hamiltonian(Eigen::MatrixXd m);

/// P3 with a loop of weight alpha on the middle vertex.
Hamiltonian weighted_p3(double alpha);

/// Normalized incidence matrix: B(u, e) = [u in e] / sqrt(2), columns in
/// the canonical edge order.
struct IncidenceMatrix {
  Eigen::MatrixXd matrix;
  std::vector<Edge> edge_of;
};

IncidenceMatrix incidence(const Graph& g);

/// Diagonal of a +-1 matrix S with S A S^{-1} = -A, or nullopt when g has an
/// odd cycle. Components are coloured independently from their lowest vertex.
std::optional<Eigen::VectorXd> bipartite_signing(const Graph& g);

}  // namespace lapwalk
