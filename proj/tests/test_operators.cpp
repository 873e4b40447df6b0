#include <doctest.h>

#include <cmath>

#include "lapwalk/graph.hpp"
#include "lapwalk/operators.hpp"
#include "lapwalk/spectral.hpp"
#include "oracle/oracle.hpp"

using namespace lapwalk;
using Eigen::MatrixXd;

namespace {

std::vector<Graph> small_corpus() {
  std::vector<Graph> c{path(4), cycle(5), complete(4), hypercube(3), odd_unicyclic(2).graph,
                       join(empty(2), complete(2))};
  for (std::uint64_t s = 0; s < 20; ++s) c.push_back(random_graph(3 + static_cast<int>(s % 8), 0.45, 500 + s));
  return c;
}

bool is_regular(const Graph& g, int& k) {
  k = g.order() ? g.degree(0) : 0;
  for (int u = 0; u < g.order(); ++u)
    if (g.degree(u) != k) return false;
  return true;
}

}  // namespace

TEST_SUITE("operators") {
  TEST_CASE("definitions on small graphs") {
    MatrixXd l(2, 2);
    l << 1, -1, -1, 1;
    CHECK(standard_laplacian(complete(2)).matrix == l);
    const MatrixXd n3 = MatrixXd::Identity(3, 3) - adjacency(path(3)).matrix / std::sqrt(2.0);
    CHECK(max_abs(normalized_laplacian(path(3)).matrix - n3) < 1e-15);
    const auto e = oracle::jacobi(normalized_laplacian(path(3)).matrix);
    CHECK(std::abs(e.values(0)) < 1e-12);
    CHECK(e.values(1) == doctest::Approx(1.0));
    CHECK(e.values(2) == doctest::Approx(2.0));
    const auto k4 = oracle::jacobi(normalized_laplacian(complete(4)).matrix);
    CHECK(std::abs(k4.values(0)) < 1e-12);
    for (int i = 1; i < 4; ++i) CHECK(k4.values(i) == doctest::Approx(4.0 / 3.0));
  }

  TEST_CASE("loops contribute to adjacency diagonal and degree") {
    const Graph g(2, {{0, 1, 2.0}}, {{1, 0.5}});
    const auto a = adjacency(g).matrix;
    CHECK(a(0, 1) == 2.0);
    CHECK(a(1, 1) == 0.5);
    const auto d = degree_vector(g);
    CHECK(d(0) == 2.0);
    CHECK(d(1) == 2.5);
    CHECK(max_abs(standard_laplacian(g).matrix - (degree_matrix(g) - a)) == 0.0);
    CHECK(max_abs(signless_laplacian(g).matrix - (degree_matrix(g) + a)) == 0.0);
    CHECK_THROWS_AS(normalized_laplacian(g), GraphError);
  }

  TEST_CASE("normalized Laplacian rejects isolated vertices") {
    CHECK_THROWS_AS(normalized_laplacian(empty(2)), GraphError);
    CHECK_THROWS_AS(normalized_laplacian(disjoint_union(complete(2), empty(1))), GraphError);
    CHECK_NOTHROW(standard_laplacian(empty(2)));
    CHECK_NOTHROW(signless_laplacian(empty(2)));
  }

  TEST_CASE("kind names") {
    CHECK(parse_kind("laplacian") == OperatorKind::StandardLaplacian);
    CHECK(parse_kind("standard") == OperatorKind::StandardLaplacian);
    CHECK(parse_kind("signless") == OperatorKind::SignlessLaplacian);
    CHECK(parse_kind("normalized") == OperatorKind::NormalizedLaplacian);
    CHECK(parse_kind("adjacency") == OperatorKind::Adjacency);
    for (auto k : {OperatorKind::Adjacency, OperatorKind::StandardLaplacian, OperatorKind::SignlessLaplacian,
                   OperatorKind::NormalizedLaplacian})
      CHECK(parse_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_kind("hamming"), std::invalid_argument);
    CHECK_THROWS_AS(build_operator(path(3), OperatorKind::Custom), std::invalid_argument);
  }

  TEST_CASE("custom Hamiltonians must be symmetric") {
    MatrixXd m(2, 2);
    m << 0, 1, 2, 0;
    CHECK_THROWS_AS(custom_hamiltonian(m), std::invalid_argument);
    CHECK_THROWS_AS(custom_hamiltonian(MatrixXd::Zero(2, 3)), std::invalid_argument);
  }

  TEST_CASE("weighted P3") {
    CHECK(weighted_p3(0.0).matrix == adjacency(path(3)).matrix);
    const auto e = oracle::jacobi(weighted_p3(2.0).matrix);
    CHECK(e.values(0) == doctest::Approx(1.0 - std::sqrt(3.0)));
    CHECK(std::abs(e.values(1)) < 1e-12);
    CHECK(e.values(2) == doctest::Approx(1.0 + std::sqrt(3.0)));
    for (double alpha : {-3.0, -0.5, 0.7, 4.0}) {
      const double h = alpha / 2, delta = std::sqrt(h * h + 2);
      const auto f = oracle::jacobi(weighted_p3(alpha).matrix);
      CHECK(f.values(0) == doctest::Approx(h - delta));
      CHECK(f.values(2) == doctest::Approx(h + delta));
    }
  }

  TEST_CASE("incidence") {
    const auto k2 = incidence(complete(2));
    CHECK(k2.matrix.rows() == 2);
    CHECK(k2.matrix.cols() == 1);
    CHECK(k2.matrix(0, 0) == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(k2.matrix(1, 0) == doctest::Approx(1 / std::sqrt(2.0)));
    const Graph u2 = odd_unicyclic(2).graph;
    const auto b = incidence(u2).matrix;
    CHECK(max_abs(b * b.transpose() - signless_laplacian(u2).matrix / 2) < 1e-12);
    const Graph p5 = path(5);
    const auto bp = incidence(p5).matrix;
    const MatrixXd rhs = adjacency(line_graph(p5).graph).matrix / 2 + MatrixXd::Identity(4, 4);
    CHECK(max_abs(bp.transpose() * bp - rhs) < 1e-12);
  }

  TEST_CASE("incidence identities over a random corpus") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = random_graph(3 + static_cast<int>(s % 8), 0.5, 900 + s);
      if (g.size() == 0) continue;
      const auto b = incidence(g);
      const auto lg = line_graph(g);
      CHECK(b.edge_of == lg.edge_of);
      const MatrixXd ll = adjacency(lg.graph).matrix / 2 + MatrixXd::Identity(lg.graph.order(), lg.graph.order());
      CHECK(max_abs(b.matrix * b.matrix.transpose() - signless_laplacian(g).matrix / 2) < 1e-12);
      CHECK(max_abs(b.matrix.transpose() * b.matrix - ll) < 1e-12);
    }
  }

  TEST_CASE("bipartite signing") {
    const auto d4 = bipartite_signing(path(4));
    REQUIRE(d4.has_value());
    CHECK(*d4 == Eigen::Vector4d(1, -1, 1, -1));
    const MatrixXd dm = d4->asDiagonal();
    const auto a = adjacency(path(4)).matrix;
    CHECK(max_abs(dm * a * dm.inverse() + a) == 0.0);
    CHECK_FALSE(bipartite_signing(cycle(3)).has_value());
    const auto d8 = bipartite_signing(hypercube(3));
    REQUIRE(d8.has_value());
    const MatrixXd dq = d8->asDiagonal();
    CHECK(max_abs(signless_laplacian(hypercube(3)).matrix -
                  dq * standard_laplacian(hypercube(3)).matrix * dq.inverse()) == 0.0);
  }

  TEST_CASE("operator invariants over a corpus") {
    for (const Graph& g : small_corpus()) {
      const auto l = standard_laplacian(g).matrix;
      CHECK(max_abs(l * Eigen::VectorXd::Ones(g.order())) < 1e-12);
      CHECK(oracle::jacobi(signless_laplacian(g).matrix).values(0) > -1e-10);
      CHECK(oracle::jacobi(l).values(0) > -1e-10);
      bool isolated = false;
      for (int u = 0; u < g.order(); ++u) isolated = isolated || g.degree(u) == 0;
      if (!isolated) CHECK(oracle::jacobi(normalized_laplacian(g).matrix).values(0) > -1e-10);
      int k = 0;
      if (is_regular(g, k) && k > 0) {
        const MatrixXd id = MatrixXd::Identity(g.order(), g.order());
        const auto a = adjacency(g).matrix;
        CHECK(max_abs(l - (k * id - a)) == 0.0);
        CHECK(max_abs(signless_laplacian(g).matrix - (k * id + a)) == 0.0);
        CHECK(max_abs(normalized_laplacian(g).matrix - (id - a / k)) < 1e-15);
      }
      if (g.is_connected() && bipartite_signing(g)) {
        const auto el = oracle::jacobi(l).values, eq = oracle::jacobi(signless_laplacian(g).matrix).values;
        CHECK((el - eq).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}
