#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lapwalk/control.hpp"
#include "lapwalk/graph.hpp"
#include "oracle/oracle.hpp"

using namespace lapwalk;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return Graph(g.order(), std::move(e));
}

}  // namespace

TEST_SUITE("control") {
  TEST_CASE("walk matrix") {
    const auto w = walk_matrix(complete(2), {0});
    CHECK(w.entries == BigMatrix{{1, 0}, {0, 1}});
    CHECK(exact_rank(w) == 2);
    const auto c = walk_matrix(cone_p4_with_pendant(0).graph, {1});
    CHECK(c.entries.size() == 5);
    CHECK(exact_rank(c) == 5);
    // Column k is A^k e: on P3 from the end, (1,0,0), (0,1,0), (1,0,1).
    const auto p = walk_matrix(path(3), {0});
    CHECK(p.entries == BigMatrix{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    CHECK_THROWS_AS(walk_matrix(path(3), {3}), GraphError);
    CHECK_THROWS_AS(walk_matrix(Graph(2, {{0, 1, 2.0}}), {0}), GraphError);
  }

  TEST_CASE("exact rank") {
    CHECK(exact_rank(walk_matrix(cone_p4_with_pendant(2).graph, {1})) < 7);
    CHECK(exact_rank(walk_matrix(cone_p4_with_pendant(3).graph, {1})) == 8);
    CHECK(controllable_vertex(complete(2), 0));
    CHECK_FALSE(controllable_vertex(complete(3), 0));
    CHECK(oracle::rational_rank(walk_matrix(complete(3), {0}).entries) == exact_rank(walk_matrix(complete(3), {0})));
    CHECK(exact_rank(BigMatrix{}) == 0);
    CHECK(exact_rank(BigMatrix{{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank(BigMatrix{{0, 2}, {0, 4}}) == 1);
  }

  TEST_CASE("Bareiss agrees with rational elimination") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> val(-3, 3), dim(1, 7);
    for (int i = 0; i < 200; ++i) {
      const int r = dim(rng), c = dim(rng);
      BigMatrix m(r, std::vector<BigInt>(c));
      for (auto& row : m)
        for (auto& x : row) x = val(rng) * (i % 3 == 0 ? 0 : 1) + (i % 3 == 0 ? val(rng) % 2 : 0);
      if (i % 5 == 0 && r > 1) m[r - 1] = m[0];  // force dependence
      CHECK(exact_rank(m) == oracle::rational_rank(m));
    }
    for (int m = 0; m <= 11; ++m) {
      const auto w = walk_matrix(cone_p4_with_pendant(m).graph, {1});
      CHECK(exact_rank(w) == oracle::rational_rank(w.entries));
    }
  }

  TEST_CASE("mod-3 law for the cone with a pendant path") {
    for (int m = 0; m <= 11; ++m) {
      const auto g = cone_p4_with_pendant(m);
      CHECK(controllable_vertex(g.graph, g.first) == (m % 3 != 2));
      const auto chase = eigenvector_chase_check(m);
      CHECK(chase.expected == (m % 3 == 2));
      CHECK(chase.vanishing_eigenvector == chase.expected);
    }
    CHECK(eigenvector_chase_check(2).vanishing_eigenvector);
    CHECK_FALSE(eigenvector_chase_check(3).vanishing_eigenvector);
    CHECK(eigenvector_chase_check(5).vanishing_eigenvector);
  }

  TEST_CASE("rank equals the number of eigenspaces seen by the vertex") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Graph g = random_graph(3 + static_cast<int>(s % 8), 0.45, 6000 + s);
      for (int u = 0; u < g.order(); u += 2) CHECK(exact_rank(walk_matrix(g, {u})) == eigen_support(g, u));
    }
    for (int m = 0; m <= 11; ++m) {
      const auto g = cone_p4_with_pendant(m);
      CHECK(exact_rank(walk_matrix(g.graph, {g.first})) == eigen_support(g.graph, g.first));
    }
  }

  TEST_CASE("rank invariances") {
    std::mt19937_64 rng(5);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const Graph g = random_graph(7, 0.4, 8000 + s);
      const auto w = walk_matrix(g, {0});
      const int r = exact_rank(w);
      BigMatrix scaled = w.entries;
      for (std::size_t c = 0; c < scaled[0].size(); ++c)
        for (auto& row : scaled) row[c] *= static_cast<int>(c % 3) + 2;
      CHECK(exact_rank(scaled) == r);
      std::vector<int> perm(7);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(exact_rank(walk_matrix(relabel(g, perm), {perm[0]})) == r);
    }
  }

  TEST_CASE("subsets") {
    CHECK(is_controllable(path(3), {0}));
    CHECK_FALSE(is_controllable(complete(3), {0, 1}));
    CHECK_FALSE(is_controllable(complete(3), {0, 1, 2}));
  }

  TEST_CASE("odd unicyclic pipeline") {
    for (int m : {1, 2}) {
      const auto r = unicyclic_no_pst_pipeline(m, 200.0);
      CHECK(r.line.order() == 2 * m + 3);
      CHECK(r.controllable_a);
      CHECK(r.controllable_b);
      CHECK(r.scan_below);
      CHECK(r.verdict == UnicyclicVerdict::NoPst);
    }
    const auto three = unicyclic_no_pst_pipeline(3, 200.0);
    CHECK(three.verdict == UnicyclicVerdict::Inconclusive);
    // The line graph of U_2 is the cone on P4 with one pendant edge at each end.
    const auto two = unicyclic_no_pst_pipeline(2, 10.0);
    CHECK(two.line.degree(two.end_a) == 1);
    CHECK(two.line.degree(two.end_b) == 1);
    const auto uneven = unicyclic_pipeline(1, 3, 50.0);
    CHECK(uneven.line.order() == 7);
  }
}
