#include <doctest.h>

#include <cstdio>
#include <cmath>
#include <sstream>

#include "lapwalk/graph_io.hpp"
#include "lapwalk/time_expr.hpp"

using namespace lapwalk;

TEST_SUITE("io") {
  TEST_CASE("canonical JSON is byte-stable") {
    const std::string text = "{\n  \"n\": 3,\n  \"edges\": [[0,1],[1,2,0.25]],\n  \"loops\": [[1,0.4472135954999579]]\n}\n";
    const Graph g = io::graph_from_json(text);
    CHECK(g.weight(1, 2) == 0.25);
    CHECK(g.loops().at(1) == 0.4472135954999579);
    CHECK(io::to_json(g) == text);
    CHECK(io::to_json(io::graph_from_json(io::to_json(g))) == text);
  }

  TEST_CASE("non-canonical JSON canonicalizes") {
    const Graph g = io::graph_from_json(R"({"edges": [[2,1],[0,1,1.0]], "n": 3})");
    CHECK(io::to_json(g) == "{\n  \"n\": 3,\n  \"edges\": [[0,1],[1,2]],\n  \"loops\": []\n}\n");
  }

  TEST_CASE("weights survive shortest round trip") {
    for (double w : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5, 0.1 + 0.2}) {
      const Graph g(2, {{0, 1, w}});
      CHECK(io::graph_from_json(io::to_json(g)).weight(0, 1) == w);
      CHECK(io::graph_from_edge_list(io::to_edge_list(g)).weight(0, 1) == w);
    }
  }

  TEST_CASE("edge list") {
    const Graph g = io::parse_graph("# triangle with a loop\nn 3\n0 1\n1 2 # comment\n0 2 2\n1 1 0.5\n");
    CHECK(g.order() == 3);
    CHECK(g.size() == 3);
    CHECK(g.weight(0, 2) == 2.0);
    CHECK(g.loops().at(1) == 0.5);
    CHECK(io::to_edge_list(g) == "n 3\n0 1\n0 2 2\n1 2\n1 1 0.5\n");
    CHECK(io::parse_graph(io::to_edge_list(g)) == g);
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(io::parse_graph("{\"n\": 2, \"edges\": [[0,5]]}"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("{\"edges\": []}"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("{\"n\": 2, \"edges\": [[0]]}"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("{\"n\": 2, \"edges\": [[\"a\",1]]}"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("{\"n\": 2, \"loops\": [[0,1],[0,2]]}"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("{not json"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("0 1\n"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("n 2\n0 x\n"), GraphError);
    CHECK_THROWS_AS(io::parse_graph("n 2\n0 0\n"), GraphError);
    CHECK_THROWS_AS(io::parse_graph(""), GraphError);
  }

  TEST_CASE("file round trip") {
    const Graph g = join(empty(2), complete(2));
    const std::string path = "io_roundtrip_test.json";
    io::save_graph(g, path);
    CHECK(io::load_graph(path) == g);
    CHECK(io::read_file(path) == io::to_json(g));
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::load_graph("does/not/exist.json"), GraphError);
  }

  TEST_CASE("cells") {
    const std::vector<std::vector<int>> c{{0}, {1, 2}, {3}};
    CHECK(io::cells_from_json(io::cells_to_json(c)) == c);
    CHECK_THROWS_AS(io::cells_from_json("{\"cell\": []}"), GraphError);
    CHECK_THROWS_AS(io::cells_from_json("{\"cells\": [[0, \"x\"]]}"), GraphError);
  }

  TEST_CASE("csv uses full precision") {
    Eigen::MatrixXd m(1, 2);
    m << 1.0 / 3.0, -0.0;
    std::ostringstream os;
    io::write_csv(os, m);
    CHECK(os.str() == "0.3333333333333333,-0\n");
  }
}

TEST_SUITE("time_expr") {
  TEST_CASE("decimal and symbolic times") {
    constexpr double pi = 3.141592653589793;
    CHECK(parse_time("1.5") == 1.5);
    CHECK(parse_time("1e-3") == 1e-3);
    CHECK(parse_time("pi") == pi);
    CHECK(parse_time("pi/2") == pi / 2);
    CHECK(parse_time("3pi") == 3 * pi);
    CHECK(parse_time("3*pi/2") == 3 * pi / 2);
    CHECK(parse_time(" pi / sqrt(8) ") == doctest::Approx(pi / std::sqrt(8.0)).epsilon(1e-16));
    CHECK(parse_time("(2*3-1)pi") == 5 * pi);
    CHECK(parse_time("-pi+2pi") == pi);
    CHECK(parse_time("2(1+1)") == 4.0);
  }

  TEST_CASE("rejects malformed times") {
    for (const char* bad : {"", "pi/", "2**3", "sqrt(2", "foo", "1/0", "1 2", "sqrt(-1)", "nan", "inf"})
      CHECK_THROWS_AS(parse_time(bad), std::invalid_argument);
  }
}
