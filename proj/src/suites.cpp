#include "lapwalk/suites.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lapwalk/control.hpp"
#include "lapwalk/graph_io.hpp"
#include "lapwalk/linegraph_link.hpp"
#include "lapwalk/operators.hpp"
#include "lapwalk/partitions.hpp"
#include "lapwalk/pst.hpp"
#include "lapwalk/spectral.hpp"

namespace lapwalk {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double x) { return io::format_real(x); }
std::string yes(bool b) { return b ? "yes" : "no"; }

void add(SuiteReport& r, std::vector<std::string> row, bool ok) {
  row.push_back(ok ? "PASS" : "FAIL");
  r.rows.push_back(std::move(row));
  r.passed = r.passed && ok;
}

SuiteReport complement_closure(const SuiteOptions& opt) {
  SuiteReport r{"complement-closure", {"graph", "n", "t", "condition", "deviation", "status"}, {}, {}, true};
  for (const auto& [name, g] : make_corpus(opt.corpus_size, opt.seed)) {
    const int n = g.order();
    std::vector<double> times{2 * kPi / n};
    if (n > 4) times.push_back(4 * kPi / n);
    if (n % 2 == 0) times.push_back(kPi);
    for (double t : times) {
      const auto c = complement_closure_check(g, t);
      add(r, {name, std::to_string(n), num(t), yes(c.condition), num(c.identity_deviation)},
          c.condition && c.identity_deviation < opt.tol);
    }
  }
  // PST carried across complementation: K2 u co-K_n has PST at pi/2 iff n = 2 mod 4.
  for (int n = 2; n <= opt.n_max; n += 4) {
    const Graph g = disjoint_union(complete(2), empty(n));
    const auto c = complement_closure_check(g, kPi / 2);
    const auto before = verify_pst(standard_laplacian(g), {0, 1}, kPi / 2);
    const auto after = verify_pst(standard_laplacian(complement(g)), {0, 1}, kPi / 2);
    r.notes.push_back("K2+coK" + std::to_string(n) + ": |U[0,1]| at pi/2 is " + num(before.magnitude) +
                      ", after complementing " + num(after.magnitude));
    add(r, {"K2+coK" + std::to_string(n), std::to_string(n + 2), num(kPi / 2), yes(c.condition),
            num(c.identity_deviation)},
        c.condition && before.pst && after.pst && c.identity_deviation < opt.tol);
  }
  return r;
}

SuiteReport double_cone(const SuiteOptions& opt) {
  SuiteReport r{"double-cone", {"n", "H", "best_magnitude", "time", "pst", "expected", "status"}, {}, {}, true};
  SearchOptions s;
  s.t_max = opt.t_max > 0 ? opt.t_max : 50.0;
  for (const auto& row : double_cone_characterization(1, opt.n_max, s)) {
    add(r, {std::to_string(row.n), row.h_name, num(row.best_magnitude), num(row.best_time), yes(row.has_pst),
            yes(row.expected)},
        row.has_pst == row.expected);
  }
  r.notes.push_back("conical-pair PST under L searched on [0, " + num(s.t_max) + "]");
  return r;
}

SuiteReport signless_double_cone(const SuiteOptions& opt) {
  SuiteReport r{"signless-double-cone", {"m", "H", "time", "magnitude", "lift_deviation", "status"}, {}, {}, true};
  for (int m = 1; m <= std::max(2, opt.n_max / 2); ++m) {
    const Graph h = m == 1 ? empty(2) : circulant_family(m);
    const Graph g = double_cone(h);
    const double t = kPi / (2.0 * std::sqrt(static_cast<double>(m)));
    const auto c = verify_pst(signless_laplacian(g), {0, 1}, t);
    Cells cells{{0}};
    std::vector<int> rest;
    for (int u = 2; u < g.order(); ++u) rest.push_back(u);
    cells.push_back(rest);
    cells.push_back({1});
    const auto p = std::get<Partition>(check_equitable(g, cells));
    const double lift = lift_check(g, p, OperatorKind::SignlessLaplacian, 0, 1, t);
    add(r, {std::to_string(m), m == 1 ? "coK2" : "Circ(Z_" + std::to_string(2 * m) + ")", num(t), num(c.magnitude),
            num(lift)},
        c.pst && lift < opt.tol);
  }
  return r;
}

SuiteReport weak_product_suite(const SuiteOptions& opt) {
  SuiteReport r{"weak-product",
                {"product", "t", "closure1", "operator_dev", "walk_dev", "magnitude", "status"},
                {},
                {},
                true};
  for (int m = 1; m <= 3; ++m) {
    const double t = (2 * m - 1) * kPi;
    for (int family = 0; family < 2; ++family) {
      const Graph h = family == 0 ? complete(2 * m) : hypercube(2 * m - 1);
      const std::string name = family == 0 ? "P3xK" + std::to_string(2 * m) : "P3xQ" + std::to_string(2 * m - 1);
      const auto sg = eigendecompose(normalized_laplacian(path(3))).distinct_values();
      const auto sh = eigendecompose(normalized_laplacian(h)).distinct_values();
      const bool cond = weak_product_closure_1(sg, sh, t);
      const auto w = normalized_weak_product_walk_check(path(3), h, t);
      const Graph prod = weak_product(path(3), h);
      const auto c = verify_pst(normalized_laplacian(prod), {product_vertex(h, 0, 0), product_vertex(h, 2, 0)}, t);
      add(r, {name, num(t), yes(cond), num(w.operator_deviation), num(w.walk_deviation), num(c.magnitude)},
          cond && c.pst && w.operator_deviation < opt.tol && w.walk_deviation < opt.tol);
    }
  }
  for (const auto& hit : closure2_scan(opt.t_max > 0 ? opt.t_max : 6 * kPi)) {
    r.notes.push_back("second closure condition met: " + hit.g_name + " x " + hit.h_name + " at t=" +
                      num(hit.time) + ", product magnitude " + num(hit.product_magnitude));
  }
  return r;
}

SuiteReport line_intertwine(const SuiteOptions& opt) {
  SuiteReport r{"line-intertwine", {"graph", "t", "dev_a", "dev_b", "dev_c", "gram_dev", "status"}, {}, {}, true};
  for (const auto& [name, g] : make_corpus(opt.corpus_size, opt.seed)) {
    const auto ids = incidence_identities(g);
    const double gram = std::max(ids.gram_vertices, ids.gram_edges);
    for (double t : {0.1, 1.0, kPi, 10.0}) {
      const auto d = intertwine_check(g, t);
      add(r, {name, num(t), num(d.a), num(d.b), num(d.c), num(gram)}, d.max() < opt.tol && gram < 1e-12);
    }
  }
  return r;
}

SuiteReport path_cycle(const SuiteOptions& opt) {
  SuiteReport r{"path-cycle", {"n", "matrix_dev", "walk_dev", "screen", "basis", "status"}, {}, {}, true};
  std::vector<double> times;
  for (int k = 0; k <= 40; ++k) times.push_back(0.25 * k + 0.01 * k * k);
  for (int n = 2; n <= std::max(8, opt.n_max); ++n) {
    const auto rep = path_cycle_correspondence(n, times);
    const auto screen = cycle_pst_screen(n);
    const bool possible = screen.verdict == CycleScreen::Possible;
    add(r, {std::to_string(n), num(rep.matrix_deviation), num(rep.walk_deviation),
            possible ? "Possible" : "ImpossibleByIntegrality", screen.basis == ScreenBasis::Spectrum ? "spectrum" : "theorem"},
        rep.matrix_deviation < 1e-12 && rep.walk_deviation < opt.tol && possible == (n <= 3));
  }
  return r;
}

SuiteReport unicyclic(const SuiteOptions& opt) {
  SuiteReport r{"unicyclic",
                {"m", "line_order", "rank_a", "rank_b", "scan_max", "verdict", "status"},
                {},
                {},
                true};
  const double t_max = opt.t_max > 0 ? opt.t_max : 200.0;
  for (int m = 1; m <= 6; ++m) {
    const auto rep = unicyclic_no_pst_pipeline(m, t_max);
    const bool hyp = m % 3 != 0;
    const bool ok = hyp ? rep.verdict == UnicyclicVerdict::NoPst && rep.scan_below
                        : rep.verdict == UnicyclicVerdict::Inconclusive;
    add(r, {std::to_string(m), std::to_string(rep.line.order()), std::to_string(rep.rank_a),
            std::to_string(rep.rank_b), num(rep.scan_magnitude),
            rep.verdict == UnicyclicVerdict::NoPst ? "NoPst" : "Inconclusive"},
        ok);
  }
  for (int m = 0; m <= 11; ++m) {
    const auto g = cone_p4_with_pendant(m);
    const bool ctrl = controllable_vertex(g.graph, g.first);
    const auto chase = eigenvector_chase_check(m);
    add(r, {"cone+P" + std::to_string(m + 1), std::to_string(g.graph.order()),
            std::to_string(exact_rank(walk_matrix(g.graph, {g.first}))), "-", "-",
            ctrl ? "controllable" : "not controllable"},
        ctrl == (m % 3 != 2) && chase.vanishing_eigenvector == chase.expected);
  }
  return r;
}

SuiteReport path_refutation(const SuiteOptions& opt) {
  SuiteReport r{"path-refutation", {"n", "kind", "best_magnitude", "time", "status"}, {}, {}, true};
  SearchOptions s;
  s.t_max = opt.t_max > 0 ? opt.t_max : 200.0;
  for (int n = 4; n <= std::max(8, opt.n_max); ++n) {
    for (auto kind : {OperatorKind::StandardLaplacian, OperatorKind::SignlessLaplacian,
                      OperatorKind::NormalizedLaplacian}) {
      const auto c = search_pst(build_operator(path(n), kind), {0, n - 1}, s);
      add(r, {std::to_string(n), std::string(to_string(kind)), num(c.magnitude), num(c.time)},
          c.magnitude < 1.0 - kScanRefuteGap);
    }
  }
  for (const auto& [name, h] : connected_cone_bases()) {
    const auto c = connected_double_cone_refutation(h, s);
    add(r, {std::to_string(h.order()), "laplacian K2+" + name, num(c.magnitude), num(c.time)},
        c.magnitude < 1.0 - kScanRefuteGap);
  }
  r.notes.push_back("bounded-horizon evidence on [0, " + num(s.t_max) + "], threshold 1-1e-6");
  return r;
}

}  // namespace

std::vector<std::pair<std::string, Graph>> connected_cone_bases() {
  return {{"K1", empty(1)}, {"coK2", empty(2)}, {"P3", path(3)}, {"K3", complete(3)}, {"C4", cycle(4)},
          {"coK6", empty(6)}};
}

std::vector<std::pair<std::string, Graph>> make_corpus(int count, std::uint64_t seed) {
  std::vector<std::pair<std::string, Graph>> c{
      {"P5", path(5)},
      {"C6", cycle(6)},
      {"K4", complete(4)},
      {"Q3", hypercube(3)},
      {"U2", odd_unicyclic(2).graph},
      {"coK2+2K2", double_cone(circulant(4, {2}))},
      {"K1+P4", cone_p4_with_pendant(0).graph},
      {"Circ8", circulant_family(4)},
  };
  std::uint64_t s = seed;
  while (static_cast<int>(c.size()) < count) {
    const int n = 3 + static_cast<int>(s % 8);
    const Graph g = random_graph(n, 0.45, s);
    ++s;
    if (!g.is_connected()) continue;
    c.emplace_back("G" + std::to_string(n) + "#" + std::to_string(s - 1), g);
  }
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"complement-closure", "double-cone", "signless-double-cone",
                                              "weak-product",       "line-intertwine", "path-cycle",
                                              "unicyclic",          "path-refutation"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "complement-closure") return complement_closure(opt);
  if (name == "double-cone") return double_cone(opt);
  if (name == "signless-double-cone") return signless_double_cone(opt);
  if (name == "weak-product") return weak_product_suite(opt);
  if (name == "line-intertwine") return line_intertwine(opt);
  if (name == "path-cycle") return path_cycle(opt);
  if (name == "unicyclic") return unicyclic(opt);
  if (name == "path-refutation") return path_refutation(opt);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace lapwalk
