#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lapwalk/control.hpp"
#include "lapwalk/graph.hpp"
#include "lapwalk/graph_io.hpp"
#include "lapwalk/operators.hpp"
#include "lapwalk/partitions.hpp"
#include "lapwalk/pst.hpp"
#include "lapwalk/scan_kernels.hpp"
#include "lapwalk/spectral.hpp"
#include "lapwalk/suites.hpp"
#include "lapwalk/time_expr.hpp"

using namespace lapwalk;
using nlohmann::ordered_json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kAssertFailed = 1;
constexpr int kUsage = 2;

// Anything thrown while reading or validating user input.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  double tol = kPstTol;
  std::string t_max = "10";
  int samples = 201;
  std::string out;
  std::string format = "text";
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string fmt(double x) { return io::format_real(x); }

double time_arg(const std::string& s, const char* what) {
  try {
    return parse_time(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

Graph load(const std::string& path) {
  try {
    return io::load_graph(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

OperatorKind kind_arg(const std::string& s) {
  try {
    return parse_kind(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void check_vertex(const Graph& g, int u) {
  if (u < 0 || u >= g.order())
    throw UsageError("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(g.order()));
}

VertexPair pair_arg(const Graph& g, const std::vector<int>& p) {
  if (p.size() != 2) throw UsageError("--pair needs exactly two vertices");
  check_vertex(g, p[0]);
  check_vertex(g, p[1]);
  return {p[0], p[1]};
}

Graph build_family(const std::string& family, int n, int m) {
  if (family == "path") return path(n);
  if (family == "cycle") return cycle(n);
  if (family == "complete") return complete(n);
  if (family == "empty") return empty(n);
  if (family == "hypercube") return hypercube(n);
  if (family == "circulant-family") return circulant_family(m);
  if (family == "double-cone-empty") return double_cone(empty(n));
  if (family == "double-cone-complete") return double_cone(complete(n));
  if (family == "double-cone-circulant") return double_cone(circulant_family(m));
  if (family == "connected-double-cone") return connected_double_cone(empty(n));
  if (family == "odd-unicyclic") return odd_unicyclic(m).graph;
  if (family == "cone-pendant") return cone_p4_with_pendant(m).graph;
  throw UsageError("unknown family: " + family);
}

void print_report(std::ostream& os, const SuiteReport& r, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["suite"] = r.name;
    j["passed"] = r.passed;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["notes"] = r.notes;
    os << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << r.columns[c];
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> w(r.columns.size());
  for (std::size_t c = 0; c < w.size(); ++c) w[c] = r.columns[c].size();
  for (const auto& row : r.rows)
    for (std::size_t c = 0; c < row.size() && c < w.size(); ++c) w[c] = std::max(w[c], row[c].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(w[c])) << cells[c];
    os << "\n";
  };
  os << "suite " << r.name << "\n";
  line(r.columns);
  for (const auto& row : r.rows) line(row);
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << (r.passed ? "PASS" : "FAIL") << "\n";
}

void print_certificate(std::ostream& os, const PstCertificate& c, const std::string& format) {
  if (format == "text") {
    os << "pair " << c.pair.from << " " << c.pair.to << "\nkind " << to_string(c.kind) << "\ntime "
       << fmt(c.time) << "\nmagnitude " << fmt(c.magnitude) << "\nphase " << fmt(c.phase) << "\nmethod "
       << to_string(c.method) << "\npst " << (c.pst ? "yes" : "no") << "\n";
    return;
  }
  os << to_json(c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();

  CLI::App app{"Continuous-time quantum walks and perfect state transfer"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "PST tolerance on 1 - |U(t)[v,u]|")->check(CLI::PositiveNumber);
  app.add_option("--t-max", g.t_max, "Search or curve horizon (accepts pi expressions)");
  app.add_option("--samples", g.samples, "Samples for fidelity-curve")->check(CLI::Range(2, 100000000));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  std::function<int()> action;

  // Shared per-command inputs.
  std::string graph_path, kind_name = "laplacian", time_str = "0";
  std::vector<int> pair;

  // graph build | show
  auto* graph_cmd = app.add_subcommand("graph", "Build or inspect graphs");
  graph_cmd->require_subcommand(1);
  auto* build_cmd = graph_cmd->add_subcommand("build", "Write a named graph family as JSON");
  std::string family;
  int fam_n = 0, fam_m = 0;
  build_cmd->add_option("--family", family, "path|cycle|complete|empty|hypercube|circulant-family|"
                                            "double-cone-empty|double-cone-complete|double-cone-circulant|"
                                            "connected-double-cone|odd-unicyclic|cone-pendant")
      ->required();
  build_cmd->add_option("--n", fam_n, "Order (dimension for hypercube)");
  build_cmd->add_option("--m", fam_m, "Family parameter");
  build_cmd->callback([&] {
    action = [&] {
      Graph gr;
      try {
        gr = build_family(family, fam_n, fam_m);
      } catch (const GraphError& e) {
        throw UsageError(e.what());
      }
      Sink s(g.out);
      s.os() << (g.format == "text" || g.format == "json" ? io::to_json(gr) : io::to_edge_list(gr));
      return kOk;
    };
  });
  auto* show_cmd = graph_cmd->add_subcommand("show", "Summarize a graph file");
  show_cmd->add_option("--graph", graph_path, "Graph file (JSON or edge list)")->required();
  show_cmd->callback([&] {
    action = [&] {
      const Graph gr = load(graph_path);
      Sink s(g.out);
      if (g.format == "json") s.os() << io::to_json(gr);
      else if (g.format == "csv") s.os() << io::to_edge_list(gr);
      else s.os() << describe(gr) << "\n";
      return kOk;
    };
  });

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "Dump an operator matrix as CSV");
  matrix_cmd->add_option("--graph", graph_path)->required();
  matrix_cmd->add_option("--kind", kind_name, "adjacency|laplacian|signless|normalized");
  matrix_cmd->callback([&] {
    action = [&] {
      const Graph gr = load(graph_path);
      const auto kind = kind_arg(kind_name);
      Hamiltonian h;
      try {
        h = build_operator(gr, kind);
      } catch (const GraphError& e) {
        throw UsageError(e.what());
      }
      Sink s(g.out);
      io::write_csv(s.os(), h.matrix);
      return kOk;
    };
  });

  // walk
  auto* walk_cmd = app.add_subcommand("walk", "Evaluate U(t) = exp(-itM)");
  int from = -1, to = -1;
  walk_cmd->add_option("--graph", graph_path)->required();
  walk_cmd->add_option("--kind", kind_name);
  walk_cmd->add_option("--time", time_str, "Time (e.g. 1.5, pi/2, pi/sqrt(8))")->required();
  auto* from_opt = walk_cmd->add_option("--from", from);
  auto* to_opt = walk_cmd->add_option("--to", to);
  from_opt->needs(to_opt);
  to_opt->needs(from_opt);
  walk_cmd->callback([&] {
    action = [&] {
      const Graph gr = load(graph_path);
      const auto kind = kind_arg(kind_name);
      const double t = time_arg(time_str, "--time");
      Hamiltonian h;
      try {
        h = build_operator(gr, kind);
      } catch (const GraphError& e) {
        throw UsageError(e.what());
      }
      Sink s(g.out);
      const auto d = eigendecompose(h);
      if (*from_opt) {
        check_vertex(gr, from);
        check_vertex(gr, to);
        const Complex a = amplitude(d, {from, to}, t);
        if (g.format == "json") {
          ordered_json j;
          j["from"] = from;
          j["to"] = to;
          j["time"] = t;
          j["re"] = a.real();
          j["im"] = a.imag();
          j["magnitude"] = std::abs(a);
          s.os() << j.dump(2) << "\n";
        } else if (g.format == "csv") {
          s.os() << "t,re,im,abs\n" << fmt(t) << "," << fmt(a.real()) << "," << fmt(a.imag()) << ","
                 << fmt(std::abs(a)) << "\n";
        } else {
          s.os() << "amplitude " << fmt(a.real()) << " " << fmt(a.imag()) << "\nmagnitude " << fmt(std::abs(a))
                 << "\n";
        }
      } else {
        // Whole matrix of transfer magnitudes.
        const auto u = walk(d, t);
        io::write_csv(s.os(), u.matrix.cwiseAbs());
      }
      return kOk;
    };
  });

  // fidelity-curve
  auto* curve_cmd = app.add_subcommand("fidelity-curve", "CSV of t,re,im,abs on a uniform grid");
  curve_cmd->add_option("--graph", graph_path)->required();
  curve_cmd->add_option("--kind", kind_name);
  curve_cmd->add_option("--pair", pair, "from to")->expected(2)->required();
  curve_cmd->callback([&] {
    action = [&] {
      const Graph gr = load(graph_path);
      const auto kind = kind_arg(kind_name);
      const auto vp = pair_arg(gr, pair);
      const double t_max = time_arg(g.t_max, "--t-max");
      if (!(t_max >= 0.0)) throw UsageError("--t-max must be >= 0");
      Hamiltonian h;
      try {
        h = build_operator(gr, kind);
      } catch (const GraphError& e) {
        throw UsageError(e.what());
      }
      const auto curve = fidelity_curve(eigendecompose(h), vp, t_max, g.samples);
      Sink s(g.out);
      s.os() << "t,re,im,abs\n";
      for (const auto& p : curve)
        s.os() << fmt(p.time) << "," << fmt(p.amplitude.real()) << "," << fmt(p.amplitude.imag()) << ","
               << fmt(std::abs(p.amplitude)) << "\n";
      return kOk;
    };
  });

  // pst verify | search
  auto* pst_cmd = app.add_subcommand("pst", "Perfect state transfer certificates");
  pst_cmd->require_subcommand(1);
  auto* verify_cmd = pst_cmd->add_subcommand("verify", "Check |U(t)[v,u]| >= 1 - tol at a given time");
  auto* search_cmd = pst_cmd->add_subcommand("search", "Scan [0, t-max] for the earliest best transfer");
  int density = 64;
  for (auto* c : {verify_cmd, search_cmd}) {
    c->add_option("--graph", graph_path)->required();
    c->add_option("--kind", kind_name);
    c->add_option("--pair", pair, "from to")->expected(2)->required();
  }
  verify_cmd->add_option("--time", time_str)->required();
  search_cmd->add_option("--density", density, "Grid samples per fastest period")->check(CLI::Range(8, 1 << 20));
  auto pst_action = [&](bool search) {
    action = [&, search] {
      const Graph gr = load(graph_path);
      const auto kind = kind_arg(kind_name);
      const auto vp = pair_arg(gr, pair);
      Hamiltonian h;
      try {
        h = build_operator(gr, kind);
      } catch (const GraphError& e) {
        throw UsageError(e.what());
      }
      PstCertificate c;
      if (search) {
        SearchOptions o;
        o.t_max = time_arg(g.t_max, "--t-max");
        if (!(o.t_max > 0.0)) throw UsageError("--t-max must be > 0");
        o.grid_density = density;
        o.pst_tol = g.tol;
        c = search_pst(h, vp, o);
      } else {
        c = verify_pst(h, vp, time_arg(time_str, "--time"), g.tol);
      }
      Sink s(g.out);
      print_certificate(s.os(), c, g.format);
      return c.pst ? kOk : kAssertFailed;
    };
  };
  verify_cmd->callback([&] { pst_action(false); });
  search_cmd->callback([&] { pst_action(true); });

  // quotient
  auto* quot_cmd = app.add_subcommand("quotient", "Quotient matrix of an (almost) equitable partition");
  std::string cells_path;
  quot_cmd->add_option("--graph", graph_path)->required();
  quot_cmd->add_option("--cells", cells_path, "Partition JSON {\"cells\": [[...], ...]}")->required();
  quot_cmd->add_option("--kind", kind_name);
  quot_cmd->callback([&] {
    action = [&] {
      const Graph gr = load(graph_path);
      const auto kind = kind_arg(kind_name);
      Cells cells;
      try {
        cells = io::cells_from_json(io::read_file(cells_path));
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      PartitionCheck pc;
      try {
        pc = kind == OperatorKind::StandardLaplacian ? check_almost_equitable(gr, cells) : check_equitable(gr, cells);
      } catch (const std::exception& e) {
        throw UsageError(e.what());
      }
      if (const auto* v = std::get_if<PartitionViolation>(&pc)) {
        std::cerr << "lapwalk: partition rejected: " << v->message << "\n";
        return kAssertFailed;
      }
      const auto& p = std::get<Partition>(pc);
      QuotientMatrix q;
      try {
        q = quotient(gr, p, kind);
      } catch (const std::exception& e) {
        std::cerr << "lapwalk: " << e.what() << "\n";
        return kAssertFailed;
      }
      Sink s(g.out);
      if (g.format == "json") {
        ordered_json j;
        j["kind"] = std::string(to_string(kind));
        j["matrix"] = ordered_json::array();
        for (int r = 0; r < q.matrix.rows(); ++r) {
          std::vector<double> row(q.matrix.cols());
          for (int c = 0; c < q.matrix.cols(); ++c) row[c] = q.matrix(r, c);
          j["matrix"].push_back(row);
        }
        j["d"] = p.counts;
        j["intertwining_deviation"] = q.intertwining_deviation;
        s.os() << j.dump(2) << "\n";
      } else {
        io::write_csv(s.os(), q.matrix);
        s.os() << "\n# d_jk (number of neighbours in cell k of a vertex in cell j; - = not constant)\n";
        for (const auto& row : p.counts) {
          for (std::size_t c = 0; c < row.size(); ++c)
            s.os() << (c ? "," : "") << (row[c] < 0 ? std::string("-") : std::to_string(row[c]));
          s.os() << "\n";
        }
      }
      return kOk;
    };
  });

  // controllable
  auto* ctrl_cmd = app.add_subcommand("controllable", "Exact walk-matrix rank of a vertex subset");
  std::vector<int> subset;
  ctrl_cmd->add_option("--graph", graph_path)->required();
  ctrl_cmd->add_option("--vertex", subset, "Vertex (repeat for a subset)")->required();
  ctrl_cmd->callback([&] {
    action = [&] {
      const Graph gr = load(graph_path);
      if (!gr.is_simple()) throw UsageError("controllability needs a simple graph");
      for (int u : subset) check_vertex(gr, u);
      const int rank = exact_rank(walk_matrix(gr, subset));
      const bool ok = rank == gr.order();
      Sink s(g.out);
      if (g.format == "json") {
        ordered_json j;
        j["subset"] = subset;
        j["rank"] = rank;
        j["n"] = gr.order();
        j["controllable"] = ok;
        s.os() << j.dump(2) << "\n";
      } else {
        s.os() << "rank " << rank << "/" << gr.order() << "\n" << (ok ? "controllable" : "not controllable") << "\n";
      }
      return kOk;
    };
  });

  // unicyclic
  auto* uni_cmd = app.add_subcommand("unicyclic", "Signless no-PST pipeline on a triangle with two pendant paths");
  int uni_m = 1, uni_m2 = -1;
  uni_cmd->add_option("--m", uni_m, "Arm length")->required()->check(CLI::Range(1, 200));
  uni_cmd->add_option("--m2", uni_m2, "Second arm length (report only, nothing asserted)")->check(CLI::Range(0, 200));
  uni_cmd->callback([&] {
    action = [&] {
      const bool unequal = uni_m2 >= 0;
      const double t_max = app.get_option("--t-max")->count() > 0 ? time_arg(g.t_max, "--t-max") : 200.0;
      const auto r = unicyclic_pipeline(uni_m, unequal ? uni_m2 : uni_m, t_max);
      const char* verdict = r.verdict == UnicyclicVerdict::NoPst ? "NoPst" : "Inconclusive";
      Sink s(g.out);
      if (g.format == "json") {
        ordered_json j;
        j["arm1"] = r.arm1;
        j["arm2"] = r.arm2;
        j["line_order"] = r.line.order();
        j["endpoints"] = {r.end_a, r.end_b};
        j["rank"] = {r.rank_a, r.rank_b};
        j["controllable"] = {r.controllable_a, r.controllable_b};
        j["scan_magnitude"] = r.scan_magnitude;
        j["scan_time"] = r.scan_time;
        j["scan_t_max"] = t_max;
        j["scan_below_threshold"] = r.scan_below;
        j["verdict"] = verdict;
        s.os() << j.dump(2) << "\n";
      } else {
        s.os() << "arms " << r.arm1 << " " << r.arm2 << "\nline graph order " << r.line.order() << "\nendpoints "
               << r.end_a << " " << r.end_b << "\nrank " << r.rank_a << "/" << r.line.order() << " "
               << r.rank_b << "/" << r.line.order() << "\ncontrollable " << (r.controllable_a ? "yes" : "no")
               << " " << (r.controllable_b ? "yes" : "no") << "\nscan max " << fmt(r.scan_magnitude) << " at t="
               << fmt(r.scan_time) << " on [0, " << fmt(t_max) << "]\nverdict " << verdict << "\n";
      }
      if (unequal) return kOk;
      const bool ok = uni_m % 3 == 0 ? r.verdict == UnicyclicVerdict::Inconclusive
                                     : r.verdict == UnicyclicVerdict::NoPst && r.scan_below;
      return ok ? kOk : kAssertFailed;
    };
  });

  // verify-suite
  auto* suite_cmd = app.add_subcommand("verify-suite", "Run a named verification suite");
  std::string suite;
  SuiteOptions sopt;
  std::string suite_t_max;
  suite_cmd->add_option("name", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  suite_cmd->add_option("--n-max", sopt.n_max, "Largest order / family parameter")->check(CLI::Range(1, 64));
  suite_cmd->add_option("--seed", sopt.seed, "Seed for the random part of the graph corpus");
  suite_cmd->add_option("--corpus", sopt.corpus_size, "Corpus size")->check(CLI::Range(1, 10000));
  suite_cmd->callback([&] {
    action = [&] {
      sopt.tol = g.tol;
      // --t-max only overrides the suite's own horizon when given explicitly.
      if (app.get_option("--t-max")->count() > 0) sopt.t_max = time_arg(g.t_max, "--t-max");
      const auto r = run_suite(suite, sopt);
      Sink s(g.out);
      print_report(s.os(), r, g.format);
      return r.passed ? kOk : kAssertFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << app.help();
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "lapwalk: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "lapwalk: error: " << e.what() << "\n";
    return kUsage;
  }
}
