#include "lapwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <numbers>

#include "lapwalk/graph_io.hpp"
#include "lapwalk/scan_kernels.hpp"

namespace lapwalk {

std::string_view to_string(CertMethod m) {
  switch (m) {
    case CertMethod::VerifiedAtGivenTime: return "VerifiedAtGivenTime";
    case CertMethod::GridSearchRefined: return "GridSearchRefined";
    case CertMethod::ClosedForm: return "ClosedForm";
  }
  return "";
}

std::string to_json(const PstCertificate& c) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["pair"] = {c.pair.from, c.pair.to};
  j["kind"] = std::string(to_string(c.kind));
  j["time"] = c.time;
  j["magnitude"] = c.magnitude;
  j["phase"] = c.phase;
  j["method"] = std::string(to_string(c.method));
  j["pst"] = c.pst;
  return j.dump();
}

PstCertificate verify_pst(const EigenDecomposition& d, OperatorKind kind, VertexPair pair, double t,
                          double pst_tol) {
  const Fidelity f = fidelity(d, pair, t);
  return {pair, kind, t, f.magnitude, f.phase, CertMethod::VerifiedAtGivenTime, f.magnitude >= 1.0 - pst_tol};
}

PstCertificate verify_pst(const Hamiltonian& h, VertexPair pair, double t, double pst_tol) {
  return verify_pst(eigendecompose(h), h.kind, pair, t, pst_tol);
}

PstCertificate search_pst(const EigenDecomposition& d, OperatorKind kind, VertexPair pair,
                          const SearchOptions& opt) {
  if (opt.t_max <= 0.0) throw std::invalid_argument("search_pst: t_max must be positive");
  const AmplitudeSeries series = amplitude_series(d, pair);
  const double range = d.spectral_range();
  TimeGrid grid;
  if (range > 0.0) {
    const double max_step = std::numbers::pi / (opt.grid_density * range);
    grid.count = static_cast<std::size_t>(std::ceil(opt.t_max / max_step)) + 1;
    grid.step = opt.t_max / static_cast<double>(grid.count - 1);
  } else {
    grid.count = 2;
    grid.step = opt.t_max;
  }
  std::vector<double> mags(grid.count);
  std::vector<ScanPeak> peaks;
  if (opt.parallel) {
    scan_magnitudes(series, grid, mags);
    peaks = refine_peaks(series, grid, mags, opt.refine_tol);
  } else {
    scan_magnitudes_serial(series, grid, mags);
    peaks = refine_peaks_serial(series, grid, mags, opt.refine_tol);
  }
  ScanPeak best{0.0, -1.0};
  for (const auto& p : peaks) best = p.magnitude > best.magnitude ? p : best;
  // Earliest peak that ties with the best within rounding.
  for (const auto& p : peaks) {
    if (p.magnitude >= best.magnitude - 1e-12) {
      best = p;
      break;
    }
  }
  const Complex a = series.at(best.time);
  PstCertificate c{pair, kind, best.time, std::abs(a), std::arg(a), CertMethod::GridSearchRefined, false};
  c.pst = c.magnitude >= 1.0 - opt.pst_tol;
  return c;
}

PstCertificate search_pst(const Hamiltonian& h, VertexPair pair, const SearchOptions& opt) {
  return search_pst(eigendecompose(h), h.kind, pair, opt);
}

bool in_two_pi_lattice(double x, double tol) {
  const double r = x / (2.0 * std::numbers::pi);
  return std::abs(r - std::round(r)) < tol;
}

ComplementClosure complement_closure_check(const Graph& g, double t) {
  ComplementClosure c;
  c.condition = in_two_pi_lattice(g.order() * t, 1e-9);
  const auto lhs = walk(standard_laplacian(complement(g)), t).matrix;
  const auto rhs = walk(standard_laplacian(g), -t).matrix;
  c.identity_deviation = max_abs(Eigen::MatrixXcd(lhs - rhs));
  return c;
}

bool join_necessary_condition(int m, int n, double t) { return in_two_pi_lattice(t * (m + n), 1e-9); }

std::vector<std::pair<std::string, Graph>> double_cone_witnesses(int n) {
  std::vector<std::pair<std::string, Graph>> out;
  out.emplace_back("empty", empty(n));
  out.emplace_back("path", path(n));
  out.emplace_back("complete", complete(n));
  if (n >= 3) out.emplace_back("cycle", cycle(n));
  if (n >= 2) {
    std::vector<Edge> star;
    for (int k = 1; k < n; ++k) star.push_back({0, k});
    out.emplace_back("star", Graph(n, std::move(star)));
  }
  return out;
}

std::vector<DoubleConeRow> double_cone_characterization(int n_min, int n_max, const SearchOptions& opt) {
  std::vector<DoubleConeRow> rows;
  for (int n = std::max(1, n_min); n <= n_max; ++n) {
    for (const auto& [name, h] : double_cone_witnesses(n)) {
      const auto c = search_pst(standard_laplacian(double_cone(h)), {0, 1}, opt);
      rows.push_back({n, name, c.magnitude, c.time, c.pst, n % 4 == 2});
    }
  }
  return rows;
}

PstCertificate connected_double_cone_refutation(const Graph& h, const SearchOptions& opt) {
  return search_pst(standard_laplacian(connected_double_cone(h)), {0, 1}, opt);
}

bool weak_product_closure_1(const std::vector<double>& spec_g, const std::vector<double>& spec_h, double t) {
  for (double mu : spec_h)
    for (double lambda : spec_g)
      if (!in_two_pi_lattice(t * mu * (lambda - 1.0))) return false;
  return true;
}

bool weak_product_closure_2(const std::vector<double>& spec_g, const std::vector<double>& spec_h, double t) {
  for (double lambda : spec_g)
    for (double mu : spec_h)
      if (!in_two_pi_lattice(t * lambda * mu)) return false;
  return true;
}

WeakProductWalkCheck normalized_weak_product_walk_check(const Graph& g, const Graph& h, double t) {
  WeakProductWalkCheck r;
  const Eigen::MatrixXd ng = normalized_laplacian(g).matrix;
  const Eigen::MatrixXd nh = normalized_laplacian(h).matrix;
  const Hamiltonian prod = normalized_laplacian(weak_product(g, h));
  const Eigen::MatrixXd ig = Eigen::MatrixXd::Identity(g.order(), g.order());
  const Eigen::MatrixXd ih = Eigen::MatrixXd::Identity(h.order(), h.order());
  const Eigen::MatrixXd identity = kron(ng, ih) + kron(ig, nh) - kron(ng, nh);
  r.operator_deviation = max_abs(Eigen::MatrixXd(prod.matrix - identity));

  const auto dg = eigendecompose(Hamiltonian{OperatorKind::NormalizedLaplacian, ng});
  const auto dh = eigendecompose(Hamiltonian{OperatorKind::NormalizedLaplacian, nh});
  const int n = g.order() * h.order();
  Eigen::MatrixXcd formula = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& ek : dg.spaces)
    for (const auto& fl : dh.spaces) {
      const double freq = ek.value + fl.value - ek.value * fl.value;
      formula += std::polar(1.0, -t * freq) * kron(ek.projector, fl.projector).cast<Complex>();
    }
  r.walk_deviation = max_abs(Eigen::MatrixXcd(walk(prod, t).matrix - formula));
  return r;
}

std::vector<Closure2Hit> closure2_scan(double t_max) {
  struct Seed {
    std::string name;
    Graph g;
    VertexPair pair;
  };
  const std::vector<Seed> seeds{
      {"K2", complete(2), {0, 1}},
      {"P3", path(3), {0, 2}},
      {"Q2", hypercube(2), {0, 3}},
      {"Q3", hypercube(3), {0, 7}},
      {"P3xK4", weak_product(path(3), complete(4)), {0, 8}},
  };
  struct Found {
    const Seed* seed;
    EigenDecomposition d;
    std::vector<double> times;
  };
  std::vector<Found> found;
  SearchOptions opt;
  opt.t_max = t_max;
  for (const auto& s : seeds) {
    Found f{&s, eigendecompose(normalized_laplacian(s.g)), {}};
    const auto c = search_pst(f.d, OperatorKind::NormalizedLaplacian, s.pair, opt);
    if (!c.pst) continue;
    for (int k = 0; (2 * k + 1) * c.time <= t_max + 1e-9; ++k) f.times.push_back((2 * k + 1) * c.time);
    found.push_back(std::move(f));
  }
  std::vector<Closure2Hit> hits;
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i; j < found.size(); ++j) {
      const auto& a = found[i];
      const auto& b = found[j];
      for (double t : a.times) {
        const bool shared = std::any_of(b.times.begin(), b.times.end(),
                                        [&](double s) { return std::abs(s - t) < 1e-9; });
        if (!shared) continue;
        if (!weak_product_closure_2(a.d.distinct_values(), b.d.distinct_values(), t)) continue;
        const Graph prod = weak_product(a.seed->g, b.seed->g);
        const VertexPair pp{product_vertex(b.seed->g, a.seed->pair.from, b.seed->pair.from),
                            product_vertex(b.seed->g, a.seed->pair.to, b.seed->pair.to)};
        const auto c = verify_pst(normalized_laplacian(prod), pp, t);
        hits.push_back({a.seed->name, b.seed->name, a.seed->pair, b.seed->pair, t, c.magnitude});
      }
    }
  return hits;
}

CycleScreenResult cycle_pst_screen(int n) {
  if (n < 2) throw std::invalid_argument("cycle_pst_screen needs n >= 2");
  CycleScreenResult r;
  const int len = 2 * (n - 1);
  for (int k = 0; k < len; ++k) {
    const double ev = 2.0 * std::cos(2.0 * std::numbers::pi * k / len);
    if (std::abs(ev - std::round(ev)) >= 1e-9) r.non_integral.push_back(ev);
  }
  if (!r.non_integral.empty()) {
    r.verdict = CycleScreen::ImpossibleByIntegrality;
    r.basis = ScreenBasis::Spectrum;
  } else if (n == 2 || n == 3) {
    r.verdict = CycleScreen::Possible;
    r.basis = ScreenBasis::Spectrum;
  } else {
    // Integral spectrum (C6) but excluded by the full no-PST theorem for n >= 4.
    r.verdict = CycleScreen::ImpossibleByIntegrality;
    r.basis = ScreenBasis::Theorem;
  }
  return r;
}

double column_leakage(const EigenDecomposition& d, VertexPair pair, double t) {
  double worst = 0.0;
  for (int w = 0; w < d.order(); ++w) {
    if (w == pair.to) continue;
    worst = std::max(worst, std::abs(amplitude(d, {pair.from, w}, t)));
  }
  return worst;
}

}  // namespace lapwalk
