#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "lapwalk/graph.hpp"
#include "lapwalk/operators.hpp"
#include "lapwalk/scan_kernels.hpp"
#include "lapwalk/spectral.hpp"
#include "oracle/oracle.hpp"

using namespace lapwalk;

namespace {

constexpr double kPi = std::numbers::pi;

// Restores the OpenMP thread count on scope exit.
struct ThreadGuard {
  int saved = omp_get_max_threads();
  explicit ThreadGuard(int n) { omp_set_num_threads(n); }
  ~ThreadGuard() { omp_set_num_threads(saved); }
};

struct Fixture {
  EigenDecomposition d;
  AmplitudeSeries s;
  TimeGrid grid;
};

Fixture make(const Hamiltonian& h, VertexPair p, double t_max) {
  Fixture f{eigendecompose(h), {}, {}};
  f.s = amplitude_series(f.d, p);
  const double step = kPi / (64 * f.d.spectral_range());
  f.grid = {0.0, step, static_cast<std::size_t>(std::ceil(t_max / step)) + 1};
  return f;
}

}  // namespace

TEST_SUITE("scan_kernels") {
  TEST_CASE("amplitude series matches the walk operator") {
    const auto d = eigendecompose(signless_laplacian(odd_unicyclic(2).graph));
    const auto s = amplitude_series(d, {0, 5});
    for (double t : {0.0, 0.4, 3.3, 17.0}) CHECK(std::abs(s.at(t) - walk(d, t).matrix(5, 0)) < 1e-12);
  }

  TEST_CASE("slope matches a finite difference") {
    const auto d = eigendecompose(standard_laplacian(path(6)));
    const auto s = amplitude_series(d, {0, 5});
    for (double t : {0.3, 2.0, 9.1}) {
      const double h = 1e-6;
      const double fd = (std::norm(s.at(t + h)) - std::norm(s.at(t - h))) / (2 * h);
      CHECK(s.magnitude_sq_slope(t) == doctest::Approx(fd).epsilon(1e-5));
    }
  }

  TEST_CASE("parallel scans equal the serial reference") {
    const Hamiltonian cases[] = {standard_laplacian(path(8)), normalized_laplacian(hypercube(4)),
                                 signless_laplacian(random_graph(12, 0.4, 3))};
    for (int threads : {1, 2, 4}) {
      ThreadGuard guard(threads);
      for (const auto& h : cases) {
        const auto f = make(h, {0, h.order() - 1}, 60.0);
        std::vector<double> ms(f.grid.count), mp(f.grid.count);
        scan_magnitudes_serial(f.s, f.grid, ms);
        scan_magnitudes(f.s, f.grid, mp);
        CHECK(ms == mp);
        std::vector<Complex> as(f.grid.count), ap(f.grid.count);
        scan_amplitudes_serial(f.s, f.grid, as);
        scan_amplitudes(f.s, f.grid, ap);
        CHECK(as == ap);
        const auto ps = refine_peaks_serial(f.s, f.grid, ms, 1e-12);
        const auto pp = refine_peaks(f.s, f.grid, ms, 1e-12);
        REQUIRE(ps.size() == pp.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
          CHECK(ps[i].time == pp[i].time);
          CHECK(ps[i].magnitude == pp[i].magnitude);
        }
      }
    }
  }

  TEST_CASE("peak refinement reaches the exact transfer time") {
    const auto f = make(standard_laplacian(complete(2)), {0, 1}, 4.0);
    std::vector<double> m(f.grid.count);
    scan_magnitudes_serial(f.s, f.grid, m);
    const auto peaks = refine_peaks_serial(f.s, f.grid, m, 1e-13);
    REQUIRE(!peaks.empty());
    CHECK(std::abs(peaks[0].time - kPi / 2) < 1e-9);
    CHECK(peaks[0].magnitude > 1 - 1e-12);
    // Off-grid bracket on a smooth peak.
    const auto p = refine_peak(f.s, 1.0, 2.0, 1e-14);
    CHECK(std::abs(p.time - kPi / 2) < 1e-9);
  }

  TEST_CASE("grid maximum never beats the refined peaks") {
    const auto f = make(standard_laplacian(path(5)), {0, 4}, 100.0);
    std::vector<double> m(f.grid.count);
    scan_magnitudes(f.s, f.grid, m);
    const auto peaks = refine_peaks(f.s, f.grid, m, 1e-12);
    double grid_best = 0, refined_best = 0;
    for (double x : m) grid_best = std::max(grid_best, x);
    for (const auto& p : peaks) refined_best = std::max(refined_best, p.magnitude);
    CHECK(refined_best >= grid_best);
    CHECK(refined_best >= oracle::grid_max(standard_laplacian(path(5)).matrix, 0, 4, 100.0, 20000) - 1e-12);
  }

  TEST_CASE("fidelity curve") {
    const auto d = eigendecompose(standard_laplacian(complete(2)));
    const auto c = fidelity_curve(d, {0, 1}, kPi, 3);
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c[0].amplitude) == 0.0);
    CHECK(std::abs(c[1].amplitude) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(c[2].amplitude) < 1e-12);
    CHECK(c[1].time == kPi / 2);
    const auto many = fidelity_curve(d, {0, 1}, 10.0, 101);
    for (const auto& p : many) CHECK(std::abs(std::abs(p.amplitude) - std::abs(std::sin(p.time))) < 1e-12);
    const auto same = fidelity_curve(eigendecompose(adjacency(path(4))), {2, 2}, 1.0, 2);
    CHECK(same[0].amplitude == Complex(1.0, 0.0));
    CHECK_THROWS_AS(fidelity_curve(d, {0, 1}, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(fidelity_curve(d, {0, 1}, -1.0, 5), std::invalid_argument);
  }

  TEST_CASE("Q3 normalized antipodal curve peaks at 3pi/2") {
    const auto d = eigendecompose(normalized_laplacian(hypercube(3)));
    const auto c = fidelity_curve(d, {0, 7}, 2 * kPi, 9);
    CHECK(std::abs(c[6].amplitude) > 1 - 1e-12);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(c[i].amplitude) < 1 - 1e-3);
  }

  TEST_CASE("LAPWALK_THREADS caps the pool") {
    ThreadGuard guard(omp_get_max_threads());
    setenv("LAPWALK_THREADS", "1", 1);
    CHECK(configure_threads_from_env() == 1);
    setenv("LAPWALK_THREADS", "garbage", 1);
    CHECK(configure_threads_from_env() >= 1);
    unsetenv("LAPWALK_THREADS");
  }
}
