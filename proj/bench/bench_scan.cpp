// Serial vs OpenMP timing for the amplitude scan and peak refinement.
//   bench_scan [t_max] [repeats]
// Thread count follows OMP_NUM_THREADS / LAPWALK_THREADS.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "lapwalk/graph.hpp"
#include "lapwalk/operators.hpp"
#include "lapwalk/scan_kernels.hpp"
#include "lapwalk/spectral.hpp"

using namespace lapwalk;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

struct Case {
  std::string name;
  Hamiltonian h;
  VertexPair pair;
};

}  // namespace

int main(int argc, char** argv) {
  const double t_max = argc > 1 ? std::atof(argv[1]) : 200.0;
  const int repeats = argc > 2 ? std::max(1, std::atoi(argv[2])) : 3;
  const int threads = configure_threads_from_env();

  std::vector<Case> cases{
      {"L(P8)", standard_laplacian(path(8)), {0, 7}},
      {"Q(P12)", signless_laplacian(path(12)), {0, 11}},
      {"N(Q6)", normalized_laplacian(hypercube(6)), {0, 63}},
      {"Q(line U5)", signless_laplacian(line_graph(odd_unicyclic(5).graph).graph), {0, 12}},
      {"L(G40)", standard_laplacian(random_graph(40, 0.3, 7)), {0, 39}},
  };

  std::printf("threads=%d t_max=%g repeats=%d\n", threads, t_max, repeats);
  std::printf("%-12s %10s %6s %12s %12s %8s %12s %12s %8s %10s\n", "case", "samples", "terms", "scan_ser_s",
              "scan_omp_s", "speedup", "refine_ser_s", "refine_omp_s", "speedup", "max_diff");
  for (const auto& c : cases) {
    const auto d = eigendecompose(c.h);
    const auto s = amplitude_series(d, c.pair);
    const double step = std::numbers::pi / (64.0 * std::max(d.spectral_range(), 1e-12));
    const TimeGrid grid{0.0, step, static_cast<std::size_t>(std::ceil(t_max / step)) + 1};
    std::vector<double> ser(grid.count), par(grid.count);

    const double ts = best_of(repeats, [&] { scan_magnitudes_serial(s, grid, ser); });
    const double tp = best_of(repeats, [&] { scan_magnitudes(s, grid, par); });
    double diff = 0.0;
    for (std::size_t i = 0; i < grid.count; ++i) diff = std::max(diff, std::abs(ser[i] - par[i]));

    std::vector<ScanPeak> ps, pp;
    const double rs = best_of(repeats, [&] { ps = refine_peaks_serial(s, grid, ser, 1e-12); });
    const double rp = best_of(repeats, [&] { pp = refine_peaks(s, grid, ser, 1e-12); });
    if (ps.size() != pp.size()) diff = INFINITY;
    for (std::size_t i = 0; i < std::min(ps.size(), pp.size()); ++i)
      diff = std::max(diff, std::abs(ps[i].magnitude - pp[i].magnitude));

    std::printf("%-12s %10zu %6zu %12.5f %12.5f %8.2f %12.5f %12.5f %8.2f %10.2e\n", c.name.c_str(), grid.count,
                s.freqs.size(), ts, tp, ts / tp, rs, rp, rs / rp, diff);
  }
  return 0;
}
