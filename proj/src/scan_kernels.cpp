#include "lapwalk/scan_kernels.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lapwalk {

Complex AmplitudeSeries::at(double t) const {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    const double ph = -freqs[k] * t;
    re += coeffs[k] * std::cos(ph);
    im += coeffs[k] * std::sin(ph);
  }
  return {re, im};
}

double AmplitudeSeries::magnitude_sq_slope(double t) const {
  // a' = sum -i f c e^{-ift};  d|a|^2/dt = 2 Re(conj(a) a')
  double re = 0.0, im = 0.0, dre = 0.0, dim = 0.0;
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    const double ph = -freqs[k] * t;
    const double c = std::cos(ph), s = std::sin(ph);
    re += coeffs[k] * c;
    im += coeffs[k] * s;
    dre += freqs[k] * coeffs[k] * s;
    dim += -freqs[k] * coeffs[k] * c;
  }
  return 2.0 * (re * dre + im * dim);
}

AmplitudeSeries amplitude_series(const EigenDecomposition& d, VertexPair pair) {
  AmplitudeSeries s;
  for (const auto& sp : d.spaces) {
    const double c = sp.projector(pair.to, pair.from);
    if (c == 0.0) continue;
    s.freqs.push_back(sp.value);
    s.coeffs.push_back(c);
  }
  return s;
}

void scan_magnitudes_serial(const AmplitudeSeries& s, const TimeGrid& grid, std::span<double> out) {
  for (std::size_t i = 0; i < grid.count; ++i) out[i] = std::abs(s.at(grid.at(i)));
}

void scan_amplitudes_serial(const AmplitudeSeries& s, const TimeGrid& grid, std::span<Complex> out) {
  for (std::size_t i = 0; i < grid.count; ++i) out[i] = s.at(grid.at(i));
}

void scan_magnitudes(const AmplitudeSeries& s, const TimeGrid& grid, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(grid.count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = std::abs(s.at(grid.at(i)));
}

void scan_amplitudes(const AmplitudeSeries& s, const TimeGrid& grid, std::span<Complex> out) {
  const auto n = static_cast<std::ptrdiff_t>(grid.count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = s.at(grid.at(i));
}

ScanPeak refine_peak(const AmplitudeSeries& s, double lo, double hi, double time_tol) {
  while (hi - lo > time_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (s.magnitude_sq_slope(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  const double t = 0.5 * (lo + hi);
  return {t, std::abs(s.at(t))};
}

namespace {

bool is_local_max(std::span<const double> m, std::size_t i) {
  const bool left = i == 0 || m[i] >= m[i - 1];
  const bool right = i + 1 == m.size() || m[i] >= m[i + 1];
  // Plateaus: only the first sample of a flat run counts.
  return left && right && !(i > 0 && m[i] == m[i - 1]);
}

ScanPeak refine_at(const AmplitudeSeries& s, const TimeGrid& grid, std::span<const double> mags,
                   std::size_t i, double time_tol) {
  ScanPeak best{grid.at(i), mags[i]};
  auto try_bracket = [&](std::size_t a, std::size_t b) {
    const double lo = grid.at(a), hi = grid.at(b);
    if (s.magnitude_sq_slope(lo) > 0.0 && s.magnitude_sq_slope(hi) <= 0.0) {
      ScanPeak p = refine_peak(s, lo, hi, time_tol);
      if (p.magnitude > best.magnitude) best = p;
    }
  };
  if (i > 0) try_bracket(i - 1, i);
  if (i + 1 < grid.count) try_bracket(i, i + 1);
  return best;
}

}  // namespace

std::vector<ScanPeak> refine_peaks_serial(const AmplitudeSeries& s, const TimeGrid& grid,
                                          std::span<const double> mags, double time_tol) {
  std::vector<ScanPeak> peaks;
  for (std::size_t i = 0; i < grid.count; ++i)
    if (is_local_max(mags, i)) peaks.push_back(refine_at(s, grid, mags, i, time_tol));
  return peaks;
}

std::vector<ScanPeak> refine_peaks(const AmplitudeSeries& s, const TimeGrid& grid,
                                   std::span<const double> mags, double time_tol) {
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < grid.count; ++i)
    if (is_local_max(mags, i)) where.push_back(i);
  std::vector<ScanPeak> peaks(where.size());
  const auto n = static_cast<std::ptrdiff_t>(where.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < n; ++k) peaks[k] = refine_at(s, grid, mags, where[k], time_tol);
  return peaks;
}

std::vector<CurvePoint> fidelity_curve(const EigenDecomposition& d, VertexPair pair, double t_max, int samples) {
  if (samples < 2) throw std::invalid_argument("fidelity curve needs at least 2 samples");
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw std::invalid_argument("t_max must be finite and >= 0");
  const auto s = amplitude_series(d, pair);
  const TimeGrid grid{0.0, t_max / (samples - 1), static_cast<std::size_t>(samples)};
  std::vector<Complex> amp(grid.count);
  scan_amplitudes(s, grid, amp);
  amp[0] = pair.from == pair.to ? 1.0 : 0.0;
  std::vector<CurvePoint> out(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i) out[i] = {grid.at(i), amp[i]};
  return out;
}

int configure_threads_from_env() {
  if (const char* env = std::getenv("LAPWALK_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) omp_set_num_threads(cap);
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace lapwalk
