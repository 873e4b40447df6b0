#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lapwalk/spectral.hpp"

namespace lapwalk {

/// a(t) = sum_k coeff_k * exp(-i freq_k t), the (to, from) entry of the walk
/// operator written as a short exponential sum.
struct AmplitudeSeries {
  std::vector<double> freqs;
  std::vector<double> coeffs;

  Complex at(double t) const;
  /// d/dt |a(t)|^2.
  double magnitude_sq_slope(double t) const;
};

AmplitudeSeries amplitude_series(const EigenDecomposition& d, VertexPair pair);

/// Uniform grid t_i = t0 + i * step, i = 0..count-1.
struct TimeGrid {
  double t0 = 0.0;
  double step = 0.0;
  std::size_t count = 0;

  double at(std::size_t i) const { return t0 + static_cast<double>(i) * step; }
};

/// Serial reference kernels. The parallel versions below must agree with
/// these bit for bit.
void scan_magnitudes_serial(const AmplitudeSeries& s, const TimeGrid& grid, std::span<double> out);
void scan_amplitudes_serial(const AmplitudeSeries& s, const TimeGrid& grid, std::span<Complex> out);

/// OpenMP kernels over the time grid.
void scan_magnitudes(const AmplitudeSeries& s, const TimeGrid& grid, std::span<double> out);
void scan_amplitudes(const AmplitudeSeries& s, const TimeGrid& grid, std::span<Complex> out);

struct ScanPeak {
  double time = 0.0;
  double magnitude = 0.0;
};

/// Bisects on the sign of d|a|^2/dt inside [lo, hi] (slope must go + to -).
ScanPeak refine_peak(const AmplitudeSeries& s, double lo, double hi, double time_tol);

/// Refines every local maximum of the sampled magnitudes and returns all
/// peaks in time order.
std::vector<ScanPeak> refine_peaks_serial(const AmplitudeSeries& s, const TimeGrid& grid,
                                          std::span<const double> mags, double time_tol);
std::vector<ScanPeak> refine_peaks(const AmplitudeSeries& s, const TimeGrid& grid,
                                   std::span<const double> mags, double time_tol);

/// Caps the OpenMP pool from LAPWALK_THREADS when set; returns the cap in use.
/// Amplitudes at `samples` uniform times on [0, t_max]. The t = 0 row is the
/// exact identity entry. Throws std::invalid_argument when samples < 2.
struct CurvePoint {
  double time = 0.0;
  Complex amplitude;
};
std::vector<CurvePoint> fidelity_curve(const EigenDecomposition& d, VertexPair pair, double t_max, int samples);

int configure_threads_from_env();

}  // namespace lapwalk
