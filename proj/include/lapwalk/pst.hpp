#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lapwalk/graph.hpp"
#include "lapwalk/operators.hpp"
#include "lapwalk/spectral.hpp"

namespace lapwalk {

inline constexpr double kPstTol = 1e-9;
/// Bounded-horizon scans count as evidence of absence below 1 - kScanRefuteGap.
inline constexpr double kScanRefuteGap = 1e-6;
/// Absolute tolerance for membership in 2 pi Z, measured after dividing by 2 pi.
inline constexpr double kLatticeTol = 1e-8;

enum class CertMethod { VerifiedAtGivenTime, GridSearchRefined, ClosedForm };
std::string_view to_string(CertMethod m);

struct PstCertificate {
  VertexPair pair;
  OperatorKind kind = OperatorKind::Custom;
  double time = 0.0;
  double magnitude = 0.0;
  double phase = 0.0;
  CertMethod method = CertMethod::VerifiedAtGivenTime;
  /// magnitude >= 1 - tol.
  bool pst = false;
};

std::string to_json(const PstCertificate& c);

PstCertificate verify_pst(const Hamiltonian& h, VertexPair pair, double t, double pst_tol = kPstTol);
PstCertificate verify_pst(const EigenDecomposition& d, OperatorKind kind, VertexPair pair, double t,
                          double pst_tol = kPstTol);

struct SearchOptions {
  double t_max = 10.0;
  /// Samples per pi / spectral_range.
  int grid_density = 64;
  double refine_tol = 1e-12;
  double pst_tol = kPstTol;
  bool parallel = true;
};

/// Grid scan of |U(t)[to,from]| over [0, t_max] with every local maximum
/// refined; returns the largest peak (earliest among near-ties).
PstCertificate search_pst(const EigenDecomposition& d, OperatorKind kind, VertexPair pair,
                          const SearchOptions& opt = {});
PstCertificate search_pst(const Hamiltonian& h, VertexPair pair, const SearchOptions& opt = {});

/// dist(x / 2pi, Z) < tol.
bool in_two_pi_lattice(double x, double tol = kLatticeTol);

struct ComplementClosure {
  bool condition = false;
  double identity_deviation = 0.0;
};

/// condition: n t in 2 pi Z; deviation: max |exp(-itL(co-g)) - exp(itL(g))|.
ComplementClosure complement_closure_check(const Graph& g, double t);

/// t (m + n) in 2 pi Z.
bool join_necessary_condition(int m, int n, double t);

struct DoubleConeRow {
  int n = 0;
  std::string h_name;
  double best_magnitude = 0.0;
  double best_time = 0.0;
  bool has_pst = false;
  bool expected = false;
};

/// Named graphs of order n used as the H in double-cone scans.
std::vector<std::pair<std::string, Graph>> double_cone_witnesses(int n);

/// Laplacian conical-pair search on co-K2 + H for every witness H of each
/// order n in [n_min, n_max]; expected = (n mod 4 == 2).
std::vector<DoubleConeRow> double_cone_characterization(int n_min, int n_max, const SearchOptions& opt);

/// Best conical-pair magnitude of L(K2 + h) over [0, opt.t_max].
PstCertificate connected_double_cone_refutation(const Graph& h, const SearchOptions& opt);

/// t * mu * (lambda - 1) in 2 pi Z for all mu in spec_h, lambda in spec_g.
bool weak_product_closure_1(const std::vector<double>& spec_g, const std::vector<double>& spec_h, double t);
/// t * lambda * mu in 2 pi Z for all pairs.
bool weak_product_closure_2(const std::vector<double>& spec_g, const std::vector<double>& spec_h, double t);

struct WeakProductWalkCheck {
  /// max |N(GxH) - (N(G)(x)I + I(x)N(H) - N(G)(x)N(H))|
  double operator_deviation = 0.0;
  /// max |exp(-itN(GxH)) - sum exp(-it(l + m - lm)) E_k (x) F_l|
  double walk_deviation = 0.0;
};

WeakProductWalkCheck normalized_weak_product_walk_check(const Graph& g, const Graph& h, double t);

/// A (G, H, t) triple satisfying the second closure condition with both
/// factors certified at t, and the verdict on the product.
struct Closure2Hit {
  std::string g_name;
  std::string h_name;
  VertexPair g_pair;
  VertexPair h_pair;
  double time = 0.0;
  double product_magnitude = 0.0;
};

/// Enumerates small normalized-PST graphs, pairs them at shared PST times
/// up to t_max and records every hit of the second closure condition.
std::vector<Closure2Hit> closure2_scan(double t_max);

enum class CycleScreen { Possible, ImpossibleByIntegrality };
enum class ScreenBasis { Spectrum, Theorem };

struct CycleScreenResult {
  CycleScreen verdict = CycleScreen::Possible;
  ScreenBasis basis = ScreenBasis::Spectrum;
  /// Eigenvalues 2cos(2 pi k / 2(n-1)) farther than 1e-9 from an integer.
  std::vector<double> non_integral;
};

/// Screen for antipodal normalized PST on P_n through the spectrum of
/// C_{2(n-1)}.
CycleScreenResult cycle_pst_screen(int n);

/// max over w != to of |U(t)[w, from]|; small whenever (from, to) has PST.
double column_leakage(const EigenDecomposition& d, VertexPair pair, double t);

}  // namespace lapwalk
