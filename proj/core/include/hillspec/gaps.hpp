#pragma once

#include <vector>

#include "hillspec/truncation.hpp"

namespace hillspec {

/// Periodic/antiperiodic gap of the period-pi Mathieu operator with potential
/// a exp(-2ix) + b exp(2ix) against the asymptotic
///   |lambda_n^+ - lambda_n^-| ~ 8 |ab|^{n/2} 4^{-n} ((n-1)!)^{-2} |1 - ab/(4n^3)|.
/// Only magnitudes are compared; the sign and the branch of (ab)^{n/2} are
/// left open, so the phase of the computed gap is reported separately.
struct GapReport {
  int n = 0;
  cplx a{};
  cplx b{};
  cplx lambda_plus{};
  cplx lambda_minus{};
  cplx gap_computed{};
  double gap_predicted_magnitude = 0.0;
  cplx correction_factor{};
  /// |gap| / (predicted * |correction|); NaN when ab = 0 (both sides vanish).
  double ratio = 0.0;
  double phase = 0.0;
  /// n = 1 lies outside the asymptotic regime.
  bool asymptotic_questionable = false;
};

inline constexpr int kMaxGapIndex = 6;

double predicted_gap_magnitude(cplx ab, int n);
cplx gap_correction_factor(cplx ab, int n);

/// 1 <= n <= 6, |ab| <= 10. Uses periodic_pair with half_width n + 30.
/// PrecisionLoss is raised when ab != 0 and |gap| < 1e-12.
GapReport gap(cplx a, cplx b, int n);

struct GapSweep {
  std::vector<GapReport> reports;
  /// Slope of log|ratio - 1| against log n over n >= 2 (NaN if undefined).
  double convergence_exponent = 0.0;
};

GapSweep gap_sweep(cplx a, cplx b, int n_max, unsigned threads = 1);

}  // namespace hillspec
