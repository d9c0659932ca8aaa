#include "hillspec/gaps.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hillspec/error.hpp"
#include "hillspec/parallel.hpp"

namespace hillspec {

double predicted_gap_magnitude(cplx ab, int n) {
  // 8 |ab|^{n/2} 4^{-n} / ((n-1)!)^2
  const double log_mag = std::log(8.0) + 0.5 * n * std::log(std::abs(ab)) - n * std::log(4.0) -
                         2.0 * std::lgamma(static_cast<double>(n));
  return ab == cplx{} ? 0.0 : std::exp(log_mag);
}

cplx gap_correction_factor(cplx ab, int n) {
  return 1.0 - ab / (4.0 * static_cast<double>(n) * n * n);
}

GapReport gap(cplx a, cplx b, int n) {
  if (n < 1 || n > kMaxGapIndex) {
    raise(ErrorKind::InvalidArgument, "gap: n must lie in [1, 6] for double precision");
  }
  const cplx ab = a * b;
  if (std::abs(ab) > 10.0) raise(ErrorKind::InvalidArgument, "gap: requires |ab| <= 10");

  const PeriodicPair pair = periodic_pair(a, b, n, n + 30);
  GapReport r;
  r.n = n;
  r.a = a;
  r.b = b;
  r.lambda_plus = pair.lambda_plus;
  r.lambda_minus = pair.lambda_minus;
  r.gap_computed = pair.lambda_plus - pair.lambda_minus;
  r.gap_predicted_magnitude = predicted_gap_magnitude(ab, n);
  r.correction_factor = gap_correction_factor(ab, n);
  r.phase = std::arg(r.gap_computed);
  r.asymptotic_questionable = (n == 1);
  if (ab == cplx{}) {
    r.ratio = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  if (std::abs(r.gap_computed) < 1e-12) {
    raise(ErrorKind::PrecisionLoss, "gap: |lambda+ - lambda-| below 1e-12 for n=" + std::to_string(n));
  }
  r.ratio = std::abs(r.gap_computed) / (r.gap_predicted_magnitude * std::abs(r.correction_factor));
  return r;
}

GapSweep gap_sweep(cplx a, cplx b, int n_max, unsigned threads) {
  if (n_max < 2 || n_max > kMaxGapIndex) {
    raise(ErrorKind::InvalidArgument, "gap_sweep: n_max must lie in [2, 6]");
  }
  GapSweep sweep;
  sweep.reports.resize(static_cast<std::size_t>(n_max));
  parallel_for(sweep.reports.size(), threads, [&](std::size_t i) {
    sweep.reports[i] = gap(a, b, static_cast<int>(i) + 1);
  });

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& r : sweep.reports) {
    const double dev = std::abs(r.ratio - 1.0);
    if (r.n < 2 || !std::isfinite(dev) || dev <= 0.0) continue;
    const double lx = std::log(static_cast<double>(r.n));
    const double ly = std::log(dev);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  sweep.convergence_exponent = std::numeric_limits<double>::quiet_NaN();
  if (count >= 2) sweep.convergence_exponent = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  return sweep;
}

}  // namespace hillspec
