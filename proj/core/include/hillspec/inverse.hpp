#pragma once

#include <utility>
#include <vector>

#include "hillspec/types.hpp"

namespace hillspec {

struct IndexedEigenvalue {
  int n = 0;
  cplx lambda{};
};

/// Result of recovering the product ab from eigenvalues of H_t(a,b).
///
/// Only ab is recoverable: H_t(a,b) and H_t(c,d) have the same spectrum
/// whenever ab = cd, so a and b are never determined individually.
struct RecoveryResult {
  cplx ab_estimate{};
  /// (n, (lambda_n - (2 pi n + t)^2) * 2 (2 pi n + t)^2), ordered by |2 pi n + t|.
  std::vector<std::pair<int, cplx>> convergence_sequence;
  bool extrapolated = false;
  /// Slope of log|estimate_n - ab_estimate| against log|n|.
  double residual_decay_exponent = 0.0;
  /// Set when t = pi, where the same limit formula is applied by analogy
  /// with 0 < t < pi rather than from an explicit expansion.
  bool boundary_reading = false;
};

/// Each entry gives estimate_n = (lambda_n - (2 pi n + t)^2) * 2 (2 pi n + t)^2,
/// which tends to ab. The limit is extrapolated by least squares on
///   estimate_n = ab + c_1 x_n + c_2 x_n^2,   x_n = 2 pi / |2 pi n + t| (~ 1/|n|).
/// Needs at least 4 distinct indices (n = 0 is dropped when t = 0) and
/// t in [0, pi]. A sequence whose last increments grow beyond the rounding
/// level of the data raises NoisyData.
RecoveryResult recover_ab(const std::vector<IndexedEigenvalue>& eigs, double t);

}  // namespace hillspec
