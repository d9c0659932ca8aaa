#pragma once

#include <complex>
#include <numbers>

namespace hillspec {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Closed integer interval [lo, hi].
struct IndexRange {
  int lo = 0;
  int hi = 0;

  [[nodiscard]] bool empty() const { return hi < lo; }
  [[nodiscard]] int size() const { return empty() ? 0 : hi - lo + 1; }
  [[nodiscard]] bool contains(int n) const { return n >= lo && n <= hi; }
  [[nodiscard]] int max_abs() const;
};

/// Unperturbed Floquet eigenvalue (2πn + t)^2.
inline double free_eigenvalue(int n, double t) {
  const double k = kTwoPi * n + t;
  return k * k;
}

}  // namespace hillspec
