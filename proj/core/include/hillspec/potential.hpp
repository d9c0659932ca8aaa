#pragma once

#include <cstdint>
#include <map>

#include "hillspec/types.hpp"

namespace hillspec {

/// Trigonometric-polynomial potential q(x) = sum_n q_n exp(i 2 pi n x)
/// with period 1. Zero coefficients are never stored.
class FourierPotential {
 public:
  FourierPotential() = default;
  explicit FourierPotential(const std::map<int, cplx>& coeffs);

  [[nodiscard]] cplx coeff(int n) const;
  [[nodiscard]] const std::map<int, cplx>& coeffs() const { return coeffs_; }

  /// Support bounds; both are 0 for the zero potential.
  [[nodiscard]] int min_index() const;
  [[nodiscard]] int max_index() const;
  /// max |n| over the support.
  [[nodiscard]] int bandwidth() const;

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_finite() const;
  /// Sum of |q_n|.
  [[nodiscard]] double l1_norm() const;

  [[nodiscard]] cplx operator()(double x) const;

  /// Stable 64-bit FNV-1a fingerprint of the coefficient table.
  [[nodiscard]] std::uint64_t fingerprint() const;

  friend bool operator==(const FourierPotential&, const FourierPotential&) = default;

 private:
  std::map<int, cplx> coeffs_;
};

/// q(x) = a exp(-i 2 pi x) + b exp(i 2 pi x).
FourierPotential make_mathieu(cplx a, cplx b);

cplx evaluate(const FourierPotential& p, double x);

enum class Orientation { positive, negative, neither };

/// One-sided ("Gasymov") classification. The zero potential is reported as
/// positive-sided.
Orientation gasymov_orientation(const FourierPotential& p);
inline bool is_gasymov(const FourierPotential& p) {
  return gasymov_orientation(p) != Orientation::neither;
}

/// Maps t into (-pi, pi].
double normalize_quasimomentum(double t);

/// The fiber operator H_t: potential plus quasimomentum, with the boundary
/// condition y(1) = exp(it) y(0).
struct QuasiProblem {
  FourierPotential potential;
  double t = 0.0;

  QuasiProblem() = default;
  QuasiProblem(FourierPotential p, double quasimomentum)
      : potential(std::move(p)), t(normalize_quasimomentum(quasimomentum)) {}
};

}  // namespace hillspec
