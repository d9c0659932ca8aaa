#pragma once

#include <vector>

#include "hillspec/potential.hpp"

namespace hillspec {

/// d_p(t) = ((2 pi n + t)^2 - (2 pi (n + p) + t)^2)^{-1}, evaluated through the
/// factored form -1 / (2 pi p (2 pi (2n + p) + 2t)). Vanishes only at the
/// resonances t in {0, pi}, where VanishingDenominator is raised.
double d_factor(int n, double t, int p);

/// Eigenfunction coefficient c_p(t) of a one-sided potential as the finite
/// nested sum over compositions of |p|. For a negative-sided potential p must
/// be negative. Exponential in |p|; meant for cross-checking c_recursive.
cplx c_closed_form(int p, int n, double t, const FourierPotential& q);

/// c_1..c_P (c_{-1}..c_{-P} for a negative-sided potential) from
///   c_p = d_p sum_{j} q_j c_{p-j},  c_0 = 1.
std::vector<cplx> c_recursive(int order, int n, double t, const FourierPotential& q);

/// Psi_{n,t}(x) = exp(i(2 pi n + t)x) + sum_p c_p exp(i(2 pi (n + p) + t)x),
/// normalized so that the coefficient of exp(i(2 pi n + t)x) is 1. For a
/// negative-sided potential the sum runs over p = -1, -2, ...
struct GasymovEigenfunction {
  int n = 0;
  double t = 0.0;
  Orientation orientation = Orientation::positive;
  /// coefficients[k] is c_{(k+1) * sign}.
  std::vector<cplx> coefficients;

  [[nodiscard]] int order() const { return static_cast<int>(coefficients.size()); }
  [[nodiscard]] int sign() const { return orientation == Orientation::negative ? -1 : 1; }
  /// Fourier index of coefficients[k].
  [[nodiscard]] int index_of(std::size_t k) const { return n + sign() * static_cast<int>(k + 1); }
  /// |c_P|, the size of the last retained coefficient.
  [[nodiscard]] double tail_magnitude() const;
};

inline constexpr int kDefaultGasymovOrder = 25;

GasymovEigenfunction gasymov_eigenfunction(const FourierPotential& q, int n, double t,
                                           int order = kDefaultGasymovOrder);

cplx synthesize(const GasymovEigenfunction& ef, double x);

/// max over x_j = j / samples of |-Psi'' + q Psi - (2 pi n + t)^2 Psi|, with
/// Psi'' differentiated term by term.
double residual(const GasymovEigenfunction& ef, const FourierPotential& q, int samples);

}  // namespace hillspec
