#pragma once

#include <cstdint>
#include <vector>

#include "hillspec/potential.hpp"
#include "hillspec/spectrum.hpp"

namespace hillspec {

/// Finite section of H_t in the basis exp(i(2 pi m + t)x), m = index_map[k].
///
/// Entry (k, k - j) is lower[j-1] and entry (k, k + j) is upper[j-1]. For the
/// Fourier problem lower[j-1] = q_j and upper[j-1] = q_{-j}, so in the
/// two-mode case upper[0] = a (the exp(-i 2 pi x) coefficient) and
/// lower[0] = b.
struct OperatorMatrix {
  std::vector<cplx> diag;
  std::vector<int> index_map;
  std::vector<cplx> lower;
  std::vector<cplx> upper;
  double t = 0.0;
  std::uint64_t potential_id = 0;

  [[nodiscard]] std::size_t size() const { return diag.size(); }
  [[nodiscard]] int bandwidth() const;
  [[nodiscard]] bool is_tridiagonal() const { return bandwidth() <= 1; }
  /// No coupling on one side of the diagonal.
  [[nodiscard]] bool is_triangular() const;
  /// a coefficient (upper[0]) and b coefficient (lower[0]) of a tridiagonal matrix.
  [[nodiscard]] cplx sub() const { return upper.empty() ? cplx{} : upper[0]; }
  [[nodiscard]] cplx sup() const { return lower.empty() ? cplx{} : lower[0]; }
  [[nodiscard]] cplx coupling_product() const { return sub() * sup(); }
};

/// N = 2 half_width + 1 rows, m = -half_width..half_width. Potentials whose
/// support exceeds `bandwidth` are rejected with UnsupportedPotential.
OperatorMatrix build_matrix(const QuasiProblem& prob, int half_width, int bandwidth = 1);

/// Period-pi Mathieu problem with potential a exp(-2ix) + b exp(2ix):
/// diagonal m^2 over m of the given parity, couplings shifting m by 2.
OperatorMatrix build_mathieu_scaled_matrix(cplx a, cplx b, int parity, int half_width);

/// det(M - lambda I) and its derivative, both equal to mantissa * 2^exponent.
struct CharpolyValue {
  cplx value{};
  cplx derivative{};
  int exponent = 0;

  [[nodiscard]] cplx full_value() const;
  [[nodiscard]] cplx full_derivative() const;
  /// p / p'; the scale cancels.
  [[nodiscard]] cplx newton_ratio() const;
};

/// Tridiagonal (and triangular) matrices use the three-term recurrence
///   f_k = (d_k - lambda) f_{k-1} - (sub * sup) f_{k-2},
/// which sees the couplings only through their product. Wider two-sided bands
/// fall back to banded LU with partial pivoting in forward-mode dual numbers.
CharpolyValue charpoly_eval(const OperatorMatrix& m, cplx lambda);

struct AberthOptions {
  /// Newton-correction residual |p/p'| accepted for every root.
  double tol = 1e-10;
  int max_sweeps = 200;
  /// Extra sweeps after acceptance to settle at rounding level.
  int polish_sweeps = 3;
};

/// Simultaneous Aberth-Ehrlich iteration on the characteristic polynomial,
/// seeded at the diagonal. Returns roots in seed order and their residuals.
std::vector<cplx> aberth_roots(const OperatorMatrix& m, std::vector<cplx> seeds,
                               const AberthOptions& opts, std::vector<double>* residuals = nullptr);

/// One-to-one greedy assignment of values to diagonal positions by distance.
/// Result[i] is the diagonal position assigned to values[i].
std::vector<std::size_t> assign_to_diagonal(const std::vector<cplx>& values,
                                            const std::vector<cplx>& diag);

/// All N eigenvalues, each labeled by the Fourier index of the diagonal entry
/// it was matched to.
SpectrumSlice all_eigenvalues(const OperatorMatrix& m, const AberthOptions& opts = {});

struct PeriodicPair {
  cplx lambda_plus{};
  cplx lambda_minus{};
};

/// The two eigenvalues of the period-pi Mathieu problem assigned to m = +n and
/// m = -n (periodic for even n, antiperiodic for odd n). lambda_plus has the
/// larger real part, ties broken by the larger imaginary part.
PeriodicPair periodic_pair(cplx a, cplx b, int n, int half_width,
                           const AberthOptions& opts = {});

}  // namespace hillspec
