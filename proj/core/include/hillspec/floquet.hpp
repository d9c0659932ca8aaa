#pragma once

#include "hillspec/potential.hpp"
#include "hillspec/spectrum.hpp"

namespace hillspec {

/// Endpoint data of the fundamental system of -y'' + q y = lambda y at x = 1,
/// with theta(0)=1, theta'(0)=0, phi(0)=0, phi'(0)=1, plus lambda-derivatives
/// of theta(1) and phi'(1).
struct MonodromyResult {
  cplx theta1{};
  cplx theta1p{};
  cplx phi1{};
  cplx phi1p{};
  cplx dtheta1{};
  cplx dphi1p{};
  int step_count = 0;

  /// theta phi' - theta' phi; equals 1 for the exact flow.
  [[nodiscard]] cplx wronskian() const { return theta1 * phi1p - theta1p * phi1; }
  /// Hill discriminant F = (theta(1) + phi'(1)) / 2.
  [[nodiscard]] cplx discriminant() const { return 0.5 * (theta1 + phi1p); }
  [[nodiscard]] cplx discriminant_derivative() const { return 0.5 * (dtheta1 + dphi1p); }
};

/// Fixed-step classical RK4 over [0,1] with `steps` steps (>= 64), carrying
/// the variational system for d/dlambda alongside.
MonodromyResult monodromy(const FourierPotential& p, cplx lambda, int steps);

struct DiscriminantSample {
  cplx lambda{};
  cplx f_value{};
  cplx f_derivative{};
  MonodromyResult monodromy;
};

struct DiscriminantOptions {
  double rel_tol = 1e-10;
  int max_doublings = 8;
  /// 0 selects default_step_count().
  int initial_steps = 0;
};

/// 1024 * ceil(k / pi) where k bounds the local wavenumber of the solutions.
int default_step_count(const FourierPotential& p, cplx lambda);

/// F(lambda) with its derivative. The step count doubles until the N and 2N
/// values agree to rel_tol * max(1, |F|); the returned monodromy data is the
/// Richardson combination (16 M_2N - M_N) / 15 of the last pair.
DiscriminantSample discriminant(const FourierPotential& p, cplx lambda,
                                const DiscriminantOptions& opts = {});

/// Richardson-combined discriminant at a fixed base step count (no adaptivity).
DiscriminantSample discriminant_at(const FourierPotential& p, cplx lambda, int steps);

struct RootSearchOptions {
  double residual_tol = 1e-10;
  int max_iterations = 60;
  /// Separation constant of the escape disk |lambda - (2 pi n + t)^2| <= max(floor, |n| rho).
  double rho = 0.1;
  double escape_floor = 4.0;
  DiscriminantOptions discriminant;
};

/// True when the seed for index n nearly coincides with its mirror seed
/// (t close to 0 or pi), where Newton on F(lambda) = cos t cannot separate
/// the two eigenvalues. Such indices are refused with DegenerateCluster.
bool near_resonant_index(double t, int n);

/// Newton iteration on F(lambda) - cos t seeded at (2 pi n + t)^2.
SpectrumEntry eigenvalue_by_discriminant(const QuasiProblem& prob, int n,
                                         const RootSearchOptions& opts = {});

/// Independent searches for every n in the range; `threads` > 1 runs them
/// concurrently with identical results.
SpectrumSlice eigenvalues_by_discriminant(const QuasiProblem& prob, IndexRange n_range,
                                          const RootSearchOptions& opts = {},
                                          unsigned threads = 1);

}  // namespace hillspec
