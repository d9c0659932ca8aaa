#include "hillspec/floquet.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "hillspec/error.hpp"
#include "hillspec/parallel.hpp"

namespace hillspec {
namespace {

// theta, theta', phi, phi', and their lambda-derivatives in the same order.
using State = std::array<cplx, 8>;

inline State rhs(const State& y, cplx w) {
  return {y[1], w * y[0], y[3], w * y[2],
          y[5], w * y[4] - y[0], y[7], w * y[6] - y[2]};
}

inline State axpy(const State& y, double h, const State& k) {
  State r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = y[i] + h * k[i];
  return r;
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

MonodromyResult combine(const MonodromyResult& coarse, const MonodromyResult& fine) {
  auto rx = [](cplx c, cplx f) { return (16.0 * f - c) / 15.0; };
  MonodromyResult r;
  r.theta1 = rx(coarse.theta1, fine.theta1);
  r.theta1p = rx(coarse.theta1p, fine.theta1p);
  r.phi1 = rx(coarse.phi1, fine.phi1);
  r.phi1p = rx(coarse.phi1p, fine.phi1p);
  r.dtheta1 = rx(coarse.dtheta1, fine.dtheta1);
  r.dphi1p = rx(coarse.dphi1p, fine.dphi1p);
  r.step_count = fine.step_count;
  return r;
}

DiscriminantSample sample_of(cplx lambda, const MonodromyResult& m) {
  return {lambda, m.discriminant(), m.discriminant_derivative(), m};
}

}  // namespace

MonodromyResult monodromy(const FourierPotential& p, cplx lambda, int steps) {
  if (steps < 64) raise(ErrorKind::InvalidArgument, "monodromy: steps must be >= 64");
  if (!finite(lambda)) raise(ErrorKind::InvalidArgument, "monodromy: non-finite lambda");
  if (!p.is_finite()) raise(ErrorKind::InvalidArgument, "monodromy: non-finite potential coefficient");

  const double h = 1.0 / steps;
  // q - lambda on the half-step grid.
  std::vector<cplx> w(2 * static_cast<std::size_t>(steps) + 1);
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = p(0.5 * h * static_cast<double>(j)) - lambda;

  State y{cplx{1.0}, cplx{}, cplx{}, cplx{1.0}, cplx{}, cplx{}, cplx{}, cplx{}};
  for (int i = 0; i < steps; ++i) {
    const cplx w0 = w[2 * i];
    const cplx wm = w[2 * i + 1];
    const cplx w1 = w[2 * i + 2];
    const State k1 = rhs(y, w0);
    const State k2 = rhs(axpy(y, 0.5 * h, k1), wm);
    const State k3 = rhs(axpy(y, 0.5 * h, k2), wm);
    const State k4 = rhs(axpy(y, h, k3), w1);
    for (std::size_t c = 0; c < y.size(); ++c) {
      y[c] += (h / 6.0) * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    }
  }
  return {y[0], y[1], y[2], y[3], y[4], y[7], steps};
}

int default_step_count(const FourierPotential& p, cplx lambda) {
  const double k = std::sqrt(std::abs(lambda) + p.l1_norm()) + kTwoPi * p.bandwidth();
  const int scale = std::max(1, static_cast<int>(std::ceil(k / kPi)));
  return 1024 * scale;
}

DiscriminantSample discriminant_at(const FourierPotential& p, cplx lambda, int steps) {
  const MonodromyResult coarse = monodromy(p, lambda, steps);
  const MonodromyResult fine = monodromy(p, lambda, 2 * steps);
  return sample_of(lambda, combine(coarse, fine));
}

DiscriminantSample discriminant(const FourierPotential& p, cplx lambda,
                                const DiscriminantOptions& opts) {
  int steps = opts.initial_steps > 0 ? opts.initial_steps : default_step_count(p, lambda);
  MonodromyResult coarse = monodromy(p, lambda, steps);
  for (int d = 0; d < opts.max_doublings; ++d) {
    MonodromyResult fine = monodromy(p, lambda, 2 * steps);
    const cplx fc = coarse.discriminant();
    const cplx ff = fine.discriminant();
    if (std::abs(ff - fc) < opts.rel_tol * std::max(1.0, std::abs(ff))) {
      return sample_of(lambda, combine(coarse, fine));
    }
    coarse = std::move(fine);
    steps *= 2;
  }
  raise(ErrorKind::NonConvergence,
        "discriminant: Richardson test failed after " + std::to_string(opts.max_doublings) +
            " doublings at lambda=(" + std::to_string(lambda.real()) + "," +
            std::to_string(lambda.imag()) + ")");
}

bool near_resonant_index(double t, int n) {
  t = normalize_quasimomentum(t);
  if (std::abs(std::sin(t)) >= 0.05) return false;
  const int mirror = -n - static_cast<int>(std::lround(t / kPi));
  if (mirror == n) return false;
  return std::abs(free_eigenvalue(n, t) - free_eigenvalue(mirror, t)) < 1.0;
}

SpectrumEntry eigenvalue_by_discriminant(const QuasiProblem& prob, int n,
                                         const RootSearchOptions& opts) {
  if (near_resonant_index(prob.t, n)) {
    raise(ErrorKind::DegenerateCluster,
          "eigenvalue_by_discriminant: index " + std::to_string(n) +
              " nearly coincides with its mirror seed at t=" + std::to_string(prob.t) +
              "; use the matrix method");
  }
  const double seed = free_eigenvalue(n, prob.t);
  const double radius = std::max(opts.escape_floor, std::abs(n) * opts.rho);
  const cplx target{std::cos(prob.t), 0.0};

  // Fix the step count at the seed so that Newton sees one smooth function.
  const int steps = discriminant(prob.potential, cplx{seed}, opts.discriminant)
                        .monodromy.step_count / 2;

  cplx lambda{seed};
  for (int it = 0; it < opts.max_iterations; ++it) {
    const DiscriminantSample s = discriminant_at(prob.potential, lambda, steps);
    const cplx g = s.f_value - target;
    if (std::abs(g) < opts.residual_tol) {
      return {n, lambda, std::abs(g), Method::floquet};
    }
    if (s.f_derivative == cplx{}) {
      raise(ErrorKind::NonConvergence,
            "eigenvalue_by_discriminant: vanishing dF/dlambda at index " + std::to_string(n));
    }
    lambda -= g / s.f_derivative;
    if (!finite(lambda) || std::abs(lambda - seed) > radius) {
      raise(ErrorKind::RootEscape, "eigenvalue_by_discriminant: Newton iterate for index " +
                                       std::to_string(n) + " left the seed disk of radius " +
                                       std::to_string(radius));
    }
  }
  raise(ErrorKind::NonConvergence, "eigenvalue_by_discriminant: no convergence for index " +
                                       std::to_string(n) + " after " +
                                       std::to_string(opts.max_iterations) + " iterations");
}

SpectrumSlice eigenvalues_by_discriminant(const QuasiProblem& prob, IndexRange n_range,
                                          const RootSearchOptions& opts, unsigned threads) {
  SpectrumSlice slice;
  slice.t = prob.t;
  slice.potential_id = prob.potential.fingerprint();
  slice.entries.resize(static_cast<std::size_t>(n_range.size()));
  parallel_for(slice.entries.size(), threads, [&](std::size_t i) {
    slice.entries[i] = eigenvalue_by_discriminant(prob, n_range.lo + static_cast<int>(i), opts);
  });
  return slice;
}

}  // namespace hillspec
