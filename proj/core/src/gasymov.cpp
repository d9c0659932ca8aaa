#include "hillspec/gasymov.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hillspec/error.hpp"

namespace hillspec {
namespace {

int orientation_sign(const FourierPotential& q, const char* where) {
  switch (gasymov_orientation(q)) {
    case Orientation::positive: return 1;
    case Orientation::negative: return -1;
    case Orientation::neither: break;
  }
  raise(ErrorKind::UnsupportedPotential, std::string(where) + ": potential is not one-sided");
}

// Sum over compositions (m_1, ..., m_k, last) of `remaining` of
//   q_{s m_1} ... q_{s m_k} q_{s last} * prod_j d_{s (remaining after j parts)}.
cplx composition_sum(int remaining, int sign, int n, double t, const FourierPotential& q) {
  cplx sum = q.coeff(sign * remaining);
  for (int first = 1; first < remaining; ++first) {
    const cplx qf = q.coeff(sign * first);
    if (qf == cplx{}) continue;
    const int rest = remaining - first;
    sum += qf * d_factor(n, t, sign * rest) * composition_sum(rest, sign, n, t, q);
  }
  return sum;
}

}  // namespace

double d_factor(int n, double t, int p) {
  if (p == 0) raise(ErrorKind::InvalidArgument, "d_factor: p must be nonzero");
  const double bracket = kTwoPi * (2.0 * n + p) + 2.0 * t;
  if (std::abs(bracket) < 1e-12) {
    raise(ErrorKind::VanishingDenominator, "d_factor: resonance at n=" + std::to_string(n) +
                                               ", p=" + std::to_string(p) +
                                               ", t=" + std::to_string(t));
  }
  return -1.0 / (kTwoPi * p * bracket);
}

cplx c_closed_form(int p, int n, double t, const FourierPotential& q) {
  const int sign = orientation_sign(q, "c_closed_form");
  if (p == 0 || (p > 0) != (sign > 0)) {
    raise(ErrorKind::InvalidArgument, "c_closed_form: p must be nonzero with the potential's orientation");
  }
  return d_factor(n, t, p) * composition_sum(std::abs(p), sign, n, t, q);
}

std::vector<cplx> c_recursive(int order, int n, double t, const FourierPotential& q) {
  const int sign = orientation_sign(q, "c_recursive");
  if (order < 1) raise(ErrorKind::InvalidArgument, "c_recursive: order must be positive");
  // c[j] holds c_{sign * j}; c[0] = 1 is the normalization.
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1.0;
  for (int j = 1; j <= order; ++j) {
    cplx s{};
    for (const auto& [idx, qi] : q.coeffs()) {
      const int i = sign * idx;  // >= 1 for a one-sided potential
      if (i <= j) s += qi * c[static_cast<std::size_t>(j - i)];
    }
    c[static_cast<std::size_t>(j)] = d_factor(n, t, sign * j) * s;
  }
  c.erase(c.begin());
  return c;
}

double GasymovEigenfunction::tail_magnitude() const {
  return coefficients.empty() ? 0.0 : std::abs(coefficients.back());
}

GasymovEigenfunction gasymov_eigenfunction(const FourierPotential& q, int n, double t, int order) {
  GasymovEigenfunction ef;
  ef.n = n;
  ef.t = t;
  ef.orientation = gasymov_orientation(q);
  ef.coefficients = c_recursive(order, n, t, q);
  return ef;
}

cplx synthesize(const GasymovEigenfunction& ef, double x) {
  cplx sum = std::polar(1.0, (kTwoPi * ef.n + ef.t) * x);
  for (std::size_t k = 0; k < ef.coefficients.size(); ++k) {
    sum += ef.coefficients[k] * std::polar(1.0, (kTwoPi * ef.index_of(k) + ef.t) * x);
  }
  return sum;
}

double residual(const GasymovEigenfunction& ef, const FourierPotential& q, int samples) {
  if (samples < 32) raise(ErrorKind::InvalidArgument, "residual: samples must be >= 32");
  const double lambda = free_eigenvalue(ef.n, ef.t);
  double worst = 0.0;
  for (int j = 0; j < samples; ++j) {
    const double x = static_cast<double>(j) / samples;
    // -Psi'' - lambda Psi, term by term: each mode contributes (k_m^2 - lambda).
    cplx r{};
    cplx psi = std::polar(1.0, (kTwoPi * ef.n + ef.t) * x);
    for (std::size_t k = 0; k < ef.coefficients.size(); ++k) {
      const int m = ef.index_of(k);
      const cplx mode = ef.coefficients[k] * std::polar(1.0, (kTwoPi * m + ef.t) * x);
      r += (free_eigenvalue(m, ef.t) - lambda) * mode;
      psi += mode;
    }
    r += q(x) * psi;
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

}  // namespace hillspec
