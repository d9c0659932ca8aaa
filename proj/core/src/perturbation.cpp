#include "hillspec/perturbation.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "hillspec/error.hpp"

namespace hillspec {
namespace {

void check_order(int k, const char* where) {
  if (k < 1 || k > kMaxSeriesOrder) {
    raise(ErrorKind::InvalidArgument, std::string(where) + ": order k must be in [1, " +
                                          std::to_string(kMaxSeriesOrder) + "]");
  }
}

std::string describe(SignPath path, int k) {
  std::string s = "(";
  for (int i = 0; i < k; ++i) {
    if (i) s += ",";
    s += path_step(path, i) > 0 ? "1" : "-1";
  }
  return s + ")";
}

}  // namespace

std::vector<SignPath> enumerate_paths(int k) {
  check_order(k, "enumerate_paths");
  std::vector<SignPath> out;
  const SignPath count = SignPath{1} << k;
  for (SignPath path = 0; path < count; ++path) {
    int sigma = 0;
    bool ok = true;
    for (int s = 0; s < k && ok; ++s) {
      sigma += path_step(path, s);
      ok = sigma != 0;
    }
    if (ok && (sigma == 1 || sigma == -1)) out.push_back(path);
  }
  return out;
}

const std::vector<SignPath>& coefficient_paths(int k) {
  check_order(k, "coefficient_paths");
  static std::array<std::once_flag, kMaxSeriesOrder + 1> once;
  static std::array<std::vector<SignPath>, kMaxSeriesOrder + 1> cache;
  const auto idx = static_cast<std::size_t>(k);
  std::call_once(once[idx], [k, idx] { cache[idx] = enumerate_paths(k); });
  return cache[idx];
}

cplx a_coefficient(int k, int n, double t, cplx a, cplx b, cplx lambda) {
  check_order(k, "a_coefficient");
  if (k % 2 == 0) {
    raise(ErrorKind::InvalidArgument,
          "a_coefficient: even orders vanish identically (closing index is even)");
  }
  // lambda - (2 pi (n - sigma) + t)^2 for sigma in [-k, k].
  std::vector<cplx> den(2 * static_cast<std::size_t>(k) + 1);
  for (int sigma = -k; sigma <= k; ++sigma) {
    den[static_cast<std::size_t>(sigma + k)] = lambda - free_eigenvalue(n - sigma, t);
  }

  cplx sum{};
  for (SignPath path : coefficient_paths(k)) {
    cplx weight{1.0};
    cplx denominator{1.0};
    int sigma = 0;
    for (int s = 0; s < k; ++s) {
      const int step = path_step(path, s);
      weight *= step > 0 ? b : a;
      sigma += step;
      const cplx d = den[static_cast<std::size_t>(sigma + k)];
      if (d == cplx{}) {
        raise(ErrorKind::VanishingDenominator,
              "a_coefficient: denominator vanishes on path " + describe(path, k) +
                  " at s=" + std::to_string(s + 1));
      }
      denominator *= d;
    }
    weight *= sigma > 0 ? a : b;  // closing coefficient q_{-sigma}
    sum += weight / denominator;
  }
  return sum;
}

SeriesTerm series_term(int p, int n, double t, cplx a, cplx b, cplx lambda) {
  SeriesTerm term;
  term.p = p;
  const int k = 2 * p - 1;
  term.path_count = coefficient_paths(k).size();
  term.value = a_coefficient(k, n, t, a, b, lambda);
  const cplx ab = a * b;
  if (ab != cplx{}) term.f_value = term.value / (std::ldexp(1.0, k) * std::pow(ab, p));
  return term;
}

SeriesValue a_series(int n, double t, cplx a, cplx b, cplx lambda, double tol, int p_max) {
  if (!(tol >= 1e-14)) raise(ErrorKind::InvalidArgument, "a_series: tol must be >= 1e-14");
  if (p_max < 1 || p_max > kMaxHalfOrder) {
    raise(ErrorKind::InvalidArgument, "a_series: p_max must be in [1, 12]");
  }
  if (a * b == cplx{}) return {cplx{}, 1, 0.0};

  cplx sum{};
  int below = 0;
  int rising = 0;
  double previous = 0.0;
  for (int p = 1; p <= p_max; ++p) {
    const cplx term = a_coefficient(2 * p - 1, n, t, a, b, lambda);
    const double mag = std::abs(term);
    sum += term;
    below = mag < tol * std::max(1.0, std::abs(sum)) ? below + 1 : 0;
    if (below == 2) return {sum, p, mag};
    rising = (p > 1 && mag > previous) ? rising + 1 : 0;
    if (rising == 2) {
      raise(ErrorKind::SeriesDiverging, "a_series: three consecutive terms grow in magnitude at p=" +
                                            std::to_string(p) + " for n=" + std::to_string(n));
    }
    previous = mag;
  }
  raise(ErrorKind::NonConvergence,
        "a_series: truncation tolerance not reached by p_max=" + std::to_string(p_max));
}

cplx eigenvalue_by_series(int n, double t, cplx a, cplx b, double tol,
                          std::vector<cplx>* iterates) {
  if (!(tol > 0.0)) raise(ErrorKind::InvalidArgument, "eigenvalue_by_series: tol must be positive");
  const double center = free_eigenvalue(n, t);
  cplx lambda{center};
  if (iterates) iterates->assign(1, lambda);
  // A vanishes identically when ab = 0, for every n and t.
  if (a * b == cplx{}) return lambda;

  if (!(t >= 0.1 && t <= kPi - 0.1)) {
    raise(ErrorKind::InvalidArgument, "eigenvalue_by_series: t must lie in [0.1, pi - 0.1]");
  }
  if (std::abs(n) < 5) raise(ErrorKind::InvalidArgument, "eigenvalue_by_series: requires |n| >= 5");

  constexpr int kMaxIterations = 50;
  constexpr double kSeriesTol = 1e-14;
  for (int j = 0; j < kMaxIterations; ++j) {
    const cplx next = center + a_series(n, t, a, b, lambda, kSeriesTol).value;
    if (iterates) iterates->push_back(next);
    if (std::abs(next - center) > 1.0) {
      raise(ErrorKind::LeftDisk, "eigenvalue_by_series: iterate left |lambda - (2 pi n + t)^2| <= 1 for n=" +
                                     std::to_string(n));
    }
    const double change = std::abs(next - lambda);
    lambda = next;
    if (change < tol) return lambda;
  }
  raise(ErrorKind::NonConvergence, "eigenvalue_by_series: no convergence after 50 iterations for n=" +
                                       std::to_string(n));
}

cplx asymptotic_eigenvalue(int n, double t, cplx ab) {
  const double d = free_eigenvalue(n, t);
  if (d == 0.0) raise(ErrorKind::InvalidArgument, "asymptotic_eigenvalue: (2 pi n + t)^2 must be nonzero");
  return d + ab / (2.0 * d);
}

}  // namespace hillspec
