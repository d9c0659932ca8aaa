#include "hillspec/inverse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "hillspec/error.hpp"

namespace hillspec {
namespace {

struct Point {
  int n;
  double x;      // 2 pi / |2 pi n + t|
  double noise;  // rounding level of estimate_n
  cplx estimate;
};

// Solves the 3x3 normal equations of a quadratic least-squares fit in x for
// the real and imaginary parts together; returns the intercept.
cplx quadratic_intercept(const std::vector<Point>& pts) {
  std::array<std::array<double, 3>, 3> g{};
  std::array<cplx, 3> rhs{};
  // Rescaling x to [0, 1] leaves the intercept unchanged and keeps the Gram
  // matrix well conditioned.
  double x_max = 0.0;
  for (const auto& p : pts) x_max = std::max(x_max, p.x);
  for (const auto& p : pts) {
    const double u = p.x / x_max;
    const std::array<double, 3> row{1.0, u, u * u};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) g[i][j] += row[i] * row[j];
      rhs[i] += row[i] * p.estimate;
    }
  }
  // Gaussian elimination with partial pivoting.
  for (int k = 0; k < 3; ++k) {
    int piv = k;
    for (int r = k + 1; r < 3; ++r) {
      if (std::abs(g[r][k]) > std::abs(g[piv][k])) piv = r;
    }
    std::swap(g[k], g[piv]);
    std::swap(rhs[k], rhs[piv]);
    for (int r = k + 1; r < 3; ++r) {
      const double f = g[r][k] / g[k][k];
      for (int c = k; c < 3; ++c) g[r][c] -= f * g[k][c];
      rhs[r] -= f * rhs[k];
    }
  }
  std::array<cplx, 3> sol{};
  for (int k = 2; k >= 0; --k) {
    cplx s = rhs[k];
    for (int c = k + 1; c < 3; ++c) s -= g[k][c] * sol[c];
    sol[k] = s / g[k][k];
  }
  return sol[0];
}

}  // namespace

RecoveryResult recover_ab(const std::vector<IndexedEigenvalue>& eigs, double t) {
  if (!(t >= 0.0 && t <= kPi)) raise(ErrorKind::InvalidArgument, "recover_ab: t must lie in [0, pi]");

  std::set<int> seen;
  std::vector<Point> pts;
  for (const auto& e : eigs) {
    if (!seen.insert(e.n).second) {
      raise(ErrorKind::InvalidArgument, "recover_ab: duplicate index " + std::to_string(e.n));
    }
    const double k = kTwoPi * e.n + t;
    if (k == 0.0) continue;  // n = 0 at t = 0 carries no information
    const double d = k * k;
    const cplx estimate = (e.lambda - d) * (2.0 * d);
    const double noise = 2.0 * d * std::numeric_limits<double>::epsilon() * std::abs(e.lambda);
    pts.push_back({e.n, kTwoPi / std::abs(k), noise, estimate});
  }
  if (pts.size() < 4) {
    raise(ErrorKind::InsufficientData, "recover_ab: need at least 4 usable eigenvalues, got " +
                                           std::to_string(pts.size()));
  }
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return p.x > q.x; });

  const std::size_t m = pts.size();
  const double prev = std::abs(pts[m - 2].estimate - pts[m - 3].estimate);
  const double last = std::abs(pts[m - 1].estimate - pts[m - 2].estimate);
  const double floor = 16.0 * std::max(pts[m - 1].noise, pts[m - 2].noise);
  if (last > prev && last > floor) {
    raise(ErrorKind::NoisyData, "recover_ab: estimate sequence is not contracting over its last entries");
  }

  RecoveryResult r;
  r.boundary_reading = (t == kPi);
  for (const auto& p : pts) r.convergence_sequence.emplace_back(p.n, p.estimate);
  r.ab_estimate = quadratic_intercept(pts);
  r.extrapolated = true;

  // log-log slope of the residuals against |n|.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (const auto& p : pts) {
    const double res = std::abs(p.estimate - r.ab_estimate);
    if (res <= 0.0) continue;
    const double lx = std::log(1.0 / p.x);
    const double ly = std::log(res);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count >= 2) {
    const double denom = count * sxx - sx * sx;
    if (denom != 0.0) r.residual_decay_exponent = (count * sxy - sx * sy) / denom;
  }
  return r;
}

}  // namespace hillspec
