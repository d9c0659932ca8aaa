#include "hillspec/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>
#include <array>

#include "hillspec/error.hpp"

namespace hillspec {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool all_zero(const std::vector<cplx>& v) {
  return std::all_of(v.begin(), v.end(), [](cplx z) { return z == cplx{}; });
}

int trimmed_width(const std::vector<cplx>& v) {
  int w = static_cast<int>(v.size());
  while (w > 0 && v[static_cast<std::size_t>(w - 1)] == cplx{}) --w;
  return w;
}

// Keeps |x| within [2^-256, 2^256] by moving powers of two into `exponent`.
template <std::size_t K>
void rescale(std::array<cplx*, K> values, int& exponent) {
  double m = 0.0;
  for (cplx* v : values) m = std::max({m, std::abs(v->real()), std::abs(v->imag())});
  if (m == 0.0 || (m < 0x1p256 && m > 0x1p-256)) return;
  int e = 0;
  std::frexp(m, &e);
  for (cplx* v : values) *v = cplx{std::ldexp(v->real(), -e), std::ldexp(v->imag(), -e)};
  exponent += e;
}

CharpolyValue recurrence(const OperatorMatrix& m, cplx lambda, cplx coupling) {
  // f_{k-2}, f_{k-1} and their derivatives, starting from f_{-1} = 0, f_0 = 1.
  cplx f2{}, f1{1.0}, g2{}, g1{};
  int exponent = 0;
  for (const cplx& d : m.diag) {
    const cplx shifted = d - lambda;
    const cplx f = shifted * f1 - coupling * f2;
    const cplx g = -f1 + shifted * g1 - coupling * g2;
    f2 = f1;
    f1 = f;
    g2 = g1;
    g1 = g;
    rescale<4>({&f1, &f2, &g1, &g2}, exponent);
  }
  return {f1, g1, exponent};
}

struct Dual {
  cplx v;
  cplx d;
};

CharpolyValue banded_lu(const OperatorMatrix& m, cplx lambda) {
  const std::size_t n = m.size();
  const std::size_t bl = m.lower.size();
  const std::size_t bu = m.upper.size();
  std::vector<Dual> a(n * n, Dual{cplx{}, cplx{}});
  auto at = [&](std::size_t r, std::size_t c) -> Dual& { return a[r * n + c]; };
  for (std::size_t k = 0; k < n; ++k) {
    at(k, k) = {m.diag[k] - lambda, cplx{-1.0}};
    for (std::size_t j = 1; j <= bl && j <= k; ++j) at(k, k - j).v = m.lower[j - 1];
    for (std::size_t j = 1; j <= bu && k + j < n; ++j) at(k, k + j).v = m.upper[j - 1];
  }

  cplx mant{1.0};
  int exponent = 0;
  cplx log_derivative{};
  cplx zero_pivot_derivative{};
  int zero_pivots = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row_end = std::min(n, k + bl + 1);
    const std::size_t col_end = std::min(n, k + bl + bu + 1);
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < row_end; ++r) {
      if (std::abs(at(r, k).v) > std::abs(at(piv, k).v)) piv = r;
    }
    if (piv != k) {
      for (std::size_t c = k; c < col_end; ++c) std::swap(at(k, c), at(piv, c));
      mant = -mant;
    }
    const Dual p = at(k, k);
    if (p.v == cplx{}) {
      ++zero_pivots;
      zero_pivot_derivative = p.d;
      continue;
    }
    mant *= p.v;
    log_derivative += p.d / p.v;
    int e = 0;
    std::frexp(std::max(std::abs(mant.real()), std::abs(mant.imag())), &e);
    mant = cplx{std::ldexp(mant.real(), -e), std::ldexp(mant.imag(), -e)};
    exponent += e;
    for (std::size_t r = k + 1; r < row_end; ++r) {
      const Dual x = at(r, k);
      if (x.v == cplx{} && x.d == cplx{}) continue;
      const Dual l{x.v / p.v, (x.d * p.v - x.v * p.d) / (p.v * p.v)};
      for (std::size_t c = k; c < col_end; ++c) {
        const Dual u = at(k, c);
        at(r, c).v -= l.v * u.v;
        at(r, c).d -= l.d * u.v + l.v * u.d;
      }
    }
  }
  if (zero_pivots == 0) return {mant, mant * log_derivative, exponent};
  if (zero_pivots == 1) return {cplx{}, mant * zero_pivot_derivative, exponent};
  return {cplx{}, cplx{}, exponent};
}

}  // namespace

int OperatorMatrix::bandwidth() const {
  return std::max(trimmed_width(lower), trimmed_width(upper));
}

bool OperatorMatrix::is_triangular() const { return all_zero(lower) || all_zero(upper); }

cplx CharpolyValue::full_value() const {
  return {std::ldexp(value.real(), exponent), std::ldexp(value.imag(), exponent)};
}

cplx CharpolyValue::full_derivative() const {
  return {std::ldexp(derivative.real(), exponent), std::ldexp(derivative.imag(), exponent)};
}

cplx CharpolyValue::newton_ratio() const {
  if (value == cplx{}) return {};
  if (derivative == cplx{}) return {std::numeric_limits<double>::infinity(), 0.0};
  return value / derivative;
}

OperatorMatrix build_matrix(const QuasiProblem& prob, int half_width, int bandwidth) {
  if (half_width < 1) raise(ErrorKind::InvalidArgument, "build_matrix: half_width must be positive");
  if (bandwidth < 1) raise(ErrorKind::InvalidArgument, "build_matrix: bandwidth must be positive");
  const FourierPotential& q = prob.potential;
  if (q.bandwidth() > bandwidth) {
    raise(ErrorKind::UnsupportedPotential,
          "build_matrix: potential support reaches |n|=" + std::to_string(q.bandwidth()) +
              " but the declared bandwidth is " + std::to_string(bandwidth));
  }
  OperatorMatrix m;
  m.t = prob.t;
  m.potential_id = q.fingerprint();
  const std::size_t n = 2 * static_cast<std::size_t>(half_width) + 1;
  m.diag.reserve(n);
  m.index_map.reserve(n);
  for (int k = -half_width; k <= half_width; ++k) {
    m.index_map.push_back(k);
    // A constant term q_0 only shifts the diagonal.
    m.diag.emplace_back(free_eigenvalue(k, prob.t) + q.coeff(0));
  }
  const int width = std::max(1, q.bandwidth());
  m.lower.resize(static_cast<std::size_t>(width));
  m.upper.resize(static_cast<std::size_t>(width));
  for (int j = 1; j <= width; ++j) {
    m.lower[static_cast<std::size_t>(j - 1)] = q.coeff(j);
    m.upper[static_cast<std::size_t>(j - 1)] = q.coeff(-j);
  }
  return m;
}

OperatorMatrix build_mathieu_scaled_matrix(cplx a, cplx b, int parity, int half_width) {
  if (half_width < 1) raise(ErrorKind::InvalidArgument, "build_mathieu_scaled_matrix: half_width must be positive");
  parity = ((parity % 2) + 2) % 2;
  OperatorMatrix m;
  m.t = parity == 0 ? 0.0 : kPi;
  m.potential_id = make_mathieu(a, b).fingerprint();
  for (int j = -half_width - parity; j <= half_width; ++j) {
    const int idx = parity + 2 * j;
    m.index_map.push_back(idx);
    m.diag.emplace_back(static_cast<double>(idx) * idx);
  }
  m.lower = {b};
  m.upper = {a};
  return m;
}

CharpolyValue charpoly_eval(const OperatorMatrix& m, cplx lambda) {
  if (m.is_tridiagonal()) return recurrence(m, lambda, m.coupling_product());
  if (m.is_triangular()) return recurrence(m, lambda, cplx{});
  return banded_lu(m, lambda);
}

std::vector<cplx> aberth_roots(const OperatorMatrix& m, std::vector<cplx> z,
                               const AberthOptions& opts, std::vector<double>* residuals) {
  const std::size_t n = z.size();
  std::vector<double> res(n, std::numeric_limits<double>::infinity());
  auto sweep = [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx ratio = charpoly_eval(m, z[i]).newton_ratio();
      res[i] = std::abs(ratio);
      if (ratio != cplx{}) {
        cplx repulsion{};
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) repulsion += 1.0 / (z[i] - z[j]);
        }
        const cplx step = ratio / (1.0 - ratio * repulsion);
        if (std::isfinite(step.real()) && std::isfinite(step.imag())) z[i] -= step;
      }
      // Corrections below a few ulps of the root are rounding noise.
      const double floor = 8.0 * kEps * std::abs(z[i]);
      worst = std::max(worst, res[i] <= floor ? 0.0 : res[i]);
    }
    return worst;
  };

  bool converged = false;
  for (int s = 0; s < opts.max_sweeps; ++s) {
    if (sweep() < opts.tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::string failed;
    for (std::size_t i = 0; i < n; ++i) {
      if (res[i] >= opts.tol && res[i] > 8.0 * kEps * std::abs(z[i])) {
        if (!failed.empty()) failed += ",";
        failed += std::to_string(m.index_map.empty() ? static_cast<int>(i) : m.index_map[i]);
      }
    }
    raise(ErrorKind::NonConvergence, "all_eigenvalues: Aberth iteration did not converge in " +
                                         std::to_string(opts.max_sweeps) +
                                         " sweeps for seeds at indices [" + failed + "]");
  }
  for (int s = 0; s < opts.polish_sweeps; ++s) sweep();
  for (std::size_t i = 0; i < n; ++i) res[i] = std::abs(charpoly_eval(m, z[i]).newton_ratio());
  if (residuals) *residuals = std::move(res);
  return z;
}

std::vector<std::size_t> assign_to_diagonal(const std::vector<cplx>& values,
                                            const std::vector<cplx>& diag) {
  std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
  pairs.reserve(values.size() * diag.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t k = 0; k < diag.size(); ++k) {
      pairs.emplace_back(std::abs(values[i] - diag[k]), i, k);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> assigned(values.size(), kUnset);
  std::vector<bool> taken(diag.size(), false);
  std::size_t remaining = std::min(values.size(), diag.size());
  for (const auto& [dist, i, k] : pairs) {
    if (remaining == 0) break;
    if (assigned[i] != kUnset || taken[k]) continue;
    assigned[i] = k;
    taken[k] = true;
    --remaining;
  }
  return assigned;
}

SpectrumSlice all_eigenvalues(const OperatorMatrix& m, const AberthOptions& opts) {
  const std::size_t n = m.size();
  if (m.is_triangular()) {
    // One-sided potential: the spectrum is the diagonal.
    SpectrumSlice slice;
    slice.t = m.t;
    slice.potential_id = m.potential_id;
    slice.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) slice.entries.push_back({m.index_map[i], m.diag[i], 0.0, Method::matrix});
    slice.sort_by_index();
    return slice;
  }
  std::vector<cplx> seeds = m.diag;
  // Coincident seeds would make the Aberth repulsion term singular.
  auto clashes = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (std::abs(seeds[k] - seeds[j]) <= 1e-9 * std::max(1.0, std::abs(seeds[k]))) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const double r = 1e-3 * std::max(1.0, std::sqrt(std::abs(m.diag[k])));
    for (int attempt = 1; clashes(k); ++attempt) {
      seeds[k] = m.diag[k] + std::polar(r * attempt, 0.7 + static_cast<double>(k));
    }
  }
  std::vector<double> residuals;
  const std::vector<cplx> roots = aberth_roots(m, std::move(seeds), opts, &residuals);
  const std::vector<std::size_t> slot = assign_to_diagonal(roots, m.diag);

  SpectrumSlice slice;
  slice.t = m.t;
  slice.potential_id = m.potential_id;
  slice.entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    slice.entries.push_back({m.index_map[slot[i]], roots[i], residuals[i], Method::matrix});
  }
  slice.sort_by_index();
  return slice;
}

PeriodicPair periodic_pair(cplx a, cplx b, int n, int half_width, const AberthOptions& opts) {
  if (n < 1) raise(ErrorKind::InvalidArgument, "periodic_pair: n must be >= 1");
  if (half_width < n + 10) raise(ErrorKind::InvalidArgument, "periodic_pair: half_width must be >= n + 10");
  const OperatorMatrix m = build_mathieu_scaled_matrix(a, b, n % 2, half_width);
  const SpectrumSlice s = all_eigenvalues(m, opts);

  const double center = static_cast<double>(n) * n;
  const auto cluster = std::count_if(s.entries.begin(), s.entries.end(), [&](const SpectrumEntry& e) {
    return std::abs(e.lambda - center) < 1.0;
  });
  if (cluster > 2) {
    raise(ErrorKind::DegenerateCluster, "periodic_pair: " + std::to_string(cluster) +
                                            " eigenvalues within distance 1 of n^2 for n=" +
                                            std::to_string(n));
  }
  const SpectrumEntry* up = s.find(n);
  const SpectrumEntry* down = s.find(-n);
  if (!up || !down) raise(ErrorKind::InconsistentIndexing, "periodic_pair: missing index +-n");
  cplx p = up->lambda;
  cplx q = down->lambda;
  if (std::make_pair(q.real(), q.imag()) > std::make_pair(p.real(), p.imag())) std::swap(p, q);
  return {p, q};
}

}  // namespace hillspec
