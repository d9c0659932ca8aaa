#include "hillspec/isospectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hillspec/error.hpp"
#include "hillspec/floquet.hpp"
#include "hillspec/parallel.hpp"

namespace hillspec {
namespace {

double halton(int index, int base) {
  double f = 1.0;
  double r = 0.0;
  for (int i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

cplx nearest(const SpectrumSlice& s, cplx target) {
  cplx best{};
  double dist = std::numeric_limits<double>::infinity();
  for (const auto& e : s.entries) {
    const double d = std::abs(e.lambda - target);
    if (d < dist) {
      dist = d;
      best = e.lambda;
    }
  }
  return best;
}

double one_sided(const ArcTrace& x, const ArcTrace& y) {
  double worst = 0.0;
  for (const auto& p : x.samples) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : y.samples) best = std::min(best, std::abs(p.lambda - q.lambda));
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::isospectral: return "isospectral";
    case Verdict::distinct: return "distinct";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<cplx> probe_points(int count, double radius) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 1; i <= count; ++i) {
    pts.push_back(std::polar(radius * std::sqrt(halton(i, 2)), kTwoPi * halton(i, 3)));
  }
  return pts;
}

double max_discriminant_mismatch(const FourierPotential& p, const FourierPotential& q,
                                 const std::vector<cplx>& points, unsigned threads) {
  std::vector<double> mismatch(points.size(), 0.0);
  parallel_for(points.size(), threads, [&](std::size_t i) {
    const cplx f = discriminant(p, points[i]).f_value;
    const cplx g = discriminant(q, points[i]).f_value;
    mismatch[i] = std::abs(f - g) / std::max(1.0, std::abs(f));
  });
  return mismatch.empty() ? 0.0 : *std::max_element(mismatch.begin(), mismatch.end());
}

IsospectralReport compare_operators(cplx a, cplx b, cplx c, cplx d,
                                    const std::vector<double>& t_samples, IndexRange n_range,
                                    const CompareOptions& opts) {
  if (t_samples.empty()) raise(ErrorKind::InvalidArgument, "compare_operators: t_samples is empty");
  if (n_range.empty()) raise(ErrorKind::InvalidArgument, "compare_operators: empty index range");

  IsospectralReport report;
  report.ab = a * b;
  report.cd = c * d;
  report.n_range = n_range;
  report.half_width = opts.half_width > 0 ? opts.half_width : 2 * n_range.max_abs() + 20;
  for (double t : t_samples) report.t_samples.push_back(normalize_quasimomentum(t));

  const FourierPotential p = make_mathieu(a, b);
  const FourierPotential q = make_mathieu(c, d);

  std::vector<double> per_t(report.t_samples.size(), 0.0);
  parallel_for(report.t_samples.size(), opts.threads, [&](std::size_t i) {
    const double t = report.t_samples[i];
    const SpectrumSlice s1 = all_eigenvalues(build_matrix({p, t}, report.half_width), opts.aberth);
    const SpectrumSlice s2 = all_eigenvalues(build_matrix({q, t}, report.half_width), opts.aberth);
    double worst = 0.0;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
      const SpectrumEntry* e1 = s1.find(n);
      const SpectrumEntry* e2 = s2.find(n);
      if (!e1 || !e2) {
        raise(ErrorKind::InconsistentIndexing,
              "compare_operators: index " + std::to_string(n) + " missing at t=" + std::to_string(t));
      }
      worst = std::max(worst, std::abs(e1->lambda - e2->lambda));
    }
    per_t[i] = worst;
  });
  report.max_eigenvalue_distance = *std::max_element(per_t.begin(), per_t.end());

  const double scale = kTwoPi * std::max(1, n_range.max_abs());
  report.max_discriminant_distance = max_discriminant_mismatch(
      p, q, probe_points(opts.discriminant_samples, scale * scale), opts.threads);

  if (report.max_eigenvalue_distance < opts.isospectral_tol &&
      report.max_discriminant_distance < opts.isospectral_tol) {
    report.verdict = Verdict::isospectral;
  } else if (report.max_eigenvalue_distance > opts.distinct_tol) {
    report.verdict = Verdict::distinct;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

ArcTrace trace_arc(cplx a, cplx b, int n, int grid_size, const ArcOptions& opts) {
  if (grid_size < 16) raise(ErrorKind::InvalidArgument, "trace_arc: grid_size must be >= 16");
  const FourierPotential p = make_mathieu(a, b);
  const int half_width = opts.half_width > 0 ? opts.half_width : std::abs(n) + 20;
  // |d/dt (2 pi m + t)^2| over the relevant band, doubled.
  const double slope = 2.0 * (2.0 * (kTwoPi * std::abs(n) + kPi) + 2.0);

  auto spectrum_at = [&](double t) {
    return all_eigenvalues(build_matrix({p, t}, half_width), opts.aberth);
  };

  std::vector<double> grid;
  for (int j = 0; j < grid_size; ++j) grid.push_back(-kPi + kTwoPi * (j + 1) / grid_size);
  grid.back() = kPi;
  if (std::find(grid.begin(), grid.end(), 0.0) == grid.end()) {
    grid.insert(std::upper_bound(grid.begin(), grid.end(), 0.0), 0.0);
  }

  std::size_t start = 0;
  for (std::size_t j = 1; j < grid.size(); ++j) {
    if (std::abs(grid[j] - kPi / 2) < std::abs(grid[start] - kPi / 2)) start = j;
  }
  const SpectrumSlice first = spectrum_at(grid[start]);
  const SpectrumEntry* seed = first.find(n);
  if (!seed) raise(ErrorKind::InconsistentIndexing, "trace_arc: index outside the truncation");

  std::vector<ArcSample> samples{{grid[start], seed->lambda}};

  // Continues from (t0, l0) to t1, bisecting when the step is too long.
  auto advance = [&](auto&& self, double t0, cplx l0, double t1, int depth) -> cplx {
    const cplx l1 = nearest(spectrum_at(t1), l0);
    if (std::abs(l1 - l0) <= slope * std::abs(t1 - t0) + 1e-9) return l1;
    if (depth >= opts.max_refinements) {
      raise(ErrorKind::ArcBroken, "trace_arc: continuity lost for n=" + std::to_string(n) +
                                      " near t=" + std::to_string(t1) +
                                      " (possible band collision)");
    }
    const double tm = 0.5 * (t0 + t1);
    const cplx lm = self(self, t0, l0, tm, depth + 1);
    samples.push_back({tm, lm});
    return self(self, tm, lm, t1, depth + 1);
  };

  cplx current = seed->lambda;
  for (std::size_t j = start + 1; j < grid.size(); ++j) {
    current = advance(advance, grid[j - 1], current, grid[j], 0);
    samples.push_back({grid[j], current});
  }
  current = seed->lambda;
  for (std::size_t j = start; j-- > 0;) {
    current = advance(advance, grid[j + 1], current, grid[j], 0);
    samples.push_back({grid[j], current});
  }

  std::sort(samples.begin(), samples.end(),
            [](const ArcSample& x, const ArcSample& y) { return x.t < y.t; });
  ArcTrace trace;
  trace.n = n;
  trace.samples = std::move(samples);
  for (const auto& s : trace.samples) {
    if (s.t == 0.0) trace.endpoint_zero = s.lambda;
    if (s.t == kPi) trace.endpoint_pi = s.lambda;
  }
  return trace;
}

double hausdorff_distance(const ArcTrace& x, const ArcTrace& y) {
  if (x.samples.empty() || y.samples.empty()) {
    raise(ErrorKind::InvalidArgument, "hausdorff_distance: traces must be nonempty");
  }
  return std::max(one_sided(x, y), one_sided(y, x));
}

}  // namespace hillspec
