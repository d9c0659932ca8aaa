#pragma once

#include <string_view>
#include <vector>

#include "hillspec/potential.hpp"
#include "hillspec/truncation.hpp"

namespace hillspec {

enum class Verdict { isospectral, distinct, inconclusive };

std::string_view verdict_name(Verdict v);

struct IsospectralReport {
  cplx ab{};
  cplx cd{};
  std::vector<double> t_samples;
  IndexRange n_range;
  int half_width = 0;
  /// max over t and n of |lambda_n(t; a,b) - lambda_n(t; c,d)|
  double max_eigenvalue_distance = 0.0;
  /// max over probe points of |F - G| / max(1, |F|)
  double max_discriminant_distance = 0.0;
  Verdict verdict = Verdict::inconclusive;
};

struct CompareOptions {
  /// 0 selects 2 max|n| + 20.
  int half_width = 0;
  int discriminant_samples = 20;
  double isospectral_tol = 1e-8;
  double distinct_tol = 1e-4;
  unsigned threads = 1;
  AberthOptions aberth;
};

/// Deterministic low-discrepancy points (Halton bases 2 and 3) filling the
/// disk |lambda| <= radius.
std::vector<cplx> probe_points(int count, double radius);

/// Largest relative discriminant mismatch of two potentials over the points.
double max_discriminant_mismatch(const FourierPotential& p, const FourierPotential& q,
                                 const std::vector<cplx>& points, unsigned threads = 1);

/// Compares H_t(a,b) with H_t(c,d) at every t sample (index-matched matrix
/// spectra) and compares their Hill discriminants at probe points in the disk
/// of radius (2 pi max|n|)^2.
IsospectralReport compare_operators(cplx a, cplx b, cplx c, cplx d,
                                    const std::vector<double>& t_samples, IndexRange n_range,
                                    const CompareOptions& opts = {});

struct ArcSample {
  double t = 0.0;
  cplx lambda{};
};

/// Samples of the spectral arc {lambda_n(t) : t in (-pi, pi]}, ordered by t.
struct ArcTrace {
  int n = 0;
  std::vector<ArcSample> samples;
  cplx endpoint_zero{};  ///< lambda_n(0)
  cplx endpoint_pi{};    ///< lambda_n(pi)
};

struct ArcOptions {
  int max_refinements = 8;
  /// 0 selects |n| + 20.
  int half_width = 0;
  AberthOptions aberth;
};

/// Follows lambda_n(t) by continuation over the grid t_j = -pi + 2 pi (j+1)/G
/// (plus t = 0), starting from the diagonal match at the grid point nearest
/// pi/2. Each step takes the eigenvalue nearest the previous one; a step longer
/// than twice the unperturbed slope bound is bisected, up to max_refinements
/// times, before ArcBroken is raised.
ArcTrace trace_arc(cplx a, cplx b, int n, int grid_size, const ArcOptions& opts = {});

/// Symmetric Hausdorff distance between the sample point sets.
double hausdorff_distance(const ArcTrace& x, const ArcTrace& y);

}  // namespace hillspec
