#pragma once

#include <cstdint>
#include <vector>

#include "hillspec/types.hpp"

namespace hillspec {

/// A +-1 index sequence (n_1, ..., n_k) packed into bits: bit s set means
/// n_{s+1} = +1.
using SignPath = std::uint32_t;

inline int path_step(SignPath path, int s) { return ((path >> s) & 1U) ? 1 : -1; }

/// Largest coefficient order supported (p_max = 12 gives k = 23).
inline constexpr int kMaxSeriesOrder = 23;
inline constexpr int kMaxHalfOrder = 12;

/// Exhaustive scan of {-1, 1}^k keeping the sequences whose partial sums
/// n_1 + ... + n_s are nonzero for s = 1..k and whose closing index
/// -(n_1 + ... + n_k) is again +-1.
std::vector<SignPath> enumerate_paths(int k);

/// Cached enumerate_paths(k); thread-safe.
const std::vector<SignPath>& coefficient_paths(int k);

/// a_k(lambda, t) for the two-mode potential q_{-1} = a, q_1 = b: the sum over
/// admissible paths of
///   q_{n_1} ... q_{n_k} q_{-(n_1+...+n_k)} / prod_s [lambda - (2 pi (n - sigma_s) + t)^2].
/// Even k is rejected (those coefficients vanish identically).
cplx a_coefficient(int k, int n, double t, cplx a, cplx b, cplx lambda);

struct SeriesTerm {
  int p = 0;
  std::size_t path_count = 0;
  /// a_{2p-1}(lambda, t)
  cplx value{};
  /// value / (2^{2p-1} (ab)^p); zero when ab = 0.
  cplx f_value{};
};

SeriesTerm series_term(int p, int n, double t, cplx a, cplx b, cplx lambda);

struct SeriesValue {
  cplx value{};
  int terms_used = 0;
  double last_term_magnitude = 0.0;
};

/// A(lambda, t, ab) = sum_p a_{2p-1}, truncated once two consecutive terms fall
/// below tol * max(1, |partial sum|).
SeriesValue a_series(int n, double t, cplx a, cplx b, cplx lambda, double tol,
                     int p_max = kMaxHalfOrder);

/// Fixed point of lambda = (2 pi n + t)^2 + A(lambda, t, ab) started at the
/// unperturbed value. Valid for t in [0.1, pi - 0.1] and |n| >= 5; every
/// iterate must stay in the unit disk around (2 pi n + t)^2. When ab = 0 the
/// unperturbed value is returned for any n and t. If `iterates`
/// is given, it receives the whole iteration history.
cplx eigenvalue_by_series(int n, double t, cplx a, cplx b, double tol,
                          std::vector<cplx>* iterates = nullptr);

/// (2 pi n + t)^2 + ab / (2 (2 pi n + t)^2).
cplx asymptotic_eigenvalue(int n, double t, cplx ab);

}  // namespace hillspec
