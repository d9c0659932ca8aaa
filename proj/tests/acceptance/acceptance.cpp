// Acceptance suite: one PASS/FAIL line per criterion.
//
//   hillspec_acceptance            run all criteria
//   hillspec_acceptance 2 5        run selected criteria
//
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace hillspec;
using oracle::kPi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) o.pass = false;
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += what + (ok ? "" : " [x]");
}

// Zero potential, all three methods.
Outcome criterion1() {
  constexpr double kTol = 1e-9;
  Outcome o;
  double worst[3] = {0, 0, 0};
  for (double t : {0.3, 1.0, 2.8}) {
    const QuasiProblem prob(FourierPotential(), t);
    const auto floquet = eigenvalues_by_discriminant(prob, {-10, 10}, {}, 4);
    const auto matrix = all_eigenvalues(build_matrix(prob, 30));
    for (int n = -10; n <= 10; ++n) {
      const double exact = oracle::free_value(n, t);
      worst[0] = std::max(worst[0], std::abs(floquet.find(n)->lambda - exact));
      worst[1] = std::max(worst[1], std::abs(matrix.find(n)->lambda - exact));
      worst[2] = std::max(worst[2], std::abs(eigenvalue_by_series(n, t, 0.0, 0.0, 1e-12) - exact));
    }
  }
  require(o, worst[0] < kTol, fmt("floquet %.2e", worst[0]));
  require(o, worst[1] < kTol, fmt("matrix %.2e", worst[1]));
  require(o, worst[2] < kTol, fmt("series %.2e", worst[2]));
  return o;
}

// Equal products: truncated spectra and discriminants coincide.
Outcome criterion2() {
  constexpr double kEigTol = 1e-10;
  constexpr double kDiscTol = 1e-8;
  Outcome o;
  oracle::Rng rng(2002);
  double eig = 0.0, disc = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const cplx ab = rng.complex(0.05, 5.0);
    const cplx a = rng.complex(0.2, 3.0);
    const cplx d = rng.complex(0.2, 3.0);
    const cplx b = ab / a, c = ab / d;
    const double t = rng.uniform(-kPi, kPi);
    const auto s1 = all_eigenvalues(build_matrix(QuasiProblem(make_mathieu(a, b), t), 60));
    const auto s2 = all_eigenvalues(build_matrix(QuasiProblem(make_mathieu(c, d), t), 60));
    for (const auto& e : s1.entries) eig = std::max(eig, std::abs(e.lambda - s2.find(e.n)->lambda));
    for (int i = 0; i < 20; ++i) {
      const cplx lambda = rng.complex(0.0, 400.0);
      const cplx f = discriminant(make_mathieu(a, b), lambda).f_value;
      const cplx g = discriminant(make_mathieu(c, d), lambda).f_value;
      disc = std::max(disc, std::abs(f - g) / std::max(1.0, std::abs(f)));
    }
  }
  require(o, eig < kEigTol, fmt("max eigenvalue gap %.2e", eig));
  require(o, disc < kDiscTol, fmt("max relative discriminant gap %.2e", disc));
  return o;
}

// Different products: distinct verdict and first-order separation at n = 15.
Outcome criterion3() {
  Outcome o;
  oracle::Rng rng(3003);
  int distinct = 0, within = 0, trials = 0;
  double worst_factor = 1.0;
  while (trials < 10) {
    const cplx a = rng.complex(0.2, 2.2), b = rng.complex(0.2, 2.2);
    const cplx c = rng.complex(0.2, 2.2), d = rng.complex(0.2, 2.2);
    if (std::abs(a * b) > 5 || std::abs(c * d) > 5 || std::abs(a * b - c * d) < 0.5) continue;
    ++trials;
    distinct += compare_operators(a, b, c, d, {0.5, 1.0, 2.5}, {-8, 8}).verdict == Verdict::distinct;
    const auto s1 = all_eigenvalues(build_matrix(QuasiProblem(make_mathieu(a, b), 1.0), 40));
    const auto s2 = all_eigenvalues(build_matrix(QuasiProblem(make_mathieu(c, d), 1.0), 40));
    const double sep = std::abs(s1.find(15)->lambda - s2.find(15)->lambda);
    const double k = 2 * kPi * 15 + 1.0;
    const double predicted = std::abs(a * b - c * d) / (2 * k * k);
    const double factor = std::max(sep / predicted, predicted / sep);
    worst_factor = std::max(worst_factor, factor);
    within += factor <= 2.0;
  }
  require(o, distinct == 10, std::to_string(distinct) + "/10 distinct");
  require(o, within == 10, fmt("worst separation factor %.3f", worst_factor));
  return o;
}

// Floquet, matrix, series and asymptotic form agree; residual decays like n^-3.
Outcome criterion4() {
  Outcome o;
  const double t = kPi / 2;
  const QuasiProblem prob(make_mathieu(2.0, 3.0), t);
  const auto matrix = all_eigenvalues(build_matrix(prob, 60));
  const cplx m10 = matrix.find(10)->lambda;
  const double fm = std::abs(eigenvalue_by_discriminant(prob, 10).lambda - m10);
  const double sm = std::abs(eigenvalue_by_series(10, t, 2.0, 3.0, 1e-13) - m10);
  const double am = std::abs(m10 - asymptotic_eigenvalue(10, t, 6.0));
  require(o, fm < 1e-7, fmt("|floquet-matrix| %.2e", fm));
  require(o, sm < 1e-7, fmt("|series-matrix| %.2e", sm));
  require(o, am < 5e-4, fmt("|matrix-asymptotic| %.2e", am));
  std::vector<double> x, y;
  for (int n = 8; n <= 30; ++n) {
    x.push_back(std::log(n));
    y.push_back(std::log(std::abs(matrix.find(n)->lambda - asymptotic_eigenvalue(n, t, 6.0))));
  }
  const double slope = oracle::fit_slope(x, y);
  require(o, slope >= -4.0 && slope <= -2.5, fmt("decay exponent %.3f", slope));
  return o;
}

// Recovering ab from genuine and from model eigenvalues.
Outcome criterion5() {
  Outcome o;
  const auto matrix = all_eigenvalues(build_matrix(QuasiProblem(make_mathieu(2.0, 3.0), 1.0), 60));
  std::vector<IndexedEigenvalue> genuine;
  for (int n = 10; n <= 40; ++n) genuine.push_back({n, matrix.find(n)->lambda});
  const auto rg = recover_ab(genuine, 1.0);
  const double rel = std::abs(rg.ab_estimate - 6.0) / 6.0;
  require(o, rel < 1e-3, fmt("genuine relative error %.2e", rel));

  std::vector<IndexedEigenvalue> model;
  for (int n = 10; n <= 20; ++n) {
    const double d = oracle::free_value(n, 1.0);
    model.push_back({n, d + 6.0 / (2 * d)});
  }
  const auto rm = recover_ab(model, 1.0);
  const double err = std::abs(rm.ab_estimate - 6.0);
  require(o, err < 1e-10, fmt("model-data error %.2e", err));
  return o;
}

// Gap ratios and ab-only dependence of the gaps.
Outcome criterion6() {
  Outcome o;
  const auto sweep = gap_sweep(1.0, 1.0, 5, 4);
  std::string ratios = "ratios";
  bool in_band = true;
  for (int n = 3; n <= 5; ++n) {
    const double r = sweep.reports[static_cast<std::size_t>(n - 1)].ratio;
    in_band = in_band && r >= 0.95 && r <= 1.05;
    ratios += fmt(" %.4f", r);
  }
  require(o, in_band, ratios);
  double diff = 0.0;
  for (int n = 1; n <= 5; ++n) {
    diff = std::max(diff, std::abs(gap(0.5, 2.0, n).gap_computed -
                                   sweep.reports[static_cast<std::size_t>(n - 1)].gap_computed));
  }
  require(o, diff < 1e-10, fmt("(0.5,2) vs (1,1) gap difference %.2e", diff));
  return o;
}

// One-sided potential: exact diagonal spectrum, Floquet agreement, double eigenvalues at t = 0.
Outcome criterion7() {
  Outcome o;
  const FourierPotential q({{1, 5.0}, {2, {1.0, 2.0}}});
  const auto m = build_matrix(QuasiProblem(q, 1.0), 30, 2);
  const auto s = all_eigenvalues(m);
  bool exact = m.is_triangular();
  for (const auto& e : s.entries) exact = exact && e.lambda == cplx{free_eigenvalue(e.n, 1.0)};
  require(o, exact, "triangular matrix spectrum equals (2 pi m + 1)^2 exactly");

  const auto floquet = eigenvalues_by_discriminant(QuasiProblem(q, 1.0), {-6, 6}, {}, 4);
  double fdiff = 0.0;
  for (const auto& e : floquet.entries) fdiff = std::max(fdiff, std::abs(e.lambda - s.find(e.n)->lambda));
  require(o, fdiff < 1e-8, fmt("|floquet-matrix| %.2e", fdiff));

  const auto s0 = all_eigenvalues(build_matrix(QuasiProblem(q, 0.0), 30, 2));
  bool doubled = true;
  for (int n = 1; n <= 20; ++n) {
    doubled = doubled && s0.find(n)->lambda == s0.find(-n)->lambda &&
              s0.find(n)->lambda == cplx{free_eigenvalue(n, 0.0)};
  }
  require(o, doubled, "t=0 eigenvalues (2 pi n)^2 = (2 pi (-n))^2 for n=1..20");
  return o;
}

// One-sided eigenfunctions: closed form vs recursion, ODE residual.
Outcome criterion8() {
  Outcome o;
  oracle::Rng rng(8008);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::map<int, cplx> c;
    const int sign = trial % 2 == 0 ? 1 : -1;
    const int support = rng.integer(1, 3);
    for (int j = 1; j <= support; ++j) c[sign * j] = rng.complex(0.1, 3.0);
    const FourierPotential q(c);
    const int n = rng.integer(-3, 3);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const auto r = c_recursive(8, n, t, q);
    for (int p = 1; p <= 8; ++p) {
      const cplx cf = c_closed_form(sign * p, n, t, q);
      worst = std::max(worst, std::abs(cf - r[static_cast<std::size_t>(p - 1)]) /
                                  std::abs(r[static_cast<std::size_t>(p - 1)]));
    }
  }
  require(o, worst < 1e-12, fmt("closed form vs recursion %.2e", worst));

  const FourierPotential q1({{1, 1.0}});
  std::string seq = "residual P=";
  bool decreasing = true;
  double previous = 1e300, at25 = 0.0;
  for (int order : {5, 10, 15, 20, 25}) {
    const double res = residual(gasymov_eigenfunction(q1, 0, 1.0, order), q1, 64);
    if (order == 25) at25 = res;
    // Once at rounding level the residual can only stall.
    decreasing = decreasing && (res < previous || res < 1e-14);
    previous = res;
    seq += std::to_string(order) + fmt(":%.1e ", res);
  }
  require(o, at25 < 1e-8 && decreasing, seq);
  return o;
}

// Series structure: even orders vanish, ab factorization, Rouché containment.
Outcome criterion9() {
  Outcome o;
  bool even_ok = true;
  for (int k = 2; k <= 12; k += 2) {
    const bool rejected = oracle::error_kind([k] { a_coefficient(k, 10, 1.0, 1.0, 1.0, 4000.0); }) ==
                          ErrorKind::InvalidArgument;
    even_ok = even_ok && rejected && enumerate_paths(k).empty() &&
              oracle::a_coefficient_dp(k, 10, 1.0, 2.0, 3.0, 4000.0) == cplx{};
  }
  require(o, even_ok, "even orders rejected and structurally zero");

  oracle::Rng rng(9009);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.integer(5, 30) * (rng.integer(0, 1) ? 1 : -1);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const cplx a = rng.complex(0.1, 3.0), b = rng.complex(0.1, 3.0);
    const cplx lambda = free_eigenvalue(n, t) + rng.complex(0.0, 1.0);
    for (int p = 1; p <= 4; ++p) {
      const cplx lhs = a_coefficient(2 * p - 1, n, t, a, b, lambda);
      const cplx rhs = std::pow(a * b, p) * a_coefficient(2 * p - 1, n, t, 1.0, 1.0, lambda);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    }
  }
  require(o, worst < 1e-12, fmt("factorization %.2e", worst));

  double reach = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.integer(5, 30) * (rng.integer(0, 1) ? 1 : -1);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const cplx a = rng.complex(0.1, 2.0), b = rng.complex(0.1, 2.0);
    std::vector<cplx> its;
    eigenvalue_by_series(n, t, a, b, 1e-12, &its);
    for (const cplx& z : its) reach = std::max(reach, std::abs(z - free_eigenvalue(n, t)));
  }
  require(o, reach < 1.0, fmt("max iterate distance from (2 pi n + t)^2 %.3f", reach));
  return o;
}

struct Criterion {
  int id;
  double time_limit;  // seconds; 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, 5.0, criterion1},  {2, 60.0, criterion2}, {3, 0.0, criterion3},
      {4, 0.0, criterion4},  {5, 0.0, criterion5},  {6, 30.0, criterion6},
      {7, 0.0, criterion7},  {8, 0.0, criterion8},  {9, 0.0, criterion9},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  bool ok = true;
  for (const auto& c : all) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0) require(out, secs < c.time_limit, fmt("runtime limit %.0f s", c.time_limit));
    ok = ok && out.pass;
    std::printf("ACCEPTANCE %d: %s  %s  (%.2f s)\n", c.id, out.pass ? "PASS" : "FAIL", out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
