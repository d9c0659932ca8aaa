#include <doctest.h>

#include "oracles.hpp"

using namespace hillspec;
using oracle::kPi;

TEST_CASE("path census matches the closed count") {
  CHECK(enumerate_paths(1).size() == 2);
  for (int p = 1; p <= 10; ++p) CHECK(coefficient_paths(2 * p - 1).size() == oracle::closing_path_count(p));
  for (int k = 2; k <= 12; k += 2) CHECK(enumerate_paths(k).empty());
}

TEST_CASE("every path avoids zero and closes on +-1") {
  for (int k : {1, 3, 5, 7, 9}) {
    for (SignPath path : enumerate_paths(k)) {
      int sigma = 0, plus = 0;
      for (int s = 0; s < k; ++s) {
        sigma += path_step(path, s);
        plus += path_step(path, s) > 0;
        CHECK(sigma != 0);
      }
      CHECK(std::abs(sigma) == 1);
      // The closing step -sigma balances the counts of +1 and -1.
      CHECK(plus + (sigma < 0 ? 1 : 0) == (k + 1) / 2);
    }
  }
}

TEST_CASE("even orders are rejected") {
  CHECK(oracle::error_kind([] { a_coefficient(2, 10, 1.0, 1.0, 1.0, 100.0); }) == ErrorKind::InvalidArgument);
  CHECK(oracle::error_kind([] { a_coefficient(0, 10, 1.0, 1.0, 1.0, 100.0); }) == ErrorKind::InvalidArgument);
  CHECK(oracle::error_kind([] { a_coefficient(25, 10, 1.0, 1.0, 1.0, 100.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("first coefficient by hand") {
  const double lambda = (2 * kPi + kPi / 2) * (2 * kPi + kPi / 2);
  const cplx a1 = a_coefficient(1, 1, kPi / 2, 1.0, 1.0, lambda);
  const double expect = 1.0 / (lambda - kPi * kPi / 4) + 1.0 / (lambda - (4.5 * kPi) * (4.5 * kPi));
  CHECK(std::abs(a1 - expect) < 1e-15);
  CHECK(a1.real() == doctest::Approx(0.009650).epsilon(1e-3));
}

TEST_CASE("coefficients match the dynamic-programming oracle") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(-20, 20);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const cplx a = rng.complex(0.1, 3), b = rng.complex(0.1, 3);
    const cplx lambda = oracle::free_value(n, t) + rng.complex(0, 1);
    for (int k = 1; k <= 13; k += 2) {
      const cplx v = a_coefficient(k, n, t, a, b, lambda);
      const cplx o = oracle::a_coefficient_dp(k, n, t, a, b, lambda);
      CHECK(std::abs(v - o) <= 1e-12 * std::max(std::abs(o), 1e-300));
    }
  }
}

TEST_CASE("coefficients depend on a and b only through ab") {
  const double t = 1.1;
  const cplx lambda = oracle::free_value(7, t) + cplx{0.3, -0.2};
  CHECK(std::abs(a_coefficient(3, 7, t, 2.0, 3.0, lambda) - a_coefficient(3, 7, t, 6.0, 1.0, lambda)) <
        1e-12 * std::abs(a_coefficient(3, 7, t, 2.0, 3.0, lambda)));

  oracle::Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(5, 30) * (rng.integer(0, 1) ? 1 : -1);
    const double tt = rng.uniform(0.1, kPi - 0.1);
    const cplx a = rng.complex(0.1, 3), b = rng.complex(0.1, 3);
    const cplx lam = oracle::free_value(n, tt) + rng.complex(0, 1);
    for (int p = 1; p <= 4; ++p) {
      const cplx lhs = a_coefficient(2 * p - 1, n, tt, a, b, lam);
      const cplx rhs = std::pow(a * b, p) * a_coefficient(2 * p - 1, n, tt, 1.0, 1.0, lam);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      const auto term = series_term(p, n, tt, a, b, lam);
      CHECK(term.path_count == oracle::closing_path_count(p));
      CHECK(std::abs(term.value - lhs) == 0.0);
    }
  }
}

TEST_CASE("consecutive odd coefficients decay") {
  oracle::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(10, 40) * (rng.integer(0, 1) ? 1 : -1);
    const cplx ab = rng.complex(0.1, 10);
    const double t = kPi / 2;
    const cplx lambda = oracle::free_value(n, t);
    for (int p = 1; p <= 5; ++p) {
      const cplx lo = a_coefficient(2 * p - 1, n, t, ab, 1.0, lambda);
      const cplx hi = a_coefficient(2 * p + 1, n, t, ab, 1.0, lambda);
      CHECK(std::abs(hi) < std::abs(lo));
    }
  }
}

TEST_CASE("vanishing denominator is reported") {
  // lambda equal to a neighbouring unperturbed value hits a zero denominator.
  CHECK(oracle::error_kind([] { a_coefficient(1, 3, 1.0, 1.0, 1.0, oracle::free_value(2, 1.0)); }) ==
        ErrorKind::VanishingDenominator);
}

TEST_CASE("series of a one-sided pair vanishes") {
  const auto s = a_series(10, 1.0, 0.0, 5.0, 100.0, 1e-12);
  CHECK(s.value == cplx{});
  CHECK(s.terms_used == 1);
  CHECK(oracle::error_kind([] { a_series(10, 1.0, 1.0, 1.0, 100.0, 1e-16); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("series is led by its first term") {
  const double t = kPi / 2;
  const cplx lambda = oracle::free_value(10, t);
  const auto s = a_series(10, t, 2.0, 3.0, lambda, 1e-14);
  const cplx a1 = a_coefficient(1, 10, t, 2.0, 3.0, lambda);
  const cplx a3 = a_coefficient(3, 10, t, 2.0, 3.0, lambda);
  CHECK(std::abs(s.value - a1) <= 2 * std::abs(a3));
  const double k = 20 * kPi + t;
  CHECK(std::abs(a1 - 6.0 / (2 * k * k)) < 0.1 * std::abs(a1));
  CHECK(s.last_term_magnitude < 1e-14 * std::abs(s.value));

  const auto other = a_series(10, t, 6.0, 1.0, lambda, 1e-14);
  CHECK(std::abs(other.value - s.value) < 1e-13);
}

TEST_CASE("series eigenvalue") {
  const double t = kPi / 2;
  CHECK(eigenvalue_by_series(10, t, 0.0, 0.0, 1e-12) == cplx{oracle::free_value(10, t)});

  const cplx lam = eigenvalue_by_series(10, t, 2.0, 3.0, 1e-13);
  const auto matrix = all_eigenvalues(build_matrix(QuasiProblem(make_mathieu(2.0, 3.0), t), 40));
  CHECK(std::abs(lam - matrix.find(10)->lambda) < 1e-8);
  CHECK(std::abs(lam - eigenvalue_by_series(10, t, 6.0, 1.0, 1e-13)) < 1e-10);
}

TEST_CASE("series iterates stay in the unit disk") {
  oracle::Rng rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(5, 30) * (rng.integer(0, 1) ? 1 : -1);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const cplx a = rng.complex(0.1, 2), b = rng.complex(0.1, 2);
    std::vector<cplx> its;
    const cplx lam = eigenvalue_by_series(n, t, a, b, 1e-12, &its);
    CHECK(its.size() >= 1);
    for (const cplx& z : its) CHECK(std::abs(z - oracle::free_value(n, t)) < 1.0);
    CHECK(std::abs(lam - oracle::free_value(n, t)) < 1.0);
  }
}

TEST_CASE("series eigenvalue validity region") {
  CHECK(oracle::error_kind([] { eigenvalue_by_series(4, 1.0, 1.0, 1.0, 1e-12); }) == ErrorKind::InvalidArgument);
  CHECK(oracle::error_kind([] { eigenvalue_by_series(10, 0.05, 1.0, 1.0, 1e-12); }) == ErrorKind::InvalidArgument);
  CHECK(oracle::error_kind([] { eigenvalue_by_series(10, 3.1, 1.0, 1.0, 1e-12); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("asymptotic eigenvalue") {
  CHECK(asymptotic_eigenvalue(4, 1.0, 0.0) == cplx{oracle::free_value(4, 1.0)});
  const double k = 20 * kPi + kPi / 2;
  CHECK(std::abs(asymptotic_eigenvalue(10, kPi / 2, 6.0) - (k * k + 3.0 / (k * k))) < 1e-9);
  CHECK(oracle::error_kind([] { asymptotic_eigenvalue(0, 0.0, 1.0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("asymptotic error shrinks like n^-3") {
  std::vector<double> x, y;
  for (int n = 8; n <= 30; ++n) {
    const cplx s = eigenvalue_by_series(n, kPi / 2, 2.0, 3.0, 1e-13);
    x.push_back(std::log(n));
    y.push_back(std::log(std::abs(s - asymptotic_eigenvalue(n, kPi / 2, 6.0))));
  }
  const double slope = oracle::fit_slope(x, y);
  CHECK(slope > -4.0);
  CHECK(slope < -2.5);
}
