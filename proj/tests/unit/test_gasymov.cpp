#include <doctest.h>

#include "oracles.hpp"

using namespace hillspec;
using oracle::kPi;

TEST_CASE("d factor") {
  CHECK(d_factor(0, kPi / 2, 1) == doctest::Approx(-0.016887).epsilon(1e-4));
  CHECK(std::abs(d_factor(0, kPi / 2, 1) - oracle::d_direct(0, kPi / 2, 1)) < 1e-16);
  CHECK(std::abs(d_factor(3, 1.0, 2) - oracle::d_direct(3, 1.0, 2)) < 1e-14 * std::abs(d_factor(3, 1.0, 2)));
  oracle::Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const int n = rng.integer(-20, 20);
    int p = rng.integer(-10, 10);
    if (p == 0) p = 1;
    const double t = rng.uniform(0.05, kPi - 0.05);
    const double f = -1.0 / (2 * kPi * p * (2 * kPi * (2 * n + p) + 2 * t));
    CHECK(std::abs(d_factor(n, t, p) - f) <= 1e-14 * std::abs(f));
    CHECK(std::abs(d_factor(n, t, p) - oracle::d_direct(n, t, p)) <= 1e-9 * std::abs(f));
  }
  CHECK(oracle::error_kind([] { d_factor(0, 0.0, -0); }) == ErrorKind::InvalidArgument);
  CHECK(oracle::error_kind([] { d_factor(1, 0.0, -2); }) == ErrorKind::VanishingDenominator);
  CHECK(oracle::error_kind([] { d_factor(-1, kPi, 1); }) == ErrorKind::VanishingDenominator);
}

TEST_CASE("closed form low orders") {
  const double t = 1.0;
  const FourierPotential q({{1, {1.0, 0.5}}, {2, {0.25, -1.0}}});
  CHECK(std::abs(c_closed_form(1, 0, t, q) - q.coeff(1) * d_factor(0, t, 1)) < 1e-16);
  const cplx c2 = d_factor(0, t, 2) * (q.coeff(2) + q.coeff(1) * q.coeff(1) * oracle::d_direct(0, t, 1));
  CHECK(std::abs(c_closed_form(2, 0, t, q) - c2) < 1e-15);
}

TEST_CASE("single-mode coefficients are products") {
  oracle::Rng rng(52);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx b = rng.complex(0.1, 6);
    const int n = rng.integer(-5, 5);
    const double t = rng.uniform(0.2, kPi - 0.2);
    const auto c = c_recursive(12, n, t, FourierPotential({{1, b}}));
    for (int p = 1; p <= 12; ++p) {
      const cplx o = oracle::single_mode_coefficient(p, n, t, b);
      CHECK(std::abs(c[p - 1] - o) <= 1e-12 * std::abs(o));
    }
    CHECK(std::abs(c_recursive(1, n, t, FourierPotential({{1, b}}))[0] - b * d_factor(n, t, 1)) < 1e-15);
  }
}

TEST_CASE("closed form equals the recursion") {
  const FourierPotential q4({{1, 1.0}, {2, 0.5}});
  const auto r4 = c_recursive(4, 0, 1.0, q4);
  for (int p = 1; p <= 4; ++p) CHECK(std::abs(c_closed_form(p, 0, 1.0, q4) - r4[p - 1]) <= 1e-12 * std::abs(r4[p - 1]));

  oracle::Rng rng(53);
  for (int trial = 0; trial < 15; ++trial) {
    std::map<int, cplx> c;
    const int support = rng.integer(1, 3);
    for (int j = 1; j <= support; ++j) c[j] = rng.complex(0.1, 4);
    const bool negative = trial % 3 == 0;
    std::map<int, cplx> mirrored;
    for (auto [j, v] : c) mirrored[negative ? -j : j] = v;
    const FourierPotential q(mirrored);
    const int n = rng.integer(-4, 4);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const auto r = c_recursive(8, n, t, q);
    for (int p = 1; p <= 8; ++p) {
      const cplx cf = c_closed_form(negative ? -p : p, n, t, q);
      CHECK(std::abs(cf - r[p - 1]) <= 1e-12 * std::abs(r[p - 1]));
    }
  }
}

TEST_CASE("negative-sided coefficients mirror the positive-sided ones") {
  oracle::Rng rng(54);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx q1 = rng.complex(0.1, 3), q2 = rng.complex(0.1, 3);
    const int n = rng.integer(-5, 5);
    const double t = rng.uniform(0.1, kPi - 0.1);
    const auto pos = c_recursive(10, n, t, FourierPotential({{1, q1}, {2, q2}}));
    const auto neg = c_recursive(10, -n, -t, FourierPotential({{-1, q1}, {-2, q2}}));
    for (std::size_t k = 0; k < pos.size(); ++k) CHECK(std::abs(pos[k] - neg[k]) <= 1e-13 * std::abs(pos[k]));
  }
}

TEST_CASE("orientation mismatches are refused") {
  const FourierPotential pos({{1, 1.0}});
  CHECK(oracle::error_kind([&] { c_closed_form(-1, 0, 1.0, pos); }) == ErrorKind::InvalidArgument);
  CHECK(oracle::error_kind([] { c_recursive(5, 0, 1.0, make_mathieu(1.0, 1.0)); }) ==
        ErrorKind::UnsupportedPotential);
  CHECK(oracle::error_kind([&] { gasymov_eigenfunction(pos, -1, 0.0); }) == ErrorKind::VanishingDenominator);
}

TEST_CASE("coefficients decay like C^p / p!") {
  const auto c = c_recursive(20, 0, 1.0, FourierPotential({{1, 5.0}, {2, 1.0}}));
  for (int p = 1; p <= 20; ++p) {
    const double root = std::exp((std::log(std::abs(c[p - 1])) + std::lgamma(p + 1.0)) / p);
    CHECK(root < 0.2);
  }
  for (std::size_t k = 0; k + 2 < c.size(); ++k) CHECK(std::abs(c[k + 2]) < 0.5 * std::abs(c[k]));
}

TEST_CASE("synthesis") {
  const auto ef0 = gasymov_eigenfunction(FourierPotential(), 2, 0.7, 10);
  for (double x : {0.0, 0.3, 0.9}) {
    CHECK(std::abs(synthesize(ef0, x) - std::exp(cplx{0.0, (2 * kPi * 2 + 0.7) * x})) < 1e-15);
  }
  CHECK(residual(ef0, FourierPotential(), 64) < 1e-12);

  const FourierPotential q({{1, 5.0}});
  const auto ef = gasymov_eigenfunction(q, 0, 1.0, 30);
  cplx sum = 1.0;
  for (const cplx& c : ef.coefficients) sum += c;
  CHECK(std::abs(synthesize(ef, 0.0) - sum) < 1e-14);
  CHECK(ef.index_of(0) == 1);
  CHECK(residual(ef, q, 64) < 1e-8);
}

TEST_CASE("unit leading coefficient") {
  const FourierPotential q({{-1, 2.0}});
  const auto ef = gasymov_eigenfunction(q, 1, 1.0, 12);
  CHECK(ef.sign() == -1);
  CHECK(ef.index_of(0) == 0);
  // Removing the tail leaves the pure exponential with coefficient 1.
  auto bare = ef;
  std::fill(bare.coefficients.begin(), bare.coefficients.end(), cplx{});
  CHECK(std::abs(synthesize(bare, 0.37) - std::exp(cplx{0.0, (2 * kPi + 1.0) * 0.37})) < 1e-15);
}

TEST_CASE("residual shrinks with the order") {
  const FourierPotential q({{1, 1.0}});
  CHECK(residual(gasymov_eigenfunction(q, 0, 1.0, 25), q, 64) < 1e-10);
  double previous = 1e300;
  for (int order : {5, 10, 20, 40}) {
    const double r = residual(gasymov_eigenfunction(q, 0, 1.0, order), q, 64);
    CHECK(r <= 2 * previous);
    previous = std::max(r, 1e-16);
  }
  CHECK(residual(gasymov_eigenfunction(q, 0, 1.0, 5), q, 64) >
        residual(gasymov_eigenfunction(q, 0, 1.0, 10), q, 64));
}

TEST_CASE("diagonal coincidences at the resonant quasimomenta") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(oracle::free_value(n, 0.0) == oracle::free_value(-n, 0.0));
    CHECK(std::abs(oracle::free_value(n, kPi) - oracle::free_value(-n - 1, kPi)) <=
          1e-12 * oracle::free_value(n, kPi));
  }
  oracle::Rng rng(55);
  for (int i = 0; i < 20; ++i) {
    const double t = rng.uniform(0.01, kPi - 0.01);
    std::vector<double> v;
    for (int n = -10; n <= 10; ++n) v.push_back(free_eigenvalue(n, t));
    std::sort(v.begin(), v.end());
    for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k] > v[k - 1]);
  }
  const auto s0 = all_eigenvalues(build_matrix(QuasiProblem(FourierPotential({{1, 5.0}, {2, {1.0, 2.0}}}), 0.0), 10, 2));
  for (int n = 1; n <= 5; ++n) CHECK(s0.find(n)->lambda == s0.find(-n)->lambda);
}
