#include "hillspec/potential.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>

namespace hillspec {

FourierPotential::FourierPotential(const std::map<int, cplx>& coeffs) {
  for (const auto& [n, q] : coeffs) {
    if (q != cplx{0.0, 0.0}) coeffs_.emplace(n, q);
  }
}

cplx FourierPotential::coeff(int n) const {
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? cplx{} : it->second;
}

int FourierPotential::min_index() const {
  return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int FourierPotential::max_index() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

int FourierPotential::bandwidth() const {
  return std::max(std::abs(min_index()), std::abs(max_index()));
}

bool FourierPotential::is_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) {
    return std::isfinite(kv.second.real()) && std::isfinite(kv.second.imag());
  });
}

double FourierPotential::l1_norm() const {
  double s = 0.0;
  for (const auto& [n, q] : coeffs_) s += std::abs(q);
  return s;
}

cplx FourierPotential::operator()(double x) const {
  // Reduce to [0,1) so that evaluation is periodic up to the rounding of x.
  const double frac = x - std::floor(x);
  cplx sum{};
  for (const auto& [n, q] : coeffs_) {
    sum += q * std::polar(1.0, kTwoPi * static_cast<double>(n) * frac);
  }
  return sum;
}

std::uint64_t FourierPotential::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [n, q] : coeffs_) {
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(n)));
    mix(std::bit_cast<std::uint64_t>(q.real()));
    mix(std::bit_cast<std::uint64_t>(q.imag()));
  }
  return h;
}

FourierPotential make_mathieu(cplx a, cplx b) {
  return FourierPotential({{-1, a}, {1, b}});
}

cplx evaluate(const FourierPotential& p, double x) { return p(x); }

Orientation gasymov_orientation(const FourierPotential& p) {
  if (p.is_zero() || p.min_index() >= 1) return Orientation::positive;
  if (p.max_index() <= -1) return Orientation::negative;
  return Orientation::neither;
}

double normalize_quasimomentum(double t) {
  double r = std::remainder(t, kTwoPi);  // [-pi, pi]
  if (r <= -kPi) r += kTwoPi;
  return r;
}

}  // namespace hillspec
