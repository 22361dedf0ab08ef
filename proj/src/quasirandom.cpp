#include "fent/quasirandom.hpp"

#include <cmath>

#include "fent/errors.hpp"

namespace fent {

namespace {

// splitmix64, used only to turn the seed into per-coordinate start offsets.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double fract(double x) { return x - std::floor(x); }

// Unique positive root of x^(d+1) = x + 1; its inverse powers give the
// R_d additive-recurrence directions.
double generalized_golden_ratio(int d) {
  double x = 1.5;
  for (int i = 0; i < 64; ++i) {
    const double f = std::pow(x, d + 1) - x - 1.0;
    const double fp = (d + 1) * std::pow(x, d) - 1.0;
    x -= f / fp;
  }
  return x;
}

}  // namespace

SphereSequence::SphereSequence(int complex_dim, std::uint64_t seed) : dim_(complex_dim) {
  if (complex_dim < 1) throw DimensionMismatch("SphereSequence: dim must be >= 1");
  const int d = 2 * complex_dim;
  const double phi = generalized_golden_ratio(d);
  alpha_.resize(static_cast<size_t>(d));
  state_.resize(static_cast<size_t>(d));
  double p = 1.0;
  for (int j = 0; j < d; ++j) {
    p /= phi;
    alpha_[static_cast<size_t>(j)] = fract(p);
    const std::uint64_t h = mix(seed + 0x2545f4914f6cdd1dULL * static_cast<std::uint64_t>(j + 1));
    state_[static_cast<size_t>(j)] =
        fract(0.5 + static_cast<double>(h) * 0x1.0p-64);
  }
}

Vector SphereSequence::next() {
  const int d = 2 * dim_;
  constexpr double two_pi = 6.283185307179586476925286766559;
  Vector phi(dim_);
  double norm2 = 0.0;
  for (int j = 0; j < dim_; ++j) {
    double u1 = state_[static_cast<size_t>(2 * j)];
    const double u2 = state_[static_cast<size_t>(2 * j + 1)];
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const Complex z(r * std::cos(two_pi * u2), r * std::sin(two_pi * u2));
    phi(j) = z;
    norm2 += std::norm(z);
  }
  for (int j = 0; j < d; ++j)
    state_[static_cast<size_t>(j)] = fract(state_[static_cast<size_t>(j)] + alpha_[static_cast<size_t>(j)]);
  if (norm2 < 1e-280) return next();
  return phi / std::sqrt(norm2);
}

}  // namespace fent
