// Shared helpers for the unit tests: seeded random states and tolerant compares.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "hwcns/euler.hpp"

namespace hwcns::testing {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed = 20240611) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  template <int D>
  PrimitiveState<D> primitive() {
    PrimitiveState<D> w;
    w.rho = uniform(0.05, 5.0);
    for (int d = 0; d < D; ++d) w.vel[d] = uniform(-3.0, 3.0);
    w.p = uniform(0.05, 5.0);
    return w;
  }

  template <int D>
  State<D> state(const GasModel& gas = GasModel{}) {
    return primitive_to_conserved<D>(primitive<D>(), gas);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

template <std::size_t N>
double max_rel_diff(const std::array<double, N>& a, const std::array<double, N>& b) {
  double scale = 1.0;
  for (std::size_t k = 0; k < N; ++k) scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
  double m = 0.0;
  for (std::size_t k = 0; k < N; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m / scale;
}

}  // namespace hwcns::testing
