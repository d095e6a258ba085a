#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>

#include "hwcns/hermite.hpp"
#include "test_support.hpp"

using namespace hwcns;
using hwcns::testing::Sampler;

namespace {

// Samples f and f' on {x0 - h, x0, x0 + h}.
StencilData sample(const std::function<double(double)>& f, const std::function<double(double)>& df, double x0,
                   double h) {
  return StencilData{{f(x0 - h), f(x0), f(x0 + h)}, {df(x0 - h), df(x0), df(x0 + h)}, h};
}

StencilData random_stencil(Sampler& rng) {
  StencilData s;
  for (int k = 0; k < 3; ++k) {
    s.values[k] = rng.uniform(-10.0, 10.0);
    s.derivs[k] = rng.uniform(-10.0, 10.0);
  }
  s.h = rng.uniform(0.01, 2.0);
  return s;
}

double data_scale(const StencilData& s) {
  double m = 1.0;
  for (int k = 0; k < 3; ++k) m = std::max({m, std::abs(s.values[k]), std::abs(s.h * s.derivs[k])});
  return m;
}

}  // namespace

TEST_CASE("linear weights are a partition of unity") {
  CHECK(kValueLinearWeights[0] + kValueLinearWeights[1] + kValueLinearWeights[2] == 1.0);
  CHECK(kValueLinearWeights[0] == 1.0 / 16.0);
  CHECK(kValueLinearWeights[1] == 9.0 / 16.0);
  CHECK(kValueLinearWeights[2] == 3.0 / 8.0);
}

TEST_CASE("candidates on constant, linear and quadratic data") {
  const StencilData constant{{2.0, 2.0, 2.0}, {0.0, 0.0, 0.0}, 1.0};
  for (double c : value_candidates(constant)) CHECK(c == doctest::Approx(2.0));
  CHECK(value_full_stencil(constant) == doctest::Approx(2.0));

  const StencilData linear{{-1.0, 0.0, 1.0}, {1.0, 1.0, 1.0}, 1.0};
  for (double c : value_candidates(linear)) CHECK(c == doctest::Approx(0.5));

  const StencilData quadratic{{1.0, 0.0, 1.0}, {-2.0, 0.0, 2.0}, 1.0};
  for (double c : value_candidates(quadratic)) CHECK(c == doctest::Approx(0.25));
  CHECK(value_full_stencil(quadratic) == doctest::Approx(0.25));
}

TEST_CASE("convex combination of candidates equals the full stencil") {
  Sampler rng(11);
  for (int n = 0; n < 1000; ++n) {
    const StencilData s = random_stencil(rng);
    const double blended = blend(kValueLinearWeights, value_candidates(s));
    CHECK(std::abs(blended - value_full_stencil(s)) <= 1e-14 * data_scale(s));
    CHECK(std::abs(interpolate_midpoint(s, WeightMode::linear) - value_full_stencil(s)) <= 1e-14 * data_scale(s));
  }
}

TEST_CASE("polynomial exactness") {
  Sampler rng(12);
  for (int degree = 0; degree <= 5; ++degree) {
    std::vector<double> coef(degree + 1);
    for (double& c : coef) c = rng.uniform(-2.0, 2.0);
    auto f = [&](double x) {
      double v = 0.0;
      for (int k = degree; k >= 0; --k) v = v * x + coef[k];
      return v;
    };
    auto df = [&](double x) {
      double v = 0.0;
      for (int k = degree; k >= 1; --k) v = v * x + k * coef[k];
      return v;
    };
    const double x0 = rng.uniform(-1.0, 1.0);
    const double h = 0.3;
    const StencilData s = sample(f, df, x0, h);
    const double exact = f(x0 + 0.5 * h);
    CAPTURE(degree);
    if (degree <= 2) {
      for (double c : value_candidates(s)) CHECK(c == doctest::Approx(exact).epsilon(1e-13));
      CHECK(interpolate_midpoint(s, WeightMode::nonlinear) == doctest::Approx(exact).epsilon(1e-13));
    }
    if (degree <= 4) {
      CHECK(value_full_stencil(s) == doctest::Approx(exact).epsilon(1e-13));
    } else {
      CHECK(std::abs(value_full_stencil(s) - exact) > 1e-10);
    }
  }
}

TEST_CASE("smoothness indicators") {
  const StencilData constant{{2.0, 2.0, 2.0}, {0.0, 0.0, 0.0}, 1.0};
  for (double b : smoothness_indicators(constant)) CHECK(b == doctest::Approx(0.0));

  const StencilData linear{{-1.0, 0.0, 1.0}, {1.0, 1.0, 1.0}, 1.0};
  for (double b : smoothness_indicators(linear)) CHECK(b == doctest::Approx(1.0));

  // hand evaluation of the indicator formulas on the step (0, 0, 1)
  const StencilData step{{0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}, 1.0};
  const Triple beta = smoothness_indicators(step);
  CHECK(beta[0] == 0.0);
  CHECK(beta[1] == doctest::Approx(8.0));
  CHECK(beta[2] == doctest::Approx(1.25));

  Sampler rng(13);
  for (int n = 0; n < 1000; ++n)
    for (double b : smoothness_indicators(random_stencil(rng))) CHECK(b >= 0.0);
}

TEST_CASE("JS weights") {
  const Triple d = kValueLinearWeights;
  const Triple zero = js_weights({0.0, 0.0, 0.0}, d, 1e-6);
  for (int k = 0; k < 3; ++k) CHECK(zero[k] == doctest::Approx(d[k]).epsilon(1e-15));

  const Triple equal = js_weights({3.7, 3.7, 3.7}, d, 1e-6);
  for (int k = 0; k < 3; ++k) CHECK(equal[k] == doctest::Approx(d[k]).epsilon(1e-15));

  const Triple suppressed = js_weights({1e6, 0.0, 0.0}, d, 1e-6);
  CHECK(suppressed[0] < 1e-20);
  CHECK(suppressed[1] / suppressed[2] == doctest::Approx(d[1] / d[2]).epsilon(1e-12));

  Sampler rng(14);
  for (int n = 0; n < 10000; ++n) {
    const Triple beta{std::pow(10.0, rng.uniform(-12, 6)), std::pow(10.0, rng.uniform(-12, 6)),
                      rng.uniform(0.0, 1.0) < 0.1 ? 0.0 : std::pow(10.0, rng.uniform(-12, 6))};
    const Triple w = js_weights(beta, d, kDefaultEpsilon);
    CHECK(std::abs(w[0] + w[1] + w[2] - 1.0) <= 1e-15);
    for (double v : w) CHECK(v >= 0.0);
  }
}

TEST_CASE("nonlinear interpolation picks the smooth side of a step") {
  const StencilData step{{0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}, 1.0};
  const Triple c = value_candidates(step);
  // the two smallest indicators belong to candidates 1 and 3
  const double lo = std::min(c[0], c[2]);
  const double hi = std::max(c[0], c[2]);
  const double v = interpolate_midpoint(step, WeightMode::nonlinear);
  CHECK(v >= lo);
  CHECK(v <= hi);

  const StencilData constant{{-4.0, -4.0, -4.0}, {0.0, 0.0, 0.0}, 0.1};
  CHECK(interpolate_midpoint(constant, WeightMode::linear) == doctest::Approx(-4.0));
  CHECK(interpolate_midpoint(constant, WeightMode::nonlinear) == doctest::Approx(-4.0));
}

TEST_CASE("mirrored stencil reproduces the right-side value") {
  // u = exp(x) around the interface at 0.5: the right interpolation from the
  // mirrored stencil must match the exact value as well
  auto f = [](double x) { return std::exp(x); };
  const double h = 0.01;
  const StencilData right = StencilData::mirrored(f(2 * h), f(h), f(0.0), f(2 * h), f(h), f(0.0), h);
  CHECK(value_full_stencil(right) == doctest::Approx(f(0.5 * h)).epsilon(1e-11));
}

TEST_CASE("interpolation order on a sine wave") {
  for (WeightMode mode : {WeightMode::linear, WeightMode::nonlinear}) {
    std::vector<double> errors;
    for (int n = 10; n <= 160; n *= 2) {
      const double h = 1.0 / n;
      double err = 0.0;
      for (int i = 0; i < n; ++i) {
        const double x = i * h;
        const StencilData s = sample([](double t) { return std::sin(2 * M_PI * t); },
                                     [](double t) { return 2 * M_PI * std::cos(2 * M_PI * t); }, x, h);
        err += std::abs(interpolate_midpoint(s, mode) - std::sin(2 * M_PI * (x + 0.5 * h))) * h;
      }
      errors.push_back(err);
    }
    CAPTURE(static_cast<int>(mode));
    const double order = std::log2(errors[errors.size() - 2] / errors.back());
    CHECK(order >= 4.8);
  }
}

TEST_CASE("candidates stay within a bounded expansion of monotone data") {
  Sampler rng(15);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    // monotone increasing samples with consistent non-negative slopes
    double u0 = rng.uniform(-1.0, 1.0);
    const double u1 = u0 + rng.uniform(0.0, 1.0);
    const double u2 = u1 + rng.uniform(0.0, 1.0);
    const double h = rng.uniform(0.01, 1.0);
    const double range = u2 - u0;
    if (range < 1e-3) continue;
    StencilData s{{u0, u1, u2}, {}, h};
    for (int k = 0; k < 3; ++k) s.derivs[k] = rng.uniform(0.0, 2.0) * range / (2.0 * h);
    for (double c : value_candidates(s)) {
      const double excess = std::max(c - u2, u0 - c) / range;
      worst = std::max(worst, excess);
    }
  }
  CHECK(worst < 2.0);
}
