// Nonlinear Hermite interpolation of a scalar variable and of its first
// derivative to the midpoint x_{i+1/2} from the three-node stencil
// {x_{i-1}, x_i, x_{i+1}} carrying node values and node derivatives.
#pragma once

#include <array>
#include <cmath>

namespace hwcns {

enum class WeightMode { linear, nonlinear };
enum class DerivativeMode { hermite, alt_low_order };

/// Node values/derivatives at (i-1, i, i+1) and the spacing h.
struct StencilData {
  std::array<double, 3> values{};
  std::array<double, 3> derivs{};
  double h = 1.0;

  /// Same stencil seen from the other side of the interface: the data at
  /// (i+2, i+1, i) with the sign of odd derivatives flipped.
  static StencilData mirrored(double u_far, double u_mid, double u_near, double d_far, double d_mid,
                              double d_near, double h) {
    return StencilData{{u_far, u_mid, u_near}, {-d_far, -d_mid, -d_near}, h};
  }
};

using Triple = std::array<double, 3>;

inline constexpr double kDefaultEpsilon = 1e-6;

/// Optimal weights of the value sub-stencils S1 = {i-1, i}, S2 = {i, i+1}, S3 = {i-1, i, i+1}.
inline constexpr Triple kValueLinearWeights{1.0 / 16.0, 9.0 / 16.0, 3.0 / 8.0};
/// Optimal weights of the derivative sub-stencils.
inline constexpr Triple kDerivLinearWeights{1.0 / 112.0, 15.0 / 16.0, 3.0 / 56.0};

struct WeightSet {
  Triple linear{};
  Triple beta{};
  Triple omega{};
  double epsilon = kDefaultEpsilon;
};

// ---------------------------------------------------------------------------
// values

inline Triple value_candidates(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  const double h = s.h;
  return {-1.25 * u[0] + 2.25 * u[1] - 0.75 * h * du[0],
          0.25 * u[1] + 0.75 * u[2] - 0.25 * h * du[2],
          -0.125 * u[0] + 0.75 * u[1] + 0.375 * u[2]};
}

inline double value_full_stencil(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  return -0.125 * u[0] + 0.5625 * u[1] + 0.5625 * u[2] - (3.0 * s.h / 64.0) * (du[0] + 3.0 * du[2]);
}

/// beta_k = (h u'_k)^2 + (h^2 u''_k)^2 with the per-stencil difference
/// approximations; the scaled quantities are formed directly so h only
/// appears next to the node derivatives.
inline Triple smoothness_indicators(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  const double h = s.h;
  const double d1[3] = {-2.0 * u[0] + 2.0 * u[1] - h * du[0],
                        -2.0 * u[1] + 2.0 * u[2] - h * du[2],
                        0.5 * (u[2] - u[0])};
  const double d2[3] = {-2.0 * u[0] + 2.0 * u[1] - 2.0 * h * du[0],
                        2.0 * u[1] - 2.0 * u[2] + 2.0 * h * du[2],
                        u[0] - 2.0 * u[1] + u[2]};
  return {d1[0] * d1[0] + d2[0] * d2[0], d1[1] * d1[1] + d2[1] * d2[1],
          d1[2] * d1[2] + d2[2] * d2[2]};
}

/// Jiang-Shu weights: alpha_k = d_k / (beta_k + eps)^2, normalized.
inline Triple js_weights(const Triple& beta, const Triple& d, double epsilon = kDefaultEpsilon) {
  Triple alpha{};
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double b = beta[k] + epsilon;
    alpha[k] = d[k] / (b * b);
    sum += alpha[k];
  }
  for (auto& a : alpha) a /= sum;
  return alpha;
}

inline WeightSet value_weights(const StencilData& s, double epsilon = kDefaultEpsilon) {
  WeightSet w;
  w.linear = kValueLinearWeights;
  w.beta = smoothness_indicators(s);
  w.omega = js_weights(w.beta, w.linear, epsilon);
  w.epsilon = epsilon;
  return w;
}

inline double blend(const Triple& weights, const Triple& candidates) {
  return weights[0] * candidates[0] + weights[1] * candidates[1] + weights[2] * candidates[2];
}

inline double interpolate_midpoint(const StencilData& s, WeightMode mode,
                                   double epsilon = kDefaultEpsilon) {
  const Triple c = value_candidates(s);
  if (mode == WeightMode::linear) return blend(kValueLinearWeights, c);
  return blend(js_weights(smoothness_indicators(s), kValueLinearWeights, epsilon), c);
}

// ---------------------------------------------------------------------------
// first derivatives

inline Triple deriv_candidates(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  const double ih = 1.0 / s.h;
  return {4.5 * ih * (u[0] - u[1]) + 1.75 * du[0] + 3.75 * du[1],
          1.5 * ih * (u[2] - u[1]) - 0.25 * du[1] - 0.25 * du[2],
          0.125 * ih * (u[0] - 8.0 * u[1] + 7.0 * u[2]) + 0.25 * du[1]};
}

inline double deriv_full_stencil(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  return (3.0 / 64.0 * u[0] - 1.5 * u[1] + 93.0 / 64.0 * u[2]) / s.h +
         (du[0] - 12.0 * du[1] - 15.0 * du[2]) / 64.0;
}

/// bar-beta_k = (h^2 u''_k)^2 + (h^3 u'''_k)^2.
inline Triple deriv_smoothness_indicators(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  const double h = s.h;
  const double d2[3] = {6.0 * u[0] - 6.0 * u[1] + 2.0 * h * du[0] + 4.0 * h * du[1],
                        -6.0 * u[1] + 6.0 * u[2] - 4.0 * h * du[1] - 2.0 * h * du[2],
                        u[0] - 2.0 * u[1] + u[2]};
  const double d3[3] = {12.0 * u[0] - 12.0 * u[1] + 6.0 * h * du[0] + 6.0 * h * du[1],
                        12.0 * u[1] - 12.0 * u[2] + 6.0 * h * du[1] + 6.0 * h * du[2],
                        -3.0 * u[0] + 3.0 * u[2] - 6.0 * h * du[1]};
  return {d2[0] * d2[0] + d3[0] * d3[0], d2[1] * d2[1] + d3[1] * d3[1],
          d2[2] * d2[2] + d3[2] * d3[2]};
}

inline WeightSet deriv_weights(const StencilData& s, double epsilon = kDefaultEpsilon) {
  WeightSet w;
  w.linear = kDerivLinearWeights;
  w.beta = deriv_smoothness_indicators(s);
  w.omega = js_weights(w.beta, w.linear, epsilon);
  w.epsilon = epsilon;
  return w;
}

// Derivatives of the value polynomials. No convex weights exist for these,
// so they are only used for accuracy comparisons.

inline double alt_deriv_full_stencil(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  return (3.0 * u[0] - 24.0 * u[1] + 21.0 * u[2] + s.h * du[0] - 3.0 * s.h * du[2]) / (16.0 * s.h);
}

inline Triple alt_deriv_candidates(const StencilData& s) {
  const auto& u = s.values;
  const auto& du = s.derivs;
  const double ih = 1.0 / s.h;
  // the last two coincide: a quadratic's midpoint slope is the secant slope
  return {ih * (-3.0 * u[0] + 3.0 * u[1]) - 2.0 * du[0], ih * (u[2] - u[1]), ih * (u[2] - u[1])};
}

inline double interpolate_midpoint_deriv(const StencilData& s, WeightMode weights,
                                         DerivativeMode mode = DerivativeMode::hermite,
                                         double epsilon = kDefaultEpsilon) {
  if (mode == DerivativeMode::alt_low_order) return alt_deriv_full_stencil(s);
  const Triple c = deriv_candidates(s);
  if (weights == WeightMode::linear) return blend(kDerivLinearWeights, c);
  return blend(js_weights(deriv_smoothness_indicators(s), kDerivLinearWeights, epsilon), c);
}

}  // namespace hwcns
