#include "hwcns/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hwcns {

RiemannSolution::RiemannSolution(const PrimitiveState<1>& left, const PrimitiveState<1>& right,
                                 const GasModel& gas)
    : left_(left), right_(right), gas_(gas) {
  if (!(left.rho > 0.0 && left.p > 0.0 && right.rho > 0.0 && right.p > 0.0)) {
    throw std::invalid_argument("Riemann data must have positive density and pressure");
  }
  const double g = gas.gamma;
  cl_ = std::sqrt(g * left.p / left.rho);
  cr_ = std::sqrt(g * right.p / right.rho);
  const double du = right.vel[0] - left.vel[0];
  if (2.0 * (cl_ + cr_) / (g - 1.0) <= du) {
    throw VacuumError("initial data generate vacuum: u_R - u_L = " + std::to_string(du) +
                      " >= 2(c_L + c_R)/(gamma - 1)");
  }

  // two-rarefaction guess
  const double z = (g - 1.0) / (2.0 * g);
  const double num = cl_ + cr_ - 0.5 * (g - 1.0) * du;
  const double den = cl_ / std::pow(left.p, z) + cr_ / std::pow(right.p, z);
  double p = std::pow(num / den, 1.0 / z);

  // bracket: f is increasing, f(0+) < 0 without vacuum
  double lo = 0.0;
  double hi = std::max(left.p, right.p);
  while (pressure_function(hi) < 0.0) hi *= 2.0;
  if (!(p > lo && p < hi)) p = 0.5 * (lo + hi);

  const double scale = std::max(1.0, std::abs(du) + cl_ + cr_);
  for (iterations_ = 1; iterations_ <= 200; ++iterations_) {
    double dl = 0.0;
    double dr = 0.0;
    const double f = side_function(p, left_, cl_, &dl) + side_function(p, right_, cr_, &dr) + du;
    if (std::abs(f) < 1e-14 * scale) break;
    if (f < 0.0) lo = p; else hi = p;
    double next = p - f / (dl + dr);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - p) <= 1e-16 * p) {
      p = next;
      break;
    }
    p = next;
  }
  p_star_ = p;
  u_star_ = 0.5 * (left.vel[0] + right.vel[0]) +
            0.5 * (side_function(p, right_, cr_, nullptr) - side_function(p, left_, cl_, nullptr));

  const double gm = (g - 1.0) / (g + 1.0);
  auto star_density = [&](const PrimitiveState<1>& s, WaveKind& kind) {
    const double ratio = p_star_ / s.p;
    if (ratio > 1.0) {
      kind = WaveKind::shock;
      return s.rho * (ratio + gm) / (gm * ratio + 1.0);
    }
    kind = WaveKind::rarefaction;
    return s.rho * std::pow(ratio, 1.0 / g);
  };
  rho_star_l_ = star_density(left_, left_wave_);
  rho_star_r_ = star_density(right_, right_wave_);
}

double RiemannSolution::side_function(double p, const PrimitiveState<1>& s, double c,
                                      double* derivative) const {
  const double g = gas_.gamma;
  if (p > s.p) {
    const double a = 2.0 / ((g + 1.0) * s.rho);
    const double b = (g - 1.0) / (g + 1.0) * s.p;
    const double root = std::sqrt(a / (p + b));
    if (derivative != nullptr) *derivative = root * (1.0 - 0.5 * (p - s.p) / (p + b));
    return (p - s.p) * root;
  }
  const double ratio = p / s.p;
  if (derivative != nullptr) *derivative = std::pow(ratio, -(g + 1.0) / (2.0 * g)) / (s.rho * c);
  return 2.0 * c / (g - 1.0) * (std::pow(ratio, (g - 1.0) / (2.0 * g)) - 1.0);
}

double RiemannSolution::pressure_function(double p) const {
  return side_function(p, left_, cl_, nullptr) + side_function(p, right_, cr_, nullptr) +
         right_.vel[0] - left_.vel[0];
}

double RiemannSolution::right_shock_mach() const {
  const double g = gas_.gamma;
  return std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / right_.p + (g - 1.0) / (2.0 * g));
}

double RiemannSolution::right_shock_speed() const { return right_.vel[0] + cr_ * right_shock_mach(); }

double RiemannSolution::left_shock_speed() const {
  const double g = gas_.gamma;
  const double m = std::sqrt((g + 1.0) / (2.0 * g) * p_star_ / left_.p + (g - 1.0) / (2.0 * g));
  return left_.vel[0] - cl_ * m;
}

std::array<double, 5> RiemannSolution::wave_speeds() const {
  const double g = gas_.gamma;
  std::array<double, 5> s{};
  if (left_wave_ == WaveKind::shock) {
    s[0] = s[1] = left_shock_speed();
  } else {
    s[0] = left_.vel[0] - cl_;
    s[1] = u_star_ - cl_ * std::pow(p_star_ / left_.p, (g - 1.0) / (2.0 * g));
  }
  s[2] = u_star_;
  if (right_wave_ == WaveKind::shock) {
    s[3] = s[4] = right_shock_speed();
  } else {
    s[3] = u_star_ + cr_ * std::pow(p_star_ / right_.p, (g - 1.0) / (2.0 * g));
    s[4] = right_.vel[0] + cr_;
  }
  return s;
}

PrimitiveState<1> RiemannSolution::sample(double xi) const {
  const double g = gas_.gamma;
  const std::array<double, 5> s = wave_speeds();
  PrimitiveState<1> w;
  if (xi <= s[2]) {
    if (xi <= s[0]) return left_;
    if (xi >= s[1]) {
      w.rho = rho_star_l_;
      w.vel[0] = u_star_;
      w.p = p_star_;
      return w;
    }
    // inside the left rarefaction fan
    const double c = 2.0 / (g + 1.0) * (cl_ + 0.5 * (g - 1.0) * (left_.vel[0] - xi));
    w.vel[0] = 2.0 / (g + 1.0) * (cl_ + 0.5 * (g - 1.0) * left_.vel[0] + xi);
    w.rho = left_.rho * std::pow(c / cl_, 2.0 / (g - 1.0));
    w.p = left_.p * std::pow(c / cl_, 2.0 * g / (g - 1.0));
    return w;
  }
  if (xi >= s[4]) return right_;
  if (xi <= s[3]) {
    w.rho = rho_star_r_;
    w.vel[0] = u_star_;
    w.p = p_star_;
    return w;
  }
  const double c = 2.0 / (g + 1.0) * (cr_ - 0.5 * (g - 1.0) * (right_.vel[0] - xi));
  w.vel[0] = 2.0 / (g + 1.0) * (-cr_ + 0.5 * (g - 1.0) * right_.vel[0] + xi);
  w.rho = right_.rho * std::pow(c / cr_, 2.0 / (g - 1.0));
  w.p = right_.p * std::pow(c / cr_, 2.0 * g / (g - 1.0));
  return w;
}

}  // namespace hwcns
