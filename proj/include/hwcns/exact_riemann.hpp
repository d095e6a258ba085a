// Exact solution of the one-dimensional Euler Riemann problem for a
// perfect gas (reference for shock-tube error norms).
#pragma once

#include <array>
#include <stdexcept>

#include "hwcns/euler.hpp"

namespace hwcns {

class VacuumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class WaveKind { shock, rarefaction };

class RiemannSolution {
 public:
  RiemannSolution(const PrimitiveState<1>& left, const PrimitiveState<1>& right, const GasModel& gas);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  double rho_star_left() const { return rho_star_l_; }
  double rho_star_right() const { return rho_star_r_; }
  WaveKind left_wave() const { return left_wave_; }
  WaveKind right_wave() const { return right_wave_; }
  int newton_iterations() const { return iterations_; }

  const PrimitiveState<1>& left() const { return left_; }
  const PrimitiveState<1>& right() const { return right_; }

  /// Value of the pressure function f_L(p) + f_R(p) + u_R - u_L.
  double pressure_function(double p) const;

  /// Shock speed of the right (left) wave; only meaningful for shocks.
  double right_shock_speed() const;
  double left_shock_speed() const;
  /// Mach number of the right shock relative to the right state.
  double right_shock_mach() const;

  /// Ordered characteristic speeds bounding the wave fan:
  /// left head, left tail, contact, right tail, right head (head == tail for shocks).
  std::array<double, 5> wave_speeds() const;

  /// State at similarity coordinate xi = (x - x0) / t.
  PrimitiveState<1> sample(double xi) const;

 private:
  double side_function(double p, const PrimitiveState<1>& s, double c, double* derivative) const;

  PrimitiveState<1> left_;
  PrimitiveState<1> right_;
  GasModel gas_;
  double cl_ = 0.0;
  double cr_ = 0.0;
  double p_star_ = 0.0;
  double u_star_ = 0.0;
  double rho_star_l_ = 0.0;
  double rho_star_r_ = 0.0;
  WaveKind left_wave_ = WaveKind::rarefaction;
  WaveKind right_wave_ = WaveKind::rarefaction;
  int iterations_ = 0;
};

inline RiemannSolution solve_riemann(const PrimitiveState<1>& left, const PrimitiveState<1>& right,
                                     const GasModel& gas) {
  return RiemannSolution(left, right, gas);
}

}  // namespace hwcns
