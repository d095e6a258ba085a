// Two-stage fourth-order Lax-Wendroff-type time stepping driven by h-hat and
// its time derivative, with CFL step control.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwcns/spatial_operator.hpp"

namespace hwcns {

struct StepConfig {
  double cfl = 0.5;
  double t_end = 0.0;
  long max_steps = 10'000'000;
  std::vector<double> snapshot_times;

  void validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw std::invalid_argument("cfl must lie in (0, 1], got " + std::to_string(cfl));
    if (max_steps <= 0) throw std::invalid_argument("max_steps must be positive");
  }
};

class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest |u_axis| + c over interior nodes.
template <int D>
double max_wave_speed(const Field<D>& f, int axis, const GasModel& gas) {
  double s = 0.0;
  f.for_each_interior([&](int i, int j, const State<D>& q) {
    require_physical<D>(q, gas, "node (" + std::to_string(i) + "," + std::to_string(j) + ")");
    s = std::max(s, std::abs(q[1 + axis] / q[0]) + sound_speed<D>(q, gas));
  });
  return s;
}

/// k = cfl * min over axes of h_axis / max(|u_axis| + c).
template <int D>
double compute_dt(const Field<D>& f, double cfl, const GasModel& gas) {
  double k = std::numeric_limits<double>::infinity();
  for (int a = 0; a < D; ++a) {
    const double s = max_wave_speed<D>(f, a, gas);
    if (!(s > 0.0) || !std::isfinite(s)) throw IntegrationError("wave speed bound must be positive and finite");
    k = std::min(k, f.grid.spacing(a) / s);
  }
  return cfl * k;
}

/// Step size clipped so that t + k does not pass `target`.
inline double clip_dt(double k, double t, double target) { return std::min(k, target - t); }

template <int D>
class TwoStageIntegrator {
 public:
  explicit TwoStageIntegrator(const SchemeConfig& cfg) : op_(cfg) {}

  const SpatialOperator<D>& spatial_operator() const { return op_; }
  long residual_evaluations() const { return op_.evaluations(); }

  /// Net amount of each conserved quantity that left through the domain
  /// boundary since construction (zero on periodic domains).
  const State<D>& boundary_outflow() const { return outflow_; }

  /// Advances `u` by k. On failure `u` is left untouched.
  void step(Field<D>& u, double k) {
    const Grid& g = u.grid;
    try {
      stage_ = 1;
      op_.evaluate(u, base_);
      // stage 1: h* = h^n + k/4 dh^n
      combine(star_, base_, 0.25 * k, nullptr, 0.0);
      half_ = u;
      update(half_, u, star_, 0.5 * k, g);
      check(half_, "intermediate");
      half_.time = u.time + 0.5 * k;

      stage_ = 2;
      op_.evaluate(half_, mid_);
      // stage 2: h4 = h^n + k/6 dh^n + k/3 dh^{n+1/2}
      combine(fourth_, base_, k / 6.0, &mid_, k / 3.0);
      next_ = u;
      update(next_, u, fourth_, k, g);
      check(next_, "final");
    } catch (const NonPhysicalState& e) {
      throw IntegrationError("step " + std::to_string(steps_ + 1) + " stage " + std::to_string(stage_) +
                             " at t=" + std::to_string(u.time) + " (k=" + std::to_string(k) + "): " + e.what() +
                             "; consider a smaller cfl or nonlinear weights");
    }
    accumulate_outflow(g, k);
    next_.time = u.time + k;
    std::swap(u.data, next_.data);
    u.time = next_.time;
    ++steps_;
  }

  long steps() const { return steps_; }

 private:
  void combine(std::array<std::vector<State<D>>, D>& out, const InterfaceFluxes<D>& base, double c0,
               const InterfaceFluxes<D>* extra, double c1) {
    for (int a = 0; a < D; ++a) {
      out[a].resize(base.h[a].size());
      for (std::size_t s = 0; s < base.h[a].size(); ++s) {
        for (int k = 0; k < kNumVars<D>; ++k) {
          double v = base.h[a][s][k] + c0 * base.dh_dt[a][s][k];
          if (extra != nullptr) v += c1 * extra->dh_dt[a][s][k];
          out[a][s][k] = v;
        }
      }
    }
  }

  // dst = src - k div(h)
  static void update(Field<D>& dst, const Field<D>& src, const std::array<std::vector<State<D>>, D>& h,
                     double k, const Grid& g) {
    const int ny = D == 2 ? g.n[1] : 1;
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < g.n[0]; ++i) {
        State<D> q = src.at(i, j);
        for (int a = 0; a < D; ++a) {
          const int line = a == 0 ? j : i;
          const int pos = a == 0 ? i : j;
          const double r = k / g.spacing(a);
          const State<D>& hp = h[a][InterfaceFluxes<D>::slot(g, a, line, pos)];
          const State<D>& hm = h[a][InterfaceFluxes<D>::slot(g, a, line, pos - 1)];
          for (int c = 0; c < kNumVars<D>; ++c) q[c] -= r * (hp[c] - hm[c]);
        }
        dst.at(i, j) = q;
      }
    }
  }

  void check(const Field<D>& f, const char* what) const {
    const GasModel& gas = op_.config().gas;
    f.for_each_interior([&](int i, int j, const State<D>& q) {
      if (!is_physical<D>(q, gas)) {
        throw NonPhysicalState(std::string(what) + " node (" + std::to_string(i) + "," + std::to_string(j) +
                               ") rho=" + std::to_string(q[0]) + " p=" + std::to_string(pressure<D>(q, gas)));
      }
    });
  }

  void accumulate_outflow(const Grid& g, double k) {
    for (int a = 0; a < D; ++a) {
      const int lines = D == 2 ? g.n[1 - a] : 1;
      const double width = D == 2 ? g.spacing(1 - a) : 1.0;
      for (int line = 0; line < lines; ++line) {
        const State<D>& hi = fourth_[a][InterfaceFluxes<D>::slot(g, a, line, g.n[a] - 1)];
        const State<D>& lo = fourth_[a][InterfaceFluxes<D>::slot(g, a, line, -1)];
        for (int c = 0; c < kNumVars<D>; ++c) outflow_[c] += k * width * (hi[c] - lo[c]);
      }
    }
  }

  SpatialOperator<D> op_;
  InterfaceFluxes<D> base_;
  InterfaceFluxes<D> mid_;
  std::array<std::vector<State<D>>, D> star_;
  std::array<std::vector<State<D>>, D> fourth_;
  Field<D> half_;
  Field<D> next_;
  State<D> outflow_{};
  long steps_ = 0;
  int stage_ = 0;
};

template <int D>
struct Trajectory {
  Field<D> final;
  std::vector<Field<D>> snapshots;
  long steps = 0;
  long residual_evaluations = 0;
  State<D> initial_integral{};
  State<D> boundary_outflow{};
  /// Largest per-step |change of sum(u h) + outflow| relative to sum|u h|.
  double max_step_conservation_error = 0.0;
};

/// Advances `initial` to cfg.t_end, landing exactly on every requested
/// snapshot time by clipping the step before it.
template <int D>
Trajectory<D> integrate(const Field<D>& initial, const SchemeConfig& scheme, const StepConfig& cfg) {
  cfg.validate();
  Trajectory<D> traj;
  traj.final = initial;
  traj.initial_integral = initial.integral();
  if (cfg.t_end < initial.time) throw std::invalid_argument("t_end precedes the initial time");

  std::vector<double> targets;
  for (double t : cfg.snapshot_times)
    if (t > initial.time && t < cfg.t_end) targets.push_back(t);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  targets.push_back(cfg.t_end);
  for (double t : cfg.snapshot_times)
    if (t == initial.time) traj.snapshots.push_back(initial);

  TwoStageIntegrator<D> stepper(scheme);
  Field<D>& u = traj.final;
  std::size_t next = 0;
  while (u.time < cfg.t_end) {
    if (stepper.steps() >= cfg.max_steps) {
      throw IntegrationError("max_steps (" + std::to_string(cfg.max_steps) + ") exceeded at t=" +
                             std::to_string(u.time));
    }
    const double target = targets[next];
    double k = compute_dt<D>(u, cfg.cfl, scheme.gas);
    bool lands = false;
    if (u.time + k >= target) {
      k = target - u.time;
      lands = true;
    }
    const State<D> before = u.integral();
    const State<D> out_before = stepper.boundary_outflow();
    stepper.step(u, k);
    if (lands) u.time = target;

    const State<D> after = u.integral();
    for (int c = 0; c < kNumVars<D>; ++c) {
      const double drift = after[c] - before[c] + (stepper.boundary_outflow()[c] - out_before[c]);
      double scale = 0.0;
      u.for_each_interior([&](int, int, const State<D>& q) { scale += std::abs(q[c]); });
      scale *= u.grid.spacing(0) * (D == 2 ? u.grid.spacing(1) : 1.0);
      if (scale > 0.0) traj.max_step_conservation_error = std::max(traj.max_step_conservation_error, std::abs(drift) / scale);
    }
    if (lands) {
      if (next + 1 < targets.size()) traj.snapshots.push_back(u);
      ++next;
    }
  }
  for (double t : cfg.snapshot_times)
    if (t == cfg.t_end && cfg.t_end > initial.time) traj.snapshots.push_back(u);
  traj.steps = stepper.steps();
  traj.residual_evaluations = stepper.residual_evaluations();
  traj.boundary_outflow = stepper.boundary_outflow();
  return traj;
}

}  // namespace hwcns
