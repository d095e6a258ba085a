// Conservative finite-difference spatial operator: Hermite interpolation of
// node data to midpoints, GRP midpoint fluxes, and the five-midpoint compact
// combination giving h-hat and d(h-hat)/dt at every cell interface.
#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <string>
#include <vector>

#include "hwcns/euler.hpp"
#include "hwcns/grid.hpp"
#include "hwcns/grp_flux.hpp"
#include "hwcns/hermite.hpp"
#include "hwcns/parallel.hpp"

namespace hwcns {

enum class Variables { characteristic, primitive, conservative };

struct SchemeConfig {
  GasModel gas{};
  WeightMode weights = WeightMode::nonlinear;
  DerivativeMode derivative = DerivativeMode::hermite;
  Dissipation dissipation = Dissipation::rusanov;
  Splitting splitting = Splitting::upwind;
  Variables variables = Variables::characteristic;
  Averaging averaging = Averaging::roe;
  double epsilon = kDefaultEpsilon;
  int workers = 1;
};

/// Weights of f-hat at i-3/2 ... i+5/2 in h-hat_{i+1/2}.
inline constexpr std::array<double, 5> kCompactWeights{3.0 / 640.0, -29.0 / 480.0, 1067.0 / 960.0,
                                                       -29.0 / 480.0, 3.0 / 640.0};

inline double compact_combination(const std::array<double, 5>& v) {
  return kCompactWeights[0] * v[0] + kCompactWeights[1] * v[1] + kCompactWeights[2] * v[2] +
         kCompactWeights[3] * v[3] + kCompactWeights[4] * v[4];
}

/// Vector form over five consecutive midpoint values starting at `v`.
template <int D>
State<D> compact_combination(const State<D>* v) {
  State<D> out{};
  for (int k = 0; k < kNumVars<D>; ++k) {
    out[k] = kCompactWeights[0] * v[0][k] + kCompactWeights[1] * v[1][k] +
             kCompactWeights[2] * v[2][k] + kCompactWeights[3] * v[3][k] +
             kCompactWeights[4] * v[4][k];
  }
  return out;
}

/// Sixth-order central first derivative from samples at offsets -3..3
/// (the center sample has zero weight).
inline double central_derivative(const std::array<double, 7>& u, double h) {
  return (-u[0] + 9.0 * u[1] - 45.0 * u[2] + 45.0 * u[4] - 9.0 * u[5] + u[6]) / (60.0 * h);
}

/// Midpoints evaluated per line: i+1/2 for i = -3 .. n+1, which is what the
/// compact combination at interfaces -1/2 .. n-1/2 reads.
inline constexpr int kMidpointOffset = 3;
inline int midpoints_per_line(int n) { return n + 5; }

/// h-hat and d(h-hat)/dt at interfaces. Axis a stores, per line, n_a + 1
/// interfaces i+1/2 for i = -1 .. n_a-1 at position i+1. Lines run over
/// the other axis' interior nodes.
template <int D>
struct InterfaceFluxes {
  std::array<std::vector<State<D>>, D> h;
  std::array<std::vector<State<D>>, D> dh_dt;

  static std::size_t slot(const Grid& g, int axis, int line, int i) {
    return static_cast<std::size_t>(line) * static_cast<std::size_t>(g.n[axis] + 1) +
           static_cast<std::size_t>(i + 1);
  }
};

/// Interface values/derivatives for every midpoint of one line of nodes.
/// `line` holds n + 2*kGhost padded nodes; `out` receives midpoints_per_line(n)
/// entries (transverse terms left empty).
template <int D>
void interpolate_line(const State<D>* line, int n, Axis axis, double h, const SchemeConfig& cfg,
                      std::vector<State<D>>& work, std::vector<State<D>>& dwork,
                      InterfaceState<D>* out) {
  constexpr int N = kNumVars<D>;
  const int padded = n + 2 * kGhost;
  const GasModel& gas = cfg.gas;
  work.resize(static_cast<std::size_t>(padded));
  dwork.resize(static_cast<std::size_t>(padded));

  const bool primitive = cfg.variables == Variables::primitive;
  for (int p = 0; p < padded; ++p) {
    if (primitive) {
      const PrimitiveState<D> w = conserved_to_primitive<D>(line[p], gas);
      work[p][0] = w.rho;
      for (int d = 0; d < D; ++d) work[p][1 + d] = w.vel[d];
      work[p][N - 1] = w.p;
    } else {
      work[p] = line[p];
    }
  }
  // derivatives are needed on nodes -4 .. n+3
  for (int p = kGhost - 4; p < n + kGhost + 4; ++p) {
    for (int k = 0; k < N; ++k) {
      dwork[p][k] = central_derivative({work[p - 3][k], work[p - 2][k], work[p - 1][k], work[p][k],
                                        work[p + 1][k], work[p + 2][k], work[p + 3][k]},
                                       h);
    }
  }

  const int count = midpoints_per_line(n);
  for (int m = 0; m < count; ++m) {
    const int i = m - kMidpointOffset;  // midpoint i+1/2
    const int p = i + kGhost;
    std::array<State<D>, 4> v{};
    std::array<State<D>, 4> dv{};
    EigenSystem<D> es;
    const bool characteristic = cfg.variables == Variables::characteristic;
    if (characteristic) {
      const State<D>& a = line[p];
      const State<D>& b = line[p + 1];
      if (!is_physical<D>(a, gas) || !is_physical<D>(b, gas)) {
        throw NonPhysicalState("non-physical node state next to midpoint " + std::to_string(i) + "+1/2");
      }
      es = eigensystem<D>(average_states<D>(a, b, gas, cfg.averaging), axis, gas);
      for (int s = 0; s < 4; ++s) {
        v[s] = es.to_characteristic(work[p - 1 + s]);
        dv[s] = es.to_characteristic(dwork[p - 1 + s]);
      }
    } else {
      for (int s = 0; s < 4; ++s) {
        v[s] = work[p - 1 + s];
        dv[s] = dwork[p - 1 + s];
      }
    }
    State<D> vl{}, vr{}, dl{}, dr{};
    for (int k = 0; k < N; ++k) {
      const StencilData left{{v[0][k], v[1][k], v[2][k]}, {dv[0][k], dv[1][k], dv[2][k]}, h};
      const StencilData right =
          StencilData::mirrored(v[3][k], v[2][k], v[1][k], dv[3][k], dv[2][k], dv[1][k], h);
      vl[k] = interpolate_midpoint(left, cfg.weights, cfg.epsilon);
      vr[k] = interpolate_midpoint(right, cfg.weights, cfg.epsilon);
      dl[k] = interpolate_midpoint_deriv(left, cfg.weights, cfg.derivative, cfg.epsilon);
      dr[k] = -interpolate_midpoint_deriv(right, cfg.weights, cfg.derivative, cfg.epsilon);
    }
    InterfaceState<D>& o = out[m];
    if (characteristic) {
      o.uL = es.from_characteristic(vl);
      o.uR = es.from_characteristic(vr);
      o.duL = es.from_characteristic(dl);
      o.duR = es.from_characteristic(dr);
    } else if (primitive) {
      auto to_conserved = [&](const State<D>& w, const State<D>& dw, State<D>& q, State<D>& dq) {
        PrimitiveState<D> ps;
        ps.rho = w[0];
        for (int d = 0; d < D; ++d) ps.vel[d] = w[1 + d];
        ps.p = w[N - 1];
        q = primitive_to_conserved<D>(ps, gas);
        double kin = 0.0;
        double vdv = 0.0;
        dq[0] = dw[0];
        for (int d = 0; d < D; ++d) {
          dq[1 + d] = ps.vel[d] * dw[0] + ps.rho * dw[1 + d];
          kin += ps.vel[d] * ps.vel[d];
          vdv += ps.vel[d] * dw[1 + d];
        }
        dq[N - 1] = dw[N - 1] / (gas.gamma - 1.0) + 0.5 * kin * dw[0] + ps.rho * vdv;
      };
      to_conserved(vl, dl, o.uL, o.duL);
      to_conserved(vr, dr, o.uR, o.duR);
    } else {
      o.uL = vl;
      o.uR = vr;
      o.duL = dl;
      o.duR = dr;
    }
    o.has_transverse = false;
  }
}

template <int D>
class SpatialOperator {
 public:
  explicit SpatialOperator(SchemeConfig cfg) : cfg_(cfg) {}

  const SchemeConfig& config() const { return cfg_; }

  /// Number of completed evaluate() calls.
  long evaluations() const { return evaluations_.load(); }

  /// Fills ghost layers of `field`, then computes h-hat and d(h-hat)/dt on
  /// every interface of the interior.
  void evaluate(Field<D>& field, InterfaceFluxes<D>& out) {
    fill_ghosts<D>(field);
    const Grid& g = field.grid;
    for (int a = 0; a < D; ++a) {
      const int lines = D == 2 ? g.n[1 - a] : 1;
      const std::size_t size = static_cast<std::size_t>(lines) * static_cast<std::size_t>(g.n[a] + 1);
      out.h[a].resize(size);
      out.dh_dt[a].resize(size);
      sweep(field, static_cast<Axis>(a), out);
    }
    ++evaluations_;
  }

 private:
  // Interface states for lines -2 .. lines+1 (transverse stencil reach).
  void sweep(const Field<D>& field, Axis axis, InterfaceFluxes<D>& out) {
    const Grid& g = field.grid;
    const int a = static_cast<int>(axis);
    const int n = g.n[a];
    const int lines = D == 2 ? g.n[1 - a] : 1;
    const int halo = D == 2 ? 2 : 0;
    const int stored = lines + 2 * halo;
    const int mids = midpoints_per_line(n);
    const int padded = n + 2 * kGhost;
    const double h = g.spacing(a);
    states_.resize(static_cast<std::size_t>(stored) * static_cast<std::size_t>(mids));
    if (D == 2) {
      crossL_.resize(states_.size());
      crossR_.resize(states_.size());
    }
    const Axis cross_axis = static_cast<Axis>(1 - a);

    parallel_for(0, stored, cfg_.workers, [&](int s) {
      const int line_index = s - halo;
      std::vector<State<D>> line(static_cast<std::size_t>(padded));
      for (int p = 0; p < padded; ++p) {
        const int i = p - kGhost;
        line[p] = a == 0 ? field.at(i, line_index) : field.at(line_index, i);
      }
      std::vector<State<D>> work;
      std::vector<State<D>> dwork;
      InterfaceState<D>* dst = &states_[static_cast<std::size_t>(s) * mids];
      try {
        interpolate_line<D>(line.data(), n, axis, h, cfg_, work, dwork, dst);
      } catch (const NonPhysicalState& e) {
        throw NonPhysicalState(std::string(e.what()) + " on " + axis_name(a) + "-line " +
                               std::to_string(line_index));
      }
      if (D == 2) {
        for (int m = 0; m < mids; ++m) {
          const std::size_t k = static_cast<std::size_t>(s) * mids + m;
          if (!is_physical<D>(states_[k].uL, cfg_.gas) || !is_physical<D>(states_[k].uR, cfg_.gas)) {
            throw NonPhysicalState("non-physical interpolated state at " + axis_name(a) + "-midpoint " +
                                   std::to_string(m - kMidpointOffset) + "+1/2 on line " +
                                   std::to_string(line_index));
          }
          crossL_[k] = physical_flux_unchecked<D>(states_[k].uL, cross_axis, cfg_.gas);
          crossR_[k] = physical_flux_unchecked<D>(states_[k].uR, cross_axis, cfg_.gas);
        }
      }
    });

    const double cross_h = D == 2 ? g.spacing(1 - a) : 1.0;
    parallel_for(0, lines, cfg_.workers, [&](int line_index) {
      const int s = line_index + halo;
      std::vector<FluxPair<D>> pairs(static_cast<std::size_t>(mids));
      for (int m = 0; m < mids; ++m) {
        InterfaceState<D> iface = states_[static_cast<std::size_t>(s) * mids + m];
        if (D == 2) {
          auto at = [&](int ds, int mm) -> std::size_t {
            return static_cast<std::size_t>(s + ds) * mids + mm;
          };
          for (int k = 0; k < kNumVars<D>; ++k) {
            iface.transverseL[k] = (crossL_[at(-2, m)][k] - 8.0 * crossL_[at(-1, m)][k] +
                                    8.0 * crossL_[at(1, m)][k] - crossL_[at(2, m)][k]) /
                                   (12.0 * cross_h);
            iface.transverseR[k] = (crossR_[at(-2, m)][k] - 8.0 * crossR_[at(-1, m)][k] +
                                    8.0 * crossR_[at(1, m)][k] - crossR_[at(2, m)][k]) /
                                   (12.0 * cross_h);
          }
          iface.has_transverse = true;
        }
        const int i = m - kMidpointOffset;
        try {
          const EigenSystem<D> es = interface_eigensystem<D>(iface.uL, iface.uR, axis, cfg_.gas, cfg_.averaging);
          pairs[m] = interface_flux_pair<D>(iface, axis, cfg_.gas, cfg_.dissipation, cfg_.splitting, es);
        } catch (const NonPhysicalState& e) {
          throw NonPhysicalState(std::string(e.what()) + " at " + axis_name(a) + "-midpoint " +
                                 std::to_string(i) + "+1/2 on line " + std::to_string(line_index));
        }
      }
      std::vector<State<D>> flux(static_cast<std::size_t>(mids));
      std::vector<State<D>> dflux(static_cast<std::size_t>(mids));
      for (int m = 0; m < mids; ++m) {
        flux[m] = pairs[m].flux;
        dflux[m] = pairs[m].dflux_dt;
      }
      // interface i+1/2 (i = -1 .. n-1) combines midpoints i-2 .. i+2
      for (int i = -1; i < n; ++i) {
        const int first = i - 2 + kMidpointOffset;
        const std::size_t slot = InterfaceFluxes<D>::slot(g, a, line_index, i);
        out.h[a][slot] = compact_combination<D>(&flux[first]);
        out.dh_dt[a][slot] = compact_combination<D>(&dflux[first]);
      }
    });
  }

  static std::string axis_name(int a) { return a == 0 ? "x" : "y"; }

  SchemeConfig cfg_;
  std::atomic<long> evaluations_{0};
  std::vector<InterfaceState<D>> states_;
  std::vector<State<D>> crossL_;
  std::vector<State<D>> crossR_;
};

/// -div(h) at interior nodes written into `out` (ghosts untouched).
template <int D>
void flux_divergence(const Grid& g, const std::array<std::vector<State<D>>, D>& h, Field<D>& out) {
  const int ny = D == 2 ? g.n[1] : 1;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      State<D> r{};
      for (int a = 0; a < D; ++a) {
        const int line = a == 0 ? j : i;
        const int pos = a == 0 ? i : j;
        const double inv = 1.0 / g.spacing(a);
        const State<D>& hp = h[a][InterfaceFluxes<D>::slot(g, a, line, pos)];
        const State<D>& hm = h[a][InterfaceFluxes<D>::slot(g, a, line, pos - 1)];
        for (int k = 0; k < kNumVars<D>; ++k) r[k] -= (hp[k] - hm[k]) * inv;
      }
      out.at(i, j) = r;
    }
  }
}

template <int D>
struct ResidualResult {
  Field<D> residual;     ///< -div(h-hat)
  Field<D> residual_dt;  ///< -div(d(h-hat)/dt)
  InterfaceFluxes<D> fluxes;
};

/// One-shot residual evaluation (fills ghost layers of `field`).
template <int D>
ResidualResult<D> residual(Field<D>& field, const SchemeConfig& cfg) {
  SpatialOperator<D> op(cfg);
  ResidualResult<D> r{Field<D>(field.grid, field.time), Field<D>(field.grid, field.time), {}};
  op.evaluate(field, r.fluxes);
  flux_divergence<D>(field.grid, r.fluxes.h, r.residual);
  flux_divergence<D>(field.grid, r.fluxes.dh_dt, r.residual_dt);
  return r;
}

}  // namespace hwcns
