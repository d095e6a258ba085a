// Top-level runs behind the command-line subcommands.
#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hwcns/config.hpp"
#include "hwcns/exact_riemann.hpp"
#include "hwcns/harness.hpp"
#include "hwcns/problems.hpp"
#include "hwcns/time_integrator.hpp"

namespace hwcns {

struct RunSummary {
  std::string problem;
  int dimension = 1;
  int n = 0;
  double t_end = 0.0;
  long steps = 0;
  long residual_evaluations = 0;
  std::vector<double> initial_integral;
  std::vector<double> final_integral;
  std::vector<double> boundary_outflow;
  double max_step_conservation_error = 0.0;
  double density_min = 0.0;
  double density_max = 0.0;
  std::vector<std::string> files;
};

/// Problem, grid size and final time after applying config overrides.
struct ResolvedRun {
  ProblemSpec spec;
  int n = 0;
  double t_end = 0.0;
};
ResolvedRun resolve(const RunConfig& cfg);

/// Integrates the configured problem without writing files.
template <int D>
Trajectory<D> simulate(const RunConfig& cfg) {
  cfg.validate();
  const ResolvedRun r = resolve(cfg);
  const SchemeConfig scheme = cfg.scheme();
  const Grid grid = make_grid(r.spec, r.n);
  const Field<D> initial = evaluate_ic<D>(r.spec, grid, scheme.gas);
  StepConfig steps;
  steps.cfl = cfg.cfl;
  steps.t_end = r.t_end;
  steps.max_steps = cfg.max_steps;
  steps.snapshot_times = cfg.snapshots;
  return integrate<D>(initial, scheme, steps);
}

/// Runs the configured problem and writes the solution CSV (plus one CSV per
/// intermediate snapshot, optional VTK) and the run manifest.
RunSummary run(const RunConfig& cfg, std::ostream& log);

/// Conserved-variable reference for a 1D problem at time t, if one is known
/// (closed-form exact solution or exact Riemann solution).
std::optional<std::function<State<1>(double, double)>> reference_1d(const ProblemSpec& spec, double t,
                                                                    const GasModel& gas);

struct ConvergenceOptions {
  RunConfig base;
  int levels = 5;
  int n0 = 40;
  /// Shrink the step as k ~ h^(5/4) so temporal error stays below the
  /// spatial error on fine grids.
  bool scale_dt = true;
};

/// Grid-refinement sweep (n0 * 2^l nodes) of the density error against the
/// problem's exact solution.
std::vector<OrderRow> convergence(const ConvergenceOptions& opts, std::ostream& log);

struct TemporalOptions {
  RunConfig base;
  int levels = 4;
  /// CFL number of the coarsest step; each level halves k.
  double cfl0 = 1.0;
  /// The reference uses this many times more steps than the finest level.
  int reference_factor = 8;
};

/// Step-refinement sweep on one fixed grid. Each level takes a fixed number
/// of equal steps to t_end; errors are measured against the same grid run
/// with a much smaller step, so only the time error remains. OrderRow::n is
/// the step count and OrderRow::h the step size.
std::vector<OrderRow> temporal_convergence(const TemporalOptions& opts, std::ostream& log);

struct CompareRow {
  std::string variant;
  bool ok = false;
  std::string error;
  double l1_density = 0.0;
  double total_variation = 0.0;
  double overshoot = 0.0;
  double undershoot = 0.0;
  long steps = 0;
};

/// Runs the weight-mode x derivative-mode x dissipation matrix on a 1D problem.
std::vector<CompareRow> compare(const RunConfig& base, std::ostream& log);

/// Writes x, rho, u, p of the exact Riemann solution sampled at n nodes.
void write_riemann_exact(std::ostream& os, const RiemannData& data, double lo, double hi, int n, double t,
                         const GasModel& gas);

}  // namespace hwcns
