#include "hwcns/driver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hwcns/io.hpp"

namespace hwcns {

namespace {

std::ofstream open_output(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

std::string snapshot_path(const std::string& output, double t) {
  const std::filesystem::path p(output);
  std::string stem = p.stem().string() + "_t" + format_number(t);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

template <int D>
void write_field(const std::string& path, const Field<D>& f, const GasModel& gas) {
  auto os = open_output(path);
  if constexpr (D == 1) write_csv_1d(os, f, gas);
  else write_csv_2d(os, f, gas);
}

template <int D>
RunSummary run_impl(const RunConfig& cfg, const ResolvedRun& r, std::ostream& log) {
  const GasModel gas(cfg.gamma);
  const Trajectory<D> traj = simulate<D>(cfg);
  RunSummary s;
  s.problem = r.spec.name;
  s.dimension = D;
  s.n = r.n;
  s.t_end = traj.final.time;
  s.steps = traj.steps;
  s.residual_evaluations = traj.residual_evaluations;
  const State<D> fin = traj.final.integral();
  for (int k = 0; k < kNumVars<D>; ++k) {
    s.initial_integral.push_back(traj.initial_integral[k]);
    s.final_integral.push_back(fin[k]);
    s.boundary_outflow.push_back(traj.boundary_outflow[k]);
  }
  s.max_step_conservation_error = traj.max_step_conservation_error;
  s.density_min = std::numeric_limits<double>::infinity();
  s.density_max = -s.density_min;
  traj.final.for_each_interior([&](int, int, const State<D>& q) {
    s.density_min = std::min(s.density_min, q[0]);
    s.density_max = std::max(s.density_max, q[0]);
  });

  const std::string out = cfg.resolved_output();
  write_field<D>(out, traj.final, gas);
  s.files.push_back(out);
  for (const auto& snap : traj.snapshots) {
    if (snap.time == traj.final.time) continue;
    const std::string p = snapshot_path(out, snap.time);
    write_field<D>(p, snap, gas);
    s.files.push_back(p);
  }
  if constexpr (D == 2) {
    if (cfg.vtk) {
      std::filesystem::path p(out);
      p.replace_extension(".vtk");
      auto os = open_output(p.string());
      write_vtk_2d(os, traj.final, gas);
      s.files.push_back(p.string());
    }
  }

  RunConfig resolved = cfg;
  resolved.output = out;
  resolved.manifest = cfg.resolved_manifest();
  {
    auto os = open_output(resolved.manifest);
    os << "# hwcns run manifest; replay with: hwcns run --config <this file>\n";
    os << serialize_config(resolved);
    os << "# problem_dimension = " << D << '\n';
    os << "# resolved_n = " << r.n << '\n';
    os << "# final_time = " << format_number(s.t_end) << '\n';
    os << "# steps = " << s.steps << '\n';
    os << "# residual_evaluations = " << s.residual_evaluations << '\n';
    for (int k = 0; k < kNumVars<D>; ++k) {
      os << "# conserved[" << k << "] initial = " << format_number(s.initial_integral[k])
         << " final = " << format_number(s.final_integral[k])
         << " boundary_outflow = " << format_number(s.boundary_outflow[k]) << " balance = "
         << format_number(s.final_integral[k] - s.initial_integral[k] + s.boundary_outflow[k]) << '\n';
    }
    os << "# max_step_conservation_error = " << format_number(s.max_step_conservation_error) << '\n';
    os << "# density_range = " << format_number(s.density_min) << ' ' << format_number(s.density_max) << '\n';
  }
  s.files.push_back(resolved.manifest);
  log << r.spec.name << ": n=" << r.n << " t=" << format_number(s.t_end) << " steps=" << s.steps
      << " residual evaluations=" << s.residual_evaluations << " density in [" << format_number(s.density_min)
      << ", " << format_number(s.density_max) << "]\n";
  return s;
}

}  // namespace

ResolvedRun resolve(const RunConfig& cfg) {
  ResolvedRun r;
  r.spec = builtin(cfg.problem);
  r.n = cfg.n > 0 ? cfg.n : r.spec.default_n;
  r.t_end = cfg.t_end ? *cfg.t_end : r.spec.t_end;
  return r;
}

RunSummary run(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const ResolvedRun r = resolve(cfg);
  if (r.spec.dimension == 1) return run_impl<1>(cfg, r, log);
  return run_impl<2>(cfg, r, log);
}

std::optional<std::function<State<1>(double, double)>> reference_1d(const ProblemSpec& spec, double t,
                                                                    const GasModel& gas) {
  if (spec.dimension != 1) return std::nullopt;
  auto to_state = [gas](const PrimitiveState<2>& w) {
    PrimitiveState<1> w1;
    w1.rho = w.rho;
    w1.vel[0] = w.vel[0];
    w1.p = w.p;
    return primitive_to_conserved<1>(w1, gas);
  };
  if (spec.exact) {
    auto exact = spec.exact;
    return [exact, t, to_state](double x, double) { return to_state(exact(x, 0.0, t)); };
  }
  if (spec.riemann) {
    const RiemannData data = *spec.riemann;
    const RiemannSolution sol(data.left, data.right, gas);
    return [sol, data, t, gas](double x, double) {
      if (t <= 0.0) return primitive_to_conserved<1>(x <= data.split ? data.left : data.right, gas);
      return primitive_to_conserved<1>(sol.sample((x - data.split) / t), gas);
    };
  }
  return std::nullopt;
}

std::vector<OrderRow> convergence(const ConvergenceOptions& opts, std::ostream& log) {
  const ResolvedRun r = resolve(opts.base);
  if (!r.spec.exact) throw std::invalid_argument("convergence needs a problem with a closed-form exact solution");
  const GasModel gas(opts.base.gamma);
  std::vector<OrderRow> rows;
  for (int level = 0; level < opts.levels; ++level) {
    RunConfig cfg = opts.base;
    cfg.n = opts.n0 << level;
    if (opts.scale_dt) cfg.cfl = opts.base.cfl * std::pow(2.0, -0.25 * level);
    cfg.snapshots.clear();
    OrderRow row;
    row.n = cfg.n;
    if (r.spec.dimension == 1) {
      const Trajectory<1> traj = simulate<1>(cfg);
      row.h = traj.final.grid.spacing(0);
      auto ref = reference_1d(r.spec, traj.final.time, gas);
      const ErrorReport<1> e = error_norms<1>(traj.final, *ref);
      row.l1 = e.l1[0];
      row.l2 = e.l2[0];
      row.linf = e.linf[0];
    } else {
      const Trajectory<2> traj = simulate<2>(cfg);
      row.h = traj.final.grid.spacing(0);
      const double t = traj.final.time;
      auto exact = r.spec.exact;
      const ErrorReport<2> e = error_norms<2>(traj.final, [&](double x, double y) {
        const PrimitiveState<2> w = exact(x, y, t);
        return primitive_to_conserved<2>(w, gas);
      });
      row.l1 = e.l1[0];
      row.l2 = e.l2[0];
      row.linf = e.linf[0];
    }
    rows.push_back(row);
    log << "  level " << level << ": n=" << row.n << " L1(rho)=" << format_number(row.l1) << '\n';
  }
  fill_orders(rows);
  return rows;
}

namespace {

Field<1> fixed_steps(const Field<1>& start, const SchemeConfig& scheme, double t_end, long steps) {
  Field<1> u = start;
  TwoStageIntegrator<1> stepper(scheme);
  const double k = (t_end - start.time) / static_cast<double>(steps);
  for (long s = 0; s < steps; ++s) stepper.step(u, k);
  u.time = t_end;
  return u;
}

}  // namespace

std::vector<OrderRow> temporal_convergence(const TemporalOptions& opts, std::ostream& log) {
  const ResolvedRun r = resolve(opts.base);
  if (r.spec.dimension != 1) throw std::invalid_argument("temporal convergence runs 1D problems only");
  if (opts.levels < 2) throw std::invalid_argument("temporal convergence needs at least two levels");
  const SchemeConfig scheme = opts.base.scheme();
  const Field<1> start = evaluate_ic<1>(r.spec, make_grid(r.spec, r.n), scheme.gas);
  const double k0 = compute_dt<1>(start, opts.cfl0, scheme.gas);
  const long n0 = static_cast<long>(std::ceil((r.t_end - start.time) / k0));
  const long finest = n0 << (opts.levels - 1);
  const Field<1> ref = fixed_steps(start, scheme, r.t_end, finest * opts.reference_factor);
  std::vector<OrderRow> rows;
  for (int level = 0; level < opts.levels; ++level) {
    OrderRow row;
    const long steps = n0 << level;
    row.n = static_cast<int>(steps);
    row.h = (r.t_end - start.time) / static_cast<double>(steps);
    const ErrorReport<1> e = error_norms_against<1>(fixed_steps(start, scheme, r.t_end, steps), ref);
    row.l1 = e.l1[0];
    row.l2 = e.l2[0];
    row.linf = e.linf[0];
    rows.push_back(row);
    log << "  level " << level << ": steps=" << steps << " L1(rho)=" << format_number(row.l1) << '\n';
  }
  fill_orders(rows);
  return rows;
}

std::vector<CompareRow> compare(const RunConfig& base, std::ostream& log) {
  const ResolvedRun r = resolve(base);
  if (r.spec.dimension != 1) throw std::invalid_argument("compare runs 1D problems only");
  const GasModel gas(base.gamma);
  std::vector<CompareRow> rows;
  for (WeightMode w : {WeightMode::linear, WeightMode::nonlinear}) {
    for (DerivativeMode d : {DerivativeMode::hermite, DerivativeMode::alt_low_order}) {
      for (Dissipation diss : {Dissipation::rusanov, Dissipation::roe}) {
        RunConfig cfg = base;
        cfg.weights = w;
        cfg.derivative = d;
        cfg.dissipation = diss;
        cfg.snapshots.clear();
        CompareRow row;
        row.variant = to_string(w) + "/" + to_string(d) + "/" + to_string(diss);
        try {
          const Trajectory<1> traj = simulate<1>(cfg);
          std::vector<double> rho;
          traj.final.for_each_interior([&](int, int, const State<1>& q) { rho.push_back(q[0]); });
          double lo = *std::min_element(rho.begin(), rho.end());
          double hi = *std::max_element(rho.begin(), rho.end());
          if (auto ref = reference_1d(r.spec, traj.final.time, gas)) {
            row.l1_density = error_norms<1>(traj.final, *ref).l1[0];
            lo = std::numeric_limits<double>::infinity();
            hi = -lo;
            traj.final.for_each_interior([&](int i, int, const State<1>&) {
              const double v = (*ref)(traj.final.grid.coord(0, i), 0.0)[0];
              lo = std::min(lo, v);
              hi = std::max(hi, v);
            });
          }
          const OscillationMetrics m = tv_and_overshoot(rho, lo, hi);
          row.total_variation = m.total_variation;
          row.overshoot = m.overshoot;
          row.undershoot = m.undershoot;
          row.steps = traj.steps;
          row.ok = true;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        log << "  " << row.variant << (row.ok ? " done" : " failed") << '\n';
        rows.push_back(row);
      }
    }
  }
  return rows;
}

void write_riemann_exact(std::ostream& os, const RiemannData& data, double lo, double hi, int n, double t,
                         const GasModel& gas) {
  if (n < 2) throw std::invalid_argument("need at least 2 sample points");
  const RiemannSolution sol(data.left, data.right, gas);
  os << "x,rho,u,p\n";
  for (int i = 0; i < n; ++i) {
    const double x = lo + (hi - lo) * i / (n - 1);
    PrimitiveState<1> w;
    if (t > 0.0) w = sol.sample((x - data.split) / t);
    else w = x <= data.split ? data.left : data.right;
    os << format_number(x) << ',' << format_number(w.rho) << ',' << format_number(w.vel[0]) << ','
       << format_number(w.p) << '\n';
  }
}

}  // namespace hwcns
