// hwcns command-line driver: run, convergence, riemann-exact, compare.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "hwcns/driver.hpp"
#include "hwcns/io.hpp"
#include "hwcns/parallel.hpp"

namespace {

using namespace hwcns;

std::string flag_name(const std::string& key) {
  std::string f = key;
  for (char& c : f)
    if (c == '_') c = '-';
  return "--" + f;
}

/// Every config key doubles as a string-valued flag; values go through the
/// same parser as the config file so both share one set of diagnostics.
struct ConfigOptions {
  std::string config_file;
  std::map<std::string, std::string> values;

  void attach(CLI::App* app) {
    app->add_option("--config", config_file, "flat key = value config file");
    for (const auto& key : config_keys()) {
      if (key == "vtk") {
        app->add_flag_callback("--vtk", [this] { values["vtk"] = "true"; }, "also write a legacy VTK file (2D)");
      } else {
        app->add_option(flag_name(key), values[key], key);
      }
    }
  }

  RunConfig resolve(const std::string& default_problem) const {
    RunConfig cfg;
    cfg.problem = default_problem;
    cfg.workers = default_worker_count();
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw ConfigError("cannot read config file '" + config_file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      parse_config_text(cfg, ss.str(), config_file);
    }
    for (const auto& [key, value] : values) {
      if (value.empty()) continue;
      try {
        apply_setting(cfg, key, value);
      } catch (const ConfigError& e) {
        throw ConfigError(flag_name(key) + ": " + e.what());
      }
    }
    cfg.validate();
    return cfg;
  }
};

PrimitiveState<1> parse_primitive(const std::string& text, const char* what) {
  std::array<double, 3> v{};
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) break;
    try {
      v[k++] = std::stod(item);
    } catch (const std::exception&) {
      k = -1;
      break;
    }
  }
  if (k != 3) throw ConfigError(std::string(what) + ": expected 'rho,u,p', got '" + text + "'");
  PrimitiveState<1> w;
  w.rho = v[0];
  w.vel[0] = v[1];
  w.p = v[2];
  return w;
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite weighted compact nonlinear scheme solver for the 1D/2D Euler equations"};
  app.require_subcommand(1);

  ConfigOptions run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "integrate a built-in problem and write CSV + manifest");
  run_opts.attach(run_cmd);

  ConfigOptions conv_opts;
  int levels = 5;
  int n0 = 40;
  bool fixed_cfl = false;
  bool temporal = false;
  std::string order_csv;
  CLI::App* conv_cmd = app.add_subcommand("convergence", "grid-refinement order table against an exact solution");
  conv_opts.attach(conv_cmd);
  conv_cmd->add_option("--levels", levels, "number of grids (n0 * 2^l)")->check(CLI::Range(2, 12));
  conv_cmd->add_option("--n0", n0, "coarsest grid size")->check(CLI::Range(11, 1 << 20));
  conv_cmd->add_flag("--fixed-cfl", fixed_cfl, "keep the CFL number fixed instead of shrinking k like h^(5/4)");
  conv_cmd->add_flag("--temporal", temporal,
                    "refine the step on one grid instead (default problem supersonic-advection-1d)");
  conv_cmd->add_option("--csv", order_csv, "also write the order table as CSV");

  std::string rx_problem;
  std::string rx_left, rx_right, rx_out;
  double rx_t = -1.0, rx_split = 0.5, rx_lo = 0.0, rx_hi = 1.0, rx_gamma = 1.4;
  int rx_n = 1001;
  CLI::App* rx_cmd = app.add_subcommand("riemann-exact", "sample the exact Riemann solution");
  rx_cmd->add_option("--problem", rx_problem, "shock-tube problem supplying states, domain and time");
  rx_cmd->add_option("--left", rx_left, "left state rho,u,p");
  rx_cmd->add_option("--right", rx_right, "right state rho,u,p");
  rx_cmd->add_option("--split", rx_split, "initial discontinuity position");
  rx_cmd->add_option("--lo", rx_lo, "domain start");
  rx_cmd->add_option("--hi", rx_hi, "domain end");
  rx_cmd->add_option("--t", rx_t, "sample time");
  rx_cmd->add_option("--n", rx_n, "number of samples")->check(CLI::Range(2, 1 << 24));
  rx_cmd->add_option("--gamma", rx_gamma, "ratio of specific heats");
  rx_cmd->add_option("--output", rx_out, "CSV path (default stdout)");

  ConfigOptions cmp_opts;
  std::string cmp_csv;
  CLI::App* cmp_cmd = app.add_subcommand("compare", "weights x derivative mode x dissipation matrix on a 1D problem");
  cmp_opts.attach(cmp_cmd);
  cmp_cmd->add_option("--csv", cmp_csv, "also write the matrix as CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      const RunSummary s = run(run_opts.resolve("sod"), std::cerr);
      for (const auto& f : s.files) std::cout << f << '\n';
    } else if (conv_cmd->parsed()) {
      std::vector<OrderRow> rows;
      if (temporal) {
        TemporalOptions opts;
        opts.base = conv_opts.resolve("supersonic-advection-1d");
        if (conv_cmd->count("--levels")) opts.levels = levels;
        if (conv_cmd->count("--cfl")) opts.cfl0 = opts.base.cfl;
        rows = temporal_convergence(opts, std::cerr);
      } else {
        ConvergenceOptions opts;
        opts.base = conv_opts.resolve("smooth-advection-1d");
        opts.levels = levels;
        opts.n0 = n0;
        opts.scale_dt = !fixed_cfl;
        rows = convergence(opts, std::cerr);
      }
      write_order_text(std::cout, rows);
      if (!order_csv.empty()) {
        std::ofstream os(order_csv, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open '" + order_csv + "' for writing");
        write_order_csv(os, rows);
      }
    } else if (rx_cmd->parsed()) {
      const GasModel gas(rx_gamma);
      RiemannData data;
      double t = rx_t;
      if (!rx_problem.empty()) {
        const ProblemSpec spec = builtin(rx_problem);
        if (!spec.riemann) throw ConfigError("problem '" + rx_problem + "' is not a Riemann problem");
        data = *spec.riemann;
        if (rx_cmd->count("--lo") == 0) rx_lo = spec.lo[0];
        if (rx_cmd->count("--hi") == 0) rx_hi = spec.hi[0];
        if (t < 0.0) t = spec.t_end;
      } else {
        if (rx_left.empty() || rx_right.empty()) throw ConfigError("give --problem or both --left and --right");
        data.split = rx_split;
      }
      if (!rx_left.empty()) data.left = parse_primitive(rx_left, "--left");
      if (!rx_right.empty()) data.right = parse_primitive(rx_right, "--right");
      if (rx_cmd->count("--split")) data.split = rx_split;
      if (t < 0.0) throw ConfigError("--t: sample time required");
      const RiemannSolution sol(data.left, data.right, gas);
      std::cerr << "p* = " << format_number(sol.p_star()) << "  u* = " << format_number(sol.u_star()) << '\n';
      std::ofstream file;
      write_riemann_exact(open_or_stdout(rx_out, file), data, rx_lo, rx_hi, rx_n, t, gas);
    } else if (cmp_cmd->parsed()) {
      const auto rows = compare(cmp_opts.resolve("sod"), std::cerr);
      std::cout << std::left << std::setw(36) << "variant" << std::right << std::setw(14) << "L1(rho)"
                << std::setw(12) << "TV" << std::setw(12) << "overshoot" << std::setw(12) << "undershoot"
                << std::setw(8) << "steps" << '\n';
      for (const auto& r : rows) {
        std::cout << std::left << std::setw(36) << r.variant << std::right;
        if (!r.ok) {
          std::cout << "  failed: " << r.error << '\n';
          continue;
        }
        std::cout << std::scientific << std::setprecision(4) << std::setw(14) << r.l1_density << std::setw(12)
                  << r.total_variation << std::setw(12) << r.overshoot << std::setw(12) << r.undershoot
                  << std::defaultfloat << std::setw(8) << r.steps << '\n';
      }
      if (!cmp_csv.empty()) {
        std::ofstream os(cmp_csv, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open '" + cmp_csv + "' for writing");
        os << "variant,ok,l1_rho,tv,overshoot,undershoot,steps,error\n";
        for (const auto& r : rows) {
          os << r.variant << ',' << (r.ok ? 1 : 0) << ',' << format_number(r.l1_density) << ','
             << format_number(r.total_variation) << ',' << format_number(r.overshoot) << ','
             << format_number(r.undershoot) << ',' << r.steps << ",\"" << r.error << "\"\n";
        }
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
