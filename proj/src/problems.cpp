#include "hwcns/problems.hpp"

#include <cmath>
#include <numbers>

namespace hwcns {

namespace {

PrimitiveState<2> prim(double rho, double u, double v, double p) {
  PrimitiveState<2> w;
  w.rho = rho;
  w.vel = {u, v};
  w.p = p;
  return w;
}

PrimitiveState<1> prim1(double rho, double u, double p) {
  PrimitiveState<1> w;
  w.rho = rho;
  w.vel = {u};
  w.p = p;
  return w;
}

// The split node belongs to the left state.
ProblemSpec shock_tube(std::string name, PrimitiveState<1> left, PrimitiveState<1> right, double t_end) {
  ProblemSpec s;
  s.name = std::move(name);
  s.dimension = 1;
  s.lo = {0.0, 0.0};
  s.hi = {1.0, 0.0};
  s.t_end = t_end;
  s.default_n = 101;
  s.riemann = RiemannData{left, right, 0.5};
  s.initial = [left, right](double x, double) {
    const PrimitiveState<1>& w = x <= 0.5 ? left : right;
    return prim(w.rho, w.vel[0], 0.0, w.p);
  };
  return s;
}

ProblemSpec shu_osher(std::string name, double t_end) {
  ProblemSpec s;
  s.name = std::move(name);
  s.dimension = 1;
  s.lo = {-5.0, 0.0};
  s.hi = {5.0, 0.0};
  s.t_end = t_end;
  s.default_n = 401;
  s.initial = [](double x, double) {
    if (x <= -4.0) return prim(3.857143, 2.629369, 0.0, 10.33333);
    return prim(1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0);
  };
  return s;
}

ProblemSpec riemann2d_c6() {
  ProblemSpec s;
  s.name = "riemann2d-c6";
  s.dimension = 2;
  s.lo = {0.0, 0.0};
  s.hi = {1.0, 1.0};
  s.t_end = 0.3;
  s.default_n = 1024;
  s.initial = [](double x, double y) {
    const bool east = x >= 0.5;
    const bool north = y >= 0.5;
    if (east && north) return prim(1.0, 0.75, -0.5, 1.0);
    if (!east && north) return prim(2.0, 0.75, 0.5, 1.0);
    if (!east) return prim(1.0, -0.75, 0.5, 1.0);
    return prim(3.0, -0.75, -0.5, 1.0);
  };
  return s;
}

ProblemSpec smooth_advection_1d() {
  ProblemSpec s;
  s.name = "smooth-advection-1d";
  s.dimension = 1;
  s.lo = {0.0, 0.0};
  s.hi = {1.0, 0.0};
  s.bc[0] = {Boundary::periodic, Boundary::periodic};
  s.t_end = 1.0;
  s.default_n = 100;
  s.exact = [](double x, double, double t) {
    return prim(1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * (x - t)), 1.0, 0.0, 1.0);
  };
  s.initial = [e = s.exact](double x, double y) { return e(x, y, 0.0); };
  return s;
}

// Density wave carried at Mach ~17; every characteristic runs to the right.
ProblemSpec supersonic_advection_1d() {
  ProblemSpec s = smooth_advection_1d();
  s.name = "supersonic-advection-1d";
  s.t_end = 0.05;
  s.default_n = 160;
  s.exact = [](double x, double, double t) {
    return prim(1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * (x - 20.0 * t)), 20.0, 0.0, 1.0);
  };
  s.initial = [e = s.exact](double x, double y) { return e(x, y, 0.0); };
  return s;
}

// Isentropic vortex of strength 5 carried by a uniform (1, 1) stream on a
// periodic [0, 10]^2 box.
ProblemSpec smooth_vortex_2d() {
  ProblemSpec s;
  s.name = "smooth-vortex-2d";
  s.dimension = 2;
  s.lo = {0.0, 0.0};
  s.hi = {10.0, 10.0};
  s.bc = {{{Boundary::periodic, Boundary::periodic}, {Boundary::periodic, Boundary::periodic}}};
  s.t_end = 1.0;
  s.default_n = 80;
  s.exact = [](double x, double y, double t) {
    constexpr double gamma = 1.4;
    constexpr double strength = 5.0;
    const double pi = std::numbers::pi;
    // nearest periodic image of the vortex center
    auto wrap = [](double d) { return d - 10.0 * std::round(d / 10.0); };
    const double dx = wrap(x - 5.0 - t);
    const double dy = wrap(y - 5.0 - t);
    const double r2 = dx * dx + dy * dy;
    const double bump = std::exp(0.5 * (1.0 - r2));
    const double du = strength / (2.0 * pi) * bump * -dy;
    const double dv = strength / (2.0 * pi) * bump * dx;
    const double temp = 1.0 - (gamma - 1.0) * strength * strength / (8.0 * gamma * pi * pi) * std::exp(1.0 - r2);
    const double rho = std::pow(temp, 1.0 / (gamma - 1.0));
    return prim(rho, 1.0 + du, 1.0 + dv, std::pow(rho, gamma));
  };
  s.initial = [e = s.exact](double x, double y) { return e(x, y, 0.0); };
  return s;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"sod", "lax", "shu-osher", "shu-osher-t5", "riemann2d-c6", "smooth-advection-1d", "supersonic-advection-1d",
          "smooth-vortex-2d"};
}

ProblemSpec builtin(std::string_view name) {
  if (name == "sod") return shock_tube("sod", prim1(1.0, 0.0, 1.0), prim1(0.125, 0.0, 0.1), 0.2);
  if (name == "lax") return shock_tube("lax", prim1(0.445, 0.698, 3.528), prim1(0.5, 0.0, 0.571), 0.14);
  if (name == "shu-osher") return shu_osher("shu-osher", 1.8);
  if (name == "shu-osher-t5") return shu_osher("shu-osher-t5", 5.0);
  if (name == "riemann2d-c6") return riemann2d_c6();
  if (name == "smooth-advection-1d") return smooth_advection_1d();
  if (name == "supersonic-advection-1d") return supersonic_advection_1d();
  if (name == "smooth-vortex-2d") return smooth_vortex_2d();
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw UnknownProblem("unknown problem '" + std::string(name) + "' (known: " + known + ")");
}

Grid make_grid(const ProblemSpec& spec, int n) {
  if (spec.dimension == 1) return Grid::make_1d(n, spec.lo[0], spec.hi[0], spec.bc[0][0], spec.bc[0][1]);
  return Grid::make_2d(n, n, spec.lo, spec.hi, spec.bc);
}

}  // namespace hwcns
