#include <doctest.h>

#include <cmath>

#include "hwcns/exact_riemann.hpp"
#include "test_support.hpp"

using namespace hwcns;
using hwcns::testing::Sampler;

namespace {

PrimitiveState<1> prim(double rho, double u, double p) {
  PrimitiveState<1> w;
  w.rho = rho;
  w.vel[0] = u;
  w.p = p;
  return w;
}

// Independent star-pressure oracle: bisection on the shock/rarefaction
// pressure function, no Newton and no shared code with the solver.
double bisect_p_star(const PrimitiveState<1>& l, const PrimitiveState<1>& r, double gamma) {
  auto f = [gamma](double p, const PrimitiveState<1>& s) {
    const double c = std::sqrt(gamma * s.p / s.rho);
    if (p > s.p) {
      const double a = 2.0 / ((gamma + 1.0) * s.rho);
      const double b = (gamma - 1.0) / (gamma + 1.0) * s.p;
      return (p - s.p) * std::sqrt(a / (p + b));
    }
    return 2.0 * c / (gamma - 1.0) * (std::pow(p / s.p, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
  };
  auto g = [&](double p) { return f(p, l) + f(p, r) + r.vel[0] - l.vel[0]; };
  double lo = 1e-14, hi = 1e4;
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

State<1> conserved(const PrimitiveState<1>& w) { return primitive_to_conserved<1>(w, GasModel{}); }

// Relative Rankine-Hugoniot residual |S [U] - [F]| across a shock.
double rh_residual(const PrimitiveState<1>& ahead, const PrimitiveState<1>& behind, double speed) {
  const GasModel gas;
  const State<1> ua = conserved(ahead), ub = conserved(behind);
  const State<1> fa = physical_flux<1>(ua, Axis::x, gas), fb = physical_flux<1>(ub, Axis::x, gas);
  double m = 0.0, scale = 0.0;
  for (int k = 0; k < 3; ++k) {
    m = std::max(m, std::abs(speed * (ub[k] - ua[k]) - (fb[k] - fa[k])));
    scale = std::max({scale, std::abs(fa[k]), std::abs(fb[k]), std::abs(speed * ua[k]), std::abs(speed * ub[k])});
  }
  return m / scale;
}

}  // namespace

TEST_CASE("identical states give no waves") {
  const GasModel gas;
  const RiemannSolution s(prim(1.2, 0.3, 2.0), prim(1.2, 0.3, 2.0), gas);
  CHECK(s.p_star() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(s.u_star() == doctest::Approx(0.3).epsilon(1e-12));
  for (double xi : {-5.0, -0.5, 0.0, 0.3, 0.9, 5.0}) {
    const PrimitiveState<1> w = s.sample(xi);
    CHECK(w.rho == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(w.vel[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(w.p == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("Sod star state") {
  const RiemannSolution s(prim(1.0, 0.0, 1.0), prim(0.125, 0.0, 0.1), GasModel{});
  CHECK(std::abs(s.p_star() - 0.303130178050646823857711077563) < 1e-8);
  CHECK(std::abs(s.u_star() - 0.927452620048949949082167482844) < 1e-8);
  CHECK(std::abs(s.p_star() - 0.303130178050646823857711077563) < 1e-13);
  CHECK(s.left_wave() == WaveKind::rarefaction);
  CHECK(s.right_wave() == WaveKind::shock);
  CHECK(s.newton_iterations() < 20);
  CHECK(std::abs(s.pressure_function(s.p_star())) < 1e-13);
}

TEST_CASE("Lax star state") {
  const RiemannSolution s(prim(0.445, 0.698, 3.528), prim(0.5, 0.0, 0.571), GasModel{});
  CHECK(std::abs(s.p_star() - 2.46609791920735673489) < 1e-10);
  CHECK(std::abs(s.u_star() - 1.52872302663288403521) < 1e-10);
}

TEST_CASE("right shock Mach numbers of the shock tubes") {
  const RiemannSolution sod(prim(1.0, 0.0, 1.0), prim(0.125, 0.0, 0.1), GasModel{});
  const RiemannSolution lax(prim(0.445, 0.698, 3.528), prim(0.5, 0.0, 0.571), GasModel{});
  MESSAGE("Sod Mach " << sod.right_shock_mach() << ", Lax Mach " << lax.right_shock_mach());
  CHECK(sod.right_shock_mach() == doctest::Approx(1.7).epsilon(0.05 / 1.7));
  CHECK(lax.right_shock_mach() == doctest::Approx(2.0).epsilon(0.05 / 2.0));
  // oracle: M from the shock pressure ratio, M^2 = 1 + (g+1)/(2g) (p*/pR - 1)
  for (const RiemannSolution* s : {&sod, &lax}) {
    const double ratio = s->p_star() / s->right().p;
    CHECK(s->right_shock_mach() == doctest::Approx(std::sqrt(1.0 + 2.4 / 2.8 * (ratio - 1.0))).epsilon(1e-12));
  }
}

TEST_CASE("star pressure agrees with a bisection oracle") {
  Sampler rng(51);
  const GasModel gas;
  int checked = 0;
  for (int n = 0; n < 500; ++n) {
    const PrimitiveState<1> l = rng.primitive<1>(), r = rng.primitive<1>();
    const double cl = std::sqrt(1.4 * l.p / l.rho), cr = std::sqrt(1.4 * r.p / r.rho);
    if (2.0 * (cl + cr) / 0.4 <= r.vel[0] - l.vel[0]) continue;
    const RiemannSolution s(l, r, gas);
    CHECK(s.p_star() == doctest::Approx(bisect_p_star(l, r, 1.4)).epsilon(1e-10));
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("symmetric collision stops the gas") {
  const RiemannSolution s(prim(1.0, 2.0, 1.0), prim(1.0, -2.0, 1.0), GasModel{});
  CHECK(std::abs(s.u_star()) < 1e-12);
  CHECK(s.left_wave() == WaveKind::shock);
  CHECK(s.right_wave() == WaveKind::shock);
  CHECK(s.rho_star_left() == doctest::Approx(s.rho_star_right()).epsilon(1e-12));
  CHECK(s.left_shock_speed() == doctest::Approx(-s.right_shock_speed()).epsilon(1e-12));

  const RiemannSolution e(prim(1.0, -0.5, 1.0), prim(1.0, 0.5, 1.0), GasModel{});
  CHECK(std::abs(e.u_star()) < 1e-12);
  CHECK(e.left_wave() == WaveKind::rarefaction);
  CHECK(e.right_wave() == WaveKind::rarefaction);
}

TEST_CASE("Rankine-Hugoniot conditions hold across shocks") {
  Sampler rng(52);
  int shocks = 0;
  for (int n = 0; n < 2000; ++n) {
    const PrimitiveState<1> l = rng.primitive<1>(), r = rng.primitive<1>();
    const double cl = std::sqrt(1.4 * l.p / l.rho), cr = std::sqrt(1.4 * r.p / r.rho);
    if (2.0 * (cl + cr) / 0.4 <= r.vel[0] - l.vel[0]) continue;
    const RiemannSolution s(l, r, GasModel{});
    if (s.right_wave() == WaveKind::shock) {
      CHECK(rh_residual(r, prim(s.rho_star_right(), s.u_star(), s.p_star()), s.right_shock_speed()) < 1e-10);
      ++shocks;
    }
    if (s.left_wave() == WaveKind::shock) {
      CHECK(rh_residual(l, prim(s.rho_star_left(), s.u_star(), s.p_star()), s.left_shock_speed()) < 1e-10);
      ++shocks;
    }
  }
  CHECK(shocks > 500);
}

TEST_CASE("rarefaction fans keep entropy and the Riemann invariant") {
  const RiemannSolution s(prim(1.0, 0.0, 1.0), prim(0.125, 0.0, 0.1), GasModel{});
  const std::array<double, 5> w = s.wave_speeds();
  const double entropy = 1.0 / std::pow(1.0, 1.4);
  const double invariant = 0.0 + 2.0 * std::sqrt(1.4) / 0.4;
  for (int k = 0; k <= 20; ++k) {
    const double xi = w[0] + (w[1] - w[0]) * k / 20.0;
    const PrimitiveState<1> q = s.sample(xi);
    const double c = std::sqrt(1.4 * q.p / q.rho);
    CHECK(q.p / std::pow(q.rho, 1.4) == doctest::Approx(entropy).epsilon(1e-12));
    CHECK(q.vel[0] + 2.0 * c / 0.4 == doctest::Approx(invariant).epsilon(1e-12));
    // inside the fan the flow is sonic along the ray
    if (k > 0 && k < 20) CHECK(q.vel[0] - c == doctest::Approx(xi).epsilon(1e-12));
  }
}

TEST_CASE("wave speeds are ordered and the sample is piecewise consistent") {
  Sampler rng(53);
  for (int n = 0; n < 500; ++n) {
    const PrimitiveState<1> l = rng.primitive<1>(), r = rng.primitive<1>();
    const double cl = std::sqrt(1.4 * l.p / l.rho), cr = std::sqrt(1.4 * r.p / r.rho);
    if (2.0 * (cl + cr) / 0.4 <= r.vel[0] - l.vel[0]) continue;
    const RiemannSolution s(l, r, GasModel{});
    const std::array<double, 5> w = s.wave_speeds();
    for (int k = 1; k < 5; ++k) CHECK(w[k] >= w[k - 1] - 1e-12);
    CHECK(w[2] == doctest::Approx(s.u_star()));
    const PrimitiveState<1> far_left = s.sample(w[0] - 1.0);
    const PrimitiveState<1> far_right = s.sample(w[4] + 1.0);
    CHECK(far_left.rho == l.rho);
    CHECK(far_right.rho == r.rho);
    const PrimitiveState<1> star_l = s.sample(0.5 * (w[1] + w[2]));
    const PrimitiveState<1> star_r = s.sample(0.5 * (w[2] + w[3]));
    CHECK(star_l.p == doctest::Approx(s.p_star()));
    CHECK(star_r.p == doctest::Approx(s.p_star()));
    CHECK(star_l.rho == doctest::Approx(s.rho_star_left()));
    CHECK(star_r.rho == doctest::Approx(s.rho_star_right()));
  }
}

TEST_CASE("vacuum generation is rejected") {
  CHECK_THROWS_AS(RiemannSolution(prim(1.0, -10.0, 1.0), prim(1.0, 10.0, 1.0), GasModel{}), VacuumError);
  CHECK_THROWS_AS(RiemannSolution(prim(-1.0, 0.0, 1.0), prim(1.0, 0.0, 1.0), GasModel{}), std::exception);
}
