#include <doctest.h>

#include <cmath>

#include "hwcns/problems.hpp"
#include "test_support.hpp"

using namespace hwcns;
using hwcns::testing::Sampler;

namespace {

void check_prim(const PrimitiveState<2>& w, double rho, double u, double v, double p) {
  CHECK(w.rho == doctest::Approx(rho));
  CHECK(w.vel[0] == doctest::Approx(u));
  CHECK(w.vel[1] == doctest::Approx(v));
  CHECK(w.p == doctest::Approx(p));
}

}  // namespace

TEST_CASE("shock tube data") {
  const ProblemSpec sod = builtin("sod");
  CHECK(sod.t_end == 0.2);
  CHECK(sod.default_n == 101);
  REQUIRE(sod.riemann.has_value());
  CHECK(sod.riemann->split == 0.5);
  check_prim(sod.initial(0.25, 0.0), 1.0, 0.0, 0.0, 1.0);
  check_prim(sod.initial(0.75, 0.0), 0.125, 0.0, 0.0, 0.1);
  CHECK(sod.bc[0][0] == Boundary::transmissive);
  CHECK(sod.bc[0][1] == Boundary::transmissive);

  const ProblemSpec lax = builtin("lax");
  CHECK(lax.t_end == 0.14);
  CHECK(lax.default_n == 101);
  check_prim(lax.initial(0.1, 0.0), 0.445, 0.698, 0.0, 3.528);
  check_prim(lax.initial(0.9, 0.0), 0.5, 0.0, 0.0, 0.571);
}

TEST_CASE("Sod initial field in conserved form") {
  const ProblemSpec sod = builtin("sod");
  const Grid g = make_grid(sod, 101);
  const Field<1> f = evaluate_ic<1>(sod, g, GasModel{});
  CHECK(g.spacing(0) == doctest::Approx(0.01));
  const State<1>& left = f.at(25);
  const State<1>& right = f.at(75);
  CHECK(left[0] == 1.0);
  CHECK(left[1] == 0.0);
  CHECK(left[2] == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(right[0] == 0.125);
  CHECK(right[1] == 0.0);
  CHECK(right[2] == doctest::Approx(0.25).epsilon(1e-15));
  // the split node takes the left state
  CHECK(f.at(50)[0] == 1.0);
  CHECK(f.at(51)[0] == 0.125);
}

TEST_CASE("Shu-Osher data") {
  for (const char* name : {"shu-osher", "shu-osher-t5"}) {
    const ProblemSpec s = builtin(name);
    CHECK(s.lo[0] == -5.0);
    CHECK(s.hi[0] == 5.0);
    check_prim(s.initial(-4.5, 0.0), 3.857143, 2.629369, 0.0, 10.33333);
    check_prim(s.initial(1.0, 0.0), 1.0 + 0.2 * std::sin(5.0), 0.0, 0.0, 1.0);
  }
  CHECK(builtin("shu-osher").t_end == 1.8);
  CHECK(builtin("shu-osher-t5").t_end == 5.0);
}

TEST_CASE("two-dimensional Riemann configuration quadrants") {
  const ProblemSpec c6 = builtin("riemann2d-c6");
  CHECK(c6.dimension == 2);
  CHECK(c6.t_end == 0.3);
  CHECK(c6.default_n == 1024);
  check_prim(c6.initial(0.75, 0.75), 1.0, 0.75, -0.5, 1.0);
  check_prim(c6.initial(0.25, 0.75), 2.0, 0.75, 0.5, 1.0);
  check_prim(c6.initial(0.25, 0.25), 1.0, -0.75, 0.5, 1.0);
  check_prim(c6.initial(0.75, 0.25), 3.0, -0.75, -0.5, 1.0);
  for (int a = 0; a < 2; ++a)
    for (int s = 0; s < 2; ++s) CHECK(c6.bc[a][s] == Boundary::transmissive);

  const Field<2> f = evaluate_ic<2>(c6, make_grid(c6, 64), GasModel{});
  const State<2>& q = f.at(10, 50);
  CHECK(q[0] == 2.0);
  CHECK(q[1] == doctest::Approx(1.5));
  CHECK(q[2] == doctest::Approx(1.0));
  CHECK(q[3] == doctest::Approx(3.3125));
}

TEST_CASE("smooth problems match their exact solutions at t = 0") {
  for (const char* name : {"smooth-advection-1d", "supersonic-advection-1d", "smooth-vortex-2d"}) {
    const ProblemSpec s = builtin(name);
    REQUIRE(s.exact);
    for (int a = 0; a < s.dimension; ++a) CHECK(s.bc[a][0] == Boundary::periodic);
    Sampler rng(61);
    for (int n = 0; n < 100; ++n) {
      const double x = rng.uniform(s.lo[0], s.hi[0]);
      const double y = s.dimension == 2 ? rng.uniform(s.lo[1], s.hi[1]) : 0.0;
      const PrimitiveState<2> a = s.initial(x, y), b = s.exact(x, y, 0.0);
      CHECK(a.rho == b.rho);
      CHECK(a.p == b.p);
    }
  }
  // the advected wave returns after one period
  const ProblemSpec adv = builtin("smooth-advection-1d");
  CHECK(adv.exact(0.3, 0.0, 1.0).rho == doctest::Approx(adv.exact(0.3, 0.0, 0.0).rho).epsilon(1e-14));
  const ProblemSpec vortex = builtin("smooth-vortex-2d");
  CHECK(vortex.exact(2.0, 7.0, 10.0).rho == doctest::Approx(vortex.exact(2.0, 7.0, 0.0).rho).epsilon(1e-12));
  // vortex core is the density minimum, far field is the free stream
  CHECK(vortex.exact(5.0, 5.0, 0.0).rho < 0.6);
  CHECK(vortex.exact(0.0, 0.0, 0.0).rho == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("every problem has valid initial data") {
  const GasModel gas;
  for (const std::string& name : builtin_names()) {
    CAPTURE(name);
    const ProblemSpec s = builtin(name);
    CHECK(s.name == name);
    CHECK(s.t_end > 0.0);
    Sampler rng(62);
    for (int n = 0; n < 10000; ++n) {
      const double x = rng.uniform(s.lo[0], s.hi[0]);
      const double y = s.dimension == 2 ? rng.uniform(s.lo[1], s.hi[1]) : 0.0;
      const PrimitiveState<2> w = s.initial(x, y);
      CHECK(std::isfinite(w.rho));
      CHECK(w.rho > 0.0);
      CHECK(w.p > 0.0);
    }
    if (s.dimension == 1) {
      const Field<1> f = evaluate_ic<1>(s, make_grid(s, 41), gas);
      f.for_each_interior([&](int, int, const State<1>& q) { CHECK(is_physical<1>(q, gas)); });
    } else {
      const Field<2> f = evaluate_ic<2>(s, make_grid(s, 21), gas);
      f.for_each_interior([&](int, int, const State<2>& q) { CHECK(is_physical<2>(q, gas)); });
    }
  }
}

TEST_CASE("unknown problems and dimension mismatches are rejected") {
  CHECK_THROWS_WITH_AS(builtin("sedov"), doctest::Contains("sedov"), UnknownProblem);
  CHECK_THROWS_WITH_AS(builtin("sedov"), doctest::Contains("riemann2d-c6"), UnknownProblem);
  const ProblemSpec sod = builtin("sod");
  CHECK_THROWS_AS(evaluate_ic<2>(sod, make_grid(sod, 101), GasModel{}), std::invalid_argument);
}
