// Built-in test problems: shock tubes, shock/density-wave interaction,
// the 2D Riemann configuration 6 and smooth periodic convergence cases.
#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hwcns/euler.hpp"
#include "hwcns/grid.hpp"

namespace hwcns {

class UnknownProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RiemannData {
  PrimitiveState<1> left;
  PrimitiveState<1> right;
  double split = 0.5;
};

struct ProblemSpec {
  std::string name;
  int dimension = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  std::array<std::array<Boundary, 2>, 2> bc{{{Boundary::transmissive, Boundary::transmissive},
                                             {Boundary::transmissive, Boundary::transmissive}}};
  double t_end = 0.0;
  int default_n = 101;
  /// Initial condition at (x, y); 1D problems ignore y and the v component.
  std::function<PrimitiveState<2>(double, double)> initial;
  /// Exact solution at (x, y, t), when one is known in closed form.
  std::function<PrimitiveState<2>(double, double, double)> exact;
  /// Shock tubes: data for the exact Riemann reference.
  std::optional<RiemannData> riemann;
};

std::vector<std::string> builtin_names();

/// Throws UnknownProblem for names outside builtin_names().
ProblemSpec builtin(std::string_view name);

/// Grid with n nodes per axis over the problem's domain.
Grid make_grid(const ProblemSpec& spec, int n);

template <int D>
Field<D> evaluate_ic(const ProblemSpec& spec, const Grid& grid, const GasModel& gas) {
  if (spec.dimension != D || grid.dim != D) {
    throw std::invalid_argument("problem '" + spec.name + "' is " + std::to_string(spec.dimension) +
                                "D, requested " + std::to_string(D) + "D field");
  }
  Field<D> f(grid, 0.0);
  f.for_each_interior([&](int i, int j, State<D>& q) {
    const double x = grid.coord(0, i);
    const double y = D == 2 ? grid.coord(1, j) : 0.0;
    const PrimitiveState<2> w = spec.initial(x, y);
    PrimitiveState<D> wd;
    wd.rho = w.rho;
    for (int d = 0; d < D; ++d) wd.vel[d] = w.vel[d];
    wd.p = w.p;
    q = primitive_to_conserved<D>(wd, gas);
  });
  return f;
}

}  // namespace hwcns
