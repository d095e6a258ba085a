// Node-centered uniform grids, padded fields and ghost-layer filling.
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hwcns/euler.hpp"

namespace hwcns {

enum class Boundary { periodic, transmissive, reflective };

/// Ghost layers per side. Each midpoint flux reads nodes i-1..i+2, the
/// compact combination spans five midpoints, and node derivatives use a
/// seven-point central difference: 4 + 3.
inline constexpr int kGhost = 7;

/// Uniform node-centered grid. Non-periodic axes place nodes on both
/// endpoints (h = L/(n-1)); periodic axes drop the duplicate end node
/// (h = L/n). Node i owns the cell (x_i - h/2, x_i + h/2).
struct Grid {
  int dim = 1;
  std::array<int, 2> n{1, 1};
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  // bc[axis][side], side 0 = low, 1 = high
  std::array<std::array<Boundary, 2>, 2> bc{{{Boundary::transmissive, Boundary::transmissive},
                                             {Boundary::transmissive, Boundary::transmissive}}};

  static Grid make_1d(int n, double lo, double hi, Boundary low, Boundary high) {
    Grid g;
    g.dim = 1;
    g.n = {n, 1};
    g.lo = {lo, 0.0};
    g.hi = {hi, 0.0};
    g.bc[0] = {low, high};
    g.validate();
    return g;
  }

  static Grid make_2d(int nx, int ny, std::array<double, 2> lo, std::array<double, 2> hi,
                      std::array<std::array<Boundary, 2>, 2> bc) {
    Grid g;
    g.dim = 2;
    g.n = {nx, ny};
    g.lo = lo;
    g.hi = hi;
    g.bc = bc;
    g.validate();
    return g;
  }

  void validate() const {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid dimension must be 1 or 2");
    for (int a = 0; a < dim; ++a) {
      if (n[a] < 11) throw std::invalid_argument("grid needs at least 11 nodes per axis, got " + std::to_string(n[a]));
      if (!(hi[a] > lo[a])) throw std::invalid_argument("grid bounds must satisfy lo < hi");
      if ((bc[a][0] == Boundary::periodic) != (bc[a][1] == Boundary::periodic)) {
        throw std::invalid_argument("periodic boundaries must be paired on an axis");
      }
    }
  }

  bool periodic(int axis) const { return bc[axis][0] == Boundary::periodic; }

  double spacing(int axis) const {
    const double len = hi[axis] - lo[axis];
    return periodic(axis) ? len / n[axis] : len / (n[axis] - 1);
  }

  double coord(int axis, int i) const { return lo[axis] + i * spacing(axis); }

  /// Quadrature weight of node i on `axis`: h for periodic axes, trapezoid
  /// weights otherwise so that the weights sum to the domain length.
  double quadrature_weight(int axis, int i) const {
    const double h = spacing(axis);
    if (!periodic(axis) && (i == 0 || i == n[axis] - 1)) return 0.5 * h;
    return h;
  }

  int padded(int axis) const { return axis < dim ? n[axis] + 2 * kGhost : 1; }

  std::size_t padded_size() const {
    return static_cast<std::size_t>(padded(0)) * static_cast<std::size_t>(padded(1));
  }

  std::size_t interior_size() const {
    return static_cast<std::size_t>(n[0]) * static_cast<std::size_t>(dim == 2 ? n[1] : 1);
  }

  /// Storage index of node (i, j); i, j may address ghost layers.
  std::size_t index(int i, int j = 0) const {
    const int pj = dim == 2 ? j + kGhost : 0;
    return static_cast<std::size_t>(pj) * static_cast<std::size_t>(padded(0)) +
           static_cast<std::size_t>(i + kGhost);
  }
};

template <int D>
struct Field {
  Grid grid;
  double time = 0.0;
  std::vector<State<D>> data;

  Field() = default;
  explicit Field(const Grid& g, double t = 0.0) : grid(g), time(t), data(g.padded_size()) {
    if (g.dim != D) throw std::invalid_argument("field dimension does not match grid");
  }

  State<D>& at(int i, int j = 0) { return data[grid.index(i, j)]; }
  const State<D>& at(int i, int j = 0) const { return data[grid.index(i, j)]; }

  template <class F>
  void for_each_interior(F&& f) {
    const int ny = D == 2 ? grid.n[1] : 1;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < grid.n[0]; ++i) f(i, j, at(i, j));
  }

  template <class F>
  void for_each_interior(F&& f) const {
    const int ny = D == 2 ? grid.n[1] : 1;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < grid.n[0]; ++i) f(i, j, at(i, j));
  }

  /// Sum of u * cell volume over interior nodes (cell volume h or h_x h_y).
  State<D> integral() const {
    State<D> total{};
    double vol = grid.spacing(0);
    if (D == 2) vol *= grid.spacing(1);
    for_each_interior([&](int, int, const State<D>& q) {
      for (int k = 0; k < kNumVars<D>; ++k) total[k] += q[k] * vol;
    });
    return total;
  }
};

namespace detail {

/// Ghost node `g` (outside [0, n)) maps to the interior node it copies.
inline int ghost_source(int g, int n, Boundary low, Boundary high) {
  if (g < 0) {
    switch (low) {
      case Boundary::periodic: return g + n;
      case Boundary::transmissive: return 0;
      case Boundary::reflective: return -g - 1;
    }
  }
  switch (high) {
    case Boundary::periodic: return g - n;
    case Boundary::transmissive: return n - 1;
    case Boundary::reflective: return 2 * n - 1 - g;
  }
  return 0;
}

}  // namespace detail

/// Fill every ghost layer, corners included (x first, then y across the
/// full padded width). Reflective walls mirror about the boundary midpoint
/// and negate the normal momentum.
template <int D>
void fill_ghosts(Field<D>& f) {
  const Grid& g = f.grid;
  const int nx = g.n[0];
  const int ny = D == 2 ? g.n[1] : 1;
  for (int j = 0; j < ny; ++j) {
    for (int s = 1; s <= kGhost; ++s) {
      for (int gi : {-s, nx - 1 + s}) {
        const int src = detail::ghost_source(gi, nx, g.bc[0][0], g.bc[0][1]);
        State<D> q = f.at(src, j);
        const Boundary kind = gi < 0 ? g.bc[0][0] : g.bc[0][1];
        if (kind == Boundary::reflective) q[1] = -q[1];
        f.at(gi, j) = q;
      }
    }
  }
  if constexpr (D == 2) {
    for (int i = -kGhost; i < nx + kGhost; ++i) {
      for (int s = 1; s <= kGhost; ++s) {
        for (int gj : {-s, ny - 1 + s}) {
          const int src = detail::ghost_source(gj, ny, g.bc[1][0], g.bc[1][1]);
          State<D> q = f.at(i, src);
          const Boundary kind = gj < 0 ? g.bc[1][0] : g.bc[1][1];
          if (kind == Boundary::reflective) q[2] = -q[2];
          f.at(i, gj) = q;
        }
      }
    }
  }
}

}  // namespace hwcns
