// Error norms, observed orders and oscillation metrics.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hwcns/grid.hpp"

namespace hwcns {

template <int D>
struct ErrorReport {
  State<D> l1{};
  State<D> l2{};
  State<D> linf{};
  int n = 0;
  double h = 0.0;
  /// Against the next-coarser run, filled in by sweeps.
  std::optional<double> order_l1;
};

/// Norms of (numeric - reference) per conserved variable. L1 and L2 use the
/// grid's quadrature weights (trapezoid on bounded axes, so a constant
/// offset delta gives L1 = delta * domain measure).
template <int D>
ErrorReport<D> error_norms(const Field<D>& numeric,
                           const std::function<State<D>(double, double)>& reference) {
  const Grid& g = numeric.grid;
  ErrorReport<D> r;
  r.n = g.n[0];
  r.h = g.spacing(0);
  numeric.for_each_interior([&](int i, int j, const State<D>& q) {
    const double x = g.coord(0, i);
    const double y = D == 2 ? g.coord(1, j) : 0.0;
    double w = g.quadrature_weight(0, i);
    if (D == 2) w *= g.quadrature_weight(1, j);
    const State<D> ref = reference(x, y);
    for (int k = 0; k < kNumVars<D>; ++k) {
      const double e = std::abs(q[k] - ref[k]);
      r.l1[k] += e * w;
      r.l2[k] += e * e * w;
      r.linf[k] = std::max(r.linf[k], e);
    }
  });
  for (auto& v : r.l2) v = std::sqrt(v);
  return r;
}

/// Same, against another field sampled at coincident nodes. `ref` must be a
/// refinement of `numeric` by an integer factor per axis.
template <int D>
ErrorReport<D> error_norms_against(const Field<D>& numeric, const Field<D>& ref) {
  const Grid& g = numeric.grid;
  const Grid& f = ref.grid;
  std::array<int, 2> ratio{1, 1};
  for (int a = 0; a < D; ++a) {
    const int cells = g.periodic(a) ? g.n[a] : g.n[a] - 1;
    const int fine = f.periodic(a) ? f.n[a] : f.n[a] - 1;
    if (fine % cells != 0) throw std::invalid_argument("reference grid is not an integer refinement");
    ratio[a] = fine / cells;
  }
  return error_norms<D>(numeric, [&](double x, double y) {
    const int i = static_cast<int>(std::lround((x - f.lo[0]) / f.spacing(0)));
    const int j = D == 2 ? static_cast<int>(std::lround((y - f.lo[1]) / f.spacing(1))) : 0;
    return ref.at(i, j);
  });
}

/// log2(e_h / e_{h/2}) (general refinement ratio r: log(e_h/e_fine)/log r).
/// Undefined when either error is zero.
inline std::optional<double> observed_order(double coarse, double fine, double ratio = 2.0) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return std::nullopt;
  return std::log(coarse / fine) / std::log(ratio);
}

struct OscillationMetrics {
  double total_variation = 0.0;
  double overshoot = 0.0;   ///< max(0, max(v) - ref_max)
  double undershoot = 0.0;  ///< max(0, ref_min - min(v))
};

inline OscillationMetrics tv_and_overshoot(std::span<const double> values, double ref_min, double ref_max) {
  OscillationMetrics m;
  for (std::size_t i = 1; i < values.size(); ++i) m.total_variation += std::abs(values[i] - values[i - 1]);
  for (double v : values) {
    m.overshoot = std::max(m.overshoot, v - ref_max);
    m.undershoot = std::max(m.undershoot, ref_min - v);
  }
  return m;
}

struct OrderRow {
  int n = 0;
  double h = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  std::optional<double> order_l1;
  std::optional<double> order_l2;
  std::optional<double> order_linf;
};

/// Fills the order columns from consecutive rows (refinement ratio from h).
void fill_orders(std::vector<OrderRow>& rows);
void write_order_csv(std::ostream& os, const std::vector<OrderRow>& rows);
void write_order_text(std::ostream& os, const std::vector<OrderRow>& rows);

/// Position of the first point (scanning left to right) where the values
/// cross `level`, linearly interpolated. Used to place shocks. Empty when
/// the values never cross.
std::optional<double> crossing_position(std::span<const double> x, std::span<const double> values, double level,
                         std::size_t start = 0);

}  // namespace hwcns
