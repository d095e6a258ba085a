// Compressible Euler equations for a calorically perfect gas: conversions,
// physical fluxes and the eigen-decomposition of the flux Jacobian.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hwcns {

template <int D>
inline constexpr int kNumVars = D + 2;

/// Conserved variables at one node: (rho, rho*u[, rho*v], E), E per unit volume.
template <int D>
using State = std::array<double, kNumVars<D>>;

template <int N>
using Matrix = std::array<std::array<double, N>, N>;

enum class Axis { x = 0, y = 1 };

enum class Averaging { roe, arithmetic };
enum class Splitting { upwind, paper_absolute };

class NonPhysicalState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GasModel {
  double gamma = 1.4;

  GasModel() = default;
  explicit GasModel(double g) : gamma(g) {
    if (!(g > 1.0)) throw std::invalid_argument("gamma must exceed 1, got " + std::to_string(g));
  }
};

template <int D>
struct PrimitiveState {
  double rho = 1.0;
  std::array<double, D> vel{};
  double p = 1.0;
};

template <int N>
inline std::array<double, N> matvec(const Matrix<N>& m, const std::array<double, N>& v) {
  std::array<double, N> out{};
  for (int r = 0; r < N; ++r) {
    double acc = 0.0;
    for (int c = 0; c < N; ++c) acc += m[r][c] * v[c];
    out[r] = acc;
  }
  return out;
}

template <int N>
inline Matrix<N> matmul(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> out{};
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      double acc = 0.0;
      for (int k = 0; k < N; ++k) acc += a[r][k] * b[k][c];
      out[r][c] = acc;
    }
  return out;
}

template <int D>
State<D> primitive_to_conserved(const PrimitiveState<D>& w, const GasModel& gas) {
  State<D> q{};
  double kinetic = 0.0;
  q[0] = w.rho;
  for (int d = 0; d < D; ++d) {
    q[1 + d] = w.rho * w.vel[d];
    kinetic += w.vel[d] * w.vel[d];
  }
  q[D + 1] = w.p / (gas.gamma - 1.0) + 0.5 * w.rho * kinetic;
  return q;
}

template <int D>
PrimitiveState<D> conserved_to_primitive(const State<D>& q, const GasModel& gas) {
  PrimitiveState<D> w;
  w.rho = q[0];
  double kinetic = 0.0;
  for (int d = 0; d < D; ++d) {
    w.vel[d] = q[1 + d] / q[0];
    kinetic += q[1 + d] * w.vel[d];
  }
  w.p = (gas.gamma - 1.0) * (q[D + 1] - 0.5 * kinetic);
  return w;
}

template <int D>
double pressure(const State<D>& q, const GasModel& gas) {
  double kinetic = 0.0;
  for (int d = 0; d < D; ++d) kinetic += q[1 + d] * q[1 + d];
  return (gas.gamma - 1.0) * (q[D + 1] - 0.5 * kinetic / q[0]);
}

template <int D>
bool is_physical(const State<D>& q, const GasModel& gas) {
  return std::isfinite(q[0]) && q[0] > 0.0 && std::isfinite(q[D + 1]) && pressure<D>(q, gas) > 0.0;
}

template <int D>
void require_physical(const State<D>& q, const GasModel& gas, std::string_view where) {
  if (!is_physical<D>(q, gas)) {
    throw NonPhysicalState("non-physical state at " + std::string(where) + ": rho=" + std::to_string(q[0]) +
                           " p=" + std::to_string(pressure<D>(q, gas)));
  }
}

/// Sound speed of a valid state.
template <int D>
double sound_speed(const State<D>& q, const GasModel& gas) {
  return std::sqrt(gas.gamma * pressure<D>(q, gas) / q[0]);
}

/// f(q) for Axis::x, g(q) for Axis::y. Throws NonPhysicalState naming `where`.
template <int D>
State<D> physical_flux(const State<D>& q, Axis axis, const GasModel& gas,
                       std::string_view where = "node") {
  require_physical<D>(q, gas, where);
  const int a = static_cast<int>(axis);
  const double p = pressure<D>(q, gas);
  const double un = q[1 + a] / q[0];
  State<D> f{};
  f[0] = q[1 + a];
  for (int d = 0; d < D; ++d) f[1 + d] = q[1 + d] * un;
  f[1 + a] += p;
  f[D + 1] = un * (q[D + 1] + p);
  return f;
}

/// Unchecked flux, for hot loops whose inputs were already validated.
template <int D>
State<D> physical_flux_unchecked(const State<D>& q, Axis axis, const GasModel& gas) {
  const int a = static_cast<int>(axis);
  const double p = pressure<D>(q, gas);
  const double un = q[1 + a] / q[0];
  State<D> f{};
  f[0] = q[1 + a];
  for (int d = 0; d < D; ++d) f[1 + d] = q[1 + d] * un;
  f[1 + a] += p;
  f[D + 1] = un * (q[D + 1] + p);
  return f;
}

/// Interface state from which the Jacobian is linearized: velocity, total
/// enthalpy and sound speed.
template <int D>
struct AveragedState {
  std::array<double, D> vel{};
  double enthalpy = 0.0;
  double c = 0.0;
};

template <int D>
AveragedState<D> average_states(const State<D>& ql, const State<D>& qr, const GasModel& gas,
                                Averaging averaging) {
  AveragedState<D> avg;
  double q2 = 0.0;
  if (averaging == Averaging::roe) {
    const double sl = std::sqrt(ql[0]);
    const double sr = std::sqrt(qr[0]);
    const double inv = 1.0 / (sl + sr);
    const double hl = (ql[D + 1] + pressure<D>(ql, gas)) / ql[0];
    const double hr = (qr[D + 1] + pressure<D>(qr, gas)) / qr[0];
    for (int d = 0; d < D; ++d) {
      avg.vel[d] = (ql[1 + d] / sl + qr[1 + d] / sr) * inv;
      q2 += avg.vel[d] * avg.vel[d];
    }
    avg.enthalpy = (sl * hl + sr * hr) * inv;
  } else {
    State<D> m{};
    for (int k = 0; k < kNumVars<D>; ++k) m[k] = 0.5 * (ql[k] + qr[k]);
    if (!is_physical<D>(m, gas)) throw NonPhysicalState("arithmetic interface average is non-physical");
    for (int d = 0; d < D; ++d) {
      avg.vel[d] = m[1 + d] / m[0];
      q2 += avg.vel[d] * avg.vel[d];
    }
    avg.enthalpy = (m[D + 1] + pressure<D>(m, gas)) / m[0];
  }
  const double c2 = (gas.gamma - 1.0) * (avg.enthalpy - 0.5 * q2);
  if (!(c2 > 0.0) || !std::isfinite(c2)) {
    throw NonPhysicalState("interface average has non-positive squared sound speed " + std::to_string(c2));
  }
  avg.c = std::sqrt(c2);
  return avg;
}

template <int D>
AveragedState<D> node_state(const State<D>& q, const GasModel& gas) {
  AveragedState<D> s;
  for (int d = 0; d < D; ++d) s.vel[d] = q[1 + d] / q[0];
  s.enthalpy = (q[D + 1] + pressure<D>(q, gas)) / q[0];
  s.c = sound_speed<D>(q, gas);
  return s;
}

/// Analytic flux Jacobian d(flux_axis)/dq expressed through (velocity, H).
template <int D>
Matrix<kNumVars<D>> flux_jacobian(const AveragedState<D>& s, Axis axis, const GasModel& gas) {
  constexpr int N = kNumVars<D>;
  const int a = static_cast<int>(axis);
  const double gm1 = gas.gamma - 1.0;
  const double un = s.vel[a];
  double q2 = 0.0;
  for (int d = 0; d < D; ++d) q2 += s.vel[d] * s.vel[d];
  const double phi = 0.5 * gm1 * q2;
  Matrix<N> m{};
  m[0][1 + a] = 1.0;
  for (int d = 0; d < D; ++d) {
    // momentum row d: d(rho u_d u_n + p delta_{da})/dq
    m[1 + d][0] = -s.vel[d] * un + (d == a ? phi : 0.0);
    for (int e = 0; e < D; ++e) {
      double v = 0.0;
      if (e == a) v += s.vel[d];
      if (e == d) v += un;
      if (d == a) v -= gm1 * s.vel[e];
      m[1 + d][1 + e] = v;
    }
    m[1 + d][N - 1] = (d == a) ? gm1 : 0.0;
  }
  m[N - 1][0] = un * (phi - s.enthalpy);
  for (int e = 0; e < D; ++e) m[N - 1][1 + e] = (e == a ? s.enthalpy : 0.0) - gm1 * un * s.vel[e];
  m[N - 1][N - 1] = gas.gamma * un;
  return m;
}

/// Flux Jacobian eigensystem: A = right * diag(lambdas) * left.
/// Ordering: (u_n - c, u_n, [u_n,] u_n + c).
template <int D>
struct EigenSystem {
  std::array<double, kNumVars<D>> lambdas{};
  Matrix<kNumVars<D>> right{};
  Matrix<kNumVars<D>> left{};

  State<D> to_characteristic(const State<D>& q) const { return matvec<kNumVars<D>>(left, q); }
  State<D> from_characteristic(const State<D>& w) const { return matvec<kNumVars<D>>(right, w); }

  /// right * diag(g(lambda)) * left * v
  template <class F>
  State<D> apply_diag(const State<D>& v, F&& g) const {
    State<D> w = matvec<kNumVars<D>>(left, v);
    for (int k = 0; k < kNumVars<D>; ++k) w[k] *= g(lambdas[k]);
    return matvec<kNumVars<D>>(right, w);
  }

  State<D> apply_jacobian(const State<D>& v) const {
    return apply_diag(v, [](double l) { return l; });
  }

  Matrix<kNumVars<D>> assemble(const std::array<double, kNumVars<D>>& diag) const {
    constexpr int N = kNumVars<D>;
    Matrix<N> scaled = right;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) scaled[r][c] *= diag[c];
    return matmul<N>(scaled, left);
  }
};

template <int D>
EigenSystem<D> eigensystem(const AveragedState<D>& s, Axis axis, const GasModel& gas) {
  constexpr int N = kNumVars<D>;
  const int a = static_cast<int>(axis);
  const int na = 1 + a;  // normal momentum slot
  const double c = s.c;
  const double un = s.vel[a];
  double q2 = 0.0;
  for (int d = 0; d < D; ++d) q2 += s.vel[d] * s.vel[d];
  const double b1 = (gas.gamma - 1.0) / (c * c);
  const double b2 = 0.5 * b1 * q2;

  EigenSystem<D> es;
  Matrix<N>& r = es.right;
  Matrix<N>& l = es.left;

  // acoustic u_n - c: column 0, acoustic u_n + c: column N-1, entropy: column 1
  es.lambdas[0] = un - c;
  es.lambdas[1] = un;
  es.lambdas[N - 1] = un + c;
  r[0][0] = 1.0;
  r[0][1] = 1.0;
  r[0][N - 1] = 1.0;
  for (int d = 0; d < D; ++d) {
    r[1 + d][0] = s.vel[d];
    r[1 + d][1] = s.vel[d];
    r[1 + d][N - 1] = s.vel[d];
  }
  r[na][0] -= c;
  r[na][N - 1] += c;
  r[N - 1][0] = s.enthalpy - un * c;
  r[N - 1][1] = 0.5 * q2;
  r[N - 1][N - 1] = s.enthalpy + un * c;

  for (int e = 0; e < N; ++e) {
    const double bq = (e == 0) ? b2 : (e == N - 1 ? b1 : -b1 * s.vel[e - 1]);
    l[0][e] = 0.5 * bq;
    l[N - 1][e] = 0.5 * bq;
    l[1][e] = -bq;
  }
  l[0][0] += 0.5 * un / c;
  l[0][na] -= 0.5 / c;
  l[N - 1][0] -= 0.5 * un / c;
  l[N - 1][na] += 0.5 / c;
  l[1][0] += 1.0;

  if constexpr (D == 2) {
    // shear wave: tangential momentum
    const int ta = 1 + (1 - a);
    const double ut = s.vel[1 - a];
    es.lambdas[2] = un;
    r[0][2] = 0.0;
    r[na][2] = 0.0;
    r[ta][2] = 1.0;
    r[N - 1][2] = ut;
    l[2] = {};
    l[2][0] = -ut;
    l[2][ta] = 1.0;
  }
  return es;
}

template <int D>
EigenSystem<D> interface_eigensystem(const State<D>& ql, const State<D>& qr, Axis axis,
                                     const GasModel& gas, Averaging averaging = Averaging::roe) {
  require_physical<D>(ql, gas, "interface left state");
  require_physical<D>(qr, gas, "interface right state");
  return eigensystem<D>(average_states<D>(ql, qr, gas, averaging), axis, gas);
}

template <int D>
struct SplitJacobian {
  Matrix<kNumVars<D>> plus{};
  Matrix<kNumVars<D>> minus{};
};

inline double lambda_plus(double l, Splitting mode) {
  return mode == Splitting::upwind ? 0.5 * (l + std::abs(l)) : std::abs(l);
}

inline double lambda_minus(double l, Splitting mode) {
  return mode == Splitting::upwind ? 0.5 * (l - std::abs(l)) : -std::abs(l);
}

template <int D>
SplitJacobian<D> split_jacobian(const EigenSystem<D>& es, Splitting mode) {
  std::array<double, kNumVars<D>> lp{};
  std::array<double, kNumVars<D>> lm{};
  for (int k = 0; k < kNumVars<D>; ++k) {
    lp[k] = lambda_plus(es.lambdas[k], mode);
    lm[k] = lambda_minus(es.lambdas[k], mode);
  }
  return {es.assemble(lp), es.assemble(lm)};
}

}  // namespace hwcns
