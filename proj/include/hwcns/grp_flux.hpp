// Midpoint numerical flux and its time derivative from the generalized
// Riemann problem linearization (Cauchy-Kovalevskaya: df/dt = A du/dt).
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "hwcns/euler.hpp"

namespace hwcns {

enum class Dissipation { rusanov, roe };

template <int D>
struct InterfaceState {
  State<D> uL{};
  State<D> uR{};
  State<D> duL{};
  State<D> duR{};
  // d(g)/dy evaluated from the left/right interface states; 2D x-interfaces only
  // (and the x-analogue on y-interfaces)
  State<D> transverseL{};
  State<D> transverseR{};
  bool has_transverse = false;
};

template <int D>
struct FluxPair {
  State<D> flux{};
  State<D> dflux_dt{};
};

/// 1/2 [f(uR) + f(uL) - |A|(uR - uL)]. `roe_system` defaults to the Roe-averaged
/// eigensystem of (uL, uR).
template <int D>
State<D> numerical_flux(const InterfaceState<D>& iface, Axis axis, const GasModel& gas,
                        Dissipation dissipation, const EigenSystem<D>* roe_system = nullptr,
                        std::string_view where = "interface") {
  constexpr int N = kNumVars<D>;
  if (!is_physical<D>(iface.uL, gas) || !is_physical<D>(iface.uR, gas)) {
    throw NonPhysicalState("non-physical interpolated state at " + std::string(where) +
                           ": rhoL=" + std::to_string(iface.uL[0]) + " pL=" +
                           std::to_string(pressure<D>(iface.uL, gas)) + " rhoR=" +
                           std::to_string(iface.uR[0]) + " pR=" +
                           std::to_string(pressure<D>(iface.uR, gas)));
  }
  const State<D> fl = physical_flux_unchecked<D>(iface.uL, axis, gas);
  const State<D> fr = physical_flux_unchecked<D>(iface.uR, axis, gas);
  State<D> jump{};
  for (int k = 0; k < N; ++k) jump[k] = iface.uR[k] - iface.uL[k];

  const EigenSystem<D> es =
      roe_system != nullptr ? *roe_system : interface_eigensystem<D>(iface.uL, iface.uR, axis, gas);
  State<D> diss{};
  if (dissipation == Dissipation::rusanov) {
    // largest of the one-sided speeds and the averaged spectral radius
    const int a = static_cast<int>(axis);
    double smax = std::max(std::abs(iface.uL[1 + a] / iface.uL[0]) + sound_speed<D>(iface.uL, gas),
                           std::abs(iface.uR[1 + a] / iface.uR[0]) + sound_speed<D>(iface.uR, gas));
    for (double l : es.lambdas) smax = std::max(smax, std::abs(l));
    for (int k = 0; k < N; ++k) diss[k] = smax * jump[k];
  } else {
    diss = es.apply_diag(jump, [](double l) { return std::abs(l); });
  }
  State<D> out{};
  for (int k = 0; k < N; ++k) out[k] = 0.5 * (fl[k] + fr[k] - diss[k]);
  return out;
}

/// du/dt = -A+ duL - A- duR [- R I+ L transverseL - R I- L transverseR].
template <int D>
State<D> interface_time_derivative(const InterfaceState<D>& iface, const EigenSystem<D>& es,
                                   Splitting mode) {
  constexpr int N = kNumVars<D>;
  const State<D> wl = es.to_characteristic(iface.duL);
  const State<D> wr = es.to_characteristic(iface.duR);
  State<D> w{};
  for (int k = 0; k < N; ++k) {
    const double l = es.lambdas[k];
    w[k] = -lambda_plus(l, mode) * wl[k] - lambda_minus(l, mode) * wr[k];
  }
  if (iface.has_transverse) {
    const State<D> tl = es.to_characteristic(iface.transverseL);
    const State<D> tr = es.to_characteristic(iface.transverseR);
    for (int k = 0; k < N; ++k) {
      // lambda == 0 goes to the right-hand indicator
      w[k] -= es.lambdas[k] > 0.0 ? tl[k] : tr[k];
    }
  }
  return es.from_characteristic(w);
}

template <int D>
State<D> flux_time_derivative(const State<D>& dudt, const EigenSystem<D>& es) {
  return es.apply_jacobian(dudt);
}

/// Flux and flux time derivative at one midpoint. `es` linearizes the flux
/// at the interface (the Roe or arithmetic average of uL and uR).
template <int D>
FluxPair<D> interface_flux_pair(const InterfaceState<D>& iface, Axis axis, const GasModel& gas,
                                Dissipation dissipation, Splitting splitting,
                                const EigenSystem<D>& es, std::string_view where = "interface") {
  FluxPair<D> fp;
  fp.flux = numerical_flux<D>(iface, axis, gas, dissipation, &es, where);
  fp.dflux_dt = flux_time_derivative<D>(interface_time_derivative<D>(iface, es, splitting), es);
  return fp;
}

}  // namespace hwcns
