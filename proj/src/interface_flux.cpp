#include "wenoza/interface_flux.hpp"

#include <stdexcept>
#include <vector>

namespace wenoza {

std::array<double, 3> characteristic_interface_flux(
    std::span<const EulerState1D> states, const SchemeKind& scheme,
    const std::array<double, 3>& alpha, double gamma,
    InterfaceAveraging averaging, bool guard_abs) {
  const PreparedScheme s = PreparedScheme::make(scheme);
  if (static_cast<int>(states.size()) != s.window)
    throw std::invalid_argument("characteristic_interface_flux: expected " +
                                std::to_string(s.window) + " states, got " +
                                std::to_string(states.size()));
  const int r = scheme.r;
  const EulerState1D& l = states[r - 1];
  const EulerState1D& rt = states[r];
  const RoeAverage1D avg = (averaging == InterfaceAveraging::roe)
                               ? roe_average(l, rt, gamma, guard_abs)
                               : arithmetic_average(l, rt, gamma, guard_abs);
  const EigenSystem<3> es = eigensystem(avg, gamma);

  std::vector<std::array<double, 3>> q(s.window), f(s.window);
  for (int i = 0; i < s.window; ++i) {
    q[i] = {states[i].rho, states[i].mom, states[i].E};
    f[i] = euler_flux(states[i], gamma);
  }
  return characteristic_flux<3>(q.data(), f.data(), es, alpha, s);
}

std::array<double, 3> componentwise_interface_flux(
    std::span<const EulerState1D> states, const SchemeKind& scheme,
    double alpha, double gamma) {
  const PreparedScheme s = PreparedScheme::make(scheme);
  if (static_cast<int>(states.size()) != s.window)
    throw std::invalid_argument("componentwise_interface_flux: expected " +
                                std::to_string(s.window) + " states, got " +
                                std::to_string(states.size()));
  std::vector<std::array<double, 3>> q(s.window), f(s.window);
  for (int i = 0; i < s.window; ++i) {
    q[i] = {states[i].rho, states[i].mom, states[i].E};
    f[i] = euler_flux(states[i], gamma);
  }
  return componentwise_flux<3>(q.data(), f.data(), alpha, s);
}

}  // namespace wenoza
