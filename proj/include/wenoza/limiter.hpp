#pragma once
// Positivity-preserving flux limiter: blends each high-order interface flux
// toward a first-order Lax-Friedrichs flux, with the largest per-interface
// blend weight that keeps density and pressure of one forward-Euler update
// positive.  Works on one line of cells at a time; 2D sweeps pass an
// inflated dt/dx that accounts for their share of the full update.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace wenoza {

struct PositivityParams {
  double eps_rho = 1e-13;   // density floor
  double eps_p = 1e-13;     // pressure floor
  double theta_tol = 1e-12; // bisection resolution for the blend weight
  double gamma = 1.4;
};

struct LimiterReport {
  double min_theta = 1.0;        // smallest blend weight applied
  long limited_interfaces = 0;   // interfaces with theta < 1
  bool feasible = true;          // first-order update satisfies the floors
  // diagnostics for the infeasible case
  long bad_cell = -1;
  double bad_rho = 0.0;
  double bad_p = 0.0;
};

// Rescales fluxes[j] (j = 0..n, one per interface of cells[0..n-1]) in place:
// fluxes[j] <- lf[j] + theta_j * (fluxes[j] - lf[j]).  `lambda` is the
// effective dt/dx of the forward-Euler update this line contributes.
// M = 3 for 1D Euler lines, M = 4 for 2D Euler lines; layout is
// (rho, momenta..., E).
template <int M>
LimiterReport limit_line(std::span<const std::array<double, M>> cells,
                         std::span<std::array<double, M>> fluxes,
                         std::span<const std::array<double, M>> lf,
                         double lambda, const PositivityParams& par);

extern template LimiterReport limit_line<3>(
    std::span<const std::array<double, 3>>, std::span<std::array<double, 3>>,
    std::span<const std::array<double, 3>>, double, const PositivityParams&);
extern template LimiterReport limit_line<4>(
    std::span<const std::array<double, 4>>, std::span<std::array<double, 4>>,
    std::span<const std::array<double, 4>>, double, const PositivityParams&);

}  // namespace wenoza
