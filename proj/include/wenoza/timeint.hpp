#pragma once
// Third-order TVD Runge-Kutta time stepping and CFL-based step control.

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace wenoza {

struct TimeControls {
  double cfl = 0.45;
  double t_final = 0.0;
  std::optional<double> dt_cap;

  void validate() const {
    if (!(cfl > 0.0) || cfl > 1.0)
      throw std::invalid_argument("TimeControls: cfl must lie in (0, 1]");
    if (dt_cap && !(*dt_cap > 0.0))
      throw std::invalid_argument("TimeControls: dt_cap must be positive");
  }
};

// One step of the three-stage TVD scheme:
//   u1 = u + dt L(u)
//   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
//   u+ = 1/3 u + 2/3 (u2 + dt L(u2))
// `rhs(in, out, stage)` evaluates L; failures it throws are annotated with the
// stage index.
template <class State, class Rhs>
State rk3_step(const State& u, Rhs&& rhs, double dt) {
  const std::size_t n = u.size();
  State k(u.size()), s(u.size());

  auto eval = [&](const State& in, State& out, int stage) {
    try {
      rhs(in, out, stage);
    } catch (const std::exception& e) {
      throw std::runtime_error("rk3_step: rhs failed at stage " +
                               std::to_string(stage) + ": " + e.what());
    }
  };

  eval(u, k, 0);
  for (std::size_t i = 0; i < n; ++i) s[i] = u[i] + dt * k[i];

  eval(s, k, 1);
  for (std::size_t i = 0; i < n; ++i)
    s[i] = 0.75 * u[i] + 0.25 * (s[i] + dt * k[i]);

  eval(s, k, 2);
  for (std::size_t i = 0; i < n; ++i)
    s[i] = (1.0 / 3.0) * u[i] + (2.0 / 3.0) * (s[i] + dt * k[i]);
  return s;
}

// 1D time step: dt = cfl * dx / max_speed, clipped so t + dt never overshoots
// t_final.
inline double cfl_dt(double max_speed, double dx, const TimeControls& tc, double t) {
  tc.validate();
  double dt;
  if (max_speed > 0.0) {
    dt = tc.cfl * dx / max_speed;
    if (tc.dt_cap) dt = std::min(dt, *tc.dt_cap);
  } else if (tc.dt_cap) {
    dt = *tc.dt_cap;
  } else {
    throw std::domain_error("cfl_dt: zero max speed and no dt_cap");
  }
  if (t + dt > tc.t_final) dt = tc.t_final - t;
  return dt;
}

// 2D time step from the additive directional condition
//   dt = cfl / (sx/dx + sy/dy).
inline double cfl_dt2(double max_speed_x, double max_speed_y, double dx, double dy,
                      const TimeControls& tc, double t) {
  tc.validate();
  const double denom = max_speed_x / dx + max_speed_y / dy;
  double dt;
  if (denom > 0.0) {
    dt = tc.cfl / denom;
    if (tc.dt_cap) dt = std::min(dt, *tc.dt_cap);
  } else if (tc.dt_cap) {
    dt = *tc.dt_cap;
  } else {
    throw std::domain_error("cfl_dt2: zero max speed and no dt_cap");
  }
  if (t + dt > tc.t_final) dt = tc.t_final - t;
  return dt;
}

}  // namespace wenoza
