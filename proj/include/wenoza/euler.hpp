#pragma once
// Compressible Euler physics: conserved-state types, ideal-gas EOS, physical
// fluxes, and Roe-averaged eigensystems for characteristic decomposition.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace wenoza {

struct EulerState1D {
  double rho;  // density
  double mom;  // momentum rho*u
  double E;    // total energy per unit volume

  double u() const { return mom / rho; }
};

struct EulerState2D {
  double rho;
  double momx;
  double momy;
  double E;

  double u() const { return momx / rho; }
  double v() const { return momy / rho; }
};

inline double pressure(const EulerState1D& s, double gamma) {
  if (!(s.rho > 0.0))
    throw std::domain_error("pressure: nonpositive density " + std::to_string(s.rho));
  return (gamma - 1.0) * (s.E - 0.5 * s.mom * s.mom / s.rho);
}

inline double pressure(const EulerState2D& s, double gamma) {
  if (!(s.rho > 0.0))
    throw std::domain_error("pressure: nonpositive density " + std::to_string(s.rho));
  return (gamma - 1.0) *
         (s.E - 0.5 * (s.momx * s.momx + s.momy * s.momy) / s.rho);
}

// Total energy from primitives; inverse of the EOS pressure relation.
inline double energy(double rho, double u, double p, double gamma) {
  return p / (gamma - 1.0) + 0.5 * rho * u * u;
}
inline double energy(double rho, double u, double v, double p, double gamma) {
  return p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v);
}

// `guard_abs` mirrors the occasional practice of taking |p| inside the sound
// speed for borderline states instead of failing outright.
inline double sound_speed(double rho, double p, double gamma, bool guard_abs = false) {
  double pp = p;
  if (guard_abs) pp = std::abs(p);
  if (!(pp > 0.0) || !(rho > 0.0))
    throw std::domain_error("sound_speed: unphysical state (rho=" +
                            std::to_string(rho) + ", p=" + std::to_string(p) + ")");
  return std::sqrt(gamma * pp / rho);
}

inline std::array<double, 3> euler_flux(const EulerState1D& s, double gamma) {
  const double p = pressure(s, gamma);
  const double u = s.u();
  return {s.mom, s.mom * u + p, (s.E + p) * u};
}

inline std::array<double, 4> euler_flux_x(const EulerState2D& s, double gamma) {
  const double p = pressure(s, gamma);
  const double u = s.u();
  return {s.momx, s.momx * u + p, s.momy * u, (s.E + p) * u};
}

inline std::array<double, 4> euler_flux_y(const EulerState2D& s, double gamma) {
  const double p = pressure(s, gamma);
  const double v = s.v();
  return {s.momy, s.momx * v, s.momy * v + p, (s.E + p) * v};
}

// Lax-Friedrichs splitting f = f_plus + f_minus with df_plus/dq >= 0.
inline std::pair<double, double> lf_split(double f, double q, double alpha) {
  if (alpha < 0.0) throw std::invalid_argument("lf_split: negative alpha");
  return {0.5 * (f + alpha * q), 0.5 * (f - alpha * q)};
}

template <int M>
struct EigenSystem {
  std::array<std::array<double, M>, M> right;  // columns are right eigenvectors
  std::array<std::array<double, M>, M> left;   // rows are left eigenvectors
  std::array<double, M> speeds;
};

struct RoeAverage1D {
  double u, H, a;
};
struct RoeAverage2D {
  double u, v, H, a;
};

namespace detail {
inline double roe_sound_speed(double h_kin, double H, double gamma, bool guard_abs) {
  double a2 = (gamma - 1.0) * (H - h_kin);
  if (guard_abs) a2 = std::abs(a2);
  if (!(a2 > 0.0))
    throw std::domain_error("roe average: nonpositive sound speed squared " +
                            std::to_string(a2));
  return std::sqrt(a2);
}
}  // namespace detail

inline RoeAverage1D roe_average(const EulerState1D& l, const EulerState1D& r,
                                double gamma, bool guard_abs = false) {
  const double pl = pressure(l, gamma), pr = pressure(r, gamma);
  const double wl = std::sqrt(l.rho), wr = std::sqrt(r.rho);
  const double inv = 1.0 / (wl + wr);
  const double u = (wl * l.u() + wr * r.u()) * inv;
  const double Hl = (l.E + pl) / l.rho, Hr = (r.E + pr) / r.rho;
  const double H = (wl * Hl + wr * Hr) * inv;
  const double a = detail::roe_sound_speed(0.5 * u * u, H, gamma, guard_abs);
  return {u, H, a};
}

inline RoeAverage2D roe_average(const EulerState2D& l, const EulerState2D& r,
                                double gamma, bool guard_abs = false) {
  const double pl = pressure(l, gamma), pr = pressure(r, gamma);
  const double wl = std::sqrt(l.rho), wr = std::sqrt(r.rho);
  const double inv = 1.0 / (wl + wr);
  const double u = (wl * l.u() + wr * r.u()) * inv;
  const double v = (wl * l.v() + wr * r.v()) * inv;
  const double Hl = (l.E + pl) / l.rho, Hr = (r.E + pr) / r.rho;
  const double H = (wl * Hl + wr * Hr) * inv;
  const double a = detail::roe_sound_speed(0.5 * (u * u + v * v), H, gamma, guard_abs);
  return {u, v, H, a};
}

// Arithmetic-mean interface state, offered as a fallback to Roe averaging.
inline RoeAverage1D arithmetic_average(const EulerState1D& l, const EulerState1D& r,
                                       double gamma, bool guard_abs = false) {
  const EulerState1D m{0.5 * (l.rho + r.rho), 0.5 * (l.mom + r.mom), 0.5 * (l.E + r.E)};
  const double p = pressure(m, gamma);
  const double u = m.u();
  const double H = (m.E + p) / m.rho;
  const double a = detail::roe_sound_speed(0.5 * u * u, H, gamma, guard_abs);
  return {u, H, a};
}

inline RoeAverage2D arithmetic_average(const EulerState2D& l, const EulerState2D& r,
                                       double gamma, bool guard_abs = false) {
  const EulerState2D m{0.5 * (l.rho + r.rho), 0.5 * (l.momx + r.momx),
                       0.5 * (l.momy + r.momy), 0.5 * (l.E + r.E)};
  const double p = pressure(m, gamma);
  const double u = m.u(), v = m.v();
  const double H = (m.E + p) / m.rho;
  const double a = detail::roe_sound_speed(0.5 * (u * u + v * v), H, gamma, guard_abs);
  return {u, v, H, a};
}

// Eigensystem of the 1D flux Jacobian at an averaged state, conserved
// variables; speeds ordered u-a, u, u+a.
inline EigenSystem<3> eigensystem(const RoeAverage1D& m, double gamma) {
  const double u = m.u, H = m.H, a = m.a;
  const double b1 = (gamma - 1.0) / (a * a);
  const double b2 = 0.5 * b1 * u * u;
  EigenSystem<3> es;
  es.speeds = {u - a, u, u + a};
  es.right = {{{1.0, 1.0, 1.0},
               {u - a, u, u + a},
               {H - u * a, 0.5 * u * u, H + u * a}}};
  es.left = {{{0.5 * (b2 + u / a), 0.5 * (-b1 * u - 1.0 / a), 0.5 * b1},
              {1.0 - b2, b1 * u, -b1},
              {0.5 * (b2 - u / a), 0.5 * (-b1 * u + 1.0 / a), 0.5 * b1}}};
  return es;
}

// Eigensystem of the 2D x-direction flux Jacobian; speeds u-a, u, u, u+a
// (the repeated u carries the transverse momentum).
inline EigenSystem<4> eigensystem_x(const RoeAverage2D& m, double gamma) {
  const double u = m.u, v = m.v, H = m.H, a = m.a;
  const double q2 = u * u + v * v;
  const double b1 = (gamma - 1.0) / (a * a);
  const double b2 = 0.5 * b1 * q2;
  EigenSystem<4> es;
  es.speeds = {u - a, u, u, u + a};
  es.right = {{{1.0, 1.0, 0.0, 1.0},
               {u - a, u, 0.0, u + a},
               {v, v, 1.0, v},
               {H - u * a, 0.5 * q2, v, H + u * a}}};
  es.left = {{{0.5 * (b2 + u / a), 0.5 * (-b1 * u - 1.0 / a), 0.5 * (-b1 * v), 0.5 * b1},
              {1.0 - b2, b1 * u, b1 * v, -b1},
              {-v, 0.0, 1.0, 0.0},
              {0.5 * (b2 - u / a), 0.5 * (-b1 * u + 1.0 / a), 0.5 * (-b1 * v), 0.5 * b1}}};
  return es;
}

// y-direction eigensystem via the rotation (u,v) -> (v,u), component order
// kept as (rho, momx, momy, E); speeds v-a, v, v, v+a.
inline EigenSystem<4> eigensystem_y(const RoeAverage2D& m, double gamma) {
  const double u = m.u, v = m.v, H = m.H, a = m.a;
  const double q2 = u * u + v * v;
  const double b1 = (gamma - 1.0) / (a * a);
  const double b2 = 0.5 * b1 * q2;
  EigenSystem<4> es;
  es.speeds = {v - a, v, v, v + a};
  es.right = {{{1.0, 1.0, 0.0, 1.0},
               {u, u, 1.0, u},
               {v - a, v, 0.0, v + a},
               {H - v * a, 0.5 * q2, u, H + v * a}}};
  es.left = {{{0.5 * (b2 + v / a), 0.5 * (-b1 * u), 0.5 * (-b1 * v - 1.0 / a), 0.5 * b1},
              {1.0 - b2, b1 * u, b1 * v, -b1},
              {-u, 1.0, 0.0, 0.0},
              {0.5 * (b2 - v / a), 0.5 * (-b1 * u), 0.5 * (-b1 * v + 1.0 / a), 0.5 * b1}}};
  return es;
}

inline EigenSystem<3> roe_eigensystem(const EulerState1D& l, const EulerState1D& r,
                                      double gamma, bool guard_abs = false) {
  return eigensystem(roe_average(l, r, gamma, guard_abs), gamma);
}

inline EigenSystem<4> roe_eigensystem_x(const EulerState2D& l, const EulerState2D& r,
                                        double gamma, bool guard_abs = false) {
  return eigensystem_x(roe_average(l, r, gamma, guard_abs), gamma);
}

inline EigenSystem<4> roe_eigensystem_y(const EulerState2D& l, const EulerState2D& r,
                                        double gamma, bool guard_abs = false) {
  return eigensystem_y(roe_average(l, r, gamma, guard_abs), gamma);
}

}  // namespace wenoza
