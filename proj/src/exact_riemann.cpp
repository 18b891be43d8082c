#include <cmath>
#include <stdexcept>

#include "wenoza/problems.hpp"

namespace wenoza {

namespace {

struct Side {
  double rho, u, p, a;
};

// Velocity jump carried by the wave connecting p to the side state (Toro's
// pressure function), and its derivative in p.
void wave_fn(const Side& s, double gamma, double p, double& f, double& df) {
  if (p > s.p) {  // shock branch (Rankine-Hugoniot)
    const double A = 2.0 / ((gamma + 1.0) * s.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * s.p;
    const double root = std::sqrt(A / (p + B));
    f = (p - s.p) * root;
    df = root * (1.0 - 0.5 * (p - s.p) / (p + B));
  } else {  // rarefaction branch (isentropic)
    const double z = (gamma - 1.0) / (2.0 * gamma);
    f = 2.0 * s.a / (gamma - 1.0) * (std::pow(p / s.p, z) - 1.0);
    df = std::pow(p / s.p, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * s.a);
  }
}

Side make_side(double rho, double u, double p, double gamma) {
  if (!(rho > 0.0) || !(p > 0.0))
    throw std::domain_error("riemann: non-positive density or pressure");
  return {rho, u, p, std::sqrt(gamma * p / rho)};
}

}  // namespace

RiemannSolution solve_riemann(const RiemannStates& rs, double gamma) {
  const Side L = make_side(rs.rho_l, rs.u_l, rs.p_l, gamma);
  const Side R = make_side(rs.rho_r, rs.u_r, rs.p_r, gamma);
  const double du = R.u - L.u;
  if (2.0 * (L.a + R.a) / (gamma - 1.0) <= du)
    throw std::domain_error("riemann: states generate vacuum");

  // Two-rarefaction approximation as the initial guess.
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((L.a + R.a - 0.5 * (gamma - 1.0) * du) /
                          (L.a / std::pow(L.p, z) + R.a / std::pow(R.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-14);

  RiemannSolution sol;
  const double tol = 1e-12;
  for (int it = 1; it <= 200; ++it) {
    double fl, dfl, fr, dfr;
    wave_fn(L, gamma, p, fl, dfl);
    wave_fn(R, gamma, p, fr, dfr);
    const double f = fl + fr + du;
    double pn = p - f / (dfl + dfr);
    if (pn <= 0.0) pn = 0.5 * p;
    const double rel = std::abs(pn - p) / (0.5 * (pn + p));
    p = pn;
    sol.newton_iterations = it;
    if (rel < tol) break;
    if (it == 200)
      throw std::runtime_error("riemann: pressure iteration failed to converge");
  }

  double fl, dfl, fr, dfr;
  wave_fn(L, gamma, p, fl, dfl);
  wave_fn(R, gamma, p, fr, dfr);
  sol.p_star = p;
  sol.u_star = 0.5 * (L.u + R.u) + 0.5 * (fr - fl);

  const double g6 = (gamma - 1.0) / (gamma + 1.0);
  auto star_density = [&](const Side& s) {
    const double pr = p / s.p;
    if (p > s.p) return s.rho * (pr + g6) / (g6 * pr + 1.0);
    return s.rho * std::pow(pr, 1.0 / gamma);
  };
  sol.rho_star_l = star_density(L);
  sol.rho_star_r = star_density(R);
  return sol;
}

std::array<double, 3> sample_riemann(const RiemannStates& rs, double gamma,
                                     double xi) {
  const Side L = make_side(rs.rho_l, rs.u_l, rs.p_l, gamma);
  const Side R = make_side(rs.rho_r, rs.u_r, rs.p_r, gamma);
  const RiemannSolution st = solve_riemann(rs, gamma);
  const double g1 = (gamma - 1.0) / (2.0 * gamma);
  const double g4 = 2.0 / (gamma + 1.0);
  const double g5 = (gamma - 1.0) / (gamma + 1.0);

  if (xi <= st.u_star) {  // left of the contact
    if (st.p_star > L.p) {
      const double sl =
          L.u - L.a * std::sqrt((gamma + 1.0) / (2.0 * gamma) * st.p_star / L.p +
                                g1);
      if (xi < sl) return {L.rho, L.u, L.p};
      return {st.rho_star_l, st.u_star, st.p_star};
    }
    const double a_star = L.a * std::pow(st.p_star / L.p, g1);
    if (xi < L.u - L.a) return {L.rho, L.u, L.p};
    if (xi > st.u_star - a_star) return {st.rho_star_l, st.u_star, st.p_star};
    const double c = g4 + g5 / L.a * (L.u - xi);
    return {L.rho * std::pow(c, 2.0 / (gamma - 1.0)),
            g4 * (L.a + 0.5 * (gamma - 1.0) * L.u + xi),
            L.p * std::pow(c, 1.0 / g1)};
  }

  if (st.p_star > R.p) {
    const double sr =
        R.u + R.a * std::sqrt((gamma + 1.0) / (2.0 * gamma) * st.p_star / R.p + g1);
    if (xi > sr) return {R.rho, R.u, R.p};
    return {st.rho_star_r, st.u_star, st.p_star};
  }
  const double a_star = R.a * std::pow(st.p_star / R.p, g1);
  if (xi > R.u + R.a) return {R.rho, R.u, R.p};
  if (xi < st.u_star + a_star) return {st.rho_star_r, st.u_star, st.p_star};
  const double c = g4 - g5 / R.a * (R.u - xi);
  return {R.rho * std::pow(c, 2.0 / (gamma - 1.0)),
          g4 * (-R.a + 0.5 * (gamma - 1.0) * R.u + xi),
          R.p * std::pow(c, 1.0 / g1)};
}

}  // namespace wenoza
