#include "wenoza/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wenoza {

namespace {

template <int M>
double density(const std::array<double, M>& q) {
  return q[0];
}

template <int M>
double pressure_of(const std::array<double, M>& q, double gamma) {
  double ke = 0.0;
  for (int c = 1; c < M - 1; ++c) ke += q[c] * q[c];
  return (gamma - 1.0) * (q[M - 1] - 0.5 * ke / q[0]);
}

template <int M>
bool admissible(const std::array<double, M>& q, const PositivityParams& par) {
  return q[0] >= par.eps_rho && pressure_of<M>(q, par.gamma) >= par.eps_p;
}

}  // namespace

template <int M>
LimiterReport limit_line(std::span<const std::array<double, M>> cells,
                         std::span<std::array<double, M>> fluxes,
                         std::span<const std::array<double, M>> lf,
                         double lambda, const PositivityParams& par) {
  const std::size_t n = cells.size();
  if (fluxes.size() != n + 1 || lf.size() != n + 1)
    throw std::invalid_argument("limit_line: need one flux per interface");
  if (!(lambda > 0.0)) throw std::invalid_argument("limit_line: lambda <= 0");

  LimiterReport rep;

  // First-order update of every cell; this is the positivity anchor.
  std::vector<std::array<double, M>> ulf(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < M; ++c)
      ulf[i][c] = cells[i][c] - lambda * (lf[i + 1][c] - lf[i][c]);
    if (!admissible<M>(ulf[i], par) && rep.feasible) {
      rep.feasible = false;
      rep.bad_cell = static_cast<long>(i);
      rep.bad_rho = ulf[i][0];
      rep.bad_p = pressure_of<M>(ulf[i], par.gamma);
    }
  }
  if (!rep.feasible) return rep;

  // Per-interface antidiffusive parts and maximal blend weights.
  for (std::size_t j = 0; j <= n; ++j) {
    std::array<double, M> dF;
    for (int c = 0; c < M; ++c) dF[c] = fluxes[j][c] - lf[j][c];

    // The update of cell i splits into one half-state per interface; the
    // scaled half-states must stay admissible:
    //   left neighbor (i = j-1): ulf - 2 lambda theta dF
    //   right neighbor (i = j):  ulf + 2 lambda theta dF
    auto ok = [&](double theta) {
      if (j > 0) {
        std::array<double, M> s;
        for (int c = 0; c < M; ++c)
          s[c] = ulf[j - 1][c] - 2.0 * lambda * theta * dF[c];
        if (!admissible<M>(s, par)) return false;
      }
      if (j < n) {
        std::array<double, M> s;
        for (int c = 0; c < M; ++c)
          s[c] = ulf[j][c] + 2.0 * lambda * theta * dF[c];
        if (!admissible<M>(s, par)) return false;
      }
      return true;
    };

    double theta = 1.0;
    if (!ok(1.0)) {
      // Density is linear and pressure concave in theta, so the admissible
      // set is an interval containing 0; bisect for its upper end.
      double lo = 0.0, hi = 1.0;
      while (hi - lo > par.theta_tol) {
        const double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
      }
      theta = lo;  // safe side
      ++rep.limited_interfaces;
    }
    rep.min_theta = std::min(rep.min_theta, theta);
    if (theta < 1.0)
      for (int c = 0; c < M; ++c) fluxes[j][c] = lf[j][c] + theta * dF[c];
  }
  return rep;
}

template LimiterReport limit_line<3>(std::span<const std::array<double, 3>>,
                                     std::span<std::array<double, 3>>,
                                     std::span<const std::array<double, 3>>,
                                     double, const PositivityParams&);
template LimiterReport limit_line<4>(std::span<const std::array<double, 4>>,
                                     std::span<std::array<double, 4>>,
                                     std::span<const std::array<double, 4>>,
                                     double, const PositivityParams&);

}  // namespace wenoza
