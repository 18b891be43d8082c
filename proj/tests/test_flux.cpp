// Euler physics, Lax-Friedrichs splitting, Roe eigensystems, and the
// characteristic-wise interface flux.
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "wenoza/euler.hpp"
#include "wenoza/interface_flux.hpp"

using namespace wenoza;

namespace {

EulerState1D make_state(double rho, double u, double p, double gamma) {
  return {rho, rho * u, energy(rho, u, p, gamma)};
}

EulerState2D make_state2(double rho, double u, double v, double p, double gamma) {
  return {rho, rho * u, rho * v, energy(rho, u, v, p, gamma)};
}

template <int M>
double identity_deviation(const EigenSystem<M>& es) {
  double dev = 0.0;
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      double acc = 0.0;
      for (int k = 0; k < M; ++k) acc += es.left[i][k] * es.right[k][j];
      dev = std::max(dev, std::abs(acc - (i == j ? 1.0 : 0.0)));
    }
  return dev;
}

// Numeric Jacobian of the x-direction 2D Euler flux by central differences.
std::array<std::array<double, 4>, 4> numeric_jacobian_x(const EulerState2D& s,
                                                        double gamma) {
  std::array<std::array<double, 4>, 4> A{};
  const std::array<double, 4> q{s.rho, s.momx, s.momy, s.E};
  for (int j = 0; j < 4; ++j) {
    const double h = 1e-6 * std::max(1.0, std::abs(q[j]));
    std::array<double, 4> qp = q, qm = q;
    qp[j] += h;
    qm[j] -= h;
    const auto fp = euler_flux_x({qp[0], qp[1], qp[2], qp[3]}, gamma);
    const auto fm = euler_flux_x({qm[0], qm[1], qm[2], qm[3]}, gamma);
    for (int i = 0; i < 4; ++i) A[i][j] = (fp[i] - fm[i]) / (2 * h);
  }
  return A;
}

double fit_slope(const std::vector<double>& h, const std::vector<double>& e) {
  const int n = static_cast<int>(h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(h[i]), y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("EOS pressure and energy") {
  const double g = 1.4;
  CHECK(pressure(EulerState1D{1.0, 0.0, 2.5}, g) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(energy(1.0, 0.0, 1.0, g) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(energy(1.0, 2.0, 0.4, g) == doctest::Approx(3.0).epsilon(1e-15));

  // Round trip primitives -> conserved -> pressure.
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> rho_d(0.05, 10.0), u_d(-5.0, 5.0),
      p_d(0.01, 100.0);
  for (int t = 0; t < 1000; ++t) {
    const double rho = rho_d(rng), u = u_d(rng), p = p_d(rng);
    const EulerState1D s = make_state(rho, u, p, g);
    CHECK(pressure(s, g) == doctest::Approx(p).epsilon(1e-14));
  }

  CHECK_THROWS_AS(pressure(EulerState1D{0.0, 0.0, 1.0}, g), std::domain_error);
  CHECK_THROWS_AS(pressure(EulerState1D{-1.0, 0.0, 1.0}, g), std::domain_error);
  CHECK_THROWS_AS(sound_speed(1.0, -0.5, g), std::domain_error);
  CHECK(sound_speed(1.0, -0.5, g, /*guard_abs=*/true) ==
        doctest::Approx(std::sqrt(1.4 * 0.5)));
}

TEST_CASE("physical fluxes") {
  const double g = 1.4;
  auto f0 = euler_flux(make_state(1.0, 0.0, 1.0, g), g);
  CHECK(std::abs(f0[0]) < 1e-15);
  CHECK(f0[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(f0[2]) < 1e-15);

  // (rho,u,p) = (1,1,1): E = 2.5 + 0.5 = 3, so (E+p)u = 4.
  auto f1 = euler_flux(make_state(1.0, 1.0, 1.0, g), g);
  CHECK(f1[0] == doctest::Approx(1.0));
  CHECK(f1[1] == doctest::Approx(2.0));
  CHECK(f1[2] == doctest::Approx(4.0));

  auto fl = euler_flux(make_state(0.445, 0.698, 3.528, g), g);
  CHECK(std::isfinite(fl[0]));
  CHECK(std::isfinite(fl[1]));
  CHECK(std::isfinite(fl[2]));
  CHECK(fl[0] == doctest::Approx(0.445 * 0.698).epsilon(1e-14));

  // 2D x-flux reduces to the 1D flux when the transverse velocity is zero.
  const EulerState2D s20 = make_state2(0.8, 1.3, 0.0, 2.0, g);
  const auto fx0 = euler_flux_x(s20, g);
  const auto f1d = euler_flux(make_state(0.8, 1.3, 2.0, g), g);
  CHECK(fx0[0] == doctest::Approx(f1d[0]).epsilon(1e-14));
  CHECK(fx0[1] == doctest::Approx(f1d[1]).epsilon(1e-14));
  CHECK(fx0[3] == doctest::Approx(f1d[2]).epsilon(1e-14));
  CHECK(std::abs(fx0[2]) < 1e-15);

  // Swapping (u,v) maps the x-flux onto the y-flux with momenta exchanged.
  const EulerState2D s2 = make_state2(0.8, 1.3, 0.4, 2.0, g);
  const EulerState2D sxy = make_state2(0.8, 0.4, 1.3, 2.0, g);
  const auto fx = euler_flux_x(s2, g);
  const auto fy = euler_flux_y(sxy, g);
  CHECK(fy[0] == doctest::Approx(fx[0]).epsilon(1e-14));
  CHECK(fy[1] == doctest::Approx(fx[2]).epsilon(1e-14));
  CHECK(fy[2] == doctest::Approx(fx[1]).epsilon(1e-14));
  CHECK(fy[3] == doctest::Approx(fx[3]).epsilon(1e-14));
}

TEST_CASE("Lax-Friedrichs splitting") {
  auto [p1, m1] = lf_split(3.0, 3.0, 1.0);  // advection f = q
  CHECK(p1 == doctest::Approx(3.0));
  CHECK(std::abs(m1) < 1e-15);

  auto [p2, m2] = lf_split(2.0, 2.0, 2.0);
  CHECK(p2 == doctest::Approx(3.0));
  CHECK(m2 == doctest::Approx(-1.0));

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int t = 0; t < 1000; ++t) {
    const double f = d(rng), q = d(rng), a = std::abs(d(rng));
    auto [fp, fm] = lf_split(f, q, a);
    CHECK(fp + fm == doctest::Approx(f).epsilon(1e-14));
  }
  CHECK_THROWS_AS(lf_split(1.0, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("Roe eigensystem: consistency, duality, ordering") {
  const double g = 1.4;
  // Equal states: average equals the state itself.
  const EulerState1D s = make_state(1.2, 0.7, 1.5, g);
  const RoeAverage1D avg = roe_average(s, s, g);
  CHECK(avg.u == doctest::Approx(0.7).epsilon(1e-14));
  const double a = sound_speed(1.2, 1.5, g);
  CHECK(avg.a == doctest::Approx(a).epsilon(1e-13));
  const double H = (s.E + 1.5) / 1.2;
  CHECK(avg.H == doctest::Approx(H).epsilon(1e-13));

  // Sod pair: ordered speeds.
  const EulerState1D sl = make_state(0.125, 0.0, 0.1, g);
  const EulerState1D sr = make_state(1.0, 0.0, 1.0, g);
  const EigenSystem<3> es = roe_eigensystem(sl, sr, g);
  CHECK(es.speeds[0] < es.speeds[1]);
  CHECK(es.speeds[1] < es.speeds[2]);
  CHECK(identity_deviation(es) < 1e-12);

  // Duality over a large randomized population of physical pairs.
  std::mt19937 rng(2026);
  std::uniform_real_distribution<double> rho_d(0.02, 20.0), u_d(-8.0, 8.0),
      p_d(0.005, 200.0);
  double worst = 0.0;
  for (int t = 0; t < 1000000; ++t) {
    const EulerState1D l = make_state(rho_d(rng), u_d(rng), p_d(rng), g);
    const EulerState1D r = make_state(rho_d(rng), u_d(rng), p_d(rng), g);
    worst = std::max(worst, identity_deviation(roe_eigensystem(l, r, g)));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("2D eigensystems: duality and Jacobian eigenpairs") {
  const double g = 1.4;
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> rho_d(0.05, 8.0), u_d(-4.0, 4.0),
      p_d(0.01, 50.0);
  double worst_x = 0.0, worst_y = 0.0;
  for (int t = 0; t < 200000; ++t) {
    const EulerState2D l = make_state2(rho_d(rng), u_d(rng), u_d(rng), p_d(rng), g);
    const EulerState2D r = make_state2(rho_d(rng), u_d(rng), u_d(rng), p_d(rng), g);
    worst_x = std::max(worst_x, identity_deviation(roe_eigensystem_x(l, r, g)));
    worst_y = std::max(worst_y, identity_deviation(roe_eigensystem_y(l, r, g)));
  }
  CHECK(worst_x < 1e-12);
  CHECK(worst_y < 1e-12);

  // Independent oracle: columns of R are eigenvectors of the numeric flux
  // Jacobian at that state with the stated speeds.
  const EulerState2D st = make_state2(1.3, 0.6, -0.4, 2.2, g);
  const EigenSystem<4> es = roe_eigensystem_x(st, st, g);
  const auto A = numeric_jacobian_x(st, g);
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      double Ar = 0.0;
      for (int j = 0; j < 4; ++j) Ar += A[i][j] * es.right[j][k];
      CHECK(Ar == doctest::Approx(es.speeds[k] * es.right[i][k]).epsilon(2e-5).scale(1.0));
    }
  }
}

TEST_CASE("characteristic interface flux: freestream consistency") {
  const double g = 1.4;
  const SchemeKind za6 = SchemeKind::from_name("za6");
  const EulerState1D s = make_state(0.9, 1.1, 1.7, g);
  const std::vector<EulerState1D> window(6, s);
  const double amax = std::abs(1.1) + sound_speed(0.9, 1.7, g);
  const std::array<double, 3> alpha{amax, amax, amax};
  const auto h = characteristic_interface_flux(std::span(window), za6, alpha, g);
  const auto f = euler_flux(s, g);
  for (int c = 0; c < 3; ++c) CHECK(std::abs(h[c] - f[c]) < 1e-13 * std::abs(f[c]) + 1e-13);

  const auto hc = componentwise_interface_flux(std::span(window), za6, amax, g);
  for (int c = 0; c < 3; ++c) CHECK(std::abs(hc[c] - f[c]) < 1e-13 * std::abs(f[c]) + 1e-13);

  CHECK_THROWS_AS(characteristic_interface_flux(
                      std::span(window).subspan(0, 4), za6, alpha, g),
                  std::invalid_argument);
}

TEST_CASE("flux-difference derivative converges at sixth order on a density wave") {
  // Pure contact: rho varies, u and p constant, so dF/dx is closed-form.
  const double g = 1.4, u0 = 1.0, p0 = 1.0;
  const SchemeKind ct6 = SchemeKind::from_name("ct6");

  std::vector<double> hs, es_lin;
  for (int lvl = 0; lvl < 4; ++lvl) {
    const int n = 10 << lvl;
    const double h = 2 * std::numbers::pi / n;
    auto rho = [](double x) { return 1.0 + 0.5 * std::sin(x); };
    auto rho_p = [](double x) { return 0.5 * std::cos(x); };
    const double amax = std::abs(u0) + std::sqrt(g * p0 / 0.5);
    const std::array<double, 3> alpha{u0 - amax < 0 ? amax : amax, amax, amax};

    double emax = 0.0;
    for (int i = 0; i < n; ++i) {
      // Two interfaces flanking node i; windows wrap periodically.
      std::vector<EulerState1D> wl(6), wr(6);
      for (int sslot = 0; sslot < 6; ++sslot) {
        const double xl = (i - 3 + sslot) * h;  // window of interface i-1/2
        const double xr = (i - 2 + sslot) * h;  // window of interface i+1/2
        wl[sslot] = make_state(rho(xl), u0, p0, g);
        wr[sslot] = make_state(rho(xr), u0, p0, g);
      }
      const auto hm = characteristic_interface_flux(std::span(wl), ct6, alpha, g);
      const auto hp = characteristic_interface_flux(std::span(wr), ct6, alpha, g);
      const double x = i * h;
      const std::array<double, 3> exact{u0 * rho_p(x), u0 * u0 * rho_p(x),
                                        0.5 * u0 * u0 * u0 * rho_p(x)};
      for (int c = 0; c < 3; ++c)
        emax = std::max(emax, std::abs((hp[c] - hm[c]) / h - exact[c]));
    }
    hs.push_back(h);
    es_lin.push_back(emax);
  }
  CHECK(fit_slope(hs, es_lin) > 5.7);
}

TEST_CASE("characteristic and component projections agree at high order") {
  const double g = 1.4;
  const SchemeKind za6 = SchemeKind::from_name("za6");
  std::vector<double> hs, gaps;
  for (int n : {40, 80, 160}) {
    const double h = 2 * std::numbers::pi / n;
    double dmax = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<EulerState1D> w(6);
      double amax = 0.0;
      for (int sslot = 0; sslot < 6; ++sslot) {
        const double x = (i - 2 + sslot) * h;
        const double rho = 1.0 + 0.3 * std::sin(x);
        const double u = 0.5 + 0.2 * std::cos(x);
        const double p = 1.0 + 0.1 * std::sin(2 * x);
        w[sslot] = make_state(rho, u, p, g);
        amax = std::max(amax, std::abs(u) + sound_speed(rho, p, g));
      }
      const std::array<double, 3> alpha{amax, amax, amax};
      const auto a1 = characteristic_interface_flux(std::span(w), za6, alpha, g);
      const auto a2 = componentwise_interface_flux(std::span(w), za6, amax, g);
      for (int c = 0; c < 3; ++c) dmax = std::max(dmax, std::abs(a1[c] - a2[c]));
    }
    hs.push_back(h);
    gaps.push_back(dmax);
  }
  CHECK(fit_slope(hs, gaps) > 5.5);
  CHECK(gaps.back() < 1e-7);
}

TEST_CASE("odd-width schemes read split-specific windows of the union stencil") {
  // Linear reconstructions are exact on polynomial cell averages (degree <= 4
  // for the 5-point upwind stencil, <= 5 for the 6-point central one).  A
  // misaligned minus-split window would shift that reconstruction by a full
  // cell and miss by O(1).
  auto prim = [](double x) {  // antiderivative of q(x) = x^4 - 2x^3 + 0.5x - 3
    return x * x * x * x * x / 5.0 - x * x * x * x / 2.0 + 0.25 * x * x - 3.0 * x;
  };
  auto qfun = [](double x) { return x * x * x * x - 2 * x * x * x + 0.5 * x - 3.0; };
  const double h = 0.1, xi = 0.3, speed = 3.0, alpha = 5.0;
  double qs[6] = {}, fs[6] = {};
  for (int i = 0; i < 6; ++i) {
    const double lo = xi + (i - 3) * h;
    qs[i] = (prim(lo + h) - prim(lo)) / h;
    fs[i] = speed * qs[i];
  }
  SUBCASE("5-point linear upwind") {
    const PreparedScheme s = PreparedScheme::make(SchemeKind::from_name("lu5"));
    REQUIRE(s.window == 6);
    REQUIRE(s.width == 5);
    REQUIRE(s.minus_off == 1);
    const double flux = scalar_interface_flux(qs, fs, s, alpha);
    CHECK(flux == doctest::Approx(speed * qfun(xi)).epsilon(1e-12));
  }
  SUBCASE("6-point linear central") {
    const PreparedScheme s = PreparedScheme::make(SchemeKind::from_name("ct6"));
    REQUIRE(s.minus_off == 0);
    const double flux = scalar_interface_flux(qs, fs, s, alpha);
    CHECK(flux == doctest::Approx(speed * qfun(xi)).epsilon(1e-12));
  }
}

TEST_CASE("upwind five-point weighted flux-difference converges at fifth order") {
  const double g = 1.4, u0 = 1.0, p0 = 1.0;
  const SchemeKind z5 = SchemeKind::from_name("z5");
  std::vector<double> hs, errs;
  for (int lvl = 0; lvl < 4; ++lvl) {
    const int n = 10 << lvl;
    const double h = 2 * std::numbers::pi / n;
    auto rho = [](double x) { return 1.0 + 0.5 * std::sin(x); };
    auto rho_p = [](double x) { return 0.5 * std::cos(x); };
    const double amax = std::abs(u0) + std::sqrt(g * p0 / 0.5);
    const std::array<double, 3> alpha{amax, amax, amax};
    double emax = 0.0;
    for (int i = 0; i < n; ++i) {
      std::vector<EulerState1D> wl(6), wr(6);
      for (int sslot = 0; sslot < 6; ++sslot) {
        wl[sslot] = make_state(rho((i - 3 + sslot) * h), u0, p0, g);
        wr[sslot] = make_state(rho((i - 2 + sslot) * h), u0, p0, g);
      }
      const auto hm = characteristic_interface_flux(std::span(wl), z5, alpha, g);
      const auto hp = characteristic_interface_flux(std::span(wr), z5, alpha, g);
      const double x = i * h;
      const std::array<double, 3> exact{u0 * rho_p(x), u0 * u0 * rho_p(x),
                                        0.5 * u0 * u0 * u0 * rho_p(x)};
      for (int c = 0; c < 3; ++c)
        emax = std::max(emax, std::abs((hp[c] - hm[c]) / h - exact[c]));
    }
    hs.push_back(h);
    errs.push_back(emax);
  }
  CHECK(fit_slope(hs, errs) > 4.5);
}
