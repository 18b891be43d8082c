#include "wenoza/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "wenoza/problems.hpp"

using namespace wenoza;

namespace {

constexpr double kPi = 3.14159265358979323846;

ProblemSpec advection_spec(int N, double t_final) {
  ProblemSpec spec;
  spec.equation = Equation::advection;
  spec.a = 0.0;
  spec.b = 1.0;
  spec.N = N;
  spec.t_final = t_final;
  spec.ic = "sine_half";
  spec.bc = "periodic";
  return spec;
}

}  // namespace

TEST_CASE("options resolve scheme, cfl, positivity, and thread override") {
  ProblemSpec spec = preset("shock_diffraction");
  unsetenv("WENOZA_THREADS");
  SolveOptions opt = make_options(spec);
  CHECK(opt.scheme.name() == spec.scheme);
  CHECK(opt.cfl == spec.cfl);
  CHECK(opt.positivity == spec.positivity);
  CHECK(opt.positivity);
  CHECK(opt.positivity_params.gamma == spec.gamma);
  CHECK(opt.threads == 1);

  setenv("WENOZA_THREADS", "3", 1);
  CHECK(make_options(spec).threads == 3);
  setenv("WENOZA_THREADS", "junk", 1);
  CHECK(make_options(spec).threads == 1);
  unsetenv("WENOZA_THREADS");
}

TEST_CASE("smooth advection converges at the design spatial order") {
  // Time error is pinned below the spatial error with dt proportional to
  // dx^2, so the observed slope is that of the sixth-order reconstruction.
  std::vector<double> errs;
  for (int N : {20, 40, 80}) {
    ProblemSpec spec = advection_spec(N, 0.25);
    ScalarProblem prob = make_scalar_problem(spec, 3);
    SolveOptions opt = make_options(spec);
    const double h = 1.0 / N;
    opt.fixed_dt = 0.4 * h * h;
    ScalarResult res = solve_scalar(prob, opt);
    double emax = 0.0;
    for (int i = 0; i < N; ++i) {
      const double x = prob.grid.center(i);
      const double exact = 0.5 + std::sin(2.0 * kPi * (x - spec.t_final));
      emax = std::max(emax, std::abs(res.q[i] - exact));
    }
    errs.push_back(emax);
  }
  for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
    const double slope = std::log2(errs[k] / errs[k + 1]);
    INFO("errors ", errs[k], " -> ", errs[k + 1]);
    CHECK(slope > 5.0);
    CHECK(slope < 7.5);
  }
}

TEST_CASE("periodic advection conserves the sum and lands on the final time") {
  ProblemSpec spec;
  spec.equation = Equation::advection;
  spec.a = -1.0;
  spec.b = 1.0;
  spec.N = 100;
  spec.t_final = 0.5;
  spec.ic = "multiwave";
  spec.bc = "periodic";
  ScalarProblem prob = make_scalar_problem(spec, 3);
  SolveOptions opt = make_options(spec);

  long calls = 0;
  double last_t = 0.0;
  ProgressFn progress = [&](long step, double t, double dt) {
    ++calls;
    CHECK(step == calls);
    CHECK(dt > 0.0);
    CHECK(t > last_t);
    last_t = t;
  };
  ScalarResult res = solve_scalar(prob, opt, progress);

  CHECK(res.stats.t == doctest::Approx(spec.t_final).epsilon(1e-15));
  CHECK(res.stats.t >= spec.t_final);
  CHECK(res.stats.steps == calls);
  CHECK(last_t == res.stats.t);
  CHECK(res.stats.stage_evals == 3 * res.stats.steps);
  CHECK(res.stats.wall_seconds + 1e-6 >= res.stats.stage_seconds);

  const double sum0 = std::accumulate(prob.init.begin(), prob.init.end(), 0.0);
  const double sum1 = std::accumulate(res.q.begin(), res.q.end(), 0.0);
  CHECK(sum1 == doctest::Approx(sum0).epsilon(1e-12));
}

TEST_CASE("repeat runs are bitwise identical") {
  SUBCASE("scalar") {
    ProblemSpec spec = advection_spec(64, 0.3);
    ScalarProblem prob = make_scalar_problem(spec, 3);
    SolveOptions opt = make_options(spec);
    ScalarResult a = solve_scalar(prob, opt);
    ScalarResult b = solve_scalar(prob, opt);
    REQUIRE(a.q.size() == b.q.size());
    for (std::size_t i = 0; i < a.q.size(); ++i) CHECK(a.q[i] == b.q[i]);
    CHECK(a.stats.steps == b.stats.steps);
  }
  SUBCASE("shock tube") {
    ProblemSpec spec = preset("sod");
    spec.t_final = 0.4;
    Euler1DProblem prob = make_euler1d_problem(spec, 3);
    SolveOptions opt = make_options(spec);
    Euler1DResult a = solve_euler1d(prob, opt);
    Euler1DResult b = solve_euler1d(prob, opt);
    REQUIRE(a.q.size() == b.q.size());
    for (std::size_t i = 0; i < a.q.size(); ++i)
      for (int c = 0; c < 3; ++c) CHECK(a.q[i][c] == b.q[i][c]);
  }
}

TEST_CASE("multi-wave benchmark stays accurate after twenty periods") {
  ProblemSpec spec = preset("multiwave");
  ScalarProblem prob = make_scalar_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  ScalarResult res = solve_scalar(prob, opt);

  double l1 = 0.0, lo = 1e300, hi = -1e300;
  for (int i = 0; i < spec.N; ++i) {
    const double x = prob.grid.center(i);
    l1 += std::abs(res.q[i] - multiwave_exact(x, spec.t_final));
    lo = std::min(lo, res.q[i]);
    hi = std::max(hi, res.q[i]);
  }
  l1 /= spec.N;
  CHECK(l1 < 0.05);
  CHECK(lo > -0.1);
  CHECK(hi < 1.1);
}

TEST_CASE("nonconvex scalar flux run stays within transport bounds") {
  ProblemSpec spec = preset("buckley_leverett");
  ScalarProblem prob = make_scalar_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  ScalarResult res = solve_scalar(prob, opt);
  for (double v : res.q) {
    CHECK(v > -0.05);
    CHECK(v < 1.05);
  }
}

TEST_CASE("sod shock tube matches the exact solution") {
  ProblemSpec spec = preset("sod");
  Euler1DProblem prob = make_euler1d_problem(spec, 3);
  SolveOptions opt = make_options(spec);

  auto run_and_check = [&](const SolveOptions& o, double l1_tol) {
    Euler1DResult res = solve_euler1d(prob, o);
    CHECK(res.stats.t == doctest::Approx(spec.t_final).epsilon(1e-15));
    CHECK(res.stats.min_rho > 0.0);
    CHECK(res.stats.min_p > 0.0);
    double l1 = 0.0;
    for (int i = 0; i < spec.N; ++i) {
      const double xi =
          (prob.grid.center(i) - spec.riemann.x0) / spec.t_final;
      const auto prim = sample_riemann(spec.riemann, spec.gamma, xi);
      l1 += std::abs(res.q[i][0] - prim[0]);
      CHECK(res.q[i][0] > 0.125 * 0.95);
      CHECK(res.q[i][0] < 1.0 * 1.05);
    }
    l1 /= spec.N;
    CHECK(l1 < l1_tol);
    return res;
  };

  SUBCASE("characteristic projection with interface averaging") {
    run_and_check(opt, 0.01);
  }
  SUBCASE("arithmetic interface averaging") {
    SolveOptions o = opt;
    o.averaging = InterfaceAveraging::arithmetic;
    run_and_check(o, 0.01);
  }
  SUBCASE("component-wise splitting") {
    SolveOptions o = opt;
    o.componentwise = true;
    run_and_check(o, 0.015);
  }
  SUBCASE("positivity limiter leaves a resolved run untouched") {
    SolveOptions o = opt;
    o.positivity = true;
    Euler1DResult lim = run_and_check(o, 0.01);
    Euler1DResult base = solve_euler1d(prob, opt);
    CHECK(lim.stats.min_theta == 1.0);
    CHECK(lim.stats.limited_interfaces == 0);
    for (std::size_t i = 0; i < lim.q.size(); ++i)
      for (int c = 0; c < 3; ++c) CHECK(lim.q[i][c] == base.q[i][c]);
  }
}

TEST_CASE("initial negative pressure aborts with a positivity error") {
  ProblemSpec spec = preset("sod");
  spec.t_final = 0.1;
  Euler1DProblem prob = make_euler1d_problem(spec, 3);
  prob.init[50].E = 1e-9;  // kinetic-free cell with pressure below zero floor
  prob.init[50].mom = 1.0;
  SolveOptions opt = make_options(spec);
  CHECK_THROWS_AS(solve_euler1d(prob, opt), PositivityError);
  CHECK_THROWS_WITH_AS(solve_euler1d(prob, opt),
                       doctest::Contains("unphysical state"), PositivityError);
}

TEST_CASE("unstable fixed step aborts with a non-finite error") {
  ProblemSpec spec = preset("burgers");
  spec.t_final = 50.0;
  ScalarProblem prob = make_scalar_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  opt.fixed_dt = 1.0;  // two orders of magnitude past the stability limit
  opt.max_steps = 10000;
  CHECK_THROWS_AS(solve_scalar(prob, opt), NonFiniteError);
}

TEST_CASE("oversized step on a shock tube aborts with a solver error") {
  ProblemSpec spec = preset("sod");
  Euler1DProblem prob = make_euler1d_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  opt.fixed_dt = 0.2;  // courant number near seven
  opt.max_steps = 10000;
  CHECK_THROWS_AS(solve_euler1d(prob, opt), SolverError);
}

TEST_CASE("2d riemann quadrant run is thread-count independent") {
  ProblemSpec spec = preset("rivp3");
  spec.Nx = 40;
  spec.Ny = 40;
  spec.t_final = 0.05;
  Euler2DProblem prob = make_euler2d_problem(spec, 3);

  SolveOptions opt = make_options(spec);
  opt.threads = 1;
  Euler2DResult single = solve_euler2d(prob, opt);
  CHECK(single.stats.t == doctest::Approx(spec.t_final).epsilon(1e-15));
  CHECK(single.stats.min_rho > 0.0);
  CHECK(single.stats.min_p > 0.0);

  Euler2DResult again = solve_euler2d(prob, opt);
  REQUIRE(again.q.size() == single.q.size());
  for (std::size_t i = 0; i < single.q.size(); ++i)
    for (int c = 0; c < 4; ++c) CHECK(again.q[i][c] == single.q[i][c]);

  opt.threads = 3;
  Euler2DResult pooled = solve_euler2d(prob, opt);
  REQUIRE(pooled.q.size() == single.q.size());
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < single.q.size(); ++i)
    for (int c = 0; c < 4; ++c)
      if (pooled.q[i][c] != single.q[i][c]) ++mismatches;
  CHECK(mismatches == 0);
  CHECK(pooled.stats.steps == single.stats.steps);
}

TEST_CASE("double mach reflection miniature run stays bounded") {
  ProblemSpec spec = preset("dmr");
  spec.Nx = 120;
  spec.Ny = 30;
  spec.t_final = 0.05;
  Euler2DProblem prob = make_euler2d_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  Euler2DResult res = solve_euler2d(prob, opt);
  CHECK(res.stats.min_rho > 0.05);
  CHECK(res.stats.max_rho < 25.0);
  CHECK(res.stats.min_p > 0.0);
  for (const auto& q : res.q)
    for (int c = 0; c < 4; ++c) CHECK(std::isfinite(q[c]));
}

TEST_CASE("shock diffraction miniature run keeps positivity with the limiter") {
  ProblemSpec spec = preset("shock_diffraction");
  spec.Nx = 52;
  spec.Ny = 44;
  spec.t_final = 0.2;
  Euler2DProblem prob = make_euler2d_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  REQUIRE(opt.positivity);

  Euler2DResult res = solve_euler2d(prob, opt);
  CHECK(res.stats.min_rho > 0.0);
  CHECK(res.stats.min_p > 0.0);
  CHECK(res.stats.min_theta > 0.0);
  CHECK(res.stats.min_theta <= 1.0);

  // Cells behind the corner are outside the domain and must stay untouched.
  for (int j = 0; j < spec.Ny; ++j)
    for (int i = 0; i < spec.Nx; ++i) {
      const double x = prob.grid.xc(i), y = prob.grid.yc(j);
      if (!prob.alive(x, y)) {
        const auto& q = res.q[static_cast<std::size_t>(j) * spec.Nx + i];
        const auto& q0 = prob.init[static_cast<std::size_t>(j) * spec.Nx + i];
        for (int c = 0; c < 4; ++c) CHECK(q[c] == q0[c]);
      }
    }

  SolveOptions opt2 = opt;
  opt2.threads = 2;
  Euler2DResult pooled = solve_euler2d(prob, opt2);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < res.q.size(); ++i)
    for (int c = 0; c < 4; ++c)
      if (pooled.q[i][c] != res.q[i][c]) ++mismatches;
  CHECK(mismatches == 0);
}

TEST_CASE("interacting blast waves survive reflective walls") {
  ProblemSpec spec = preset("blast");
  REQUIRE(spec.positivity);  // the collision needs the flux limiter
  Euler1DProblem prob = make_euler1d_problem(spec, 3);
  SolveOptions opt = make_options(spec);
  Euler1DResult res = solve_euler1d(prob, opt);
  CHECK(res.stats.t == doctest::Approx(spec.t_final).epsilon(1e-15));
  CHECK(res.stats.min_rho > 0.0);
  CHECK(res.stats.min_p > 0.0);
  CHECK(res.stats.limited_interfaces > 0);
  CHECK(res.stats.min_theta < 1.0);
  double rho_max = 0.0;
  for (const auto& q : res.q) rho_max = std::max(rho_max, q[0]);
  CHECK(rho_max > 5.0);  // the collision shell
  CHECK(rho_max < 8.0);
}
