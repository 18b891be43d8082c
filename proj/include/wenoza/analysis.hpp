#pragma once
// Scheme analysis instruments: convergence-order studies at critical points,
// approximate dispersion/dissipation curves, weight-deviation decay, error
// norms, and run-timing comparison tables.

#include <span>
#include <string>
#include <vector>

#include "wenoza/solver.hpp"
#include "wenoza/weights.hpp"

namespace wenoza {

struct ConvergenceRow {
  int inv_dx = 0;
  double error = 0.0;  // max |operator(f) - f'| near the critical point
  double order = 0.0;  // log2 ratio to the previous row; 0 for the first row
};

// Applies the scheme's flux-difference derivative to f(x) = x^(n_cp+1)
// e^(0.75 x) on [-1, 1] node grids of spacing 1/inv_dx and reports the
// largest error within |x| <= radius of the order-n_cp critical point at the
// origin.  The scheme's weight parameters (power p, variable-sensitivity
// exponent) are taken as passed.
std::vector<ConvergenceRow> critical_point_study(
    int n_cp, const SchemeKind& scheme, const std::vector<int>& inv_dx,
    double radius = 0.125);

struct AdrPoint {
  double phi = 0.0;  // reduced wavenumber in (0, pi]
  double re = 0.0;   // dispersion: Re of the modified wavenumber
  double im = 0.0;   // dissipation: Im of the modified wavenumber
};

// Approximate dispersion relation: advects single complex Fourier modes of
// the given amplitude on a periodic grid of 2*n_samples cells for one very
// small time step (dt = 1e-6 dx), applying the scheme's formulas verbatim to
// complex samples so the harmonic sees spatially uniform nonlinear weights,
// and extracts the modified wavenumber Phi = i ln(u_hat(dt)/u_hat(0)) dx/dt
// per mode.  phi_k = pi k / n_samples.
std::vector<AdrPoint> adr(const SchemeKind& scheme, int n_samples,
                          double amplitude = 1.0);

// Exact Fourier symbol of the linear scheme on the full window (the target
// the nonlinear weights approach on smooth data).
AdrPoint linear_scheme_symbol(const SchemeKind& scheme, double phi);

struct ErrorNorms {
  double l1 = 0.0;    // mean absolute error
  double l2 = 0.0;    // root-mean-square error
  double linf = 0.0;  // largest absolute error
  std::vector<double> pointwise;
};
ErrorNorms error_norms(std::span<const double> numeric,
                       std::span<const double> reference);

struct WeightDeviationRow {
  int inv_dx = 0;
  double max_dev = 0.0;  // max over interfaces and substencils of |w_k - d_k|
};

// Largest nonlinear-weight deviation from the linear weights on smooth sine
// samples, per resolution; the decay slope certifies the convergence
// condition for the design order.
std::vector<WeightDeviationRow> weight_deviation_study(
    const SchemeKind& scheme, const std::vector<int>& inv_dx);

// Least-squares slope of log(value) against log(1/inv_dx).
double loglog_slope(std::span<const int> inv_dx, std::span<const double> values);

struct TimingRow {
  std::string scheme;
  long steps = 0;
  double wall_seconds = 0.0;
  double stage_seconds = 0.0;
  long stage_evals = 0;
  double per_stage_ms = 0.0;
  double speedup_pct = 0.0;  // (wall - wall_ref)/wall_ref * 100; negative = faster
};

// Summarizes runs of the same problem under different schemes against the
// named reference scheme (which reports 0%).
std::vector<TimingRow> timing_report(
    const std::vector<std::pair<std::string, RunStats>>& runs,
    const std::string& reference);

}  // namespace wenoza
