#pragma once
// Time-marching drivers: method-of-lines with one-sided weighted
// reconstruction of split fluxes, characteristic projection for Euler,
// third-order TVD Runge-Kutta, optional positivity limiting, and
// deterministic multi-threaded 2D sweeps.

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wenoza/interface_flux.hpp"
#include "wenoza/limiter.hpp"
#include "wenoza/problems.hpp"

namespace wenoza {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// A non-finite value appeared in the solution (CLI exit code 3).
struct NonFiniteError : SolverError {
  using SolverError::SolverError;
};
// Positivity of density or pressure was lost, or could not be restored by
// the flux limiter (CLI exit code 4).
struct PositivityError : SolverError {
  using SolverError::SolverError;
};

struct SolveOptions {
  SchemeKind scheme = SchemeKind::from_name("za6");
  double cfl = 0.45;
  bool positivity = false;
  PositivityParams positivity_params{};
  bool componentwise = false;  // characteristic projection by default
  InterfaceAveraging averaging = InterfaceAveraging::roe;
  bool guard_abs_sound_speed = false;
  int threads = 1;  // worker threads for 2D sweeps (results are thread-count
                    // independent, bit for bit)
  long max_steps = 500000000;
  std::optional<double> fixed_dt;
};

// Resolve options from a problem description: scheme name, CFL number,
// positivity flag, and the WENOZA_THREADS environment override.
SolveOptions make_options(const ProblemSpec& spec);

struct RunStats {
  long steps = 0;
  double t = 0.0;
  double wall_seconds = 0.0;   // whole time loop
  double stage_seconds = 0.0;  // accumulated right-hand-side evaluations
  long stage_evals = 0;
  // positivity limiter activity (Euler runs with the limiter on)
  double min_theta = 1.0;
  long limited_interfaces = 0;
  // extrema over every step and cell, for stability reporting
  double min_rho = std::numeric_limits<double>::infinity();
  double min_p = std::numeric_limits<double>::infinity();
  double max_rho = -std::numeric_limits<double>::infinity();
};

using ProgressFn = std::function<void(long step, double t, double dt)>;

// Called after every accepted step with a flat view of the conserved state:
// scalar u[i]; 1D Euler (rho, rho u, E) with stride 3; 2D Euler
// (rho, rho u, rho v, E) row-major with stride 4.
using SnapshotFn = std::function<void(long step, double t, std::span<const double> q)>;

struct ScalarResult {
  std::vector<double> q;  // interior cell values at the final time
  RunStats stats;
};
ScalarResult solve_scalar(const ScalarProblem& prob, const SolveOptions& opt,
                          const ProgressFn& progress = {},
                          const SnapshotFn& snapshot = {});

struct Euler1DResult {
  std::vector<std::array<double, 3>> q;  // (rho, rho u, E) per cell
  RunStats stats;
};
Euler1DResult solve_euler1d(const Euler1DProblem& prob, const SolveOptions& opt,
                            const ProgressFn& progress = {},
                            const SnapshotFn& snapshot = {});

struct Euler2DResult {
  std::vector<std::array<double, 4>> q;  // (rho, rho u, rho v, E), row-major
  RunStats stats;
};
Euler2DResult solve_euler2d(const Euler2DProblem& prob, const SolveOptions& opt,
                            const ProgressFn& progress = {},
                            const SnapshotFn& snapshot = {});

}  // namespace wenoza
