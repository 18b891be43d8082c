#pragma once
// Benchmark catalog: problem descriptions, initial conditions, boundary
// fills, and reference solutions.

#include <array>
#include <string>
#include <vector>

#include "wenoza/euler.hpp"
#include "wenoza/grid.hpp"

namespace wenoza {

enum class Equation { advection, burgers, buckley_leverett, euler1d, euler2d };

enum class BCKind { periodic, outflow, reflective, inflow };

std::string to_string(Equation e);
std::string to_string(BCKind k);
Equation equation_from_string(const std::string& s);
BCKind bc_from_string(const std::string& s);

struct RiemannStates {
  double rho_l = 1, u_l = 0, p_l = 1;
  double rho_r = 1, u_r = 0, p_r = 1;
  double x0 = 0;  // initial interface position
  bool operator==(const RiemannStates&) const = default;
};

// Complete, serializable description of a run setup.
struct ProblemSpec {
  std::string name = "custom";
  Equation equation = Equation::advection;
  // 1D extent (also reused as the x-extent label for 1D problems)
  double a = 0, b = 1;
  int N = 0;
  // 2D extent
  double ax = 0, bx = 1, ay = 0, by = 1;
  int Nx = 0, Ny = 0;
  double gamma = 1.4;
  double t_final = 0;
  double cfl = 0.45;
  std::string scheme = "za6";
  bool positivity = false;
  std::string ic = "riemann";  // IC selector; "riemann" uses the block below
  RiemannStates riemann;
  std::string bc = "outflow";  // periodic | outflow | reflective | preset name

  bool is_2d() const { return equation == Equation::euler2d; }
  bool operator==(const ProblemSpec&) const = default;
  void validate() const;

  std::string to_ini() const;
  static ProblemSpec from_ini(const std::string& text);
};

// Built-in presets covering every benchmark in the catalog.
std::vector<std::string> preset_names();
ProblemSpec preset(const std::string& name);
// Nearest preset by edit distance, for error messages.
std::string closest_preset(const std::string& name);

// ---- 1D setups -----------------------------------------------------------

struct Bc1D {
  BCKind left = BCKind::outflow, right = BCKind::outflow;
  std::array<double, 3> pinned_left{}, pinned_right{};
};

struct ScalarProblem {
  ProblemSpec spec;
  Grid1D grid;
  Bc1D bc;
  std::vector<double> init;  // interior point values
  double flux(double q) const;
  double dflux(double q) const;
  // Largest |f'| over the whole value interval [lo, hi], not just its ends:
  // nonconvex fluxes reach their maximal wave speed at interior values that
  // interface fans sample even when no cell holds them.
  double max_dflux(double lo, double hi) const;
};

struct Euler1DProblem {
  ProblemSpec spec;
  Grid1D grid;
  Bc1D bc;
  std::vector<EulerState1D> init;
};

ScalarProblem make_scalar_problem(const ProblemSpec& spec, int ghost);
Euler1DProblem make_euler1d_problem(const ProblemSpec& spec, int ghost);

void fill_ghosts(Field1D<double>& f, const Bc1D& bc);
void fill_ghosts(Field1D<std::array<double, 3>>& f, const Bc1D& bc);

// ---- 2D setups -----------------------------------------------------------

enum class Sweep { x, y };

// One boundary condition over a coordinate range of a side.
struct Segment2D {
  double lo = 0, hi = 0;  // y-range for left/right sides, x-range for bottom/top
  BCKind kind = BCKind::outflow;
  std::array<double, 4> pinned{};
};

struct Bc2D {
  std::vector<Segment2D> left, right, bottom, top;
  // Exact-shock tracking along the top boundary (double Mach reflection):
  // ghost cells left of s(t) = x0 + (1 + 20 t)/sqrt(3) carry the post-shock
  // state, the rest the quiescent state.
  bool moving_shock_top = false;
  double shock_x0 = 0;
  std::array<double, 4> shock_post{}, shock_pre{};
  // Dead rectangular corner (shock diffraction L-domain): cells with
  // x < corner_x and y < corner_y are outside the domain; the two exposed
  // faces are reflective walls.
  bool corner_mask = false;
  double corner_x = 0, corner_y = 0;
};

struct Euler2DProblem {
  ProblemSpec spec;
  Grid2D grid;
  Bc2D bc;
  std::vector<std::array<double, 4>> init;  // interior, row-major Nx*Ny
  bool alive(double x, double y) const {
    return !(bc.corner_mask && x < bc.corner_x && y < bc.corner_y);
  }
};

Euler2DProblem make_euler2d_problem(const ProblemSpec& spec, int ghost);

// Fills the ghost cells consumed by sweeps in the given direction (left/right
// for x, bottom/top for y), including interior wall mirrors of the masked
// corner; pure function of interior data, pinned states, and time.
void fill_ghosts(Field2D<std::array<double, 4>>& f, const Bc2D& bc, double t,
                 Sweep sweep);

// ---- reference solutions --------------------------------------------------

// Value advected from the piecewise multi-wave profile, periodic on [-1, 1].
double multiwave_exact(double x, double t);

struct RiemannSolution {
  double p_star = 0, u_star = 0;
  double rho_star_l = 0, rho_star_r = 0;
  int newton_iterations = 0;
};

// Exact self-similar solution of the 1D Euler Riemann problem; Newton
// iteration on the pressure function to 1e-12.
RiemannSolution solve_riemann(const RiemannStates& rs, double gamma);

// Primitive state (rho, u, p) at similarity coordinate xi = x/t.
std::array<double, 3> sample_riemann(const RiemannStates& rs, double gamma, double xi);

// Post-shock state for a pure right-moving shock of Mach number M entering
// quiescent gas (rho, 0, p); returns (rho, u, v, E) conserved, v = 0.
std::array<double, 4> moving_shock_state(double mach, double rho0, double p0,
                                         double gamma);

}  // namespace wenoza
