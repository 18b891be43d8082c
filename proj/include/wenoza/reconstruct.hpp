// Point kernels for one interface: smoothness indicators, nonlinear weights,
// and the reconstructed interface value, for every scheme family in scope.
//
// All kernels subtract the sample adjacent to the interface (w[r-1]) before
// evaluating betas, tau, and candidates, and add it back at the end.  This is
// an exact no-op in real arithmetic (the difference operators annihilate
// constants and candidate coefficients sum to one) but keeps cancellation
// error flat when the window rides on a large mean value.
#ifndef WENOZA_RECONSTRUCT_HPP_
#define WENOZA_RECONSTRUCT_HPP_

#include <span>
#include <vector>

#include "wenoza/kernel_tables.hpp"
#include "wenoza/weights.hpp"

namespace wenoza {

// Quadratic form f^T B f, clamped at zero (B is PSD analytically; roundoff
// may produce tiny negatives).
double beta_local(std::span<const double> samples,
                  const std::vector<std::vector<double>>& B);

// All indicators for a 2r-window: (beta_0..beta_{r-1}, beta_d, beta_r) where
// beta_r is the arithmetic mean of the r+1 preceding entries.
std::vector<double> beta_set(Window window, int r);

double tau_global(Window window, int r, TauVariant variant);

// Mean absolute deviation of the samples plus the floor mu0.
double descaler_mu(Window window, double mu0);

// Normalized weights: length r+1 for the central families, r for upwind.
std::vector<double> nonlinear_weights(Window window, const SchemeKind& scheme);

double reconstruct_plus(Window window, const SchemeKind& scheme);
double reconstruct_minus(Window window, const SchemeKind& scheme);

namespace detail {

// Hot-path form used by the solvers: kernel resolved once per run, then called
// per interface with raw pointers (`f` holds scheme.stencil_width() values).
using KernelFn = double (*)(const double* f, const KernelTables& tables,
                            const WeightParams& params, double dx, double* weights_out);

KernelFn resolve_kernel(const SchemeKind& scheme);

double reconstruct_point(const double* f, const KernelTables& tables,
                         const SchemeKind& scheme, double dx, double* weights_out);

}  // namespace detail

}  // namespace wenoza

#endif  // WENOZA_RECONSTRUCT_HPP_
