#pragma once
// Interface numerical fluxes: global Lax-Friedrichs splitting combined with
// one-sided reconstruction, scalar or characteristic-wise for Euler.

#include <array>
#include <span>

#include "wenoza/euler.hpp"
#include "wenoza/reconstruct.hpp"

namespace wenoza {

enum class InterfaceAveraging { roe, arithmetic };

// A scheme resolved once per run: kernel function pointer, frozen coefficient
// tables, and weight parameters, callable per interface with raw pointers.
//
// Flux assembly always passes the 2r-cell union window centered on the
// interface (cells j-r .. j+r-1).  Central schemes reconstruct both one-sided
// values from the full window; upwind schemes use its first 2r-1 cells for
// the left-biased value and its last 2r-1 cells (minus_off = 1) for the
// right-biased one.
struct PreparedScheme {
  SchemeKind kind;
  const KernelTables* tables = nullptr;
  detail::KernelFn kernel = nullptr;
  int width = 0;      // samples consumed by one reconstruction
  int window = 0;     // union window size, always 2r
  int minus_off = 0;  // offset of the right-biased window within the union
  double dx = 1.0;    // only consulted by the variable-epsilon option

  static PreparedScheme make(const SchemeKind& k, double dx = 1.0) {
    PreparedScheme s;
    s.kind = k;
    s.kind.params.validate();
    s.tables = &kernel_tables(k.r);
    s.kernel = detail::resolve_kernel(k);
    s.width = k.stencil_width();
    s.window = 2 * k.r;
    s.minus_off = s.window - s.width;
    s.dx = dx;
    return s;
  }

  double plus(const double* w) const {
    return kernel(w, *tables, kind.params, dx, nullptr);
  }
  double minus(const double* w) const {
    double rev[2 * kMaxKernelR];
    for (int i = 0; i < width; ++i) rev[i] = w[width - 1 - i];
    return kernel(rev, *tables, kind.params, dx, nullptr);
  }
};

// Scalar conservation law: q and f hold the s.window (= 2r) samples centered
// on the interface; alpha is the global max of |f'(Q)|.
inline double scalar_interface_flux(const double* q, const double* f,
                                    const PreparedScheme& s, double alpha) {
  double fp[2 * kMaxKernelR], fm[2 * kMaxKernelR];
  const int o = s.minus_off;
  for (int i = 0; i < s.width; ++i) {
    fp[i] = 0.5 * (f[i] + alpha * q[i]);
    fm[i] = 0.5 * (f[o + i] - alpha * q[o + i]);
  }
  return s.plus(fp) + s.minus(fm);
}

// Characteristic-wise flux: project the window of states and fluxes onto the
// interface eigensystem, split each field with its wave family's global
// alpha, reconstruct one-sided, sum, and project back.
template <int M>
inline std::array<double, M> characteristic_flux(
    const std::array<double, M>* q, const std::array<double, M>* f,
    const EigenSystem<M>& es, const std::array<double, M>& alpha,
    const PreparedScheme& s) {
  double proj_q[2 * kMaxKernelR], proj_f[2 * kMaxKernelR];
  double fp[2 * kMaxKernelR], fm[2 * kMaxKernelR];
  const int o = s.minus_off;
  std::array<double, M> hc;
  for (int j = 0; j < M; ++j) {
    const std::array<double, M>& lj = es.left[j];
    const double aj = alpha[j];
    for (int i = 0; i < s.window; ++i) {
      double wq = 0.0, wf = 0.0;
      for (int c = 0; c < M; ++c) {
        wq += lj[c] * q[i][c];
        wf += lj[c] * f[i][c];
      }
      proj_q[i] = wq;
      proj_f[i] = wf;
    }
    for (int i = 0; i < s.width; ++i) {
      fp[i] = 0.5 * (proj_f[i] + aj * proj_q[i]);
      fm[i] = 0.5 * (proj_f[o + i] - aj * proj_q[o + i]);
    }
    hc[j] = s.plus(fp) + s.minus(fm);
  }
  std::array<double, M> h{};
  for (int i = 0; i < M; ++i) {
    double acc = 0.0;
    for (int j = 0; j < M; ++j) acc += es.right[i][j] * hc[j];
    h[i] = acc;
  }
  return h;
}

// Component-wise fallback: each conserved component split with the single
// global alpha and reconstructed independently.
template <int M>
inline std::array<double, M> componentwise_flux(const std::array<double, M>* q,
                                                const std::array<double, M>* f,
                                                double alpha,
                                                const PreparedScheme& s) {
  double fp[2 * kMaxKernelR], fm[2 * kMaxKernelR];
  const int o = s.minus_off;
  std::array<double, M> h{};
  for (int c = 0; c < M; ++c) {
    for (int i = 0; i < s.width; ++i) {
      fp[i] = 0.5 * (f[i][c] + alpha * q[i][c]);
      fm[i] = 0.5 * (f[o + i][c] - alpha * q[o + i][c]);
    }
    h[c] = s.plus(fp) + s.minus(fm);
  }
  return h;
}

// Convenience wrapper for the 1D Euler system taking raw states; computes
// fluxes and the Roe (or arithmetic) eigensystem of the middle pair.
std::array<double, 3> characteristic_interface_flux(
    std::span<const EulerState1D> states, const SchemeKind& scheme,
    const std::array<double, 3>& alpha, double gamma,
    InterfaceAveraging averaging = InterfaceAveraging::roe,
    bool guard_abs = false);

std::array<double, 3> componentwise_interface_flux(
    std::span<const EulerState1D> states, const SchemeKind& scheme,
    double alpha, double gamma);

}  // namespace wenoza
