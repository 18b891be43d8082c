#include "wenoza/reconstruct.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "wenoza/scheme_tables.hpp"

namespace wenoza {

namespace {

const std::array<std::array<double, kMaxKernelR>, 4> kZTauCombos = {{
    {1.0, -1.0},                  // r=2: |b0 - b1|
    {1.0, 0.0, -1.0},             // r=3: |b0 - b2|
    {1.0, -1.0, -1.0, 1.0},       // r=4: |b0 - b1 - b2 + b3|
    {1.0, 2.0, -6.0, 2.0, 1.0},   // r=5: |b0 + 2b1 - 6b2 + 2b3 + b4|
}};

KernelTables freeze_tables(int r) {
  const SchemeTables ex = make_scheme_tables(r);
  KernelTables t{};
  t.r = r;
  for (int i = 0; i < 2 * r; ++i) {
    t.c_full[i] = to_double(ex.c_full[i]);
    t.c_tau[i] = to_double(ex.c_tau[i]);
    t.c_tau_prime[i] = to_double(ex.c_tau_prime[i]);
  }
  for (int i = 0; i < 2 * r - 1; ++i) t.c_full_upwind[i] = to_double(ex.c_full_upwind[i]);
  for (int k = 0; k <= r; ++k) {
    t.d_central[k] = to_double(ex.d_central[k]);
    for (int j = 0; j < r; ++j) t.c_sub[k][j] = to_double(ex.c_sub[k][j]);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) t.B[k][i][j] = to_double(ex.B[k][i][j]);
  }
  for (int k = 0; k < r; ++k) t.d_upwind[k] = to_double(ex.d_upwind[k]);
  if (r >= 2 && r <= 5) {
    t.z_tau_combo = kZTauCombos[r - 2];
    t.z_supported = true;
  }
  return t;
}

inline double pow_pq(double x, double e) {
  if (e == 1.0) return x;
  if (e == 2.0) return x * x;
  if (e == 1.5) return x * std::sqrt(x);
  return std::pow(x, e);
}

// Smoothness ratio Gamma = (tau / (beta + floor))^p, hardened against the
// degenerate eps=0 configuration: tau==0 short-circuits to the exact limit,
// and the ratio is capped so (L+Gamma)^q stays finite for any q.
inline double gamma_ratio(double tau, double beta, double floor_term, double p) {
  if (tau == 0.0) return 0.0;
  double denom = beta + floor_term;
  if (denom < DBL_MIN) denom = DBL_MIN;
  const double g = pow_pq(tau / denom, p);
  return g < 1e60 ? g : 1e60;
}

inline double mean_abs_dev(const double* g, int n) {
  double mean = 0.0;
  for (int i = 0; i < n; ++i) mean += g[i];
  mean /= n;
  double mad = 0.0;
  for (int i = 0; i < n; ++i) mad += std::abs(g[i] - mean);
  return mad / n;
}

inline double effective_floor(const WeightParams& wp, const double* g, int n, double dx) {
  double eps = wp.eps;
  if (wp.eps_variable_exponent) eps = std::pow(dx, *wp.eps_variable_exponent);
  if (!wp.affine_invariant) return eps;
  const double mu = mean_abs_dev(g, n) + wp.mu0;
  return eps * mu * mu;
}

template <int R>
double za_core(const double* f, const KernelTables& t, const WeightParams& wp, double dx,
               double* w_out) {
  double g[2 * R];
  const double shift = f[R - 1];
  for (int i = 0; i < 2 * R; ++i) g[i] = f[i] - shift;

  // Upwind indicators k=0..R-1 and the local downwind one at k=R; the
  // downwind candidate is then weighted by the arithmetic mean of all R+1.
  double beta[R + 1];
  double beta_sum = 0.0;
  for (int k = 0; k <= R; ++k) {
    const double* w = g + k;
    double b = 0.0;
    for (int i = 0; i < R; ++i) {
      double row = 0.0;
      for (int j = 0; j < R; ++j) row += t.B[k][i][j] * w[j];
      b += w[i] * row;
    }
    beta[k] = b > 0.0 ? b : 0.0;
    beta_sum += beta[k];
  }
  beta[R] = beta_sum / (R + 1);

  double s1 = 0.0;
  for (int i = 0; i < 2 * R; ++i) s1 += t.c_tau[i] * g[i];
  double tau = s1 * s1;
  if (wp.tau_variant == TauVariant::tau_prime) {
    double s2 = 0.0;
    for (int i = 0; i < 2 * R; ++i) s2 += t.c_tau_prime[i] * g[i];
    tau = (13.0 / 12.0) * tau + s2 * s2;
  }

  const double floor_term = effective_floor(wp, g, 2 * R, dx);
  double alpha[R + 1];
  double asum = 0.0;
  for (int k = 0; k <= R; ++k) {
    const double gamma = gamma_ratio(tau, beta[k], floor_term, wp.p);
    alpha[k] = t.d_central[k] * pow_pq(wp.L + gamma, wp.q);
    asum += alpha[k];
  }
  const double inv = 1.0 / asum;
  double value = 0.0;
  for (int k = 0; k <= R; ++k) {
    const double w = alpha[k] * inv;
    if (w_out) w_out[k] = w;
    double cand = 0.0;
    for (int j = 0; j < R; ++j) cand += t.c_sub[k][j] * g[k + j];
    value += w * cand;
  }
  return value + shift;
}

template <int R>
double z_core(const double* f, const KernelTables& t, const WeightParams& wp, double dx,
              double* w_out) {
  double g[2 * R - 1];
  const double shift = f[R - 1];
  for (int i = 0; i < 2 * R - 1; ++i) g[i] = f[i] - shift;

  double beta[R];
  for (int k = 0; k < R; ++k) {
    const double* w = g + k;
    double b = 0.0;
    for (int i = 0; i < R; ++i) {
      double row = 0.0;
      for (int j = 0; j < R; ++j) row += t.B[k][i][j] * w[j];
      b += w[i] * row;
    }
    beta[k] = b > 0.0 ? b : 0.0;
  }

  double combo = 0.0;
  for (int k = 0; k < R; ++k) combo += t.z_tau_combo[k] * beta[k];
  const double tau = std::abs(combo);

  const double floor_term = effective_floor(wp, g, 2 * R - 1, dx);
  double alpha[R];
  double asum = 0.0;
  for (int k = 0; k < R; ++k) {
    const double gamma = gamma_ratio(tau, beta[k], floor_term, wp.p);
    alpha[k] = t.d_upwind[k] * pow_pq(wp.L + gamma, wp.q);
    asum += alpha[k];
  }
  const double inv = 1.0 / asum;
  double value = 0.0;
  for (int k = 0; k < R; ++k) {
    const double w = alpha[k] * inv;
    if (w_out) w_out[k] = w;
    double cand = 0.0;
    for (int j = 0; j < R; ++j) cand += t.c_sub[k][j] * g[k + j];
    value += w * cand;
  }
  return value + shift;
}

template <int R>
double linear_central_core(const double* f, const KernelTables& t, const WeightParams&,
                           double, double*) {
  const double shift = f[R - 1];
  double v = 0.0;
  for (int i = 0; i < 2 * R; ++i) v += t.c_full[i] * (f[i] - shift);
  return v + shift;
}

template <int R>
double linear_upwind_core(const double* f, const KernelTables& t, const WeightParams&,
                          double, double*) {
  const double shift = f[R - 1];
  double v = 0.0;
  for (int i = 0; i < 2 * R - 1; ++i) v += t.c_full_upwind[i] * (f[i] - shift);
  return v + shift;
}

using KernelFn = detail::KernelFn;

template <template <int> class Pick>
KernelFn pick_r(int r) {
  switch (r) {
    case 2: return Pick<2>::fn;
    case 3: return Pick<3>::fn;
    case 4: return Pick<4>::fn;
    case 5: return Pick<5>::fn;
    case 6: return Pick<6>::fn;
    case 7: return Pick<7>::fn;
    case 8: return Pick<8>::fn;
    default: throw std::invalid_argument("unsupported stencil half-width r");
  }
}

template <int R>
struct PickZa {
  static constexpr KernelFn fn = &za_core<R>;
};
template <int R>
struct PickZ {
  static constexpr KernelFn fn = &z_core<R>;
};
template <int R>
struct PickCt {
  static constexpr KernelFn fn = &linear_central_core<R>;
};
template <int R>
struct PickLu {
  static constexpr KernelFn fn = &linear_upwind_core<R>;
};

KernelFn resolve_kernel_impl(const SchemeKind& s) {
  switch (s.family) {
    case SchemeFamily::weno_za:
      return pick_r<PickZa>(s.r);
    case SchemeFamily::weno_z:
      if (s.r < 2 || s.r > 5)
        throw std::invalid_argument("upwind Z baseline supported for orders 3..9 only");
      return pick_r<PickZ>(s.r);
    case SchemeFamily::linear_central:
      return pick_r<PickCt>(s.r);
    case SchemeFamily::linear_upwind:
      return pick_r<PickLu>(s.r);
  }
  throw std::logic_error("unreachable scheme family");
}

void check_window(const Window& w, int needed) {
  if (static_cast<int>(w.samples.size()) != needed)
    throw std::invalid_argument("window length " + std::to_string(w.samples.size()) +
                                " does not match stencil width " + std::to_string(needed));
}

}  // namespace

const KernelTables& kernel_tables(int r) {
  if (r < 2 || r > kMaxKernelR)
    throw std::invalid_argument("kernel tables available for r in [2," +
                                std::to_string(kMaxKernelR) + "]");
  static const std::vector<KernelTables> cache = [] {
    std::vector<KernelTables> c;
    for (int rr = 2; rr <= kMaxKernelR; ++rr) c.push_back(freeze_tables(rr));
    return c;
  }();
  return cache[r - 2];
}

std::string SchemeKind::name() const {
  switch (family) {
    case SchemeFamily::weno_za: return "za" + std::to_string(order());
    case SchemeFamily::weno_z: return "z" + std::to_string(order());
    case SchemeFamily::linear_central: return "ct" + std::to_string(order());
    case SchemeFamily::linear_upwind: return "lu" + std::to_string(order());
  }
  return "?";
}

SchemeKind SchemeKind::from_name(std::string_view name) {
  SchemeKind s;
  std::string_view digits;
  if (name.starts_with("za")) {
    s.family = SchemeFamily::weno_za;
    digits = name.substr(2);
  } else if (name.starts_with("z")) {
    s.family = SchemeFamily::weno_z;
    digits = name.substr(1);
  } else if (name.starts_with("ct")) {
    s.family = SchemeFamily::linear_central;
    digits = name.substr(2);
  } else if (name.starts_with("lu")) {
    s.family = SchemeFamily::linear_upwind;
    digits = name.substr(2);
  } else {
    throw std::invalid_argument("unknown scheme name: " + std::string(name));
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("malformed scheme name: " + std::string(name));
  const int order = std::atoi(std::string(digits).c_str());
  const bool upwind = s.is_upwind();
  if (upwind ? (order % 2 != 1) : (order % 2 != 0))
    throw std::invalid_argument("scheme order parity mismatch in name: " + std::string(name));
  s.r = upwind ? (order + 1) / 2 : order / 2;
  if (s.r < 2 || s.r > kMaxKernelR)
    throw std::invalid_argument("scheme order out of supported range: " + std::string(name));
  if (s.family == SchemeFamily::weno_z) {
    if (s.r > 5)
      throw std::invalid_argument("upwind Z baseline supported for orders 3..9 only");
    s.params.p = (s.r <= 3) ? 1.0 : 2.0;
  }
  return s;
}

double beta_local(std::span<const double> samples,
                  const std::vector<std::vector<double>>& B) {
  const std::size_t n = samples.size();
  if (B.size() != n) throw std::invalid_argument("beta_local: dimension mismatch");
  double b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (B[i].size() != n) throw std::invalid_argument("beta_local: dimension mismatch");
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += B[i][j] * samples[j];
    b += samples[i] * row;
  }
  return b > 0.0 ? b : 0.0;
}

std::vector<double> beta_set(Window window, int r) {
  check_window(window, 2 * r);
  const KernelTables& t = kernel_tables(r);
  const double shift = window.samples[r - 1];
  std::vector<double> g(2 * r);
  for (int i = 0; i < 2 * r; ++i) g[i] = window.samples[i] - shift;

  std::vector<double> out(r + 2, 0.0);
  double sum = 0.0;
  for (int k = 0; k <= r; ++k) {
    double b = 0.0;
    for (int i = 0; i < r; ++i) {
      double row = 0.0;
      for (int j = 0; j < r; ++j) row += t.B[k][i][j] * g[k + j];
      b += g[k + i] * row;
    }
    b = b > 0.0 ? b : 0.0;
    out[k] = b;  // k==r lands in the beta_d slot
    sum += b;
  }
  out[r + 1] = sum / (r + 1);
  return out;
}

double tau_global(Window window, int r, TauVariant variant) {
  check_window(window, 2 * r);
  const KernelTables& t = kernel_tables(r);
  const double shift = window.samples[r - 1];
  double s1 = 0.0;
  for (int i = 0; i < 2 * r; ++i) s1 += t.c_tau[i] * (window.samples[i] - shift);
  if (variant == TauVariant::tau) return s1 * s1;
  double s2 = 0.0;
  for (int i = 0; i < 2 * r; ++i) s2 += t.c_tau_prime[i] * (window.samples[i] - shift);
  return (13.0 / 12.0) * s1 * s1 + s2 * s2;
}

double descaler_mu(Window window, double mu0) {
  if (window.samples.empty()) throw std::invalid_argument("descaler_mu: empty window");
  return mean_abs_dev(window.samples.data(), static_cast<int>(window.samples.size())) + mu0;
}

std::vector<double> nonlinear_weights(Window window, const SchemeKind& scheme) {
  scheme.params.validate();
  check_window(window, scheme.stencil_width());
  const KernelTables& t = kernel_tables(scheme.r);
  const int count = scheme.is_upwind() ? scheme.r : scheme.r + 1;
  std::vector<double> w(count, 0.0);
  if (scheme.is_linear()) {
    for (int k = 0; k < count; ++k)
      w[k] = scheme.is_upwind() ? t.d_upwind[k] : t.d_central[k];
    return w;
  }
  resolve_kernel_impl(scheme)(window.samples.data(), t, scheme.params, window.dx, w.data());
  return w;
}

double reconstruct_plus(Window window, const SchemeKind& scheme) {
  scheme.params.validate();
  check_window(window, scheme.stencil_width());
  return resolve_kernel_impl(scheme)(window.samples.data(), kernel_tables(scheme.r),
                                     scheme.params, window.dx, nullptr);
}

double reconstruct_minus(Window window, const SchemeKind& scheme) {
  scheme.params.validate();
  const int n = scheme.stencil_width();
  check_window(window, n);
  double rev[2 * kMaxKernelR];
  for (int i = 0; i < n; ++i) rev[i] = window.samples[n - 1 - i];
  return resolve_kernel_impl(scheme)(rev, kernel_tables(scheme.r), scheme.params,
                                     window.dx, nullptr);
}

namespace detail {

KernelFn resolve_kernel(const SchemeKind& scheme) { return resolve_kernel_impl(scheme); }

double reconstruct_point(const double* f, const KernelTables& tables,
                         const SchemeKind& scheme, double dx, double* weights_out) {
  return resolve_kernel_impl(scheme)(f, tables, scheme.params, dx, weights_out);
}

}  // namespace detail

}  // namespace wenoza
