#include "wenoza/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "wenoza/interface_flux.hpp"
#include "wenoza/reconstruct.hpp"

namespace wenoza {

namespace {

// Test function with a critical point of order n_cp at the origin: the first
// n_cp derivatives vanish there, the (n_cp+1)-th does not.
double cp_f(int n_cp, double x) {
  return std::pow(x, n_cp + 1) * std::exp(0.75 * x);
}
double cp_df(int n_cp, double x) {
  return std::pow(x, n_cp) * std::exp(0.75 * x) * ((n_cp + 1) + 0.75 * x);
}

using Cx = std::complex<double>;

Cx cplx_pow(Cx z, double e) { return e == 1.0 ? z : std::pow(z, e); }

// Formal complex extension of the reconstruction kernels: the real formulas
// applied verbatim to complex samples, with clamps dropped and moduli taken
// only where the real formula itself takes an absolute value.  On a pure
// harmonic every window is a complex multiple of the same pattern, the
// weights are scale-invariant, and the scheme acts as an exactly linear
// operator on the mode -- the standard construction for dispersion analysis
// of nonlinear schemes.
Cx cplx_reconstruct(const Cx* f, const SchemeKind& scheme, double dx) {
  const KernelTables& t = kernel_tables(scheme.r);
  const int r = scheme.r;
  const int width = scheme.stencil_width();
  const Cx shift = f[r - 1];
  Cx g[2 * kMaxKernelR];
  for (int i = 0; i < width; ++i) g[i] = f[i] - shift;

  if (scheme.is_linear()) {
    const double* c = scheme.is_upwind() ? t.c_full_upwind.data() : t.c_full.data();
    Cx v = 0.0;
    for (int i = 0; i < width; ++i) v += c[i] * g[i];
    return v + shift;
  }

  const WeightParams& wp = scheme.params;
  const bool upwind = scheme.is_upwind();
  const int n_weights = upwind ? r : r + 1;
  Cx beta[kMaxKernelR + 1];
  Cx beta_sum = 0.0;
  for (int k = 0; k < (upwind ? r : r + 1); ++k) {
    const Cx* w = g + k;
    Cx b = 0.0;
    for (int i = 0; i < r; ++i) {
      Cx row = 0.0;
      for (int j = 0; j < r; ++j) row += t.B[k][i][j] * w[j];
      b += w[i] * row;
    }
    beta[k] = b;
    beta_sum += b;
  }

  Cx tau;
  if (upwind) {
    Cx combo = 0.0;
    for (int k = 0; k < r; ++k) combo += t.z_tau_combo[k] * beta[k];
    tau = std::abs(combo);
  } else {
    beta[r] = beta_sum / static_cast<double>(r + 1);
    Cx s1 = 0.0;
    for (int i = 0; i < 2 * r; ++i) s1 += t.c_tau[i] * g[i];
    tau = s1 * s1;
    if (wp.tau_variant == TauVariant::tau_prime) {
      Cx s2 = 0.0;
      for (int i = 0; i < 2 * r; ++i) s2 += t.c_tau_prime[i] * g[i];
      tau = (13.0 / 12.0) * tau + s2 * s2;
    }
  }

  double eps = wp.eps;
  if (wp.eps_variable_exponent) eps = std::pow(dx, *wp.eps_variable_exponent);
  if (wp.affine_invariant) {
    Cx mean = 0.0;
    for (int i = 0; i < width; ++i) mean += g[i];
    mean /= static_cast<double>(width);
    double mad = 0.0;
    for (int i = 0; i < width; ++i) mad += std::abs(g[i] - mean);
    const double mu = mad / width + wp.mu0;
    eps *= mu * mu;
  }

  const double* d = upwind ? t.d_upwind.data() : t.d_central.data();
  Cx alpha[kMaxKernelR + 1];
  Cx asum = 0.0;
  for (int k = 0; k < n_weights; ++k) {
    Cx gamma = tau == Cx(0.0) ? Cx(0.0) : cplx_pow(tau / (beta[k] + eps), wp.p);
    if (std::abs(gamma) > 1e60) gamma *= 1e60 / std::abs(gamma);
    alpha[k] = d[k] * cplx_pow(wp.L + gamma, wp.q);
    asum += alpha[k];
  }
  Cx value = 0.0;
  for (int k = 0; k < n_weights; ++k) {
    Cx cand = 0.0;
    for (int j = 0; j < r; ++j) cand += t.c_sub[k][j] * g[k + j];
    value += (alpha[k] / asum) * cand;
  }
  return value + shift;
}

}  // namespace

std::vector<ConvergenceRow> critical_point_study(int n_cp,
                                                 const SchemeKind& scheme,
                                                 const std::vector<int>& inv_dx,
                                                 double radius) {
  if (n_cp < 1) throw std::invalid_argument("critical_point_study: n_cp >= 1");
  std::vector<ConvergenceRow> rows;
  rows.reserve(inv_dx.size());
  const int r = scheme.r;
  for (int m : inv_dx) {
    if (m < 4 * r) throw std::invalid_argument("critical_point_study: grid too coarse");
    const double h = 1.0 / m;
    const PreparedScheme sc = PreparedScheme::make(scheme, h);
    // Nodes x_i = -1 + i h, i = 0..2m; only those within `radius` of the
    // critical point are scored, so every needed window stays interior.
    const int i_lo = std::max(r, m - static_cast<int>(radius * m));
    const int i_hi = std::min(2 * m - r, m + static_cast<int>(radius * m));
    std::vector<double> f(2 * m + 1);
    for (int i = 0; i <= 2 * m; ++i) f[i] = cp_f(n_cp, -1.0 + i * h);
    // hhat[i - (i_lo - 1)] approximates the flux primitive at x_i + h/2; the
    // left-biased window for that interface starts at node i - r + 1.
    std::vector<double> hhat(i_hi - i_lo + 2);
    for (int i = i_lo - 1; i <= i_hi; ++i)
      hhat[i - (i_lo - 1)] = sc.plus(&f[i - r + 1]);
    double err = 0.0;
    for (int i = i_lo; i <= i_hi; ++i) {
      const double deriv = (hhat[i - i_lo + 1] - hhat[i - i_lo]) / h;
      err = std::max(err, std::abs(deriv - cp_df(n_cp, -1.0 + i * h)));
    }
    ConvergenceRow row;
    row.inv_dx = m;
    row.error = err;
    if (!rows.empty())
      row.order = std::log(rows.back().error / err) /
                  std::log(static_cast<double>(m) / rows.back().inv_dx);
    rows.push_back(row);
  }
  return rows;
}

std::vector<AdrPoint> adr(const SchemeKind& scheme, int n_samples,
                          double amplitude) {
  if (n_samples < 1) throw std::invalid_argument("adr: n_samples >= 1");
  if (!(amplitude > 0.0)) throw std::invalid_argument("adr: amplitude must be positive");
  scheme.params.validate();
  const int N = 2 * n_samples;
  const int r = scheme.r;
  const double h = 1.0 / N;
  const double dt = 1e-6 * h;
  const Cx I(0.0, 1.0);

  // Advection at unit speed with unit-alpha flux splitting: the downwind
  // split flux (f - q)/2 vanishes identically, so each interface value is the
  // left-biased reconstruction of the state window alone.
  std::vector<Cx> pad(N + 2 * r), F(N + 1);
  const auto rhs = [&](const std::vector<Cx>& u, std::vector<Cx>& out) {
    for (int i = 0; i < N; ++i) pad[i + r] = u[i];
    for (int i = 0; i < r; ++i) {
      pad[i] = u[N - r + i];
      pad[N + r + i] = u[i];
    }
    for (int j = 0; j <= N; ++j) F[j] = cplx_reconstruct(&pad[j], scheme, h);
    for (int i = 0; i < N; ++i) out[i] = (F[i] - F[i + 1]) / h;
  };

  std::vector<Cx> u(N), u1(N), u2(N), L(N);
  std::vector<AdrPoint> points;
  points.reserve(n_samples);
  for (int k = 1; k <= n_samples; ++k) {
    const double w = 2.0 * std::numbers::pi * k;
    for (int j = 0; j < N; ++j) u[j] = amplitude * std::exp(I * (w * (j + 0.5) * h));
    rhs(u, L);
    for (int j = 0; j < N; ++j) u1[j] = u[j] + dt * L[j];
    rhs(u1, L);
    for (int j = 0; j < N; ++j) u2[j] = 0.75 * u[j] + 0.25 * (u1[j] + dt * L[j]);
    rhs(u2, L);
    Cx hat0(0.0, 0.0), hat1(0.0, 0.0);
    for (int j = 0; j < N; ++j) {
      const Cx probe = std::exp(-I * (w * (j + 0.5) * h));
      hat0 += u[j] * probe;
      hat1 += (u[j] / 3.0 + (2.0 / 3.0) * (u2[j] + dt * L[j])) * probe;
    }
    const Cx big_phi = I * std::log(hat1 / hat0) * (h / dt);
    points.push_back({w * h, big_phi.real(), big_phi.imag()});
  }
  return points;
}

AdrPoint linear_scheme_symbol(const SchemeKind& scheme, double phi) {
  const KernelTables& t = kernel_tables(scheme.r);
  const int width = scheme.stencil_width();
  const double* c = scheme.is_upwind() ? t.c_full_upwind.data() : t.c_full.data();
  const std::complex<double> I(0.0, 1.0);
  // Interface value for the mode e^{i phi j}: sum of the linear coefficients
  // over the left-biased window, whose first sample sits r-1 nodes left of
  // the interface's owner node.
  std::complex<double> C(0.0, 0.0);
  for (int q = 0; q < width; ++q)
    C += c[q] * std::exp(I * (phi * (q - (scheme.r - 1))));
  const std::complex<double> big_phi = -I * (1.0 - std::exp(-I * phi)) * C;
  return {phi, big_phi.real(), big_phi.imag()};
}

ErrorNorms error_norms(std::span<const double> numeric,
                       std::span<const double> reference) {
  if (numeric.size() != reference.size() || numeric.empty())
    throw std::invalid_argument("error_norms: size mismatch or empty input");
  ErrorNorms out;
  out.pointwise.resize(numeric.size());
  double sum1 = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < numeric.size(); ++i) {
    const double e = std::abs(numeric[i] - reference[i]);
    out.pointwise[i] = e;
    sum1 += e;
    sum2 += e * e;
    out.linf = std::max(out.linf, e);
  }
  out.l1 = sum1 / numeric.size();
  out.l2 = std::sqrt(sum2 / numeric.size());
  return out;
}

std::vector<WeightDeviationRow> weight_deviation_study(
    const SchemeKind& scheme, const std::vector<int>& inv_dx) {
  const KernelTables& t = kernel_tables(scheme.r);
  const int r = scheme.r;
  const int n_weights = scheme.is_upwind() ? r : r + 1;
  const double* d = scheme.is_upwind() ? t.d_upwind.data() : t.d_central.data();
  std::vector<WeightDeviationRow> rows;
  rows.reserve(inv_dx.size());
  for (int m : inv_dx) {
    if (m < 2 * r) throw std::invalid_argument("weight_deviation_study: grid too coarse");
    const double h = 1.0 / m;
    std::vector<double> u(m);
    for (int j = 0; j < m; ++j)
      u[j] = std::sin(2.0 * std::numbers::pi * (j + 0.5) * h);
    double max_dev = 0.0;
    std::vector<double> buf(2 * r);
    for (int i = 0; i < m; ++i) {
      // Union window, cells i-r+1 .. i+r, wrapped periodically.
      for (int q = 0; q < 2 * r; ++q)
        buf[q] = u[((i - r + 1 + q) % m + m) % m];
      const std::vector<double> wts = nonlinear_weights(
          Window{std::span<const double>(buf.data(), scheme.stencil_width()), h},
          scheme);
      for (int k = 0; k < n_weights; ++k)
        max_dev = std::max(max_dev, std::abs(wts[k] - d[k]));
    }
    rows.push_back({m, max_dev});
  }
  return rows;
}

double loglog_slope(std::span<const int> inv_dx, std::span<const double> values) {
  if (inv_dx.size() != values.size() || inv_dx.size() < 2)
    throw std::invalid_argument("loglog_slope: need >= 2 matching points");
  const std::size_t n = inv_dx.size();
  double sx = 0.0, sy = 0.0;
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = -std::log(static_cast<double>(inv_dx[i]));  // log(dx)
    ys[i] = std::log(values[i]);
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / n, my = sy / n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

std::vector<TimingRow> timing_report(
    const std::vector<std::pair<std::string, RunStats>>& runs,
    const std::string& reference) {
  const auto ref = std::find_if(runs.begin(), runs.end(),
                                [&](const auto& p) { return p.first == reference; });
  if (ref == runs.end())
    throw std::invalid_argument("timing_report: reference scheme not among runs");
  std::vector<TimingRow> rows;
  rows.reserve(runs.size());
  for (const auto& [name, stats] : runs) {
    TimingRow row;
    row.scheme = name;
    row.steps = stats.steps;
    row.wall_seconds = stats.wall_seconds;
    row.stage_seconds = stats.stage_seconds;
    row.stage_evals = stats.stage_evals;
    row.per_stage_ms =
        stats.stage_evals > 0 ? 1e3 * stats.stage_seconds / stats.stage_evals : 0.0;
    row.speedup_pct = ref->second.wall_seconds > 0.0
                          ? 100.0 * (stats.wall_seconds - ref->second.wall_seconds) /
                                ref->second.wall_seconds
                          : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace wenoza
