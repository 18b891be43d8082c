#include "wenoza/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "wenoza/timeint.hpp"

namespace wenoza {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Static partition of `n` lines over the pool's workers; line k is always
// processed identically, so results do not depend on the thread count.
class LinePool {
 public:
  explicit LinePool(int threads) : nthreads_(std::max(threads, 1)) {
    for (int w = 1; w < nthreads_; ++w)
      workers_.emplace_back([this, w] { worker_loop(w); });
  }

  ~LinePool() {
    {
      std::lock_guard lk(mu_);
      stop_ = true;
      ++generation_;
    }
    cv_.notify_all();
    for (auto& th : workers_) th.join();
  }

  int size() const { return nthreads_; }

  // Calls fn(line, worker) for every line in [0, n); blocks until all done.
  // The first captured worker exception (lowest worker index) is rethrown.
  void run(int n, const std::function<void(int, int)>& fn) {
    if (nthreads_ == 1 || n == 1) {
      for (int k = 0; k < n; ++k) fn(k, 0);
      return;
    }
    {
      std::lock_guard lk(mu_);
      job_ = &fn;
      job_n_ = n;
      pending_ = nthreads_ - 1;
      errs_.assign(nthreads_, nullptr);
      ++generation_;
    }
    cv_.notify_all();
    run_chunk(0);
    {
      std::unique_lock lk(mu_);
      done_cv_.wait(lk, [this] { return pending_ == 0; });
      job_ = nullptr;
    }
    for (auto& e : errs_)
      if (e) std::rethrow_exception(e);
  }

 private:
  void run_chunk(int w) {
    const int n = job_n_;
    const int lo = static_cast<int>(static_cast<long>(n) * w / nthreads_);
    const int hi = static_cast<int>(static_cast<long>(n) * (w + 1) / nthreads_);
    try {
      for (int k = lo; k < hi; ++k) (*job_)(k, w);
    } catch (...) {
      errs_[w] = std::current_exception();
    }
  }

  void worker_loop(int w) {
    long seen = 0;
    for (;;) {
      std::unique_lock lk(mu_);
      cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
      seen = generation_;
      if (stop_) return;
      lk.unlock();
      run_chunk(w);
      lk.lock();
      if (--pending_ == 0) done_cv_.notify_one();
    }
  }

  int nthreads_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable cv_, done_cv_;
  const std::function<void(int, int)>* job_ = nullptr;
  int job_n_ = 0;
  int pending_ = 0;
  long generation_ = 0;
  bool stop_ = false;
  std::vector<std::exception_ptr> errs_;
};

// rk3_step annotates and rethrows rhs failures as plain runtime_error; this
// pair keeps the original typed error (PositivityError et al.) alive across
// that boundary so callers can still catch it.
struct TypedErrorCapture {
  std::exception_ptr err;

  template <class Fn>
  void guard(Fn&& body) {
    try {
      body();
    } catch (const SolverError&) {
      err = std::current_exception();
      throw;
    }
  }

  template <class Fn>
  auto step(Fn&& body) {
    try {
      return body();
    } catch (...) {
      if (err) std::rethrow_exception(err);
      throw;
    }
  }
};

[[noreturn]] void throw_nonfinite(const std::string& where, long step, double t) {
  throw NonFiniteError("non-finite value in " + where + " at step " +
                       std::to_string(step) + ", t = " + std::to_string(t));
}

[[noreturn]] void throw_unphysical(const std::string& where, long step, double t,
                                   double rho, double p) {
  throw PositivityError("unphysical state in " + where + " at step " +
                        std::to_string(step) + ", t = " + std::to_string(t) +
                        ": rho = " + std::to_string(rho) +
                        ", p = " + std::to_string(p));
}

}  // namespace

SolveOptions make_options(const ProblemSpec& spec) {
  SolveOptions opt;
  opt.scheme = SchemeKind::from_name(spec.scheme);
  opt.cfl = spec.cfl;
  opt.positivity = spec.positivity;
  opt.positivity_params.gamma = spec.gamma;
  if (const char* env = std::getenv("WENOZA_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) opt.threads = n;
  }
  return opt;
}

// ---- scalar ----------------------------------------------------------------

ScalarResult solve_scalar(const ScalarProblem& prob, const SolveOptions& opt,
                          const ProgressFn& progress, const SnapshotFn& snapshot) {
  const PreparedScheme scheme =
      PreparedScheme::make(opt.scheme, prob.grid.dx());
  const int r = opt.scheme.r;
  const int N = prob.grid.N;
  const double dx = prob.grid.dx();
  Grid1D padded = prob.grid;
  padded.ghost = r;

  TimeControls tc;
  tc.cfl = opt.cfl;
  tc.t_final = prob.spec.t_final;

  std::vector<double> u = prob.init;
  RunStats stats;
  Field1D<double> work(padded);
  std::vector<double> fbuf(N + 2 * r);
  std::vector<double> F(N + 1);

  auto range_alpha = [&prob](const double* begin, const double* end) {
    double lo = *begin, hi = *begin;
    for (const double* v = begin; v != end; ++v) {
      lo = std::min(lo, *v);
      hi = std::max(hi, *v);
    }
    return prob.max_dflux(lo, hi);
  };

  const auto t_start = Clock::now();
  auto rhs = [&](const std::vector<double>& in, std::vector<double>& out,
                 int /*stage*/) {
    const auto t0 = Clock::now();
    std::copy(in.begin(), in.end(), work.data.begin() + r);
    fill_ghosts(work, prob.bc);
    const double alpha =
        range_alpha(work.data.data(), work.data.data() + work.data.size());
    for (int i = -r; i < N + r; ++i) fbuf[i + r] = prob.flux(work.at(i));
    for (int j = 0; j <= N; ++j)
      F[j] = scalar_interface_flux(&work.data[j], &fbuf[j], scheme, alpha);
    for (int i = 0; i < N; ++i) out[i] = -(F[i + 1] - F[i]) / dx;
    stats.stage_seconds += seconds_since(t0);
    ++stats.stage_evals;
  };

  while (stats.t < tc.t_final && stats.steps < opt.max_steps) {
    const double alpha = range_alpha(u.data(), u.data() + u.size());
    const double dt =
        opt.fixed_dt ? std::min(*opt.fixed_dt, tc.t_final - stats.t)
                     : cfl_dt(alpha, dx, tc, stats.t);
    u = rk3_step(u, rhs, dt);
    stats.t += dt;
    ++stats.steps;
    for (int i = 0; i < N; ++i)
      if (!std::isfinite(u[i]))
        throw_nonfinite("cell " + std::to_string(i), stats.steps, stats.t);
    if (progress) progress(stats.steps, stats.t, dt);
    if (snapshot) snapshot(stats.steps, stats.t, std::span<const double>(u));
  }
  stats.wall_seconds = seconds_since(t_start);
  return {std::move(u), stats};
}

// ---- 1D Euler --------------------------------------------------------------

namespace {

struct FamilySpeeds {
  std::array<double, 3> alpha{};  // per wave family: u-a, u, u+a
  double amax = 0.0;
};

}  // namespace

Euler1DResult solve_euler1d(const Euler1DProblem& prob, const SolveOptions& opt,
                            const ProgressFn& progress, const SnapshotFn& snapshot) {
  using S3 = std::array<double, 3>;
  const PreparedScheme scheme =
      PreparedScheme::make(opt.scheme, prob.grid.dx());
  const int r = opt.scheme.r;
  const int N = prob.grid.N;
  const double dx = prob.grid.dx();
  const double gamma = prob.spec.gamma;
  Grid1D padded = prob.grid;
  padded.ghost = r;

  TimeControls tc;
  tc.cfl = opt.cfl;
  tc.t_final = prob.spec.t_final;

  std::vector<double> u(3 * N);
  for (int i = 0; i < N; ++i) {
    u[3 * i] = prob.init[i].rho;
    u[3 * i + 1] = prob.init[i].mom;
    u[3 * i + 2] = prob.init[i].E;
  }

  RunStats stats;
  Field1D<S3> work(padded);
  std::vector<S3> fbuf(N + 2 * r);
  std::vector<S3> F(N + 1), G;
  if (opt.positivity) G.resize(N + 1);

  auto speeds_of = [&](long step, double t) {
    FamilySpeeds s;
    for (int i = -r; i < N + r; ++i) {
      const S3& q = work.at(i);
      const double rho = q[0];
      const double p = (gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / rho);
      if (!(rho > 0.0) || (!(p > 0.0) && !opt.guard_abs_sound_speed))
        throw_unphysical("cell " + std::to_string(i), step, t, rho, p);
      const double vel = q[1] / rho;
      const double a = std::sqrt(gamma * std::abs(p) / rho);
      s.alpha[0] = std::max(s.alpha[0], std::abs(vel - a));
      s.alpha[1] = std::max(s.alpha[1], std::abs(vel));
      s.alpha[2] = std::max(s.alpha[2], std::abs(vel + a));
      stats.min_rho = std::min(stats.min_rho, rho);
      stats.min_p = std::min(stats.min_p, p);
      stats.max_rho = std::max(stats.max_rho, rho);
    }
    s.amax = std::max({s.alpha[0], s.alpha[1], s.alpha[2]});
    return s;
  };

  auto load = [&](const std::vector<double>& in) {
    for (int i = 0; i < N; ++i)
      work.at(i) = {in[3 * i], in[3 * i + 1], in[3 * i + 2]};
    fill_ghosts(work, prob.bc);
  };

  double current_dt = 0.0;
  TypedErrorCapture cap;
  auto rhs = [&](const std::vector<double>& in, std::vector<double>& out,
                 int /*stage*/) {
    cap.guard([&] {
    const auto t0 = Clock::now();
    load(in);
    const FamilySpeeds sp = speeds_of(stats.steps, stats.t);
    for (int i = -r; i < N + r; ++i) {
      const S3& q = work.at(i);
      fbuf[i + r] =
          euler_flux(EulerState1D{q[0], q[1], q[2]}, gamma);
    }
    for (int j = 0; j <= N; ++j) {
      const S3& ql = work.at(j - 1);
      const S3& qr = work.at(j);
      const EulerState1D sl{ql[0], ql[1], ql[2]}, sr{qr[0], qr[1], qr[2]};
      if (opt.componentwise) {
        F[j] = componentwise_flux<3>(&work.data[j], &fbuf[j], sp.amax, scheme);
      } else {
        const RoeAverage1D avg =
            (opt.averaging == InterfaceAveraging::roe)
                ? roe_average(sl, sr, gamma, opt.guard_abs_sound_speed)
                : arithmetic_average(sl, sr, gamma, opt.guard_abs_sound_speed);
        F[j] = characteristic_flux<3>(&work.data[j], &fbuf[j],
                                      eigensystem(avg, gamma), sp.alpha, scheme);
      }
    }
    if (opt.positivity) {
      for (int j = 0; j <= N; ++j) {
        const S3& ql = work.at(j - 1);
        const S3& qr = work.at(j);
        for (int c = 0; c < 3; ++c)
          G[j][c] = 0.5 * (fbuf[j - 1 + r][c] + fbuf[j + r][c]) -
                    0.5 * sp.amax * (qr[c] - ql[c]);
      }
      const auto rep = limit_line<3>(
          std::span<const S3>(&work.at(0), static_cast<std::size_t>(N)),
          std::span<S3>(F), std::span<const S3>(G), current_dt / dx,
          opt.positivity_params);
      if (!rep.feasible)
        throw_unphysical("first-order anchor, cell " +
                             std::to_string(rep.bad_cell),
                         stats.steps, stats.t, rep.bad_rho, rep.bad_p);
      stats.min_theta = std::min(stats.min_theta, rep.min_theta);
      stats.limited_interfaces += rep.limited_interfaces;
    }
    for (int i = 0; i < N; ++i)
      for (int c = 0; c < 3; ++c)
        out[3 * i + c] = -(F[i + 1][c] - F[i][c]) / dx;
    stats.stage_seconds += seconds_since(t0);
    ++stats.stage_evals;
    });
  };

  const auto t_start = Clock::now();
  while (stats.t < tc.t_final && stats.steps < opt.max_steps) {
    load(u);
    const FamilySpeeds sp = speeds_of(stats.steps, stats.t);
    current_dt = opt.fixed_dt
                     ? std::min(*opt.fixed_dt, tc.t_final - stats.t)
                     : cfl_dt(sp.amax, dx, tc, stats.t);
    u = cap.step([&] { return rk3_step(u, rhs, current_dt); });
    stats.t += current_dt;
    ++stats.steps;
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!std::isfinite(u[k]))
        throw_nonfinite("cell " + std::to_string(k / 3), stats.steps, stats.t);
    if (progress) progress(stats.steps, stats.t, current_dt);
    if (snapshot) snapshot(stats.steps, stats.t, std::span<const double>(u));
  }
  stats.wall_seconds = seconds_since(t_start);

  Euler1DResult res;
  res.q.resize(N);
  for (int i = 0; i < N; ++i) res.q[i] = {u[3 * i], u[3 * i + 1], u[3 * i + 2]};
  res.stats = stats;
  return res;
}

// ---- 2D Euler --------------------------------------------------------------

Euler2DResult solve_euler2d(const Euler2DProblem& prob, const SolveOptions& opt,
                            const ProgressFn& progress, const SnapshotFn& snapshot) {
  using S4 = std::array<double, 4>;
  const PreparedScheme scheme_x =
      PreparedScheme::make(opt.scheme, prob.grid.dx());
  const PreparedScheme scheme_y =
      PreparedScheme::make(opt.scheme, prob.grid.dy());
  const int r = opt.scheme.r;
  const int Nx = prob.grid.Nx, Ny = prob.grid.Ny;
  const double dx = prob.grid.dx(), dy = prob.grid.dy();
  const double gamma = prob.spec.gamma;
  Grid2D padded = prob.grid;
  padded.ghost = r;

  TimeControls tc;
  tc.cfl = opt.cfl;
  tc.t_final = prob.spec.t_final;

  // Alive ranges per row (x sweeps) and per column (y sweeps).
  const bool masked = prob.bc.corner_mask;
  const int iw = masked
                     ? static_cast<int>(std::lround(
                           (prob.bc.corner_x - prob.grid.ax) / dx))
                     : 0;
  const int jw = masked
                     ? static_cast<int>(std::lround(
                           (prob.bc.corner_y - prob.grid.ay) / dy))
                     : 0;
  std::vector<int> row_i0(Ny, 0), col_j0(Nx, 0);
  if (masked) {
    for (int j = 0; j < Ny; ++j)
      if (prob.grid.yc(j) < prob.bc.corner_y) row_i0[j] = iw;
    for (int i = 0; i < Nx; ++i)
      if (prob.grid.xc(i) < prob.bc.corner_x) col_j0[i] = jw;
  }

  // Pinned boundary states contribute to the wave-speed bound even when the
  // interior has not seen them yet.
  double floor_sx = 0.0, floor_sy = 0.0;
  {
    auto absorb = [&](const S4& q) {
      if (!(q[0] > 0.0)) return;
      const double p =
          (gamma - 1.0) * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0]);
      if (!(p > 0.0)) return;
      const double a = std::sqrt(gamma * p / q[0]);
      floor_sx = std::max(floor_sx, std::abs(q[1] / q[0]) + a);
      floor_sy = std::max(floor_sy, std::abs(q[2] / q[0]) + a);
    };
    for (const auto* side :
         {&prob.bc.left, &prob.bc.right, &prob.bc.bottom, &prob.bc.top})
      for (const auto& seg : *side)
        if (seg.kind == BCKind::inflow) absorb(seg.pinned);
    if (prob.bc.moving_shock_top) {
      absorb(prob.bc.shock_post);
      absorb(prob.bc.shock_pre);
    }
  }

  std::vector<double> u(static_cast<std::size_t>(4) * Nx * Ny);
  for (int j = 0; j < Ny; ++j)
    for (int i = 0; i < Nx; ++i)
      for (int c = 0; c < 4; ++c)
        u[(static_cast<std::size_t>(j) * Nx + i) * 4 + c] =
            prob.init[static_cast<std::size_t>(j) * Nx + i][c];

  RunStats stats;
  Field2D<S4> work(padded);
  LinePool pool(opt.threads);
  const int W = pool.size();

  // Per-worker scratch: line flux buffers and, for y sweeps, contiguous
  // copies of a column.
  struct Scratch {
    std::vector<S4> f;        // physical fluxes along the line
    std::vector<S4> q;        // column copy (y sweeps)
    std::vector<S4> F, G;     // interface fluxes: weighted and first-order
  };
  std::vector<Scratch> scratch(W);
  const int line_max = std::max(Nx, Ny) + 2 * r + 1;
  for (auto& s : scratch) {
    s.f.resize(line_max);
    s.q.resize(line_max);
    s.F.resize(line_max);
    s.G.resize(line_max);
  }
  std::vector<LimiterReport> row_reports(Ny), col_reports(Nx);

  struct Speeds2D {
    std::array<double, 4> ax{}, ay{};  // per-family maxima
    double sx = 0.0, sy = 0.0;
  };
  auto speeds_of = [&](long step, double t) {
    Speeds2D s;
    for (int j = 0; j < Ny; ++j)
      for (int i = row_i0[j]; i < Nx; ++i) {
        const S4& q = work.at(i, j);
        const double rho = q[0];
        const double p = (gamma - 1.0) *
                         (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / rho);
        if (!(rho > 0.0) || (!(p > 0.0) && !opt.guard_abs_sound_speed))
          throw_unphysical("cell (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")",
                           step, t, rho, p);
        const double uv = q[1] / rho, vv = q[2] / rho;
        const double a = std::sqrt(gamma * std::abs(p) / rho);
        s.ax[0] = std::max(s.ax[0], std::abs(uv - a));
        s.ax[1] = std::max(s.ax[1], std::abs(uv));
        s.ax[3] = std::max(s.ax[3], std::abs(uv + a));
        s.ay[0] = std::max(s.ay[0], std::abs(vv - a));
        s.ay[1] = std::max(s.ay[1], std::abs(vv));
        s.ay[3] = std::max(s.ay[3], std::abs(vv + a));
        stats.min_rho = std::min(stats.min_rho, rho);
        stats.min_p = std::min(stats.min_p, p);
        stats.max_rho = std::max(stats.max_rho, rho);
      }
    s.ax[2] = s.ax[1];
    s.ay[2] = s.ay[1];
    s.sx = std::max({s.ax[0], s.ax[1], s.ax[3], floor_sx});
    s.sy = std::max({s.ay[0], s.ay[1], s.ay[3], floor_sy});
    s.ax[0] = std::max(s.ax[0], floor_sx);
    s.ax[3] = std::max(s.ax[3], floor_sx);
    s.ay[0] = std::max(s.ay[0], floor_sy);
    s.ay[3] = std::max(s.ay[3], floor_sy);
    return s;
  };

  auto load = [&](const std::vector<double>& in) {
    for (int j = 0; j < Ny; ++j)
      for (int i = 0; i < Nx; ++i) {
        const std::size_t k = (static_cast<std::size_t>(j) * Nx + i) * 4;
        work.at(i, j) = {in[k], in[k + 1], in[k + 2], in[k + 3]};
      }
  };

  double current_dt = 0.0;
  double stage_time = 0.0;
  TypedErrorCapture cap;

  auto rhs = [&](const std::vector<double>& in, std::vector<double>& out,
                 int stage) {
    cap.guard([&] {
    const auto t0 = Clock::now();
    load(in);
    stage_time = stats.t + (stage == 1 ? current_dt
                            : stage == 2 ? 0.5 * current_dt
                                         : 0.0);
    const Speeds2D sp = speeds_of(stats.steps, stats.t);
    const double denom = sp.sx / dx + sp.sy / dy;
    const double lam_x = current_dt * denom / sp.sx;  // dt/dx over the x share
    const double lam_y = current_dt * denom / sp.sy;

    // ---- x sweeps ----
    fill_ghosts(work, prob.bc, stage_time, Sweep::x);
    auto xsweep = [&](int j, int w) {
      Scratch& sc = scratch[w];
      const int i0 = row_i0[j];
      for (int i = i0 - r; i < Nx + r; ++i) {
        const S4& q = work.at(i, j);
        sc.f[i - i0 + r] = euler_flux_x(
            EulerState2D{q[0], q[1], q[2], q[3]}, gamma);
      }
      for (int jj = i0; jj <= Nx; ++jj) {
        const S4* qw = &work.at(jj - r, j);
        const S4* fw = &sc.f[jj - r - i0 + r];
        if (opt.componentwise) {
          sc.F[jj - i0] = componentwise_flux<4>(qw, fw, sp.sx, scheme_x);
        } else {
          const S4& ql = work.at(jj - 1, j);
          const S4& qr = work.at(jj, j);
          const EulerState2D sl{ql[0], ql[1], ql[2], ql[3]};
          const EulerState2D sr{qr[0], qr[1], qr[2], qr[3]};
          const RoeAverage2D avg =
              (opt.averaging == InterfaceAveraging::roe)
                  ? roe_average(sl, sr, gamma, opt.guard_abs_sound_speed)
                  : arithmetic_average(sl, sr, gamma,
                                       opt.guard_abs_sound_speed);
          sc.F[jj - i0] = characteristic_flux<4>(
              qw, fw, eigensystem_x(avg, gamma), sp.ax, scheme_x);
        }
      }
      row_reports[j] = LimiterReport{};
      if (opt.positivity) {
        for (int jj = i0; jj <= Nx; ++jj) {
          const S4& ql = work.at(jj - 1, j);
          const S4& qr = work.at(jj, j);
          for (int c = 0; c < 4; ++c)
            sc.G[jj - i0][c] = 0.5 * (sc.f[jj - 1 - i0 + r][c] +
                                      sc.f[jj - i0 + r][c]) -
                               0.5 * sp.sx * (qr[c] - ql[c]);
        }
        row_reports[j] = limit_line<4>(
            std::span<const S4>(&work.at(i0, j),
                                static_cast<std::size_t>(Nx - i0)),
            std::span<S4>(sc.F.data(), static_cast<std::size_t>(Nx - i0 + 1)),
            std::span<const S4>(sc.G.data(),
                                static_cast<std::size_t>(Nx - i0 + 1)),
            lam_x, opt.positivity_params);
      }
      for (int i = i0; i < Nx; ++i) {
        const std::size_t k = (static_cast<std::size_t>(j) * Nx + i) * 4;
        for (int c = 0; c < 4; ++c)
          out[k + c] = -(sc.F[i + 1 - i0][c] - sc.F[i - i0][c]) / dx;
      }
      if (i0 > 0)  // dead cells receive no update
        for (int i = 0; i < i0; ++i) {
          const std::size_t k = (static_cast<std::size_t>(j) * Nx + i) * 4;
          for (int c = 0; c < 4; ++c) out[k + c] = 0.0;
        }
    };
    pool.run(Ny, xsweep);
    for (int j = 0; j < Ny; ++j) {
      const auto& rep = row_reports[j];
      if (!rep.feasible)
        throw_unphysical(
            "first-order anchor, cell (" +
                std::to_string(row_i0[j] + rep.bad_cell) + ", " +
                std::to_string(j) + ")",
            stats.steps, stats.t, rep.bad_rho, rep.bad_p);
      stats.min_theta = std::min(stats.min_theta, rep.min_theta);
      stats.limited_interfaces += rep.limited_interfaces;
    }

    // ---- y sweeps ----
    fill_ghosts(work, prob.bc, stage_time, Sweep::y);
    auto ysweep = [&](int i, int w) {
      Scratch& sc = scratch[w];
      const int j0 = col_j0[i];
      for (int j = j0 - r; j < Ny + r; ++j) {
        sc.q[j - j0 + r] = work.at(i, j);
        const S4& q = sc.q[j - j0 + r];
        sc.f[j - j0 + r] = euler_flux_y(
            EulerState2D{q[0], q[1], q[2], q[3]}, gamma);
      }
      for (int jj = j0; jj <= Ny; ++jj) {
        const S4* qw = &sc.q[jj - r - j0 + r];
        const S4* fw = &sc.f[jj - r - j0 + r];
        if (opt.componentwise) {
          sc.F[jj - j0] = componentwise_flux<4>(qw, fw, sp.sy, scheme_y);
        } else {
          const S4& ql = sc.q[jj - 1 - j0 + r];
          const S4& qr = sc.q[jj - j0 + r];
          const EulerState2D sl{ql[0], ql[1], ql[2], ql[3]};
          const EulerState2D sr{qr[0], qr[1], qr[2], qr[3]};
          const RoeAverage2D avg =
              (opt.averaging == InterfaceAveraging::roe)
                  ? roe_average(sl, sr, gamma, opt.guard_abs_sound_speed)
                  : arithmetic_average(sl, sr, gamma,
                                       opt.guard_abs_sound_speed);
          sc.F[jj - j0] = characteristic_flux<4>(
              qw, fw, eigensystem_y(avg, gamma), sp.ay, scheme_y);
        }
      }
      col_reports[i] = LimiterReport{};
      if (opt.positivity) {
        for (int jj = j0; jj <= Ny; ++jj) {
          const S4& ql = sc.q[jj - 1 - j0 + r];
          const S4& qr = sc.q[jj - j0 + r];
          for (int c = 0; c < 4; ++c)
            sc.G[jj - j0][c] = 0.5 * (sc.f[jj - 1 - j0 + r][c] +
                                      sc.f[jj - j0 + r][c]) -
                               0.5 * sp.sy * (qr[c] - ql[c]);
        }
        col_reports[i] = limit_line<4>(
            std::span<const S4>(&sc.q[r], static_cast<std::size_t>(Ny - j0)),
            std::span<S4>(sc.F.data(), static_cast<std::size_t>(Ny - j0 + 1)),
            std::span<const S4>(sc.G.data(),
                                static_cast<std::size_t>(Ny - j0 + 1)),
            lam_y, opt.positivity_params);
      }
      for (int j = j0; j < Ny; ++j) {
        const std::size_t k = (static_cast<std::size_t>(j) * Nx + i) * 4;
        for (int c = 0; c < 4; ++c)
          out[k + c] -= (sc.F[j + 1 - j0][c] - sc.F[j - j0][c]) / dy;
      }
    };
    pool.run(Nx, ysweep);
    for (int i = 0; i < Nx; ++i) {
      const auto& rep = col_reports[i];
      if (!rep.feasible)
        throw_unphysical(
            "first-order anchor, cell (" + std::to_string(i) + ", " +
                std::to_string(col_j0[i] + rep.bad_cell) + ")",
            stats.steps, stats.t, rep.bad_rho, rep.bad_p);
      stats.min_theta = std::min(stats.min_theta, rep.min_theta);
      stats.limited_interfaces += rep.limited_interfaces;
    }
    stats.stage_seconds += seconds_since(t0);
    ++stats.stage_evals;
    });
  };

  const auto t_start = Clock::now();
  while (stats.t < tc.t_final && stats.steps < opt.max_steps) {
    load(u);
    const Speeds2D sp = speeds_of(stats.steps, stats.t);
    current_dt = opt.fixed_dt
                     ? std::min(*opt.fixed_dt, tc.t_final - stats.t)
                     : cfl_dt2(sp.sx, sp.sy, dx, dy, tc, stats.t);
    u = cap.step([&] { return rk3_step(u, rhs, current_dt); });
    stats.t += current_dt;
    ++stats.steps;
    for (int j = 0; j < Ny; ++j)
      for (int i = row_i0[j]; i < Nx; ++i) {
        const std::size_t k = (static_cast<std::size_t>(j) * Nx + i) * 4;
        for (int c = 0; c < 4; ++c)
          if (!std::isfinite(u[k + c]))
            throw_nonfinite("cell (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")",
                            stats.steps, stats.t);
      }
    if (progress) progress(stats.steps, stats.t, current_dt);
    if (snapshot) snapshot(stats.steps, stats.t, std::span<const double>(u));
  }
  stats.wall_seconds = seconds_since(t_start);

  Euler2DResult res;
  res.q.resize(static_cast<std::size_t>(Nx) * Ny);
  for (std::size_t c = 0; c < res.q.size(); ++c)
    res.q[c] = {u[4 * c], u[4 * c + 1], u[4 * c + 2], u[4 * c + 3]};
  res.stats = stats;
  return res;
}

}  // namespace wenoza
