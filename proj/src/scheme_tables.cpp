#include "wenoza/scheme_tables.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wenoza/exact_poly.hpp"

namespace wenoza {
namespace {

void require_r(int r, int lo) {
  if (r < lo || r > kMaxTableR) {
    throw std::invalid_argument("order parameter r=" + std::to_string(r) +
                                " outside supported range [" + std::to_string(lo) + "," +
                                std::to_string(kMaxTableR) + "]");
  }
}

void require_k(int r, int k) {
  if (k < 0 || k > r) {
    throw std::invalid_argument("substencil index k=" + std::to_string(k) +
                                " outside {0..r-1, downwind}");
  }
}

std::vector<long long> substencil_cells(int r, int k) {
  std::vector<long long> cells(r);
  for (int j = 0; j < r; ++j) cells[j] = k - r + 1 + j;
  return cells;
}

std::vector<long long> range_cells(long long first, int count) {
  std::vector<long long> cells(count);
  for (int j = 0; j < count; ++j) cells[j] = first + j;
  return cells;
}

// Row j holds the exact averages of 1, x, ..., x^{m-1} over cell j, so that
// the reconstruction polynomial's monomial coefficients solve M a = f.
RatMat moment_matrix(const std::vector<long long>& cells) {
  const std::size_t m = cells.size();
  RatMat M(m, RatVec(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t n = 0; n < m; ++n)
      M[j][n] = monomial_cell_average(static_cast<unsigned>(n), cells[j]);
  return M;
}

// Coefficients c with <c, f> = p(1/2) where p reconstructs the averages f on
// the given cells: c = M^{-T} v, v_n = (1/2)^n.
RatVec interface_value_coeffs(const std::vector<long long>& cells) {
  RatVec v(cells.size());
  for (std::size_t n = 0; n < v.size(); ++n)
    v[n] = rat_pow(Rational(1) / 2, static_cast<long long>(n));
  return solve_linear(rat_transpose(moment_matrix(cells)), v);
}

Rational falling_factorial(unsigned m, unsigned l) {
  Rational acc = 1;
  for (unsigned j = 0; j < l; ++j) acc *= Rational(m - j);
  return acc;
}

// Integral of xi^e over [-1/2, 1/2].
Rational unit_cell_moment(unsigned e) {
  if (e % 2 == 1) return 0;
  return rat_pow(Rational(1) / 2, e) / Rational(e + 1);
}

// Map window-slot vectors through <c, f> for candidate k embedded at slots
// k..k+r-1 of a window of the given width.
RatVec embed_candidate(const RatVec& c, int k, int width) {
  RatVec full(width, Rational(0));
  for (std::size_t j = 0; j < c.size(); ++j) full[k + j] = c[j];
  return full;
}

struct CheckBuilder {
  std::vector<VerifyCheck> checks;

  void equal(const std::string& name, const Rational& lhs, const Rational& rhs) {
    VerifyCheck c{name, lhs == rhs, ""};
    if (!c.pass)
      c.detail = "lhs=" + to_fraction_string(lhs) + " rhs=" + to_fraction_string(rhs);
    checks.push_back(std::move(c));
  }

  void equal_vec(const std::string& name, const RatVec& lhs, const RatVec& rhs) {
    bool pass = lhs.size() == rhs.size();
    std::string detail;
    if (pass) {
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i] != rhs[i]) {
          pass = false;
          detail = "entry " + std::to_string(i) + ": lhs=" + to_fraction_string(lhs[i]) +
                   " rhs=" + to_fraction_string(rhs[i]);
          break;
        }
      }
    } else {
      detail = "size mismatch";
    }
    checks.push_back({name, pass, detail});
  }

  void is_true(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, pass ? "" : detail});
  }
};

}  // namespace

RatVec candidate_coeffs(int r, int k) {
  require_r(r, kMinTableR);
  require_k(r, k);
  return interface_value_coeffs(substencil_cells(r, k));
}

RatVec full_stencil_coeffs(int r) {
  require_r(r, kMinTableR);
  return interface_value_coeffs(range_cells(-r + 1, 2 * r));
}

RatVec full_stencil_coeffs_upwind(int r) {
  require_r(r, kMinTableR);
  return interface_value_coeffs(range_cells(-r + 1, 2 * r - 1));
}

RatVec ideal_weights(int r, bool central) {
  require_r(r, kMinTableR);
  if (central) {
    RatVec d(r + 1);
    const Rational denom(binomial(2 * r, r));
    for (int k = 0; k <= r; ++k) {
      const BigInt b = binomial(r, k);
      d[k] = Rational(b * b) / denom;
    }
    return d;
  }
  if (r == 1) return {Rational(1)};
  // Exact solve of the overdetermined alignment system: candidate k occupies
  // slots k..k+r-1 of the (2r-1)-point window, and the weighted combination
  // must reproduce the full upwind stencil slot by slot.
  const RatVec target = full_stencil_coeffs_upwind(r);
  std::vector<RatVec> cand(r);
  for (int k = 0; k < r; ++k) cand[k] = candidate_coeffs(r, k);
  RatMat head(r, RatVec(r, Rational(0)));
  RatVec rhs(r);
  for (int s = 0; s < r; ++s) {
    rhs[s] = target[s];
    for (int k = 0; k <= s && k < r; ++k)
      if (s - k < r) head[s][k] = cand[k][s - k];
  }
  RatVec d = solve_linear(head, rhs);
  for (int s = 0; s < 2 * r - 1; ++s) {
    Rational lhs = 0;
    for (int k = 0; k < r; ++k)
      if (s >= k && s - k < r) lhs += d[k] * cand[k][s - k];
    if (lhs != target[s])
      throw std::domain_error("ideal upwind weights: alignment system inconsistent");
  }
  return d;
}

RatMat smoothness_matrix(int r, int k) {
  require_r(r, 2);
  require_k(r, k);
  const RatMat M = moment_matrix(substencil_cells(r, k));
  RatMat G(r, RatVec(r, Rational(0)));
  for (int m = 0; m < r; ++m)
    for (int n = 0; n < r; ++n)
      for (int l = 1; l <= std::min(m, n); ++l)
        G[m][n] += falling_factorial(m, l) * falling_factorial(n, l) *
                   unit_cell_moment(static_cast<unsigned>(m + n - 2 * l));
  const RatMat Minv = mat_inverse(M);
  return rat_mat_mul(rat_mat_mul(rat_transpose(Minv), G), Minv);
}

std::pair<RatVec, RatVec> tau_vectors(int r) {
  require_r(r, kMinTableR);
  RatVec tau(2 * r), tau_prime(2 * r, Rational(0));
  for (int m = 0; m < 2 * r; ++m) {
    const Rational b(binomial(2 * r - 1, m));
    tau[m] = (m % 2 == 0) ? -b : b;
  }
  for (int m = 0; m <= 2 * r - 2; ++m) {
    const Rational b(binomial(2 * r - 2, m));
    tau_prime[m] = (m % 2 == 0) ? b : -b;
  }
  return {tau, tau_prime};
}

SchemeTables make_scheme_tables(int r) {
  require_r(r, 2);
  SchemeTables t;
  t.r = r;
  t.c_full = full_stencil_coeffs(r);
  t.c_full_upwind = full_stencil_coeffs_upwind(r);
  t.c_sub.resize(r + 1);
  t.B.resize(r + 1);
  for (int k = 0; k <= r; ++k) {
    t.c_sub[k] = candidate_coeffs(r, k);
    t.B[k] = smoothness_matrix(r, k);
  }
  t.d_central = ideal_weights(r, true);
  t.d_upwind = ideal_weights(r, false);
  std::tie(t.c_tau, t.c_tau_prime) = tau_vectors(r);
  return t;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const VerifyCheck* VerifyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

VerifyReport verify_tables(int r) {
  require_r(r, 2);
  const SchemeTables t = make_scheme_tables(r);
  CheckBuilder cb;

  // Linear coefficients reproduce interface values of polynomials up to the
  // stencil's design order, and the even-order set is palindromic.
  const auto window_cells = range_cells(-r + 1, 2 * r);
  const auto upwind_cells = range_cells(-r + 1, 2 * r - 1);
  const Rational half = Rational(1) / 2;
  for (int m = 0; m < 2 * r; ++m) {
    RatVec samples(window_cells.size());
    for (std::size_t j = 0; j < window_cells.size(); ++j)
      samples[j] = monomial_cell_average(m, window_cells[j]);
    cb.equal("c_full exact on x^" + std::to_string(m), rat_dot(t.c_full, samples),
             rat_pow(half, m));
  }
  cb.equal_vec("c_full palindrome", t.c_full, reversed(t.c_full));
  for (int m = 0; m < 2 * r - 1; ++m) {
    RatVec samples(upwind_cells.size());
    for (std::size_t j = 0; j < upwind_cells.size(); ++j)
      samples[j] = monomial_cell_average(m, upwind_cells[j]);
    cb.equal("c_full_upwind exact on x^" + std::to_string(m),
             rat_dot(t.c_full_upwind, samples), rat_pow(half, m));
  }

  // Candidates: polynomial exactness on their own cells and mirror symmetry.
  for (int k = 0; k <= r; ++k) {
    const auto cells = substencil_cells(r, k);
    for (int m = 0; m < r; ++m) {
      RatVec samples(cells.size());
      for (std::size_t j = 0; j < cells.size(); ++j)
        samples[j] = monomial_cell_average(m, cells[j]);
      cb.equal("candidate " + std::to_string(k) + " exact on x^" + std::to_string(m),
               rat_dot(t.c_sub[k], samples), rat_pow(half, m));
    }
    cb.equal_vec("candidate mirror c[" + std::to_string(r - k) + "]=rev(c[" +
                     std::to_string(k) + "])",
                 t.c_sub[r - k], reversed(t.c_sub[k]));
  }

  // Candidate values agree with the primitive-interpolation oracle on a
  // deterministic set of rational windows (independent derivation route).
  for (int k = 0; k <= r; ++k) {
    RatVec f(r);
    for (int j = 0; j < r; ++j)
      f[j] = Rational((j * 7919 + k * 104729 + 13) % 19 - 9, (j + k) % 5 + 1);
    const RatPoly p = poly_from_cell_averages(k - r + 1, f);
    cb.equal("candidate " + std::to_string(k) + " matches interpolation oracle",
             rat_dot(t.c_sub[k], f), poly_eval(p, half));
  }

  // Ideal weights: closed form, normalization, positivity, and the exact
  // combination identities on both window widths.
  {
    const Rational denom(binomial(2 * r, r));
    Rational sum = 0;
    bool positive = true;
    for (int k = 0; k <= r; ++k) {
      const BigInt b = binomial(r, k);
      cb.equal("ideal central d[" + std::to_string(k) + "] closed form", t.d_central[k],
               Rational(b * b) / denom);
      sum += t.d_central[k];
      positive = positive && t.d_central[k] > 0;
    }
    cb.equal("ideal central weights sum", sum, Rational(1));
    cb.is_true("ideal central weights positive", positive);

    RatVec combo(2 * r, Rational(0));
    for (int k = 0; k <= r; ++k) {
      const RatVec e = embed_candidate(t.c_sub[k], k, 2 * r);
      for (int s = 0; s < 2 * r; ++s) combo[s] += t.d_central[k] * e[s];
    }
    cb.equal_vec("ideal central combination reproduces c_full", combo, t.c_full);

    sum = 0;
    positive = true;
    for (int k = 0; k < r; ++k) {
      sum += t.d_upwind[k];
      positive = positive && t.d_upwind[k] > 0;
    }
    cb.equal("ideal upwind weights sum", sum, Rational(1));
    cb.is_true("ideal upwind weights positive", positive);
    RatVec combo_up(2 * r - 1, Rational(0));
    for (int k = 0; k < r; ++k) {
      const RatVec e = embed_candidate(t.c_sub[k], k, 2 * r - 1);
      for (int s = 0; s < 2 * r - 1; ++s) combo_up[s] += t.d_upwind[k] * e[s];
    }
    cb.equal_vec("ideal upwind combination reproduces c_full_upwind", combo_up,
                 t.c_full_upwind);
  }

  // Smoothness forms: symmetry, constant annihilation, mirror relation,
  // positive semidefiniteness (all principal minors), and exact agreement
  // with the symbolic-integration oracle on a spanning set of windows.
  for (int k = 0; k <= r; ++k) {
    const RatMat& B = t.B[k];
    const std::string tag = (k == r) ? "B_d" : "B_" + std::to_string(k);
    bool symmetric = true;
    for (int i = 0; i < r && symmetric; ++i)
      for (int j = 0; j < i; ++j)
        if (B[i][j] != B[j][i]) {
          symmetric = false;
          break;
        }
    cb.is_true(tag + " symmetric", symmetric);

    bool zero_rows = true;
    for (int i = 0; i < r; ++i) {
      Rational s = 0;
      for (int j = 0; j < r; ++j) s += B[i][j];
      if (s != 0) zero_rows = false;
    }
    cb.is_true(tag + " annihilates constants", zero_rows);

    bool psd = true;
    std::string psd_detail;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      std::vector<int> idx;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      RatMat sub(idx.size(), RatVec(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = B[idx[i]][idx[j]];
      const Rational det = rat_determinant(sub);
      if (det < 0) {
        psd = false;
        psd_detail = "principal minor mask=" + std::to_string(mask) + " det=" +
                     to_fraction_string(det);
        break;
      }
    }
    cb.is_true(tag + " positive semidefinite", psd, psd_detail);

    // Quadratic form equals the symbolic integral of squared derivatives for
    // every window in a spanning set (unit vectors and pairwise sums pin the
    // full bilinear form).
    bool oracle_ok = true;
    std::string oracle_detail;
    const long long first_cell = k - r + 1;
    auto q_form = [&](const RatVec& f) {
      Rational q = 0;
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) q += f[i] * B[i][j] * f[j];
      return q;
    };
    auto test_vec = [&](const RatVec& f, const std::string& label) {
      if (!oracle_ok) return;
      const Rational lhs = q_form(f);
      const Rational rhs = smoothness_oracle(first_cell, f);
      if (lhs != rhs) {
        oracle_ok = false;
        oracle_detail = label + ": form=" + to_fraction_string(lhs) +
                        " integral=" + to_fraction_string(rhs);
      }
    };
    for (int i = 0; i < r; ++i) {
      RatVec e(r, Rational(0));
      e[i] = 1;
      test_vec(e, "e" + std::to_string(i));
      for (int j = 0; j < i; ++j) {
        RatVec s(r, Rational(0));
        s[i] = 1;
        s[j] = 1;
        test_vec(s, "e" + std::to_string(i) + "+e" + std::to_string(j));
      }
    }
    cb.is_true(tag + " matches symbolic integration", oracle_ok, oracle_detail);
  }
  for (int k = 0; k < r; ++k) {
    const RatMat& B = t.B[k];
    const RatMat& Bm = t.B[r - 1 - k];
    bool mirror = true;
    for (int i = 0; i < r && mirror; ++i)
      for (int j = 0; j < r; ++j)
        if (Bm[i][j] != B[r - 1 - i][r - 1 - j]) {
          mirror = false;
          break;
        }
    cb.is_true("B mirror B_" + std::to_string(r - 1 - k) + "=rev(B_" + std::to_string(k) +
                   ")",
               mirror);
  }

  // Difference vectors behind tau: annihilation up to the design degree,
  // antisymmetry, and the exact leading factorial.
  {
    for (int m = 0; m <= 2 * r - 1; ++m) {
      RatVec samples(window_cells.size());
      for (std::size_t j = 0; j < window_cells.size(); ++j)
        samples[j] = monomial_cell_average(m, window_cells[j]);
      const Rational v = rat_dot(t.c_tau, samples);
      if (m <= 2 * r - 2) {
        cb.equal("c_tau annihilates x^" + std::to_string(m), v, Rational(0));
      } else {
        Rational fact = 1;
        for (int j = 2; j <= 2 * r - 1; ++j) fact *= j;
        cb.equal("c_tau leading difference equals (2r-1)!", v, fact);
      }
    }
    RatVec neg(t.c_tau.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -t.c_tau[i];
    cb.equal_vec("c_tau antisymmetric", reversed(t.c_tau), neg);

    cb.equal("c_tau_prime trailing zero", t.c_tau_prime.back(), Rational(0));
    for (int m = 0; m <= 2 * r - 2; ++m) {
      RatVec samples(window_cells.size());
      for (std::size_t j = 0; j < window_cells.size(); ++j)
        samples[j] = monomial_cell_average(m, window_cells[j]);
      const Rational v = rat_dot(t.c_tau_prime, samples);
      if (m <= 2 * r - 3) {
        cb.equal("c_tau_prime annihilates x^" + std::to_string(m), v, Rational(0));
      } else {
        Rational fact = 1;
        for (int j = 2; j <= 2 * r - 2; ++j) fact *= j;
        cb.equal("c_tau_prime leading difference equals (2r-2)!", v, fact);
      }
    }
  }

  VerifyReport report;
  report.r = r;
  report.checks = std::move(cb.checks);
  return report;
}

namespace {

void write_row(std::ostream& os, const std::string& label, const RatVec& v) {
  os << label;
  for (const auto& q : v) os << "," << to_fraction_string(q);
  os << "\n";
}

}  // namespace

void write_tables_csv(std::ostream& os, const SchemeTables& t) {
  write_row(os, "c_full", t.c_full);
  write_row(os, "c_full_upwind", t.c_full_upwind);
  for (int k = 0; k <= t.r; ++k)
    write_row(os, "c_sub[" + std::to_string(k) + "]", t.c_sub[k]);
  write_row(os, "d_central", t.d_central);
  write_row(os, "d_upwind", t.d_upwind);
  for (int k = 0; k <= t.r; ++k) {
    const std::string base = (k == t.r) ? "B_d" : "B_" + std::to_string(k);
    for (int i = 0; i < t.r; ++i) write_row(os, base + ".row" + std::to_string(i), t.B[k][i]);
  }
  write_row(os, "c_tau", t.c_tau);
  write_row(os, "c_tau_prime", t.c_tau_prime);
}

void write_tables_text(std::ostream& os, const SchemeTables& t) {
  os << "coefficient tables for the order-" << 2 * t.r << " family (r=" << t.r << ")\n\n";
  auto print_vec = [&os](const std::string& name, const RatVec& v) {
    os << "  " << name << " = [";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? ", " : "") << to_fraction_string(v[i]);
    os << "]\n";
  };
  print_vec("c_full       ", t.c_full);
  print_vec("c_full_upwind", t.c_full_upwind);
  for (int k = 0; k <= t.r; ++k)
    print_vec("c_sub[" + std::to_string(k) + "]     ", t.c_sub[k]);
  print_vec("d_central    ", t.d_central);
  print_vec("d_upwind     ", t.d_upwind);
  os << "\n";
  for (int k = 0; k <= t.r; ++k) {
    os << "  " << ((k == t.r) ? "B_d" : "B_" + std::to_string(k)) << ":\n";
    for (int i = 0; i < t.r; ++i) {
      os << "    [";
      for (int j = 0; j < t.r; ++j)
        os << (j ? ", " : "") << to_fraction_string(t.B[k][i][j]);
      os << "]\n";
    }
  }
  os << "\n";
  print_vec("c_tau        ", t.c_tau);
  print_vec("c_tau_prime  ", t.c_tau_prime);
}

}  // namespace wenoza
