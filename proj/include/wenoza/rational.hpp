// Exact rational scalars, vectors and dense matrices used by the coefficient
// generator.  All derivations run in arbitrary-precision rational arithmetic;
// doubles only appear when tables are frozen for the runtime kernels.
#ifndef WENOZA_RATIONAL_HPP_
#define WENOZA_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wenoza {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Canonical "num/den" rendering (always prints the denominator, e.g. "2/1").
inline std::string to_fraction_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (unsigned j = 1; j <= k; ++j) {
    result = result * (n - k + j) / j;  // exact: result*(n-k+j) divisible by j here
  }
  return result;
}

inline Rational rat_pow(Rational base, long long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    base = Rational(1) / base;
    e = -e;
  }
  Rational acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline RatMat rat_identity(std::size_t n) {
  RatMat id(n, RatVec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline RatMat rat_transpose(const RatMat& a) {
  if (a.empty()) return {};
  RatMat t(a[0].size(), RatVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline RatVec rat_mat_vec(const RatMat& a, const RatVec& x) {
  RatVec y(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

inline RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
  const std::size_t n = a.size(), m = b[0].size(), k = b.size();
  RatMat c(n, RatVec(m, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

inline Rational rat_dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gaussian elimination with exact pivoting.  Exact arithmetic makes partial
// pivoting a matter of picking any nonzero pivot; the largest-magnitude choice
// merely keeps intermediate integers smaller.
inline RatVec solve_linear(RatMat a, RatVec b) {
  const std::size_t n = a.size();
  if (n == 0 || a[0].size() != n || b.size() != n)
    throw std::invalid_argument("solve_linear: dimension mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_linear: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      a[row][col] = 0;
      for (std::size_t j = col + 1; j < n; ++j) a[row][j] -= factor * a[col][j];
      b[row] -= factor * b[col];
    }
  }
  RatVec x(n, Rational(0));
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

inline RatMat mat_inverse(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat inv(n, RatVec(n));
  for (std::size_t col = 0; col < n; ++col) {
    RatVec e(n, Rational(0));
    e[col] = 1;
    RatVec x = solve_linear(a, e);
    for (std::size_t row = 0; row < n; ++row) inv[row][col] = x[row];
  }
  return inv;
}

inline Rational rat_determinant(RatMat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  return det;
}

template <typename T>
inline std::vector<T> reversed(std::vector<T> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace wenoza

#endif  // WENOZA_RATIONAL_HPP_
