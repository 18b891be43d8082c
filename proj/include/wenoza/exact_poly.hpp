// Exact polynomial algebra over rationals.  Used by the table verifier to
// rebuild reconstruction polynomials through an independent route (primitive
// interpolation) and integrate smoothness measures symbolically, so the
// moment-matrix derivations in scheme_tables.cpp are cross-checked rather than
// merely recomputed.
#ifndef WENOZA_EXACT_POLY_HPP_
#define WENOZA_EXACT_POLY_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>

#include "wenoza/rational.hpp"

namespace wenoza {

// Coefficient vector: p(x) = sum_i c[i] * x^i.  Empty vector means p == 0.
using RatPoly = RatVec;

inline Rational poly_eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline RatPoly poly_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rational(i);
  return d;
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Rational poly_integrate(const RatPoly& p, const Rational& lo, const Rational& hi) {
  Rational acc = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational term = p[i] / Rational(i + 1);
    acc += term * (rat_pow(hi, static_cast<long long>(i) + 1) -
                   rat_pow(lo, static_cast<long long>(i) + 1));
  }
  return acc;
}

// Mean value of x^m over the unit cell centered at integer offset `cell`
// (cell spans [cell-1/2, cell+1/2]).  These are the exact cell-average samples
// of the monomial basis used throughout the verification tests.
inline Rational monomial_cell_average(unsigned m, long long cell) {
  const Rational hi = Rational(2 * cell + 1) / 2;
  const Rational lo = Rational(2 * cell - 1) / 2;
  return (rat_pow(hi, m + 1) - rat_pow(lo, m + 1)) / Rational(m + 1);
}

// Reconstruction polynomial from cell averages via the primitive function:
// P(y) interpolates the running sums of the averages at the m+1 cell
// interfaces, and p = P'.  `first_cell` is the integer offset of the leftmost
// cell.  This route never touches the moment matrices, which makes it a true
// oracle for candidate coefficients and smoothness quadratic forms.
inline RatPoly poly_from_cell_averages(long long first_cell, std::span<const Rational> avg) {
  const std::size_t m = avg.size();
  if (m == 0) throw std::invalid_argument("poly_from_cell_averages: empty window");
  RatVec nodes(m + 1);
  RatVec prim(m + 1, Rational(0));
  for (std::size_t j = 0; j <= m; ++j) {
    nodes[j] = Rational(2 * (first_cell + static_cast<long long>(j)) - 1) / 2;
    if (j > 0) prim[j] = prim[j - 1] + avg[j - 1];
  }
  // Lagrange interpolation of (nodes, prim), expanded to monomial coefficients.
  RatPoly P(m + 1, Rational(0));
  for (std::size_t j = 0; j <= m; ++j) {
    RatPoly basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t l = 0; l <= m; ++l) {
      if (l == j) continue;
      basis = poly_mul(basis, RatPoly{-nodes[l], Rational(1)});
      denom *= nodes[j] - nodes[l];
    }
    const Rational w = prim[j] / denom;
    for (std::size_t i = 0; i < basis.size(); ++i) P[i] += w * basis[i];
  }
  return poly_derivative(P);
}

// Smoothness of the degree<r reconstruction polynomial on the cell [-1/2,1/2]:
// sum over derivative orders l=1..r-1 of the integral of (p^(l))^2.
// Independent oracle for the quadratic forms produced by smoothness_matrix().
inline Rational smoothness_oracle(long long first_cell, std::span<const Rational> avg) {
  RatPoly p = poly_from_cell_averages(first_cell, avg);
  Rational total = 0;
  const std::size_t r = avg.size();
  for (std::size_t l = 1; l < r; ++l) {
    p = poly_derivative(p);
    total += poly_integrate(poly_mul(p, p), Rational(-1) / 2, Rational(1) / 2);
  }
  return total;
}

}  // namespace wenoza

#endif  // WENOZA_EXACT_POLY_HPP_
