// Exact coefficient tables for the even-order central-upwind WENO family and
// its odd-order upwind baselines, derived from scratch in rational arithmetic:
//
//   * candidate (substencil) reconstruction coefficients,
//   * full-stencil linear coefficients (2r and 2r-1 point),
//   * ideal weights (central closed form, upwind by exact solve),
//   * smoothness quadratic forms, including the downwind substencil measured
//     on the upwind cell,
//   * the high-order undivided-difference vectors behind the global
//     smoothness reference tau.
//
// On a 2r-point window w[0..2r-1] around interface i+1/2 (w[s] is the cell
// average at x_{i-r+1+s}), substencil k in {0..r} occupies slots k..k+r-1;
// k==r is the downwind substencil whose smoothness is still measured on the
// cell left of the interface.
#ifndef WENOZA_SCHEME_TABLES_HPP_
#define WENOZA_SCHEME_TABLES_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wenoza/rational.hpp"

namespace wenoza {

inline constexpr int kMinTableR = 1;
inline constexpr int kMaxTableR = 8;

struct SchemeTables {
  int r = 0;
  RatVec c_full;                // 2r-point linear coefficients (order 2r)
  RatVec c_full_upwind;         // (2r-1)-point linear coefficients (order 2r-1)
  std::vector<RatVec> c_sub;    // r+1 candidates, r coefficients each
  RatVec d_central;             // r+1 ideal weights of the even-order scheme
  RatVec d_upwind;              // r ideal weights of the odd-order scheme
  std::vector<RatMat> B;        // r+1 smoothness forms; B[r] is the downwind one
  RatVec c_tau;                 // (2r-1)-th undivided difference on 2r points
  RatVec c_tau_prime;           // (2r-2)-th difference on the first 2r-1 points
};

// k in [0, r]; k == r selects the downwind substencil.
RatVec candidate_coeffs(int r, int k);
RatVec full_stencil_coeffs(int r);
RatVec full_stencil_coeffs_upwind(int r);
RatVec ideal_weights(int r, bool central);
RatMat smoothness_matrix(int r, int k);  // requires r >= 2 (identically 0 for r=1)
std::pair<RatVec, RatVec> tau_vectors(int r);

SchemeTables make_scheme_tables(int r);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // on failure, both sides printed as exact fractions
};

struct VerifyReport {
  int r = 0;
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
  const VerifyCheck* first_failure() const;
};

// Re-derives every table invariant in exact arithmetic: consistency and
// symmetry of the linear coefficients, polynomial exactness of each candidate,
// ideal-weight combination identities, symmetry/positive-semidefiniteness/
// constant-annihilation of the smoothness forms plus agreement with the
// primitive-interpolation oracle, and the difference-vector properties.
VerifyReport verify_tables(int r);

void write_tables_text(std::ostream& os, const SchemeTables& t);
void write_tables_csv(std::ostream& os, const SchemeTables& t);

}  // namespace wenoza

#endif  // WENOZA_SCHEME_TABLES_HPP_
