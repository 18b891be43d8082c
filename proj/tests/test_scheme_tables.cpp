// Exact-value tests for the coefficient generator.  Every number here was
// frozen from the published tables for the order-4/6/8/10 family members and
// their odd-order upwind baselines; the generator must reproduce them exactly
// in rational arithmetic, not merely to rounding.
#include <sstream>
#include <vector>

#include "doctest.h"
#include "wenoza/exact_poly.hpp"
#include "wenoza/rational.hpp"
#include "wenoza/scheme_tables.hpp"

using namespace wenoza;

namespace {

RatVec frac_vec(const std::vector<long long>& nums, long long den) {
  RatVec v(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) v[i] = Rational(nums[i], den);
  return v;
}

RatMat frac_mat(const std::vector<std::vector<long long>>& nums, long long den) {
  RatMat m(nums.size());
  for (std::size_t i = 0; i < nums.size(); ++i) m[i] = frac_vec(nums[i], den);
  return m;
}

RatMat rev_mat(const RatMat& a) {
  const std::size_t n = a.size();
  RatMat b(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i][j] = a[n - 1 - i][n - 1 - j];
  return b;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 7) == 0);
  CHECK(binomial(20, 10) == 184756);
  CHECK(to_fraction_string(Rational(-8, 60)) == "-2/15");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(rat_pow(Rational(1, 2), 3) == Rational(1, 8));
  CHECK(rat_pow(Rational(2), -2) == Rational(1, 4));

  RatMat a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
  RatVec x = solve_linear(a, {Rational(5), Rational(10)});
  CHECK(x == frac_vec({1, 3}, 1));
  CHECK(rat_determinant(a) == 5);
  CHECK(mat_inverse(a) == frac_mat({{3, -1}, {-1, 2}}, 5));
  CHECK_THROWS_AS(solve_linear(RatMat{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}},
                               RatVec{Rational(1), Rational(1)}),
                  std::domain_error);
}

TEST_CASE("exact polynomial oracle basics") {
  // Averages of x^2 over cells -1,0,1 are 13/12, 1/12, 13/12; the primitive
  // interpolation must return exactly x^2 and its interface value 1/4.
  RatVec avg{monomial_cell_average(2, -1), monomial_cell_average(2, 0),
             monomial_cell_average(2, 1)};
  CHECK(avg == frac_vec({13, 1, 13}, 12));
  const RatPoly p = poly_from_cell_averages(-1, avg);
  CHECK(poly_eval(p, Rational(1, 2)) == Rational(1, 4));
  CHECK(p.size() == 3);
  CHECK(p[0] == 0);
  CHECK(p[1] == 0);
  CHECK(p[2] == 1);
  // Smoothness of x^2 on [-1/2,1/2]: int (2x)^2 + int (2)^2 = 1/3 + 4 = 13/3.
  CHECK(smoothness_oracle(-1, avg) == Rational(13, 3));
}

TEST_CASE("fourth-order family (r=2) matches published tables") {
  CHECK(full_stencil_coeffs(2) == frac_vec({-1, 7, 7, -1}, 12));
  CHECK(candidate_coeffs(2, 0) == frac_vec({-1, 3}, 2));
  CHECK(candidate_coeffs(2, 1) == frac_vec({1, 1}, 2));
  CHECK(candidate_coeffs(2, 2) == frac_vec({3, -1}, 2));
  CHECK(ideal_weights(2, true) == frac_vec({1, 4, 1}, 6));
  CHECK(ideal_weights(2, false) == frac_vec({1, 2}, 3));
  const RatMat ones = frac_mat({{1, -1}, {-1, 1}}, 1);
  CHECK(smoothness_matrix(2, 0) == ones);
  CHECK(smoothness_matrix(2, 1) == ones);
  CHECK(smoothness_matrix(2, 2) == ones);
  CHECK(tau_vectors(2).first == frac_vec({-1, 3, -3, 1}, 1));
}

TEST_CASE("sixth-order family (r=3) matches published tables") {
  CHECK(full_stencil_coeffs(3) == frac_vec({1, -8, 37, 37, -8, 1}, 60));
  CHECK(full_stencil_coeffs_upwind(3) == frac_vec({2, -13, 47, 27, -3}, 60));
  CHECK(candidate_coeffs(3, 0) == frac_vec({2, -7, 11}, 6));
  CHECK(candidate_coeffs(3, 1) == frac_vec({-1, 5, 2}, 6));
  CHECK(candidate_coeffs(3, 2) == frac_vec({2, 5, -1}, 6));
  CHECK(candidate_coeffs(3, 3) == frac_vec({11, -7, 2}, 6));
  CHECK(ideal_weights(3, true) == frac_vec({1, 9, 9, 1}, 20));
  CHECK(ideal_weights(3, false) == frac_vec({1, 6, 3}, 10));

  const RatMat B0 = frac_mat({{8, -19, 11}, {-19, 50, -31}, {11, -31, 20}}, 6);
  const RatMat B1 = frac_mat({{8, -13, 5}, {-13, 26, -13}, {5, -13, 8}}, 6);
  const RatMat Bd = frac_mat({{44, -73, 29}, {-73, 122, -49}, {29, -49, 20}}, 6);
  CHECK(smoothness_matrix(3, 0) == B0);
  CHECK(smoothness_matrix(3, 1) == B1);
  CHECK(smoothness_matrix(3, 2) == rev_mat(B0));
  CHECK(smoothness_matrix(3, 3) == Bd);

  const auto [tau, tau_prime] = tau_vectors(3);
  CHECK(tau == frac_vec({-1, 5, -10, 10, -5, 1}, 1));
  CHECK(tau_prime == frac_vec({1, -4, 6, -4, 1, 0}, 1));
}

TEST_CASE("sixth-order smoothness quadratic forms reproduce known values") {
  // Hand-expanded values for simple windows: step data (0,0,1) measured by
  // B_1 gives 4/3; (0,1,1) measured by B_2 gives 10/3.
  auto quad = [](const RatMat& B, const RatVec& f) {
    Rational q = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) q += f[i] * B[i][j] * f[j];
    return q;
  };
  CHECK(quad(smoothness_matrix(3, 1), frac_vec({0, 0, 1}, 1)) == Rational(4, 3));
  CHECK(quad(smoothness_matrix(3, 2), frac_vec({0, 1, 1}, 1)) == Rational(10, 3));
  // Same values through the symbolic-integration oracle (substencils S_1 and
  // S_2 sit at first cells -1 and 0).
  const RatVec f1 = frac_vec({0, 0, 1}, 1);
  const RatVec f2 = frac_vec({0, 1, 1}, 1);
  CHECK(smoothness_oracle(-1, f1) == Rational(4, 3));
  CHECK(smoothness_oracle(0, f2) == Rational(10, 3));
}

TEST_CASE("eighth-order family (r=4) matches published tables") {
  CHECK(full_stencil_coeffs(4) == frac_vec({-3, 29, -139, 533, 533, -139, 29, -3}, 840));
  CHECK(candidate_coeffs(4, 0) == frac_vec({-3, 13, -23, 25}, 12));
  CHECK(candidate_coeffs(4, 1) == frac_vec({1, -5, 13, 3}, 12));
  CHECK(candidate_coeffs(4, 2) == frac_vec({-1, 7, 7, -1}, 12));
  CHECK(candidate_coeffs(4, 3) == reversed(frac_vec({1, -5, 13, 3}, 12)));
  CHECK(candidate_coeffs(4, 4) == reversed(frac_vec({-3, 13, -23, 25}, 12)));
  CHECK(ideal_weights(4, true) == frac_vec({1, 16, 36, 16, 1}, 70));
  CHECK(ideal_weights(4, false) == frac_vec({1, 12, 18, 4}, 35));

  const RatMat B0 = frac_mat({{547, -1941, 2321, -927},
                              {-1941, 7043, -8623, 3521},
                              {2321, -8623, 11003, -4701},
                              {-927, 3521, -4701, 2107}},
                             240);
  const RatMat B1 = frac_mat({{267, -821, 801, -247},
                              {-821, 2843, -2983, 961},
                              {801, -2983, 3443, -1261},
                              {-247, 961, -1261, 547}},
                             240);
  const RatMat Bd = frac_mat({{7107, -16901, 13521, -3727},
                              {-16901, 40643, -32863, 9121},
                              {13521, -32863, 26843, -7501},
                              {-3727, 9121, -7501, 2107}},
                             240);
  CHECK(smoothness_matrix(4, 0) == B0);
  CHECK(smoothness_matrix(4, 1) == B1);
  CHECK(smoothness_matrix(4, 2) == rev_mat(B1));
  CHECK(smoothness_matrix(4, 3) == rev_mat(B0));
  CHECK(smoothness_matrix(4, 4) == Bd);
  CHECK(tau_vectors(4).first == frac_vec({-1, 7, -21, 35, -35, 21, -7, 1}, 1));
}

TEST_CASE("tenth-order family (r=5) matches published tables") {
  CHECK(full_stencil_coeffs(5) ==
        frac_vec({2, -23, 127, -473, 1627, 1627, -473, 127, -23, 2}, 2520));
  CHECK(candidate_coeffs(5, 0) == frac_vec({12, -63, 137, -163, 137}, 60));
  CHECK(candidate_coeffs(5, 1) == frac_vec({-3, 17, -43, 77, 12}, 60));
  CHECK(candidate_coeffs(5, 2) == frac_vec({2, -13, 47, 27, -3}, 60));
  CHECK(candidate_coeffs(5, 3) == reversed(frac_vec({2, -13, 47, 27, -3}, 60)));
  CHECK(candidate_coeffs(5, 4) == reversed(frac_vec({-3, 17, -43, 77, 12}, 60)));
  CHECK(candidate_coeffs(5, 5) == reversed(frac_vec({12, -63, 137, -163, 137}, 60)));
  CHECK(ideal_weights(5, true) == frac_vec({1, 25, 100, 100, 25, 1}, 252));

  const RatMat B0 = frac_mat({{45316, -208501, 364863, -288007, 86329},
                              {-208501, 965926, -1704396, 1358458, -411487},
                              {364863, -1704396, 3042786, -2462076, 758823},
                              {-288007, 1358458, -2462076, 2041126, -649501},
                              {86329, -411487, 758823, -649501, 215836}},
                             10080);
  const RatMat B1 = frac_mat({{13816, -60871, 99213, -70237, 18079},
                              {-60871, 277126, -464976, 337018, -88297},
                              {99213, -464976, 812586, -611976, 165153},
                              {-70237, 337018, -611976, 485446, -140251},
                              {18079, -88297, 165153, -140251, 45316}},
                             10080);
  const RatMat B2 = frac_mat({{13816, -51001, 67923, -38947, 8209},
                              {-51001, 209926, -299076, 179098, -38947},
                              {67923, -299076, 462306, -299076, 67923},
                              {-38947, 179098, -299076, 209926, -51001},
                              {8209, -38947, 67923, -51001, 13816}},
                             10080);
  const RatMat Bd = frac_mat({{942016, -2964751, 3597813, -2004757, 429679},
                              {-2964751, 9449926, -11584896, 6499258, -1399537},
                              {3597813, -11584896, 14319786, -8079576, 1746873},
                              {-2004757, 6499258, -8079576, 4577926, -992851},
                              {429679, -1399537, 1746873, -992851, 215836}},
                             10080);
  CHECK(smoothness_matrix(5, 0) == B0);
  CHECK(smoothness_matrix(5, 1) == B1);
  CHECK(smoothness_matrix(5, 2) == B2);
  CHECK(smoothness_matrix(5, 3) == rev_mat(B1));
  CHECK(smoothness_matrix(5, 4) == rev_mat(B0));
  CHECK(smoothness_matrix(5, 5) == Bd);
  CHECK(tau_vectors(5).first ==
        frac_vec({-1, 9, -36, 84, -126, 126, -84, 36, -9, 1}, 1));
}

TEST_CASE("verifier accepts every supported order") {
  for (int r = 2; r <= kMaxTableR; ++r) {
    const VerifyReport rep = verify_tables(r);
    INFO("r = ", r, ", first failure: ",
         (rep.first_failure() ? rep.first_failure()->name + " [" +
                                    rep.first_failure()->detail + "]"
                              : std::string("none")));
    CHECK(rep.all_pass());
    CHECK(rep.checks.size() > 20);
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(candidate_coeffs(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(candidate_coeffs(9, 0), std::invalid_argument);
  CHECK_THROWS_AS(candidate_coeffs(3, -1), std::invalid_argument);
  CHECK_THROWS_AS(candidate_coeffs(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(smoothness_matrix(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(ideal_weights(0, true), std::invalid_argument);
  CHECK_NOTHROW(candidate_coeffs(1, 0));
  CHECK(candidate_coeffs(1, 0) == frac_vec({1}, 1));
  CHECK(candidate_coeffs(1, 1) == frac_vec({1}, 1));
}

TEST_CASE("table emission formats") {
  const SchemeTables t = make_scheme_tables(3);
  std::ostringstream csv;
  write_tables_csv(csv, t);
  const std::string s = csv.str();
  CHECK(s.find("c_full,1/60,-2/15,37/60,37/60,-2/15,1/60") != std::string::npos);
  CHECK(s.find("c_sub[3],11/6,-7/6,1/3") != std::string::npos);  // downwind candidate
  CHECK(s.find("B_d.row2,29/6,-49/6,10/3") != std::string::npos);
  CHECK(s.find("d_central,1/20,9/20,9/20,1/20") != std::string::npos);
  CHECK(s.find("c_tau,-1/1,5/1,-10/1,10/1,-5/1,1/1") != std::string::npos);

  std::ostringstream txt;
  write_tables_text(txt, t);
  CHECK(txt.str().find("order-6") != std::string::npos);
  CHECK(txt.str().find("B_d") != std::string::npos);
}
