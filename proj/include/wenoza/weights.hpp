// Weight-formula parameters and scheme identification shared by the kernels,
// the solvers, and the CLI.
#ifndef WENOZA_WEIGHTS_HPP_
#define WENOZA_WEIGHTS_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wenoza {

enum class TauVariant { tau, tau_prime };

struct WeightParams {
  double L = 1.0;     // linear component of the unnormalized weight
  double p = 1.0;     // power on the smoothness ratio
  double q = 1.0;     // amplification exponent on (L + Gamma)
  double eps = 1e-40; // sensitivity floor added to beta
  double mu0 = 1e-40; // descaler floor (affine-invariant mode)
  bool affine_invariant = false;
  TauVariant tau_variant = TauVariant::tau;
  // When set, eps is replaced by dx^value per window (the variable-sensitivity
  // remedy for high-order critical points; callers pass 2(n_cp-1)/p).
  std::optional<double> eps_variable_exponent;

  void validate() const {
    if (!(p >= 1.0)) throw std::invalid_argument("WeightParams: p must be >= 1");
    if (!(q >= 1.0)) throw std::invalid_argument("WeightParams: q must be >= 1");
    if (!(eps >= 0.0)) throw std::invalid_argument("WeightParams: eps must be >= 0");
    if (!(mu0 > 0.0)) throw std::invalid_argument("WeightParams: mu0 must be > 0");
    if (!(L >= 0.0)) throw std::invalid_argument("WeightParams: L must be >= 0");
  }
};

enum class SchemeFamily {
  weno_za,        // even-order central-upwind WENO, averaged downwind indicator
  weno_z,         // odd-order upwind WENO-Z baseline
  linear_central, // even-order linear scheme on the full stencil
  linear_upwind,  // odd-order linear upwind scheme
};

struct SchemeKind {
  SchemeFamily family = SchemeFamily::weno_za;
  int r = 3;
  WeightParams params{};

  bool is_upwind() const {
    return family == SchemeFamily::weno_z || family == SchemeFamily::linear_upwind;
  }
  bool is_linear() const {
    return family == SchemeFamily::linear_central || family == SchemeFamily::linear_upwind;
  }
  int order() const { return is_upwind() ? 2 * r - 1 : 2 * r; }
  int stencil_width() const { return is_upwind() ? 2 * r - 1 : 2 * r; }

  // Catalog names: za4..za16, z3..z9, ct4..ct16, lu3..lu15.
  std::string name() const;
  static SchemeKind from_name(std::string_view name);
};

// One reconstruction window: split-flux samples over the stencil (length 2r,
// or 2r-1 for upwind schemes).  dx participates only when the variable-eps
// remedy is active.
struct Window {
  std::span<const double> samples;
  double dx = 1.0;
};

}  // namespace wenoza

#endif  // WENOZA_WEIGHTS_HPP_
