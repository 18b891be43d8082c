// Double-precision snapshots of the exact rational tables, laid out in fixed
// arrays so the reconstruction kernels compile to straight-line code.
#ifndef WENOZA_KERNEL_TABLES_HPP_
#define WENOZA_KERNEL_TABLES_HPP_

#include <array>

namespace wenoza {

inline constexpr int kMaxKernelR = 8;

struct KernelTables {
  int r = 0;
  std::array<double, 2 * kMaxKernelR> c_full{};
  std::array<double, 2 * kMaxKernelR - 1> c_full_upwind{};
  std::array<std::array<double, kMaxKernelR>, kMaxKernelR + 1> c_sub{};
  std::array<double, kMaxKernelR + 1> d_central{};
  std::array<double, kMaxKernelR> d_upwind{};
  std::array<std::array<std::array<double, kMaxKernelR>, kMaxKernelR>, kMaxKernelR + 1> B{};
  std::array<double, 2 * kMaxKernelR> c_tau{};
  std::array<double, 2 * kMaxKernelR> c_tau_prime{};
  // Signed combination of upwind betas forming the odd-order Z reference
  // smoothness measure; available for r in [2,5].
  std::array<double, kMaxKernelR> z_tau_combo{};
  bool z_supported = false;
};

// Frozen tables for r in [2, kMaxKernelR]; derived once from the exact
// rational generator and cached for the process lifetime.
const KernelTables& kernel_tables(int r);

}  // namespace wenoza

#endif  // WENOZA_KERNEL_TABLES_HPP_
