#pragma once

// Double-precision inner loops for the long Dirichlet-type partial sums.
//
// Every kernel exists as a scalar reference and as an AVX2 variant; the
// variant is picked once at runtime. Both follow the same four-lane layout
// and the same operation order (the build disables FMA contraction), so the
// AVX2 results are bit-identical to the scalar reference, not merely close.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace rzeta::simd {

inline constexpr std::size_t kLanes = 4;

/// Compensated (TwoSum-based) running sum of a complex stream. Element i of
/// the stream lands in lane i % 4, so the result does not depend on how the
/// stream is cut into calls.
struct ComplexAccumulator {
  alignas(32) std::array<double, kLanes> sum_re{};
  alignas(32) std::array<double, kLanes> err_re{};
  alignas(32) std::array<double, kLanes> sum_im{};
  alignas(32) std::array<double, kLanes> err_im{};
  std::uint64_t count = 0;

  std::complex<double> value() const;
};

struct KernelTable {
  std::string_view name;
  void (*accumulate)(ComplexAccumulator& acc, const double* re, const double* im, std::size_t n);
  // out[i] = ((L + D)^m - L^m) / m with L = log k, D = log(1 + 1/k), factored
  // as D * sum_j (L + D)^j L^{m-1-j} / m to avoid cancellation.
  void (*log_power_difference)(const double* log_k, const double* log1p_inv, int m, double* out,
                               std::size_t n);
  // out = a - c * w for complex a, complex scalar c, real w.
  void (*subtract_scaled)(const double* a_re, const double* a_im, double c_re, double c_im,
                          const double* w, double* out_re, double* out_im, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();
bool cpu_supports_avx2();

/// The table in use: AVX2 when compiled in and supported by the CPU, unless
/// the environment sets ZETA_SIMD=scalar.
const KernelTable& active_kernels();

inline void accumulate(ComplexAccumulator& acc, std::span<const double> re,
                       std::span<const double> im) {
  active_kernels().accumulate(acc, re.data(), im.data(), re.size() < im.size() ? re.size() : im.size());
}

}  // namespace rzeta::simd
