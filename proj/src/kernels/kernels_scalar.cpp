#include "zeta/kernels/kernels.hpp"

namespace rzeta::simd {

namespace {

inline void two_sum_into(double& sum, double& err, double x) {
  const double s = sum + x;
  const double bp = s - sum;
  const double e = (sum - (s - bp)) + (x - bp);
  sum = s;
  err += e;
}

void accumulate_scalar(ComplexAccumulator& acc, const double* re, const double* im, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lane = (acc.count + i) % kLanes;
    two_sum_into(acc.sum_re[lane], acc.err_re[lane], re[i]);
    two_sum_into(acc.sum_im[lane], acc.err_im[lane], im[i]);
  }
  acc.count += n;
}

void log_power_difference_scalar(const double* log_k, const double* log1p_inv, int m, double* out,
                                 std::size_t n) {
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    const double b = log_k[i];
    const double d = log1p_inv[i];
    const double a = b + d;
    double s = 1.0;
    double bp = 1.0;
    for (int j = 1; j < m; ++j) {
      bp = bp * b;
      s = a * s;
      s = s + bp;
    }
    out[i] = (d * s) * inv_m;
  }
}

void subtract_scaled_scalar(const double* a_re, const double* a_im, double c_re, double c_im,
                            const double* w, double* out_re, double* out_im, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out_re[i] = a_re[i] - c_re * w[i];
    out_im[i] = a_im[i] - c_im * w[i];
  }
}

}  // namespace

std::complex<double> ComplexAccumulator::value() const {
  auto reduce = [](const std::array<double, kLanes>& sum, const std::array<double, kLanes>& err) {
    double s = sum[0];
    double e = err[0];
    for (std::size_t l = 1; l < kLanes; ++l) {
      two_sum_into(s, e, sum[l]);
      e += err[l];
    }
    return s + e;
  };
  return {reduce(sum_re, err_re), reduce(sum_im, err_im)};
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", accumulate_scalar, log_power_difference_scalar,
                                 subtract_scaled_scalar};
  return table;
}

}  // namespace rzeta::simd
