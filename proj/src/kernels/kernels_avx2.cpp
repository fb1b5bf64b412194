// Compiled with -mavx2 only; reached solely through the runtime dispatch in
// dispatch.cpp after a CPU feature check.

#include <immintrin.h>

#include "zeta/kernels/kernels.hpp"

namespace rzeta::simd {

namespace {

inline void two_sum_scalar(double& sum, double& err, double x) {
  const double s = sum + x;
  const double bp = s - sum;
  const double e = (sum - (s - bp)) + (x - bp);
  sum = s;
  err += e;
}

inline void two_sum_vec(__m256d& sum, __m256d& err, __m256d x) {
  const __m256d s = _mm256_add_pd(sum, x);
  const __m256d bp = _mm256_sub_pd(s, sum);
  const __m256d e = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(s, bp)), _mm256_sub_pd(x, bp));
  sum = s;
  err = _mm256_add_pd(err, e);
}

void accumulate_avx2(ComplexAccumulator& acc, const double* re, const double* im, std::size_t n) {
  std::size_t i = 0;
  // Head: advance to a lane-0 boundary.
  while (i < n && (acc.count + i) % kLanes != 0) {
    const std::size_t lane = (acc.count + i) % kLanes;
    two_sum_scalar(acc.sum_re[lane], acc.err_re[lane], re[i]);
    two_sum_scalar(acc.sum_im[lane], acc.err_im[lane], im[i]);
    ++i;
  }
  __m256d sr = _mm256_load_pd(acc.sum_re.data());
  __m256d er = _mm256_load_pd(acc.err_re.data());
  __m256d si = _mm256_load_pd(acc.sum_im.data());
  __m256d ei = _mm256_load_pd(acc.err_im.data());
  for (; i + kLanes <= n; i += kLanes) {
    two_sum_vec(sr, er, _mm256_loadu_pd(re + i));
    two_sum_vec(si, ei, _mm256_loadu_pd(im + i));
  }
  _mm256_store_pd(acc.sum_re.data(), sr);
  _mm256_store_pd(acc.err_re.data(), er);
  _mm256_store_pd(acc.sum_im.data(), si);
  _mm256_store_pd(acc.err_im.data(), ei);
  for (; i < n; ++i) {
    const std::size_t lane = (acc.count + i) % kLanes;
    two_sum_scalar(acc.sum_re[lane], acc.err_re[lane], re[i]);
    two_sum_scalar(acc.sum_im[lane], acc.err_im[lane], im[i]);
  }
  acc.count += n;
}

void log_power_difference_avx2(const double* log_k, const double* log1p_inv, int m, double* out,
                               std::size_t n) {
  const double inv_m_s = 1.0 / static_cast<double>(m);
  const __m256d inv_m = _mm256_set1_pd(inv_m_s);
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d b = _mm256_loadu_pd(log_k + i);
    const __m256d d = _mm256_loadu_pd(log1p_inv + i);
    const __m256d a = _mm256_add_pd(b, d);
    __m256d s = one;
    __m256d bp = one;
    for (int j = 1; j < m; ++j) {
      bp = _mm256_mul_pd(bp, b);
      s = _mm256_mul_pd(a, s);
      s = _mm256_add_pd(s, bp);
    }
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_mul_pd(d, s), inv_m));
  }
  for (; i < n; ++i) {
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
    out[i] = (d * s) * inv_m_s;
  }
}

void subtract_scaled_avx2(const double* a_re, const double* a_im, double c_re, double c_im,
                          const double* w, double* out_re, double* out_im, std::size_t n) {
  const __m256d cr = _mm256_set1_pd(c_re);
  const __m256d ci = _mm256_set1_pd(c_im);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d wv = _mm256_loadu_pd(w + i);
    _mm256_storeu_pd(out_re + i, _mm256_sub_pd(_mm256_loadu_pd(a_re + i), _mm256_mul_pd(cr, wv)));
    _mm256_storeu_pd(out_im + i, _mm256_sub_pd(_mm256_loadu_pd(a_im + i), _mm256_mul_pd(ci, wv)));
  }
  for (; i < n; ++i) {
    out_re[i] = a_re[i] - c_re * w[i];
    out_im[i] = a_im[i] - c_im * w[i];
  }
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", accumulate_avx2, log_power_difference_avx2,
                                 subtract_scaled_avx2};
  return &table;
}

}  // namespace rzeta::simd
