#pragma once

// Checkpointed accumulation of a series into a PartialSumSeries: raw partial
// sums S_K at every checkpoint K and the Cesaro window mean of S_j over
// floor(3K/4) < j <= K, the latter via
//   mean = S_a + sum_{a<k<=K} term_k (K - k + 1) / (K - a),   a = floor(3K/4).

#include <vector>

#include "zeta/kernels/kernels.hpp"
#include "zeta/laurent.hpp"

namespace rzeta {

void check_checkpoints(const std::vector<long>& checkpoints, long limit);

/// Terms fed one at a time (k = 1, 2, ...) in HpComplex.
class ExactCheckpointMonitor {
 public:
  ExactCheckpointMonitor(std::vector<long> checkpoints, long bits);

  long max_k() const { return checkpoints_.back(); }
  void add(long k, const HpComplex& term);
  PartialSumSeries finish() const;

 private:
  std::vector<long> checkpoints_;
  std::vector<long> window_starts_;
  long bits_;
  HpComplex sum_;
  std::vector<HpComplex> raw_;
  std::vector<HpComplex> at_window_start_;
  std::vector<HpComplex> weighted_;
};

/// Terms fed in double-precision blocks through the compensated SIMD
/// accumulator.
class CompensatedCheckpointMonitor {
 public:
  CompensatedCheckpointMonitor(std::vector<long> checkpoints, long bits);

  long max_k() const { return checkpoints_.back(); }
  /// Terms for k = k0 .. k0 + n - 1; blocks must arrive in order.
  void add_block(long k0, const double* re, const double* im, std::size_t n);
  PartialSumSeries finish() const;

 private:
  std::vector<long> checkpoints_;
  std::vector<long> window_starts_;
  std::vector<long> stops_;  // sorted union of checkpoints and window starts
  std::vector<std::complex<double>> stop_values_;
  long bits_;
  long next_k_ = 1;
  simd::ComplexAccumulator sum_;
  std::vector<simd::ComplexAccumulator> weighted_;
  std::vector<double> scratch_re_, scratch_im_;
};

}  // namespace rzeta
