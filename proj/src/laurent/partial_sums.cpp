#include "zeta/partial_sums.hpp"

#include <algorithm>
#include <string>

namespace rzeta {

void check_checkpoints(const std::vector<long>& checkpoints, long limit) {
  if (checkpoints.empty()) throw Error(ErrorKind::InvalidArgument, "no checkpoints given");
  long prev = 0;
  for (long k : checkpoints) {
    if (k <= prev) throw Error(ErrorKind::InvalidArgument, "checkpoints must be increasing and >= 1");
    prev = k;
  }
  if (checkpoints.back() > limit) {
    throw Error(ErrorKind::OutOfRange, "checkpoint " + std::to_string(checkpoints.back()) +
                                           " beyond limit " + std::to_string(limit));
  }
}

size_t last_quartile_start(size_t n_checkpoints) {
  if (n_checkpoints == 0) return 0;
  return 3 * (n_checkpoints - 1) / 4;
}

HpReal oscillation_of(const std::vector<HpComplex>& raw) {
  const long p = raw.empty() ? 64 : raw.front().bits();
  HpReal best(p);
  for (size_t i = last_quartile_start(raw.size()); i < raw.size(); ++i) {
    for (size_t j = i + 1; j < raw.size(); ++j) best = max(best, abs(raw[i] - raw[j]));
  }
  return best;
}

void PartialSumSeries::set_oracle(const HpComplex& oracle) {
  distance_to_oracle.clear();
  for (const auto& v : smoothed) distance_to_oracle.push_back(abs(v - oracle.with_bits(v.bits())));
}

namespace {

std::vector<long> window_starts_for(const std::vector<long>& checkpoints) {
  std::vector<long> out;
  out.reserve(checkpoints.size());
  for (long k : checkpoints) out.push_back(3 * k / 4);
  return out;
}

}  // namespace

ExactCheckpointMonitor::ExactCheckpointMonitor(std::vector<long> checkpoints, long bits)
    : checkpoints_(std::move(checkpoints)),
      window_starts_(window_starts_for(checkpoints_)),
      bits_(bits),
      sum_(bits),
      raw_(checkpoints_.size(), HpComplex(bits)),
      at_window_start_(checkpoints_.size(), HpComplex(bits)),
      weighted_(checkpoints_.size(), HpComplex(bits)) {}

void ExactCheckpointMonitor::add(long k, const HpComplex& term) {
  sum_ += term;
  for (size_t i = 0; i < checkpoints_.size(); ++i) {
    const long K = checkpoints_[i];
    const long a = window_starts_[i];
    if (k == a) at_window_start_[i] = sum_;
    if (k > a && k <= K) weighted_[i] += term * (K - k + 1);
    if (k == K) raw_[i] = sum_;
  }
}

PartialSumSeries ExactCheckpointMonitor::finish() const {
  PartialSumSeries out;
  out.checkpoints = checkpoints_;
  out.raw = raw_;
  for (size_t i = 0; i < checkpoints_.size(); ++i) {
    const long width = checkpoints_[i] - window_starts_[i];
    out.smoothed.push_back(at_window_start_[i] + weighted_[i] / width);
  }
  out.oscillation = oscillation_of(out.raw);
  return out;
}

CompensatedCheckpointMonitor::CompensatedCheckpointMonitor(std::vector<long> checkpoints, long bits)
    : checkpoints_(std::move(checkpoints)),
      window_starts_(window_starts_for(checkpoints_)),
      bits_(bits),
      weighted_(checkpoints_.size()) {
  stops_ = checkpoints_;
  stops_.insert(stops_.end(), window_starts_.begin(), window_starts_.end());
  std::sort(stops_.begin(), stops_.end());
  stops_.erase(std::unique(stops_.begin(), stops_.end()), stops_.end());
  stop_values_.assign(stops_.size(), 0.0);
}

void CompensatedCheckpointMonitor::add_block(long k0, const double* re, const double* im,
                                             std::size_t n) {
  if (k0 != next_k_) throw Error(ErrorKind::InvalidArgument, "partial-sum blocks out of order");
  const auto& kernels = simd::active_kernels();
  const long k1 = k0 + static_cast<long>(n);  // exclusive

  long k = k0;
  for (size_t s = 0; s < stops_.size(); ++s) {
    const long stop = stops_[s];
    if (stop < k0 || stop >= k1) continue;
    kernels.accumulate(sum_, re + (k - k0), im + (k - k0), static_cast<std::size_t>(stop + 1 - k));
    k = stop + 1;
    stop_values_[s] = sum_.value();
  }
  kernels.accumulate(sum_, re + (k - k0), im + (k - k0), static_cast<std::size_t>(k1 - k));

  for (size_t i = 0; i < checkpoints_.size(); ++i) {
    const long K = checkpoints_[i];
    const long lo = std::max(k0, window_starts_[i] + 1);
    const long hi = std::min(k1, K + 1);
    if (lo >= hi) continue;
    const size_t len = static_cast<size_t>(hi - lo);
    scratch_re_.resize(len);
    scratch_im_.resize(len);
    const double width = static_cast<double>(K - window_starts_[i]);
    for (size_t j = 0; j < len; ++j) {
      const long kk = lo + static_cast<long>(j);
      const double w = static_cast<double>(K - kk + 1) / width;
      scratch_re_[j] = re[kk - k0] * w;
      scratch_im_[j] = im[kk - k0] * w;
    }
    kernels.accumulate(weighted_[i], scratch_re_.data(), scratch_im_.data(), len);
  }
  next_k_ = k1;
}

PartialSumSeries CompensatedCheckpointMonitor::finish() const {
  auto at = [&](long k) -> std::complex<double> {
    if (k == 0) return 0.0;
    const auto it = std::lower_bound(stops_.begin(), stops_.end(), k);
    return stop_values_[static_cast<size_t>(it - stops_.begin())];
  };
  PartialSumSeries out;
  out.checkpoints = checkpoints_;
  for (size_t i = 0; i < checkpoints_.size(); ++i) {
    const std::complex<double> raw = at(checkpoints_[i]);
    const std::complex<double> smooth = at(window_starts_[i]) + weighted_[i].value();
    out.raw.emplace_back(raw.real(), raw.imag(), bits_);
    out.smoothed.emplace_back(smooth.real(), smooth.imag(), bits_);
  }
  out.oscillation = oscillation_of(out.raw);
  return out;
}

}  // namespace rzeta
