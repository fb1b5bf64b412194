#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "zeta/precision.hpp"

namespace rzeta {

/// mu(1..N) from a linear sieve, plus per-table caches of log k and
/// log(1 + 1/k) in double precision (filled on first use). Copies share
/// storage.
class MobiusTable {
 public:
  static constexpr long kMaxLimit = 100'000'000;

  explicit MobiusTable(long limit);

  long limit() const;
  int mu(long k) const;
  /// Index 0 is unused and holds 0.
  std::span<const std::int8_t> values() const;

  /// log k for k = 0..limit (entry 0 is 0).
  std::span<const double> log_k() const;
  /// log(1 + 1/k) for k = 0..limit (entry 0 is 0).
  std::span<const double> log1p_inv() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

MobiusTable sieve_mobius(long limit);

/// M(x) = sum_{n <= x} mu(n).
long mertens(long x, const MobiusTable& table);

/// mu(k) by trial division; independent of the sieve.
int mobius_by_factorization(std::uint64_t k);

/// Default cut-over between the double-precision compensated path and full
/// HpComplex accumulation in dirichlet_partial.
inline constexpr long kCompensatedTermLimit = 1'000'000;

/// sum_{k <= K} mu(k) log^n(k) k^{-rho}, in increasing k.
///
/// Up to `full_precision_above` terms the sum runs in double precision with a
/// compensated accumulator (the SIMD kernels), so the result carries about
/// 15 significant digits whatever ctx asks for. Longer sums are accumulated
/// in HpComplex at ctx.bits.
HpComplex dirichlet_partial(const HpComplex& rho, int n, long K, const MobiusTable& table,
                            const PrecisionContext& ctx,
                            long full_precision_above = kCompensatedTermLimit);

/// Same sum carried out entirely in HpComplex at ctx.bits.
HpComplex dirichlet_partial_exact(const HpComplex& rho, int n, long K, const MobiusTable& table,
                                  const PrecisionContext& ctx);

}  // namespace rzeta
