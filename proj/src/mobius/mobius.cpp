#include "zeta/mobius.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "zeta/kernels/kernels.hpp"
#include "zeta/mobius_terms.hpp"
#include "zeta/parallel.hpp"

namespace rzeta {

struct MobiusTable::Impl {
  long limit;
  std::vector<std::int8_t> mu;
  mutable std::once_flag logs_once;
  mutable std::vector<double> log_k;
  mutable std::vector<double> log1p_inv;

  void fill_logs() const {
    std::call_once(logs_once, [this] {
      log_k.assign(static_cast<size_t>(limit) + 1, 0.0);
      log1p_inv.assign(static_cast<size_t>(limit) + 1, 0.0);
      for (long k = 1; k <= limit; ++k) {
        log_k[k] = std::log(static_cast<double>(k));
        log1p_inv[k] = std::log1p(1.0 / static_cast<double>(k));
      }
    });
  }
};

MobiusTable::MobiusTable(long limit) {
  if (limit < 1) throw Error(ErrorKind::InvalidArgument, "sieve limit must be >= 1");
  if (limit > kMaxLimit) {
    throw Error(ErrorKind::LimitTooLarge,
                "sieve limit " + std::to_string(limit) + " exceeds " + std::to_string(kMaxLimit));
  }
  auto impl = std::make_shared<Impl>();
  impl->limit = limit;
  auto& mu = impl->mu;
  mu.assign(static_cast<size_t>(limit) + 1, 0);
  mu[1] = 1;
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(static_cast<size_t>(limit) + 1, false);
  for (long i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<std::uint32_t>(i));
      mu[i] = -1;
    }
    for (const std::uint32_t p : primes) {
      const long m = i * static_cast<long>(p);
      if (m > limit) break;
      composite[m] = true;
      if (i % p == 0) {
        mu[m] = 0;
        break;
      }
      mu[m] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  impl_ = std::move(impl);
}

long MobiusTable::limit() const { return impl_->limit; }

int MobiusTable::mu(long k) const {
  if (k < 1 || k > impl_->limit) {
    throw Error(ErrorKind::OutOfRange, "mu(" + std::to_string(k) + ") outside the sieved range");
  }
  return impl_->mu[k];
}

std::span<const std::int8_t> MobiusTable::values() const { return impl_->mu; }

std::span<const double> MobiusTable::log_k() const {
  impl_->fill_logs();
  return impl_->log_k;
}

std::span<const double> MobiusTable::log1p_inv() const {
  impl_->fill_logs();
  return impl_->log1p_inv;
}

MobiusTable sieve_mobius(long limit) { return MobiusTable(limit); }

long mertens(long x, const MobiusTable& table) {
  if (x < 0 || x > table.limit()) {
    throw Error(ErrorKind::OutOfRange,
                "mertens(" + std::to_string(x) + ") beyond sieve limit " + std::to_string(table.limit()));
  }
  long m = 0;
  const auto mu = table.values();
  for (long k = 1; k <= x; ++k) m += mu[k];
  return m;
}

int mobius_by_factorization(std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "mu(0) is undefined");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

void mobius_power_terms(const MobiusTable& table, double sigma, double tau, int n, long k0,
                        long k1, double* re, double* im) {
  const auto mu = table.values();
  const auto logs = table.log_k();
  for (long k = k0; k < k1; ++k) {
    const size_t i = static_cast<size_t>(k - k0);
    if (mu[k] == 0 || (n > 0 && k == 1)) {
      re[i] = 0.0;
      im[i] = 0.0;
      continue;
    }
    const double l = logs[k];
    double mag = static_cast<double>(mu[k]) * std::exp(-sigma * l);
    for (int j = 0; j < n; ++j) mag *= l;
    re[i] = mag * std::cos(tau * l);
    im[i] = -mag * std::sin(tau * l);
  }
}

namespace {

constexpr long kChunk = 1L << 15;
constexpr long kChunksPerBatch = 32;

void check_k(long K, const MobiusTable& table) {
  if (K < 0 || K > table.limit()) {
    throw Error(ErrorKind::OutOfRange,
                "partial sum length " + std::to_string(K) + " beyond sieve limit " +
                    std::to_string(table.limit()));
  }
}

HpComplex exact_term(long k, int mu, const HpComplex& rho, int n, long p) {
  const PrecisionContext inner(p, 1);
  HpComplex v = cpow(static_cast<unsigned long>(k), rho, inner);
  if (n > 0) v *= pow(log_int(static_cast<unsigned long>(k), p), n);
  if (mu < 0) v = -v;
  return v;
}

}  // namespace

HpComplex dirichlet_partial_exact(const HpComplex& rho, int n, long K, const MobiusTable& table,
                                  const PrecisionContext& ctx) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "log power must be >= 0");
  check_k(K, table);
  const long p = ctx.bits() + 16;
  const HpComplex s = rho.with_bits(p);
  const auto mu = table.values();
  const size_t n_chunks = static_cast<size_t>((K + kChunk - 1) / kChunk);
  // Per-chunk sums merged in chunk order: same bits for any worker count.
  const std::vector<HpComplex> partial = parallel_map(n_chunks, [&](size_t c) {
    const long k0 = 1 + static_cast<long>(c) * kChunk;
    const long k1 = std::min(K + 1, k0 + kChunk);
    HpComplex acc(p);
    for (long k = k0; k < k1; ++k) {
      if (mu[k] == 0 || (n > 0 && k == 1)) continue;
      acc += exact_term(k, mu[k], s, n, p);
    }
    return acc;
  });
  HpComplex total(p);
  for (const auto& v : partial) total += v;
  return total.with_bits(ctx.bits());
}

HpComplex dirichlet_partial(const HpComplex& rho, int n, long K, const MobiusTable& table,
                            const PrecisionContext& ctx, long full_precision_above) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "log power must be >= 0");
  check_k(K, table);
  if (K > full_precision_above) return dirichlet_partial_exact(rho, n, K, table, ctx);

  const double sigma = rho.re.to_double();
  const double tau = rho.im.to_double();
  simd::ComplexAccumulator acc;
  const auto& kernels = simd::active_kernels();
  for (long batch_start = 1; batch_start <= K; batch_start += kChunk * kChunksPerBatch) {
    const long batch_end = std::min(K + 1, batch_start + kChunk * kChunksPerBatch);
    const size_t n_chunks = static_cast<size_t>((batch_end - batch_start + kChunk - 1) / kChunk);
    struct Block {
      std::vector<double> re, im;
    };
    const std::vector<Block> blocks = parallel_map(n_chunks, [&](size_t c) {
      const long k0 = batch_start + static_cast<long>(c) * kChunk;
      const long k1 = std::min(batch_end, k0 + kChunk);
      Block b{std::vector<double>(static_cast<size_t>(k1 - k0)),
              std::vector<double>(static_cast<size_t>(k1 - k0))};
      mobius_power_terms(table, sigma, tau, n, k0, k1, b.re.data(), b.im.data());
      return b;
    });
    for (const Block& b : blocks) kernels.accumulate(acc, b.re.data(), b.im.data(), b.re.size());
  }
  const std::complex<double> v = acc.value();
  return HpComplex(v.real(), v.imag(), ctx.bits());
}

}  // namespace rzeta
