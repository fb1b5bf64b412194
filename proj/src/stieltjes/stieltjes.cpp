#include "zeta/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zeta/parallel.hpp"
#include "zeta/partial_sums.hpp"
#include "zeta/zeta_engine.hpp"

namespace rzeta {

namespace {
constexpr int kMaxStieltjesIndex = 20;
constexpr long kBlock = 1L << 14;
}  // namespace

PartialSumSeries euler_gamma_partial(const std::vector<long>& checkpoints, const PrecisionContext& ctx) {
  check_checkpoints(checkpoints, std::numeric_limits<long>::max());
  const long p = ctx.bits() + 32;
  ExactCheckpointMonitor mon(checkpoints, p);
  const HpReal one = HpReal::from_int(1, p);
  for (long k0 = 1; k0 <= mon.max_k(); k0 += kBlock) {
    const long k1 = std::min(mon.max_k() + 1, k0 + kBlock);
    const std::vector<HpReal> terms = parallel_map(static_cast<size_t>(k1 - k0), [&](size_t i) {
      const HpReal inv = one / (k0 + static_cast<long>(i));
      return inv - log1p(inv);
    });
    for (size_t i = 0; i < terms.size(); ++i) {
      mon.add(k0 + static_cast<long>(i), HpComplex(terms[i]));
    }
  }
  PartialSumSeries out = mon.finish();
  for (auto& v : out.raw) v = v.with_bits(ctx.bits());
  for (auto& v : out.smoothed) v = v.with_bits(ctx.bits());
  out.oscillation = out.oscillation.with_bits(ctx.bits());
  return out;
}

namespace {

std::vector<HpReal> stieltjes_at(int n_max, const PrecisionContext& ctx) {
  const long p = ctx.bits();
  // zeta(s) - 1/(s - 1) is entire; b_n below are its Taylor coefficients at 1.
  const AnalyticFunction regular = [](const HpComplex& s, const PrecisionContext& c) {
    HpComplex d = s;
    d.re -= HpReal::from_int(1, c.bits());
    return zeta_value(s, c) - reciprocal(d);
  };
  const HpComplex center(HpReal::from_int(1, p), HpReal(p));
  const int nodes = std::max(8 * ctx.target_digits(), 2 * (n_max + 1));
  const std::vector<HpComplex> b = cauchy_taylor(regular, center, HpReal(0.5, p), nodes, n_max, ctx);
  std::vector<HpReal> gammas;
  HpReal factorial = HpReal::from_int(1, p);
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= static_cast<long>(n);
    HpReal g = b[n].re * factorial;
    gammas.push_back(n % 2 == 0 ? std::move(g) : -g);
  }
  return gammas;
}

// log2 of n! / 2^n: bits lost to the factorial scaling of tiny Taylor coefficients.
long scaling_bits(int n_max) {
  double bits = 0.0;
  for (int n = 2; n <= n_max; ++n) bits += std::log2(static_cast<double>(n));
  return static_cast<long>(std::ceil(bits)) + n_max;
}

}  // namespace

std::vector<HpReal> stieltjes_constants(int n_max, const PrecisionContext& ctx) {
  if (n_max < 0 || n_max > kMaxStieltjesIndex) {
    throw Error(ErrorKind::OutOfRange, "Stieltjes index must lie in [0, 20]");
  }
  PrecisionContext work = ctx.widened(scaling_bits(n_max) + 16);
  std::vector<HpReal> lo = stieltjes_at(n_max, work);
  for (int attempt = 0; attempt < PrecisionContext::kMaxEscalations; ++attempt) {
    const PrecisionContext higher = work.escalated();
    std::vector<HpReal> hi = stieltjes_at(n_max, higher);
    bool agree = true;
    for (int n = 0; n <= n_max && agree; ++n) {
      agree = agreeing_digits(HpComplex(lo[n]), HpComplex(hi[n])) >= ctx.target_digits();
    }
    if (agree) {
      for (auto& g : hi) g = g.with_bits(ctx.bits());
      return hi;
    }
    lo = std::move(hi);
    work = higher;
  }
  throw Error(ErrorKind::PrecisionExhausted, "Stieltjes constants did not settle");
}

HpReal stieltjes_gamma(int n, const PrecisionContext& ctx) {
  if (n < 0 || n > kMaxStieltjesIndex) {
    throw Error(ErrorKind::OutOfRange, "Stieltjes index must lie in [0, 20]");
  }
  return stieltjes_constants(n, ctx)[n];
}

HpReal stieltjes_bound(int n, long bits) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "bound defined for n >= 1");
  HpReal v = const_e(bits);
  for (long i = 2; i <= n; ++i) v *= i;
  HpReal two_n = pow(HpReal::from_int(2, bits), n);
  return v / (two_n * sqrt(HpReal::from_int(n, bits)));
}

bool StieltjesTable::all_margins_positive() const {
  for (const auto& m : bound_margin) {
    if (m && m->sign() <= 0) return false;
  }
  return true;
}

StieltjesTable bound_check(int n_max, const PrecisionContext& ctx) {
  StieltjesTable t{n_max, stieltjes_constants(n_max, ctx), {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0) {
      t.bound.emplace_back();
      t.bound_margin.emplace_back();
      continue;
    }
    HpReal b = stieltjes_bound(n, ctx.bits());
    t.bound_margin.emplace_back(b - abs(t.gammas[n]));
    t.bound.emplace_back(std::move(b));
  }
  return t;
}

}  // namespace rzeta
