#include "zeta/laurent.hpp"

#include <algorithm>
#include <string>

#include "zeta/mobius_terms.hpp"
#include "zeta/parallel.hpp"
#include "zeta/partial_sums.hpp"
#include "zeta/zero_finder.hpp"
#include "zeta/zeta_engine.hpp"

namespace rzeta {

HpComplex residue(const HpComplex& rho, const PrecisionContext& ctx) {
  const HpComplex d = zeta_deriv(rho, 1, ctx);
  if (abs(d) <= kSimplicityFloor) {
    throw Error(ErrorKind::SuspectZero, "|zeta'(rho)| = " + abs(d).to_string(6) + " is below 1e-6");
  }
  return reciprocal(d);
}

std::vector<HpComplex> taylor_at_zero(const HpComplex& rho, int N, const PrecisionContext& ctx) {
  if (N < 0 || N > 12) throw Error(ErrorKind::OutOfRange, "taylor_at_zero supports 0 <= N <= 12");
  std::vector<HpComplex> a = zeta_taylor(rho, N + 1, ctx);
  a.erase(a.begin());
  return a;
}

InvertedSeries invert_series(const std::vector<HpComplex>& a, int N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "truncation order must be >= 0");
  if (a.size() < static_cast<size_t>(N) + 1) {
    throw Error(ErrorKind::InvalidArgument, "invert_series needs a_1..a_{N+1}");
  }
  if (a[0].is_zero()) throw Error(ErrorKind::ZeroLeadingCoefficient, "a_1 = 0: zero is not simple");
  // g = 1 / (a_1 + a_2 x + ...): g_0 = 1/a_1, g_j = -(1/a_1) sum_{i=1..j} a_{i+1} g_{j-i}
  const HpComplex inv = reciprocal(a[0]);
  std::vector<HpComplex> g;
  g.reserve(static_cast<size_t>(N) + 1);
  g.push_back(inv);
  for (int j = 1; j <= N; ++j) {
    HpComplex acc(a[0].bits());
    for (int i = 1; i <= j; ++i) acc += a[i] * g[j - i];
    g.push_back(-(acc * inv));
  }
  InvertedSeries out{g[0], {}};
  out.coeffs.assign(g.begin() + 1, g.end());
  return out;
}

HpComplex v_term(long k, const HpComplex& s, const HpComplex& rho, const HpComplex& res,
                 const PrecisionContext& ctx) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "v_term needs k >= 1");
  const long p = ctx.bits() + 16;
  const PrecisionContext inner = ctx.with_extra_bits(16);
  const HpComplex d = s.with_bits(p) - rho.with_bits(p);
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "v_term needs s != rho");
  const auto uk = static_cast<unsigned long>(k);
  HpComplex out(p);
  const int mu = mobius_by_factorization(uk);
  if (mu != 0) {
    out = cpow(uk, s.with_bits(p), inner);
    if (mu < 0) out = -out;
  }
  out += res.with_bits(p) / d * (cpow(uk + 1, d, inner) - cpow(uk, d, inner));
  return out.with_bits(ctx.bits());
}

std::vector<long> default_checkpoints() { return {1'000, 10'000, 100'000, 1'000'000}; }

namespace {

constexpr long kBlock = 1L << 15;

PartialSumSeries phi_series_compensated(const HpComplex& rho, const HpComplex& res, int n,
                                        const std::vector<long>& checkpoints,
                                        const MobiusTable& table, long bits) {
  CompensatedCheckpointMonitor mon(checkpoints, bits);
  const auto& kernels = simd::active_kernels();
  const auto logs = table.log_k();
  const auto log1p_inv = table.log1p_inv();
  const double sigma = rho.re.to_double();
  const double tau = rho.im.to_double();
  const std::complex<double> c = res.to_complex();
  std::vector<double> a_re(kBlock), a_im(kBlock), w(kBlock), out_re(kBlock), out_im(kBlock);
  for (long k0 = 1; k0 <= mon.max_k(); k0 += kBlock) {
    const long k1 = std::min(mon.max_k() + 1, k0 + kBlock);
    const auto len = static_cast<std::size_t>(k1 - k0);
    mobius_power_terms(table, sigma, tau, n, k0, k1, a_re.data(), a_im.data());
    kernels.log_power_difference(logs.data() + k0, log1p_inv.data() + k0, n + 1, w.data(), len);
    kernels.subtract_scaled(a_re.data(), a_im.data(), c.real(), c.imag(), w.data(), out_re.data(),
                            out_im.data(), len);
    mon.add_block(k0, out_re.data(), out_im.data(), len);
  }
  return mon.finish();
}

PartialSumSeries phi_series_exact(const HpComplex& rho, const HpComplex& res, int n,
                                  const std::vector<long>& checkpoints, const MobiusTable& table,
                                  const PrecisionContext& ctx) {
  const long p = ctx.bits() + 32;
  const PrecisionContext inner = ctx.with_extra_bits(32);
  ExactCheckpointMonitor mon(checkpoints, p);
  const HpComplex s = rho.with_bits(p);
  const HpComplex c = res.with_bits(p);
  const auto mu = table.values();
  const long max_k = mon.max_k();
  for (long k0 = 1; k0 <= max_k; k0 += kBlock) {
    const long k1 = std::min(max_k + 1, k0 + kBlock);
    const std::vector<HpComplex> terms =
        parallel_map(static_cast<size_t>(k1 - k0), [&](size_t i) {
          const long k = k0 + static_cast<long>(i);
          const auto uk = static_cast<unsigned long>(k);
          const HpReal lk = log_int(uk, p);
          const HpReal lk1 = log_int(uk + 1, p);
          HpComplex t(p);
          if (mu[k] != 0 && !(n > 0 && k == 1)) {
            t = cpow(uk, s, inner) * pow(lk, n);
            if (mu[k] < 0) t = -t;
          }
          const HpReal w = (pow(lk1, n + 1) - pow(lk, n + 1)) / static_cast<long>(n + 1);
          t -= c * w;
          return t;
        });
    for (size_t i = 0; i < terms.size(); ++i) mon.add(k0 + static_cast<long>(i), terms[i]);
  }
  PartialSumSeries out = mon.finish();
  for (auto& v : out.raw) v = v.with_bits(ctx.bits());
  for (auto& v : out.smoothed) v = v.with_bits(ctx.bits());
  out.oscillation = out.oscillation.with_bits(ctx.bits());
  return out;
}

}  // namespace

PartialSumSeries phi_series(const HpComplex& rho, const HpComplex& res, int n,
                            const std::vector<long>& checkpoints, const MobiusTable& table,
                            const PrecisionContext& ctx) {
  if (n < 0 || n > 6) throw Error(ErrorKind::OutOfRange, "phi_series supports 0 <= n <= 6");
  check_checkpoints(checkpoints, table.limit());
  if (checkpoints.back() <= kCompensatedTermLimit) {
    return phi_series_compensated(rho, res, n, checkpoints, table, ctx.bits());
  }
  return phi_series_exact(rho, res, n, checkpoints, table, ctx);
}

HpComplex phi_from_coefficient(const HpComplex& c_n, int n) {
  HpComplex v = c_n;
  for (long i = 2; i <= n; ++i) v *= i;
  return n % 2 == 0 ? v : -v;
}

LaurentExpansion build_expansion(const HpComplex& rho, int n_coeffs,
                                 const std::vector<HpComplex>& neighbor_zeros,
                                 const PrecisionContext& ctx) {
  if (n_coeffs < 0 || n_coeffs > 12) {
    throw Error(ErrorKind::OutOfRange, "expansion supports 0..12 regular coefficients");
  }
  const long p = ctx.bits();
  HpComplex to_pole = rho.with_bits(p);
  to_pole.re -= HpReal::from_int(1, p);
  HpReal nearest = abs(to_pole);
  for (const auto& z : neighbor_zeros) {
    const HpReal d = abs(z.with_bits(p) - rho.with_bits(p));
    if (d.is_zero()) continue;
    nearest = min(nearest, d);
  }

  const std::vector<HpComplex> a = taylor_at_zero(rho, n_coeffs, ctx);
  if (abs(a[0]) <= kSimplicityFloor) {
    throw Error(ErrorKind::SuspectZero, "|zeta'(rho)| = " + abs(a[0]).to_string(6) + " is below 1e-6");
  }
  InvertedSeries inv = invert_series(a, n_coeffs);
  return {rho.with_bits(p), std::move(inv.residue), std::move(inv.coeffs), nearest * HpReal(0.8, p)};
}

LaurentExpansion truncated(const LaurentExpansion& e, int n_coeffs) {
  if (n_coeffs < 0 || n_coeffs > e.n_terms()) {
    throw Error(ErrorKind::OutOfRange, "cannot truncate to " + std::to_string(n_coeffs) + " coefficients");
  }
  LaurentExpansion out = e;
  out.coeffs.resize(static_cast<size_t>(n_coeffs));
  return out;
}

HpComplex laurent_eval(const HpComplex& s, const LaurentExpansion& e) {
  const long p = e.rho.bits();
  const HpComplex d = s.with_bits(p) - e.rho;
  const HpReal dist = abs(d);
  if (dist.is_zero() || !(dist < e.radius)) {
    throw Error(ErrorKind::OutsideDisk, "|s - rho| = " + dist.to_string(8) +
                                            " outside the expansion disk of radius " +
                                            e.radius.to_string(8));
  }
  HpComplex acc(p);
  for (size_t i = e.coeffs.size(); i-- > 0;) acc = acc * d + e.coeffs[i];
  return acc + e.residue / d;
}

HpReal reconstruction_residual(const LaurentExpansion& e, const HpReal& r, int N, int samples,
                               const PrecisionContext& ctx) {
  if (samples < 16) throw Error(ErrorKind::InvalidArgument, "need at least 16 samples");
  if (N + 1 > e.n_terms() || N < -1) {
    throw Error(ErrorKind::OutOfRange, "expansion holds only " + std::to_string(e.n_terms()) +
                                           " coefficients");
  }
  if (r.sign() <= 0 || !(r < e.radius)) {
    throw Error(ErrorKind::OutsideDisk, "residual circle of radius " + r.to_string(8) +
                                            " leaves the expansion disk");
  }
  const LaurentExpansion cut = truncated(e, N + 1);
  const long p = ctx.bits();
  const HpReal step = const_pi(p) * 2 / static_cast<long>(samples);
  const std::vector<HpReal> errs = parallel_map(static_cast<size_t>(samples), [&](size_t j) {
    const HpComplex s = cut.rho + expi(step * static_cast<long>(j)) * r.with_bits(p);
    return abs(inverse_zeta(s, ctx) - laurent_eval(s, cut));
  });
  HpReal worst(p);
  for (const auto& v : errs) worst = max(worst, v);
  return worst;
}

HpReal reconstruction_residual(const HpComplex& rho, const HpReal& r, int N, int samples,
                               const std::vector<HpComplex>& neighbor_zeros,
                               const PrecisionContext& ctx) {
  const LaurentExpansion e = build_expansion(rho, std::max(N + 1, 0), neighbor_zeros, ctx);
  return reconstruction_residual(e, r, N, samples, ctx);
}

}  // namespace rzeta
