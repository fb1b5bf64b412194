#include "zeta/zeta_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zeta/parallel.hpp"

namespace rzeta {

std::string_view to_string(ZetaMethod m) {
  switch (m) {
    case ZetaMethod::EulerMaclaurin: return "euler-maclaurin";
    case ZetaMethod::Reflected: return "reflected";
    case ZetaMethod::RiemannSiegel: return "riemann-siegel";
  }
  return "unknown";
}

namespace {

using Series = std::vector<HpComplex>;

double log2_abs(const HpComplex& z) {
  const double re = std::fabs(z.re.to_double());
  const double im = std::fabs(z.im.to_double());
  const double m = std::max(re, im);
  if (m == 0.0) {
    if (z.is_zero()) return -std::numeric_limits<double>::infinity();
    return static_cast<double>(std::max(z.re.exponent(), z.im.exponent()));
  }
  return std::log2(m);
}

void check_not_pole(const HpComplex& s) {
  if (s.im.is_zero() && s.re == 1.0) {
    throw Error(ErrorKind::PoleOfZeta, "zeta has a pole at s = 1");
  }
}

bool use_euler_maclaurin(const HpComplex& s) {
  if (s.re >= 0.5) return true;
  const double r = std::hypot(s.re.to_double(), s.im.to_double());
  return r <= 0.25;
}

// n^{-s} and log n for n = 1..n_max. Only primes pay for exp/sin/cos; a
// composite n = q * m (q its smallest prime factor) reuses q^{-s} m^{-s}.
struct PowerTable {
  std::vector<HpComplex> pw;
  std::vector<HpReal> logs;
};

PowerTable power_table(const HpComplex& s, long n_max, long p) {
  std::vector<long> spf(static_cast<size_t>(n_max) + 1, 0);
  for (long i = 2; i <= n_max; ++i) {
    if (spf[i] != 0) continue;
    for (long j = i; j <= n_max; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  PowerTable t;
  t.pw.resize(static_cast<size_t>(n_max) + 1);
  t.logs.resize(static_cast<size_t>(n_max) + 1);
  t.pw[1] = HpComplex(HpReal::from_int(1, p), HpReal(p));
  t.logs[1] = HpReal(p);
  const HpReal sigma = s.re.with_bits(p);
  const HpReal tau = s.im.with_bits(p);
  for (long n = 2; n <= n_max; ++n) {
    const long q = spf[n];
    if (q == n) {
      t.logs[n] = log_int(static_cast<unsigned long>(n), p);
      t.pw[n] = expi(-(tau * t.logs[n])) * exp(-(sigma * t.logs[n]));
    } else {
      t.logs[n] = t.logs[q] + t.logs[n / q];
      t.pw[n] = t.pw[q] * t.pw[n / q];
    }
  }
  return t;
}

// Multiplies a series by (c + e), truncated.
void mul_linear(Series& q, const HpComplex& c) {
  for (size_t j = q.size(); j-- > 0;) {
    HpComplex v = q[j] * c;
    if (j > 0) v += q[j - 1];
    q[j] = std::move(v);
  }
}

struct EmAttempt {
  Series jet;
  bool converged;
};

EmAttempt euler_maclaurin_attempt(const HpComplex& s_in, int order, long n_terms,
                                  const PrecisionContext& ctx, long p) {
  const HpComplex s = s_in.with_bits(p);
  const size_t len = static_cast<size_t>(order) + 1;
  const PowerTable table = power_table(s, n_terms, p);

  Series jet(len, HpComplex(p));
  for (long n = 1; n < n_terms; ++n) {
    jet[0] += table.pw[n];
    if (order > 0 && n > 1) {
      const HpReal neg_log = -table.logs[n];
      HpComplex cur = table.pw[n];
      for (int j = 1; j <= order; ++j) {
        cur *= neg_log;
        cur /= static_cast<long>(j);
        jet[j] += cur;
      }
    }
  }

  // Tail: N^{-s} E(e) [ N R(e) + 1/2 + sum_k B_2k Q_k(e) ] with
  // E = exp(-e log N), R = 1/(s - 1 + e), Q_k = P_k(s + e) N^{1-2k} / (2k)!.
  const HpReal big_n = HpReal::from_int(n_terms, p);
  const HpReal log_n = table.logs[n_terms];
  const HpComplex n_pow = table.pw[n_terms];

  std::vector<HpReal> e_series(len, HpReal(p));
  e_series[0] = HpReal::from_int(1, p);
  for (size_t j = 1; j < len; ++j) e_series[j] = e_series[j - 1] * (-log_n) / static_cast<long>(j);

  Series inner(len, HpComplex(p));
  {
    HpComplex s_minus_1 = s;
    s_minus_1.re -= HpReal::from_int(1, p);
    const HpComplex inv = reciprocal(s_minus_1);
    HpComplex r = inv;
    for (size_t j = 0; j < len; ++j) {
      inner[j] = r * big_n;
      r *= inv;
      r = -r;
    }
    inner[0].re += HpReal(0.5, p);
  }

  double amplification = 0.0;  // log2 of sum_j |E_j|
  {
    double acc = 0.0;
    for (size_t j = 0; j < len; ++j) acc += std::fabs(e_series[j].to_double());
    amplification = std::log2(std::max(acc, 1.0));
  }
  const double log2_tol = -(ctx.target_digits() + 5) * std::log2(10.0) - amplification -
                          std::max(log2_abs(n_pow), -1e9);

  const HpReal n2 = big_n * big_n;
  Series q(len, HpComplex(p));
  q[0] = s / (big_n * 2);
  if (len > 1) q[1] = HpComplex(HpReal::from_int(1, p) / (big_n * 2), HpReal(p));

  bool converged = false;
  double prev_mag = std::numeric_limits<double>::infinity();
  int growth = 0;
  for (long k = 1; k <= 600; ++k) {
    const HpReal b = bernoulli_b2j(static_cast<int>(k), p);
    double mag = -std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < len; ++j) {
      HpComplex term = q[j] * b;
      mag = std::max(mag, log2_abs(term));
      inner[j] += term;
    }
    if (mag < log2_tol) {
      converged = true;
      break;
    }
    growth = mag > prev_mag ? growth + 1 : 0;
    if (growth >= 2) break;
    prev_mag = mag;
    HpComplex c1 = s, c2 = s;
    c1.re += HpReal::from_int(2 * k - 1, p);
    c2.re += HpReal::from_int(2 * k, p);
    mul_linear(q, c1);
    mul_linear(q, c2);
    const HpReal denom = n2 * ((2 * k + 1) * (2 * k + 2));
    for (auto& c : q) c /= denom;
  }

  for (size_t j = 0; j < len; ++j) {
    HpComplex conv(p);
    for (size_t i = 0; i <= j; ++i) conv += inner[j - i] * e_series[i];
    jet[j] += conv * n_pow;
  }
  return {std::move(jet), converged};
}

Series euler_maclaurin_jet(const HpComplex& s, int order, const PrecisionContext& ctx) {
  check_not_pole(s);
  const long p = ctx.bits() + 16 + 4L * order;
  long n_terms = euler_maclaurin_terms(s, ctx);
  for (int attempt = 0; attempt < 4; ++attempt) {
    EmAttempt a = euler_maclaurin_attempt(s, order, n_terms, ctx, p);
    if (a.converged) {
      for (auto& c : a.jet) c = c.with_bits(ctx.bits());
      return a.jet;
    }
    n_terms *= 2;
  }
  throw Error(ErrorKind::PrecisionExhausted, "Euler-Maclaurin tail did not converge");
}

struct ReflectionParts {
  HpComplex g;       // 2^s pi^{s-1} Gamma(1 - s)
  HpComplex sin_h;   // sin(pi s / 2)
  HpComplex cos_h;   // cos(pi s / 2)
  HpComplex one_minus_s;
};

ReflectionParts reflection_parts(const HpComplex& s, const PrecisionContext& ctx) {
  const long p = ctx.bits() + 16;
  const PrecisionContext inner(p, ctx.target_digits(), ctx.escalation_factor());
  const HpComplex sp = s.with_bits(p);
  HpComplex one_minus_s = -sp;
  one_minus_s.re += HpReal::from_int(1, p);
  const HpReal pi = const_pi(p);
  HpComplex exponent = sp * log_int(2, p);
  HpComplex s_minus_1 = sp;
  s_minus_1.re -= HpReal::from_int(1, p);
  exponent += s_minus_1 * log(pi);
  exponent += log_gamma(one_minus_s, inner);
  const HpComplex half_pi_s = sp * (pi / 2);
  return {exp(exponent), sin(half_pi_s), cos(half_pi_s), std::move(one_minus_s)};
}

}  // namespace

long euler_maclaurin_terms(const HpComplex& s, const PrecisionContext& ctx) {
  const double t = std::fabs(s.im.to_double());
  const double sigma = std::fabs(s.re.to_double());
  const double by_height = std::ceil(3.0 * t);
  const double by_digits = std::ceil(0.5 * (ctx.target_digits() + 5));
  return static_cast<long>(std::max({50.0, by_height, by_digits, std::ceil(sigma)}));
}

HpComplex functional_equation_factor(const HpComplex& s, const PrecisionContext& ctx) {
  const ReflectionParts r = reflection_parts(s, ctx);
  return (r.g * r.sin_h).with_bits(ctx.bits());
}

HpComplex zeta_value(const HpComplex& s, const PrecisionContext& ctx, ZetaMethod* method) {
  check_not_pole(s);
  if (use_euler_maclaurin(s)) {
    if (method) *method = ZetaMethod::EulerMaclaurin;
    return euler_maclaurin_jet(s, 0, ctx)[0];
  }
  if (method) *method = ZetaMethod::Reflected;
  const ReflectionParts r = reflection_parts(s, ctx);
  const PrecisionContext inner = ctx.with_extra_bits(16);
  const HpComplex mirrored = euler_maclaurin_jet(r.one_minus_s, 0, inner)[0];
  return (r.g * r.sin_h * mirrored).with_bits(ctx.bits());
}

ZetaValue zeta(const HpComplex& s, const PrecisionContext& ctx) {
  check_not_pole(s);
  ZetaMethod method = ZetaMethod::EulerMaclaurin;
  const AgreedValue v = with_agreement(
      [&](const PrecisionContext& c) { return zeta_value(s, c, &method); }, ctx);
  return {v.value, method, v.certified_digits};
}

std::vector<HpComplex> zeta_jet(const HpComplex& s, int order, const PrecisionContext& ctx) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "jet order must be >= 0");
  return euler_maclaurin_jet(s, order, ctx);
}

ZetaWithDerivative zeta_and_derivative(const HpComplex& s, const PrecisionContext& ctx) {
  check_not_pole(s);
  if (use_euler_maclaurin(s)) {
    Series j = euler_maclaurin_jet(s, 1, ctx);
    return {std::move(j[0]), std::move(j[1])};
  }
  // zeta(s) = chi(s) zeta(1-s);  zeta'(s) = chi'(s) zeta(1-s) - chi(s) zeta'(1-s)
  // chi'(s) = chi(s) (log 2pi - psi(1-s)) + g(s) (pi/2) cos(pi s/2)
  const long p = ctx.bits() + 16;
  const PrecisionContext inner = ctx.with_extra_bits(16);
  const ReflectionParts r = reflection_parts(s, ctx);
  const Series mirrored = euler_maclaurin_jet(r.one_minus_s, 1, inner);
  const HpComplex chi = r.g * r.sin_h;
  HpComplex log_2pi(log(const_pi(p) * 2));
  const HpComplex chi_prime =
      chi * (log_2pi - digamma(r.one_minus_s, inner)) + r.g * r.cos_h * (const_pi(p) / 2);
  HpComplex value = chi * mirrored[0];
  HpComplex deriv = chi_prime * mirrored[0] - chi * mirrored[1];
  return {value.with_bits(ctx.bits()), deriv.with_bits(ctx.bits())};
}

HpComplex completed_zeta(const HpComplex& s, const PrecisionContext& ctx) {
  const long p = ctx.bits() + 16;
  const PrecisionContext inner = ctx.with_extra_bits(16);
  const HpComplex half_s = s.with_bits(p) / 2;
  HpComplex exponent = -(half_s * log(const_pi(p)));
  exponent += log_gamma(half_s, inner);
  return (exp(exponent) * zeta_value(s, inner)).with_bits(ctx.bits());
}

std::vector<HpComplex> cauchy_taylor(const AnalyticFunction& f, const HpComplex& center,
                                     const HpReal& radius, int nodes, int max_order,
                                     const PrecisionContext& ctx) {
  if (nodes < 2 * (max_order + 1)) {
    throw Error(ErrorKind::InvalidArgument, "too few contour nodes for requested order");
  }
  if (radius.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "contour radius must be positive");
  const double log2_inv_r = std::max(0.0, -std::log2(radius.to_double()));
  const PrecisionContext inner =
      ctx.widened(16 + static_cast<long>(std::ceil(max_order * log2_inv_r)));
  const long p = inner.bits();

  const HpReal two_pi_over_m = const_pi(p) * 2 / static_cast<long>(nodes);
  std::vector<HpComplex> roots(static_cast<size_t>(nodes));
  for (int j = 0; j < nodes; ++j) roots[j] = expi(two_pi_over_m * static_cast<long>(j));

  const HpComplex c = center.with_bits(p);
  const HpReal r = radius.with_bits(p);
  const std::vector<HpComplex> values = parallel_map(static_cast<size_t>(nodes), [&](size_t j) {
    return f(c + roots[j] * r, inner);
  });

  std::vector<HpComplex> coeffs;
  coeffs.reserve(static_cast<size_t>(max_order) + 1);
  HpReal r_pow = HpReal::from_int(1, p);
  for (int k = 0; k <= max_order; ++k) {
    HpComplex acc(p);
    for (int j = 0; j < nodes; ++j) {
      const long idx = (static_cast<long>(j) * k) % nodes;
      acc += values[j] * conj(roots[idx]);
    }
    acc /= r_pow * static_cast<long>(nodes);
    coeffs.push_back(acc.with_bits(ctx.bits()));
    r_pow *= r;
  }
  return coeffs;
}

HpReal derivative_radius(const HpComplex& s, const PrecisionContext& ctx) {
  HpComplex d = s.with_bits(ctx.bits());
  d.re -= HpReal::from_int(1, ctx.bits());
  return min(HpReal(0.25, ctx.bits()), abs(d) / 2);
}

std::vector<HpComplex> zeta_taylor(const HpComplex& s, int max_order, const PrecisionContext& ctx,
                                   std::optional<HpReal> radius) {
  check_not_pole(s);
  HpComplex d = s.with_bits(ctx.bits());
  d.re -= HpReal::from_int(1, ctx.bits());
  const HpReal r = radius ? *radius : derivative_radius(s, ctx);
  if (r.sign() <= 0 || abs(d) <= r) {
    throw Error(ErrorKind::ContourTouchesPole,
                "derivative contour of radius " + r.to_string(6) + " reaches s = 1");
  }
  const int nodes = std::max(8 * ctx.target_digits(), 2 * (max_order + 1));
  return cauchy_taylor([](const HpComplex& z, const PrecisionContext& c) { return zeta_value(z, c); },
                       s, r, nodes, max_order, ctx);
}

HpComplex zeta_deriv(const HpComplex& s, int k, const PrecisionContext& ctx,
                     std::optional<HpReal> radius) {
  if (k < 0 || k > 8) throw Error(ErrorKind::OutOfRange, "zeta_deriv supports 0 <= k <= 8");
  if (k == 0) return zeta(s, ctx).value;
  const std::vector<HpComplex> a = zeta_taylor(s, k, ctx, std::move(radius));
  HpComplex d = a[static_cast<size_t>(k)];
  for (long i = 2; i <= k; ++i) d *= i;
  return d;
}

HpReal hardy_theta(const HpReal& t, const PrecisionContext& ctx) {
  const long p = ctx.bits() + 8;
  const PrecisionContext inner(p, ctx.target_digits(), ctx.escalation_factor());
  const HpComplex z(HpReal(0.25, p), t.with_bits(p) / 2);
  const HpComplex lg = log_gamma(z, inner);
  return (lg.im - t.with_bits(p) * log(const_pi(p)) / 2).with_bits(ctx.bits());
}

HpReal hardy_theta_prime(const HpReal& t, const PrecisionContext& ctx) {
  const long p = ctx.bits() + 8;
  const PrecisionContext inner(p, ctx.target_digits(), ctx.escalation_factor());
  const HpComplex z(HpReal(0.25, p), t.with_bits(p) / 2);
  const HpComplex psi = digamma(z, inner);
  return ((psi.re - log(const_pi(p))) / 2).with_bits(ctx.bits());
}

namespace {
HpComplex critical_point(const HpReal& t, long p) { return {HpReal(0.5, p), t.with_bits(p)}; }
}  // namespace

HpComplex hardy_rotated(const HpReal& t, const PrecisionContext& ctx) {
  if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "Hardy Z needs t >= 0");
  const PrecisionContext inner = ctx.with_extra_bits(8);
  const HpComplex v = zeta_value(critical_point(t, inner.bits()), inner);
  return (expi(hardy_theta(t, inner)) * v).with_bits(ctx.bits());
}

HpReal hardy_z_value(const HpReal& t, const PrecisionContext& ctx) { return hardy_rotated(t, ctx).re; }

HardyWithDerivative hardy_z_and_derivative(const HpReal& t, const PrecisionContext& ctx) {
  if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "Hardy Z needs t >= 0");
  const PrecisionContext inner = ctx.with_extra_bits(8);
  const ZetaWithDerivative zd = zeta_and_derivative(critical_point(t, inner.bits()), inner);
  const HpComplex rot = expi(hardy_theta(t, inner));
  const HpReal theta_p = hardy_theta_prime(t, inner);
  // Z'(t) = Re(i e^{i theta} (theta' zeta + zeta')) = -Im(e^{i theta} (theta' zeta + zeta'))
  const HpComplex w = rot * (zd.value * theta_p + zd.derivative);
  return {(rot * zd.value).re.with_bits(ctx.bits()), (-w.im).with_bits(ctx.bits())};
}

HpReal hardy_Z(const HpReal& t, const PrecisionContext& ctx) {
  if (t.sign() < 0) throw Error(ErrorKind::InvalidArgument, "Hardy Z needs t >= 0");
  const AgreedValue v = with_agreement(
      [&](const PrecisionContext& c) {
        return HpComplex(hardy_z_value(t.with_bits(c.bits()), c), HpReal(c.bits()));
      },
      ctx);
  return v.value.re;
}

HpComplex inverse_zeta(const HpComplex& s, const PrecisionContext& ctx) {
  const ZetaValue z = zeta(s, ctx);
  const HpReal floor_value = pow10(-(ctx.target_digits() / 2), ctx.bits());
  if (abs(z.value) < floor_value) {
    throw Error(ErrorKind::NearZero, "|zeta(s)| below 10^-" + std::to_string(ctx.target_digits() / 2));
  }
  return reciprocal(z.value);
}

}  // namespace rzeta
