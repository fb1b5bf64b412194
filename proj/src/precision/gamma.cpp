#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <vector>

#include "zeta/precision.hpp"

namespace rzeta {

namespace {

// B_{2j} for j = 1..n from the tangent numbers T_j (Brent & Harvey):
// B_{2j} = (-1)^{j-1} 2j T_j / (4^j (4^j - 1)).
std::vector<mpq_class> bernoulli_table(int n) {
  std::vector<mpz_class> t(static_cast<size_t>(n) + 1);
  t[1] = 1;
  for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
  for (int k = 2; k <= n; ++k) {
    for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
  }
  std::vector<mpq_class> b(static_cast<size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) {
    mpz_class four_j;
    mpz_ui_pow_ui(four_j.get_mpz_t(), 4, static_cast<unsigned long>(j));
    mpq_class v(2 * j * t[j], four_j * (four_j - 1));
    v.canonicalize();
    b[j] = (j % 2 == 1) ? v : mpq_class(-v);
  }
  return b;
}

struct BernoulliCache {
  std::mutex mu;
  std::vector<mpq_class> b2j;  // index j -> B_{2j}; index 0 unused
};

BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

long mag_exp(const HpComplex& z) { return std::max(z.re.exponent(), z.im.exponent()); }

struct Shifted {
  HpComplex w;
  long shift;
};

// Pushes z to the right until the asymptotic series reaches `p` bits.
Shifted shift_for_asymptotics(const HpComplex& z, long p) {
  const double radius = 0.2 * static_cast<double>(p) + 2.0;
  const double x = z.re.to_double();
  const double y = std::fabs(z.im.to_double());
  long m = 0;
  if (!(x >= radius || (x >= 0.0 && y >= radius))) {
    m = static_cast<long>(std::ceil(radius - x));
  }
  HpComplex w = z;
  w.re += HpReal::from_int(m, p);
  return {std::move(w), m};
}

void check_gamma_pole(const HpComplex& z) {
  if (z.im.is_zero() && z.re.sign() <= 0 && floor(z.re) == z.re) {
    throw Error(ErrorKind::PoleOfGamma, "Gamma has a pole at " + z.re.to_string(6));
  }
}

}  // namespace

HpReal bernoulli_b2j(int j, long bits) {
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "bernoulli_b2j needs j >= 1");
  auto& cache = bernoulli_cache();
  HpReal out(bits);
  std::lock_guard lock(cache.mu);
  if (static_cast<int>(cache.b2j.size()) <= j) {
    const int want = std::max(j, 2 * static_cast<int>(cache.b2j.size()) + 16);
    cache.b2j = bernoulli_table(want);
  }
  mpfr_set_q(out.get_mut(), cache.b2j[static_cast<size_t>(j)].get_mpq_t(), MPFR_RNDN);
  return out;
}

HpComplex log_gamma(const HpComplex& z, const PrecisionContext& ctx) {
  check_gamma_pole(z);
  const long p = ctx.bits() + 16;
  const HpComplex zp = z.with_bits(p);
  auto [w, m] = shift_for_asymptotics(zp, p);

  // Stirling: (w - 1/2) log w - w + log(2 pi)/2 + sum B_2j / (2j (2j-1) w^{2j-1})
  const HpComplex log_w = log(w);
  HpComplex result = (w - HpReal(0.5, p)) * log_w - w;
  result += log(const_pi(p) * 2) / 2;
  const HpComplex inv_w = reciprocal(w);
  const HpComplex inv_w2 = inv_w * inv_w;
  HpComplex power = inv_w;  // w^{-(2j-1)}
  for (int j = 1; j < 4000; ++j) {
    HpComplex term = power * (bernoulli_b2j(j, p) / (2L * j * (2L * j - 1)));
    result += term;
    if (mag_exp(term) < std::max(mag_exp(result), 0L) - p) break;
    power *= inv_w2;
  }

  if (m > 0) {
    // log Gamma(z) = log Gamma(z + m) - sum_{i<m} Log(z + i). The sum is taken
    // as one logarithm of the product with its branch fixed by a running
    // double-precision sum of arguments.
    HpComplex product = zp;
    double arg_sum = std::atan2(zp.im.to_double(), zp.re.to_double());
    for (long i = 1; i < m; ++i) {
      HpComplex factor = zp;
      factor.re += HpReal::from_int(i, p);
      product *= factor;
      arg_sum += std::atan2(factor.im.to_double(), factor.re.to_double());
    }
    HpComplex log_product = log(product);
    const double branch =
        std::round((arg_sum - log_product.im.to_double()) / (2.0 * std::numbers::pi));
    if (branch != 0.0) {
      log_product.im += const_pi(p) * (2L * static_cast<long>(branch));
    }
    result -= log_product;
  }
  return result.with_bits(ctx.bits());
}

HpComplex digamma(const HpComplex& z, const PrecisionContext& ctx) {
  check_gamma_pole(z);
  const long p = ctx.bits() + 16;
  const HpComplex zp = z.with_bits(p);
  auto [w, m] = shift_for_asymptotics(zp, p);

  // psi(w) ~ log w - 1/(2w) - sum B_2j / (2j w^{2j})
  const HpComplex inv_w = reciprocal(w);
  HpComplex result = log(w) - inv_w / 2;
  const HpComplex inv_w2 = inv_w * inv_w;
  HpComplex power = inv_w2;
  for (int j = 1; j < 4000; ++j) {
    HpComplex term = power * (bernoulli_b2j(j, p) / (2L * j));
    result -= term;
    if (mag_exp(term) < std::max(mag_exp(result), 0L) - p) break;
    power *= inv_w2;
  }
  for (long i = 0; i < m; ++i) {
    HpComplex factor = zp;
    factor.re += HpReal::from_int(i, p);
    result -= reciprocal(factor);
  }
  return result.with_bits(ctx.bits());
}

HpComplex cpow(unsigned long k, const HpComplex& s, const PrecisionContext& ctx) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "cpow needs k >= 1");
  const long p = ctx.bits();
  if (k == 1) return HpComplex(HpReal::from_int(1, p), HpReal(p));
  const HpReal lk = log_int(k, p + 8);
  const HpReal mag = exp(-(s.re.with_bits(p + 8) * lk));
  return (expi(-(s.im.with_bits(p + 8) * lk)) * mag).with_bits(p);
}

}  // namespace rzeta
