#pragma once

// Arbitrary-precision real and complex scalars on top of MPFR, plus the
// precision policy every numeric routine in the library is parameterized by.

#include <mpfr.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "zeta/errors.hpp"

namespace rzeta {

class HpReal;

/// Working precision and tolerance policy. Immutable once built.
///
/// `bits` is the MPFR mantissa size; `target_digits` is what callers expect
/// to be correct in results. The gap between the two (at least 32 bits) is
/// the guard budget that absorbs rounding in long sums and contour
/// quadratures. `escalation_factor` multiplies `bits` when a result has to be
/// re-derived for a two-precision agreement check.
class PrecisionContext {
 public:
  static constexpr long kGuardBits = 32;
  static constexpr int kMaxEscalations = 3;

  PrecisionContext(long bits, int target_digits, double escalation_factor = 2.0);

  /// Smallest valid context for `target_digits`.
  static PrecisionContext for_digits(int target_digits, double escalation_factor = 2.0);

  static long min_bits_for(int target_digits);

  long bits() const noexcept { return bits_; }
  int target_digits() const noexcept { return target_digits_; }
  double escalation_factor() const noexcept { return escalation_factor_; }

  PrecisionContext escalated() const;
  PrecisionContext with_extra_bits(long extra) const;
  /// Adds `extra` bits and raises target_digits to what the new width
  /// supports, so truncation-controlled kernels tighten along with rounding.
  PrecisionContext widened(long extra) const;

  /// 10^-(target_digits + offset), evaluated at this context's precision.
  HpReal tolerance(int offset = 0) const;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  long bits_;
  int target_digits_;
  double escalation_factor_;
};

/// A finite MPFR number. Non-finite values are rejected wherever they can
/// enter (construction, parsing, division by zero).
class HpReal {
 public:
  HpReal() : HpReal(64L) {}
  explicit HpReal(long bits);
  HpReal(double value, long bits);
  static HpReal from_int(long value, long bits);
  static HpReal from_string(std::string_view text, long bits);

  HpReal(const HpReal& other);
  HpReal(HpReal&& other) noexcept;
  HpReal& operator=(const HpReal& other);
  HpReal& operator=(HpReal&& other) noexcept;
  ~HpReal();

  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }
  HpReal with_bits(long bits) const;

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long_floor() const { return mpfr_get_si(v_, MPFR_RNDD); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const;

  /// Decimal text with `digits` significant digits (%.{digits}Rg style).
  std::string to_string(int digits) const;
  /// Enough digits that from_string(...) at the same precision reproduces
  /// this value bit for bit.
  std::string to_roundtrip_string() const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get_mut() { return v_; }

  HpReal& operator+=(const HpReal& o);
  HpReal& operator-=(const HpReal& o);
  HpReal& operator*=(const HpReal& o);
  HpReal& operator/=(const HpReal& o);
  HpReal& operator*=(long o);
  HpReal& operator/=(long o);

  friend HpReal operator+(HpReal a, const HpReal& b) { return a += b; }
  friend HpReal operator-(HpReal a, const HpReal& b) { return a -= b; }
  friend HpReal operator*(HpReal a, const HpReal& b) { return a *= b; }
  friend HpReal operator/(HpReal a, const HpReal& b) { return a /= b; }
  friend HpReal operator*(HpReal a, long b) { return a *= b; }
  friend HpReal operator/(HpReal a, long b) { return a /= b; }
  HpReal operator-() const;

  friend std::partial_ordering operator<=>(const HpReal& a, const HpReal& b);
  friend bool operator==(const HpReal& a, const HpReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const HpReal& a, double b);
  friend bool operator==(const HpReal& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }

 private:
  void check_finite(const char* op) const;
  mpfr_t v_;
};

HpReal abs(const HpReal& x);
HpReal sqrt(const HpReal& x);
HpReal exp(const HpReal& x);
HpReal log(const HpReal& x);
HpReal log1p(const HpReal& x);
HpReal sin(const HpReal& x);
HpReal cos(const HpReal& x);
void sin_cos(const HpReal& x, HpReal& s, HpReal& c);
HpReal sinh(const HpReal& x);
HpReal cosh(const HpReal& x);
HpReal atan2(const HpReal& y, const HpReal& x);
HpReal pow(const HpReal& x, const HpReal& y);
HpReal pow(const HpReal& x, long n);
HpReal floor(const HpReal& x);
HpReal round(const HpReal& x);
HpReal max(const HpReal& a, const HpReal& b);
HpReal min(const HpReal& a, const HpReal& b);
HpReal log_int(unsigned long k, long bits);

HpReal const_pi(long bits);
HpReal const_euler(long bits);
HpReal const_e(long bits);
HpReal pow10(long exponent, long bits);

struct HpComplex {
  HpReal re;
  HpReal im;

  HpComplex() = default;
  explicit HpComplex(long bits) : re(bits), im(bits) {}
  HpComplex(HpReal r, HpReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit HpComplex(HpReal r) : re(std::move(r)), im(re.bits()) {}
  HpComplex(double r, double i, long bits) : re(r, bits), im(i, bits) {}
  static HpComplex from_strings(std::string_view re, std::string_view im, long bits);

  long bits() const { return re.bits() > im.bits() ? re.bits() : im.bits(); }
  HpComplex with_bits(long bits) const { return {re.with_bits(bits), im.with_bits(bits)}; }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  HpComplex& operator+=(const HpComplex& o);
  HpComplex& operator-=(const HpComplex& o);
  HpComplex& operator*=(const HpComplex& o);
  HpComplex& operator/=(const HpComplex& o);
  HpComplex& operator+=(const HpReal& o);
  HpComplex& operator-=(const HpReal& o);
  HpComplex& operator*=(const HpReal& o);
  HpComplex& operator/=(const HpReal& o);
  HpComplex& operator*=(long o);
  HpComplex& operator/=(long o);

  friend HpComplex operator+(HpComplex a, const HpComplex& b) { return a += b; }
  friend HpComplex operator-(HpComplex a, const HpComplex& b) { return a -= b; }
  friend HpComplex operator*(HpComplex a, const HpComplex& b) { return a *= b; }
  friend HpComplex operator/(HpComplex a, const HpComplex& b) { return a /= b; }
  friend HpComplex operator+(HpComplex a, const HpReal& b) { return a += b; }
  friend HpComplex operator-(HpComplex a, const HpReal& b) { return a -= b; }
  friend HpComplex operator*(HpComplex a, const HpReal& b) { return a *= b; }
  friend HpComplex operator/(HpComplex a, const HpReal& b) { return a /= b; }
  friend HpComplex operator*(HpComplex a, long b) { return a *= b; }
  friend HpComplex operator/(HpComplex a, long b) { return a /= b; }
  HpComplex operator-() const { return {-re, -im}; }

  friend bool operator==(const HpComplex& a, const HpComplex& b) { return a.re == b.re && a.im == b.im; }
};

HpComplex conj(const HpComplex& z);
HpReal abs(const HpComplex& z);
HpReal norm(const HpComplex& z);  // |z|^2
HpReal arg(const HpComplex& z);
HpComplex exp(const HpComplex& z);
HpComplex log(const HpComplex& z);
HpComplex sin(const HpComplex& z);
HpComplex cos(const HpComplex& z);
HpComplex sqrt(const HpComplex& z);
HpComplex reciprocal(const HpComplex& z);
/// e^{i*theta}
HpComplex expi(const HpReal& theta);

/// Principal branch of log Gamma(z) (cut along the negative real axis,
/// log Gamma(z + 1) = log Gamma(z) + log z). Throws PoleOfGamma at 0, -1, -2, ...
HpComplex log_gamma(const HpComplex& z, const PrecisionContext& ctx);
/// Digamma psi(z) = Gamma'(z) / Gamma(z).
HpComplex digamma(const HpComplex& z, const PrecisionContext& ctx);

/// k^{-s} = exp(-s log k) with the real logarithm of k.
HpComplex cpow(unsigned long k, const HpComplex& s, const PrecisionContext& ctx);

/// Exact Bernoulli number B_{2j} as a precision-`bits` real (cached rationals).
HpReal bernoulli_b2j(int j, long bits);

/// Number of decimal digits on which `a` and `b` agree, measured as
/// -log10(|a - b| / max(1, |b|)); a huge value when they are equal.
int agreeing_digits(const HpComplex& a, const HpComplex& b);

/// Evaluates `f` at ctx and at ctx.escalated(); if the two agree to
/// target_digits returns the higher-precision value (rounded back to ctx.bits)
/// along with the measured agreement. Otherwise retries with further
/// escalation and finally throws PrecisionExhausted.
struct AgreedValue {
  HpComplex value;
  int certified_digits;
};
AgreedValue with_agreement(const std::function<HpComplex(const PrecisionContext&)>& f,
                           const PrecisionContext& ctx);

}  // namespace rzeta
