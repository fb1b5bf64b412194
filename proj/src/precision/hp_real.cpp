#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "zeta/precision.hpp"

namespace rzeta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::PoleOfGamma: return "pole-of-gamma";
    case ErrorKind::PoleOfZeta: return "pole-of-zeta";
    case ErrorKind::PrecisionExhausted: return "precision-escalation-exhausted";
    case ErrorKind::ContourTouchesPole: return "contour-touches-pole";
    case ErrorKind::NearZero: return "near-zero";
    case ErrorKind::GridTooCoarse: return "grid-too-coarse";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::NonIntegerWinding: return "non-integer-winding";
    case ErrorKind::ContourNearZero: return "contour-near-zero";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::LimitTooLarge: return "limit-too-large";
    case ErrorKind::SuspectZero: return "suspect-zero";
    case ErrorKind::ZeroLeadingCoefficient: return "zero-leading-coefficient";
    case ErrorKind::OutsideDisk: return "outside-disk";
    case ErrorKind::UnknownIndex: return "unknown-index";
    case ErrorKind::CacheFormat: return "cache-format";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// PrecisionContext

long PrecisionContext::min_bits_for(int target_digits) {
  const long needed =
      static_cast<long>(std::ceil(target_digits * std::log2(10.0))) + kGuardBits;
  return needed < 64 ? 64 : needed;
}

PrecisionContext::PrecisionContext(long bits, int target_digits, double escalation_factor)
    : bits_(bits), target_digits_(target_digits), escalation_factor_(escalation_factor) {
  if (target_digits < 1) {
    throw Error(ErrorKind::InvalidArgument, "target_digits must be >= 1");
  }
  if (bits < min_bits_for(target_digits)) {
    throw Error(ErrorKind::InvalidArgument,
                "bits=" + std::to_string(bits) + " below the minimum " +
                    std::to_string(min_bits_for(target_digits)) + " for " +
                    std::to_string(target_digits) + " digits");
  }
  if (!(escalation_factor > 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "escalation_factor must exceed 1");
  }
}

PrecisionContext PrecisionContext::for_digits(int target_digits, double escalation_factor) {
  if (target_digits < 1) {
    throw Error(ErrorKind::InvalidArgument, "target_digits must be >= 1");
  }
  return PrecisionContext(min_bits_for(target_digits), target_digits, escalation_factor);
}

PrecisionContext PrecisionContext::escalated() const {
  const auto next = static_cast<long>(std::ceil(static_cast<double>(bits_) * escalation_factor_));
  return PrecisionContext(next, target_digits_, escalation_factor_);
}

PrecisionContext PrecisionContext::with_extra_bits(long extra) const {
  return PrecisionContext(bits_ + extra, target_digits_, escalation_factor_);
}

PrecisionContext PrecisionContext::widened(long extra) const {
  const long bits = bits_ + extra;
  const int digits = static_cast<int>(std::floor(static_cast<double>(bits - kGuardBits) / std::log2(10.0)));
  return PrecisionContext(bits, std::max(target_digits_, digits), escalation_factor_);
}

HpReal PrecisionContext::tolerance(int offset) const {
  return pow10(-(static_cast<long>(target_digits_) + offset), bits_);
}

// ---------------------------------------------------------------------------
// HpReal

HpReal::HpReal(long bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

HpReal::HpReal(double value, long bits) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "non-finite value rejected");
  }
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

HpReal HpReal::from_int(long value, long bits) {
  HpReal r(bits);
  mpfr_set_si(r.v_, value, MPFR_RNDN);
  return r;
}

HpReal HpReal::from_string(std::string_view text, long bits) {
  HpReal r(bits);
  const std::string owned(text);
  char* end = nullptr;
  if (!owned.empty()) mpfr_strtofr(r.v_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (end == nullptr || *end != '\0' || end == owned.c_str()) {
    throw Error(ErrorKind::InvalidArgument, "not a decimal number: '" + owned + "'");
  }
  r.check_finite("parse");
  return r;
}

HpReal::HpReal(const HpReal& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

// Moves steal the limb storage; a moved-from value is only destroyed or
// reassigned.
HpReal::HpReal(HpReal&& other) noexcept {
  std::memcpy(static_cast<void*>(v_), static_cast<const void*>(other.v_), sizeof(mpfr_t));
  other.v_->_mpfr_d = nullptr;
}

HpReal& HpReal::operator=(const HpReal& other) {
  if (this != &other) {
    if (v_->_mpfr_d == nullptr) {
      mpfr_init2(v_, mpfr_get_prec(other.v_));
    } else {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HpReal& HpReal::operator=(HpReal&& other) noexcept {
  if (this != &other) {
    if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
    std::memcpy(static_cast<void*>(v_), static_cast<const void*>(other.v_), sizeof(mpfr_t));
    other.v_->_mpfr_d = nullptr;
  }
  return *this;
}

HpReal::~HpReal() {
  if (v_->_mpfr_d != nullptr) mpfr_clear(v_);
}

HpReal HpReal::with_bits(long bits) const {
  HpReal r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long HpReal::exponent() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 2;
  return static_cast<long>(mpfr_get_exp(v_));
}

std::string HpReal::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string HpReal::to_roundtrip_string() const {
  const int digits = 1 + static_cast<int>(std::ceil(static_cast<double>(bits()) * std::log10(2.0)));
  return to_string(digits);
}

void HpReal::check_finite(const char* op) const {
  if (!mpfr_number_p(v_)) {
    throw Error(ErrorKind::InvalidArgument, std::string("non-finite result in ") + op);
  }
}

namespace {
long wider(const HpReal& a, const HpReal& b) { return a.bits() > b.bits() ? a.bits() : b.bits(); }
}  // namespace

HpReal& HpReal::operator+=(const HpReal& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HpReal& HpReal::operator-=(const HpReal& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HpReal& HpReal::operator*=(const HpReal& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HpReal& HpReal::operator/=(const HpReal& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
HpReal& HpReal::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
HpReal& HpReal::operator/=(long o) {
  if (o == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
HpReal HpReal::operator-() const {
  HpReal r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const HpReal& a, const HpReal& b) {
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}
std::partial_ordering operator<=>(const HpReal& a, double b) {
  const int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define ZETA_UNARY(name, fn)                 \
  HpReal name(const HpReal& x) {             \
    HpReal r(x.bits());                      \
    fn(r.get_mut(), x.get(), MPFR_RNDN);     \
    return r;                                \
  }

ZETA_UNARY(abs, mpfr_abs)
ZETA_UNARY(exp, mpfr_exp)
ZETA_UNARY(log1p, mpfr_log1p)
ZETA_UNARY(sin, mpfr_sin)
ZETA_UNARY(cos, mpfr_cos)
ZETA_UNARY(sinh, mpfr_sinh)
ZETA_UNARY(cosh, mpfr_cosh)
#undef ZETA_UNARY

HpReal sqrt(const HpReal& x) {
  if (x.sign() < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of negative");
  HpReal r(x.bits());
  mpfr_sqrt(r.get_mut(), x.get(), MPFR_RNDN);
  return r;
}

HpReal log(const HpReal& x) {
  if (x.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "log of non-positive");
  HpReal r(x.bits());
  mpfr_log(r.get_mut(), x.get(), MPFR_RNDN);
  return r;
}

void sin_cos(const HpReal& x, HpReal& s, HpReal& c) {
  s = HpReal(x.bits());
  c = HpReal(x.bits());
  mpfr_sin_cos(s.get_mut(), c.get_mut(), x.get(), MPFR_RNDN);
}

HpReal atan2(const HpReal& y, const HpReal& x) {
  HpReal r(wider(x, y));
  mpfr_atan2(r.get_mut(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

HpReal pow(const HpReal& x, const HpReal& y) {
  HpReal r(wider(x, y));
  mpfr_pow(r.get_mut(), x.get(), y.get(), MPFR_RNDN);
  if (!mpfr_number_p(r.get())) throw Error(ErrorKind::InvalidArgument, "pow overflow");
  return r;
}

HpReal pow(const HpReal& x, long n) {
  HpReal r(x.bits());
  mpfr_pow_si(r.get_mut(), x.get(), n, MPFR_RNDN);
  if (!mpfr_number_p(r.get())) throw Error(ErrorKind::InvalidArgument, "pow overflow");
  return r;
}

HpReal floor(const HpReal& x) {
  HpReal r(x.bits());
  mpfr_floor(r.get_mut(), x.get());
  return r;
}

HpReal round(const HpReal& x) {
  HpReal r(x.bits());
  mpfr_round(r.get_mut(), x.get());
  return r;
}

HpReal max(const HpReal& a, const HpReal& b) { return a < b ? b : a; }
HpReal min(const HpReal& a, const HpReal& b) { return b < a ? b : a; }

HpReal log_int(unsigned long k, long bits) {
  HpReal r(bits);
  mpfr_set_ui(r.get_mut(), k, MPFR_RNDN);
  mpfr_log(r.get_mut(), r.get(), MPFR_RNDN);
  return r;
}

HpReal const_pi(long bits) {
  HpReal r(bits);
  mpfr_const_pi(r.get_mut(), MPFR_RNDN);
  return r;
}

HpReal const_euler(long bits) {
  HpReal r(bits);
  mpfr_const_euler(r.get_mut(), MPFR_RNDN);
  return r;
}

HpReal const_e(long bits) {
  HpReal r(bits);
  mpfr_set_ui(r.get_mut(), 1, MPFR_RNDN);
  mpfr_exp(r.get_mut(), r.get(), MPFR_RNDN);
  return r;
}

HpReal pow10(long exponent, long bits) {
  HpReal r(bits);
  mpfr_ui_pow_ui(r.get_mut(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent),
                 MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(r.get_mut(), 1, r.get(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------------------
// HpComplex

HpComplex HpComplex::from_strings(std::string_view re, std::string_view im, long bits) {
  return {HpReal::from_string(re, bits), HpReal::from_string(im, bits)};
}

HpComplex& HpComplex::operator+=(const HpComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
HpComplex& HpComplex::operator-=(const HpComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
HpComplex& HpComplex::operator*=(const HpComplex& o) {
  const long p = std::max(bits(), o.bits());
  HpReal t1(p), t2(p), nr(p), ni(p);
  mpfr_mul(t1.get_mut(), re.get(), o.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get_mut(), im.get(), o.im.get(), MPFR_RNDN);
  mpfr_sub(nr.get_mut(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_mul(t1.get_mut(), re.get(), o.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get_mut(), im.get(), o.re.get(), MPFR_RNDN);
  mpfr_add(ni.get_mut(), t1.get(), t2.get(), MPFR_RNDN);
  re = std::move(nr);
  im = std::move(ni);
  return *this;
}
HpComplex& HpComplex::operator/=(const HpComplex& o) {
  const HpReal d = norm(o);
  if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "complex division by zero");
  *this *= conj(o);
  re /= d;
  im /= d;
  return *this;
}
HpComplex& HpComplex::operator+=(const HpReal& o) {
  re += o;
  return *this;
}
HpComplex& HpComplex::operator-=(const HpReal& o) {
  re -= o;
  return *this;
}
HpComplex& HpComplex::operator*=(const HpReal& o) {
  re *= o;
  im *= o;
  return *this;
}
HpComplex& HpComplex::operator/=(const HpReal& o) {
  re /= o;
  im /= o;
  return *this;
}
HpComplex& HpComplex::operator*=(long o) {
  re *= o;
  im *= o;
  return *this;
}
HpComplex& HpComplex::operator/=(long o) {
  re /= o;
  im /= o;
  return *this;
}

HpComplex conj(const HpComplex& z) { return {z.re, -z.im}; }

HpReal norm(const HpComplex& z) { return z.re * z.re + z.im * z.im; }

HpReal abs(const HpComplex& z) {
  HpReal r(z.bits());
  mpfr_hypot(r.get_mut(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

HpReal arg(const HpComplex& z) { return atan2(z.im, z.re); }

HpComplex expi(const HpReal& theta) {
  HpReal s, c;
  sin_cos(theta, s, c);
  return {std::move(c), std::move(s)};
}

HpComplex exp(const HpComplex& z) { return expi(z.im) * exp(z.re); }

HpComplex log(const HpComplex& z) {
  if (z.is_zero()) throw Error(ErrorKind::InvalidArgument, "log of zero");
  return {log(abs(z)), arg(z)};
}

HpComplex sin(const HpComplex& z) {
  HpReal s, c;
  sin_cos(z.re, s, c);
  return {s * cosh(z.im), c * sinh(z.im)};
}

HpComplex cos(const HpComplex& z) {
  HpReal s, c;
  sin_cos(z.re, s, c);
  return {c * cosh(z.im), -(s * sinh(z.im))};
}

HpComplex sqrt(const HpComplex& z) {
  if (z.is_zero()) return z;
  const HpComplex l = log(z);
  return exp(HpComplex(l.re / 2, l.im / 2));
}

HpComplex reciprocal(const HpComplex& z) {
  HpComplex one(HpReal::from_int(1, z.bits()));
  return one / z;
}

int agreeing_digits(const HpComplex& a, const HpComplex& b) {
  const long p = std::max(a.bits(), b.bits());
  const HpReal diff = abs(a.with_bits(p) - b.with_bits(p));
  if (diff.is_zero()) return static_cast<int>(static_cast<double>(p) * std::log10(2.0));
  HpReal scale = abs(b.with_bits(p));
  if (scale < 1.0) scale = HpReal(1.0, p);
  const double rel = (diff / scale).to_double();
  if (rel <= 0.0) return static_cast<int>(static_cast<double>(p) * std::log10(2.0));
  const double digits = -std::log10(rel);
  return digits < 0 ? 0 : static_cast<int>(std::floor(digits));
}

AgreedValue with_agreement(const std::function<HpComplex(const PrecisionContext&)>& f,
                           const PrecisionContext& ctx) {
  PrecisionContext lo = ctx;
  HpComplex low = f(lo);
  for (int attempt = 0; attempt < PrecisionContext::kMaxEscalations; ++attempt) {
    const PrecisionContext hi = lo.escalated();
    HpComplex high = f(hi);
    const int digits = agreeing_digits(low, high);
    if (digits >= ctx.target_digits()) {
      return {high.with_bits(ctx.bits()), digits};
    }
    lo = hi;
    low = std::move(high);
  }
  throw Error(ErrorKind::PrecisionExhausted,
              "no two-precision agreement to " + std::to_string(ctx.target_digits()) +
                  " digits after " + std::to_string(PrecisionContext::kMaxEscalations) +
                  " escalations");
}

}  // namespace rzeta
