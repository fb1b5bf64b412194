#include <doctest.h>

#include <atomic>
#include <numbers>

#include "test_support.hpp"
#include "zeta/parallel.hpp"
#include "zeta/precision.hpp"

using namespace rzeta;
using testing_support::abs_digits;
using testing_support::hp;

TEST_CASE("context enforces the guard-bit floor") {
  CHECK(PrecisionContext::min_bits_for(30) == 132);
  CHECK(PrecisionContext::min_bits_for(1) == 64);
  CHECK_THROWS_AS(PrecisionContext(100, 30), Error);
  CHECK_THROWS_AS(PrecisionContext(200, 0), Error);
  const auto ctx = PrecisionContext::for_digits(30);
  CHECK(ctx.escalated().bits() == 264);
  CHECK(ctx.escalated().target_digits() == 30);
  const auto wide = ctx.widened(100);
  CHECK(wide.bits() == 232);
  CHECK(wide.target_digits() >= 60);
}

TEST_CASE("non-finite values are rejected") {
  const long b = 128;
  CHECK_THROWS_AS(HpReal(std::numeric_limits<double>::infinity(), b), Error);
  CHECK_THROWS_AS(HpReal(std::nan(""), b), Error);
  CHECK_THROWS_AS(HpReal::from_int(1, b) / HpReal(b), Error);
  CHECK_THROWS_AS(HpReal::from_string("1.5x", b), Error);
  CHECK_THROWS_AS(HpReal::from_string("nan", b), Error);
}

TEST_CASE("decimal strings round-trip bit for bit") {
  for (long bits : {64L, 132L, 300L}) {
    HpReal x = const_pi(bits) / 7;
    x *= HpReal::from_string("-1.25e-17", bits);
    const HpReal y = HpReal::from_string(x.to_roundtrip_string(), bits);
    CHECK(x == y);
  }
  const HpReal third = HpReal::from_string("0.333333333333333333333333333333333333", 200);
  CHECK(third.to_string(10) == "0.3333333333");
}

TEST_CASE("log_gamma special values") {
  const auto ctx = PrecisionContext::for_digits(30);
  const long b = ctx.bits();
  CHECK(abs_digits(log_gamma(HpComplex(1, 0, b), ctx), HpComplex(b)) > 32);
  CHECK(abs_digits(log_gamma(HpComplex(5, 0, b), ctx), HpComplex(log(HpReal(24.0, b)))) > 31);
  const HpReal half_log_pi = log(const_pi(b)) / 2;
  CHECK(abs_digits(log_gamma(HpComplex(0.5, 0, b), ctx), HpComplex(half_log_pi)) > 31);
}

TEST_CASE("log_gamma matches oracle values off the real axis") {
  const auto ctx = PrecisionContext::for_digits(35);
  const long b = ctx.bits();
  CHECK(abs_digits(log_gamma(HpComplex(-2.5, 0.1, b), ctx), hp(oracle::kLogGammaM25p01i, b)) > 35);
  CHECK(abs_digits(log_gamma(HpComplex(3, 40, b), ctx), hp(oracle::kLogGamma3p40i, b)) > 33);
  CHECK(abs_digits(digamma(HpComplex(0.25, 7, b), ctx), hp(oracle::kDigamma025p7i, b)) > 35);
}

TEST_CASE("log_gamma rejects poles") {
  const auto ctx = PrecisionContext::for_digits(20);
  for (int k = 0; k <= 3; ++k) {
    try {
      log_gamma(HpComplex(-k, 0, ctx.bits()), ctx);
      FAIL("no error at a pole");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleOfGamma);
    }
  }
}

TEST_CASE("Gamma recurrence holds at random strip points") {
  const auto ctx = PrecisionContext::for_digits(30);
  const long b = ctx.bits();
  for (int i = 0; i < 40; ++i) {
    const HpComplex z(testing_support::uniform(0.01, 10.0), testing_support::uniform(-30.0, 30.0), b);
    HpComplex z1 = z;
    z1.re += HpReal::from_int(1, b);
    // Gamma(z + 1) = z Gamma(z), compared on the log scale modulo 2 pi i
    const HpComplex lhs = log_gamma(z1, ctx);
    const HpComplex rhs = log_gamma(z, ctx) + log(z);
    HpComplex diff = lhs - rhs;
    const HpReal turns = round(diff.im / (const_pi(b) * 2));
    diff.im -= turns * (const_pi(b) * 2);
    CHECK(abs_digits(diff, HpComplex(b)) > 28);
  }
}

TEST_CASE("log_gamma is conjugate symmetric") {
  const auto ctx = PrecisionContext::for_digits(30);
  const long b = ctx.bits();
  for (int i = 0; i < 20; ++i) {
    const HpComplex z(testing_support::uniform(-5.0, 10.0), testing_support::uniform(0.1, 50.0), b);
    CHECK(abs_digits(log_gamma(conj(z), ctx), conj(log_gamma(z, ctx))) > 29);
  }
}

TEST_CASE("cpow examples") {
  const auto ctx = PrecisionContext::for_digits(30);
  const long b = ctx.bits();
  const HpComplex s(1.7, -3.2, b);
  CHECK(cpow(1, s, ctx) == HpComplex(HpReal::from_int(1, b), HpReal(b)));
  CHECK(abs_digits(cpow(2, HpComplex(1, 0, b), ctx), HpComplex(0.5, 0, b)) > 35);
  CHECK(abs_digits(cpow(4, HpComplex(0.5, 0, b), ctx), HpComplex(0.5, 0, b)) > 35);
  CHECK_THROWS_AS(cpow(0, s, ctx), Error);
}

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli_b2j(1, 128) == HpReal::from_int(1, 128) / 6);
  CHECK(bernoulli_b2j(2, 128) == -(HpReal::from_int(1, 128) / 30));
  CHECK(bernoulli_b2j(6, 128) == HpReal::from_int(691, 128) / -2730);
  CHECK(abs_digits(bernoulli_b2j(10, 200), HpReal::from_string("-529.124242424242424242424242424242", 200)) > 28);
}

TEST_CASE("two-precision agreement escalates and gives up") {
  const auto ctx = PrecisionContext::for_digits(20);
  int calls = 0;
  const AgreedValue v = with_agreement(
      [&](const PrecisionContext& c) {
        ++calls;
        return HpComplex(const_pi(c.bits()));
      },
      ctx);
  CHECK(calls == 2);
  CHECK(v.certified_digits >= 20);
  // a result that depends on the working precision never settles
  CHECK_THROWS_AS(with_agreement(
                      [](const PrecisionContext& c) {
                        return HpComplex(HpReal(1.0 / static_cast<double>(c.bits()), c.bits()));
                      },
                      ctx),
                  Error);
}

TEST_CASE("parallel_map keeps order and reports the lowest failing index") {
  for (unsigned w : {1u, 3u, 8u}) {
    set_worker_count(w);
    const auto squares = parallel_map(100, [](size_t i) { return static_cast<long>(i * i); });
    for (size_t i = 0; i < 100; ++i) CHECK(squares[i] == static_cast<long>(i * i));
    try {
      parallel_map(50, [](size_t i) -> int {
        if (i == 7 || i == 30) throw std::runtime_error(std::to_string(i));
        return 0;
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "7");
    }
  }
  set_worker_count(0);
}
