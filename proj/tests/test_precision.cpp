// Copyright 2026 The rrpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "rrpi/precision.hpp"

using namespace rrpi;

TEST_CASE("context invariants") {
  CHECK_THROWS_AS(PrecisionContext(0, 32), DomainError);
  CHECK_THROWS_AS(PrecisionContext(10, 15), DomainError);
  const PrecisionContext ctx(100, 20);
  CHECK(ctx.working_digits() == 120);
  CHECK(ctx.rounding() == Rounding::to_nearest);

  CHECK(PrecisionContext::default_guard_digits(10) == 32);
  CHECK(PrecisionContext::default_guard_digits(1000) == 50);
  CHECK(PrecisionContext::default_guard_digits(2001) == 101);
}

TEST_CASE("mixed precisions are rejected") {
  const Real a(1, 40);
  const Real b(1, 41);
  CHECK_THROWS_AS(a + b, PrecisionMismatch);
  CHECK_THROWS_AS(a * b, PrecisionMismatch);
  CHECK_THROWS_AS((void)(a < b), PrecisionMismatch);
  CHECK_NOTHROW(a + b.with_digits(40));
}

TEST_CASE("a Real carries its context's working precision") {
  const PrecisionContext ctx(50, 16);
  CHECK(Real(3, ctx).digits() == 66);
  CHECK(ln(Real(3, ctx)).digits() == 66);
  CHECK(const_pi_reference(ctx).digits() == 66);
}

TEST_CASE("elementary domain errors") {
  const PrecisionContext ctx(30, 16);
  CHECK_THROWS_AS(ln(Real(0, ctx)), DomainError);
  CHECK_THROWS_AS(ln(Real(-2, ctx)), DomainError);
  CHECK_THROWS_AS(sqrt(Real(-2, ctx)), DomainError);
  CHECK_THROWS_AS(nth_root(Real(-2, ctx), 4), DomainError);
  CHECK_THROWS_AS(pow_int(Real(0, ctx), -1), DomainError);
  CHECK_THROWS_AS(Real(1, ctx) / Real(0, ctx), DomainError);
  CHECK(nth_root(Real(-32, ctx), 5) == -2);
}

TEST_CASE("elementary examples") {
  const PrecisionContext ctx(50, 16);
  CHECK(ln(Real(1, ctx)).is_zero());
  CHECK(elementary(Real(1, ctx), ElementaryOp::ln).is_zero());
  CHECK(elementary(Real(2, ctx), ElementaryOp::pow_int, 10) == 1024);
  CHECK(elementary(Real(1024, ctx), ElementaryOp::nth_root, 10) == 2);

  // Fifth-root roundtrip of R(e^{-2 pi}) at 50 digits.
  const Real x = Real::parse("0.28407904384041229602829183239312616909108808844573758", ctx);
  const Real back = nth_root(pow_int(x, 5), 5);
  CHECK(oracle::agreeing_digits(back, x) > 50);

  // exp(-2 pi) against 1 / exp(2 pi) at 30 digits.
  const PrecisionContext c30(30, 16);
  const Real two_pi = const_pi_reference(c30) * 2;
  CHECK(oracle::agreeing_digits(exp(-two_pi), 1 / exp(two_pi)) > 28);
}

TEST_CASE("pi reference") {
  SUBCASE("10 digits gives 2pi - 6 = 0.2831853072") {
    const PrecisionContext ctx(10, 16);
    const Real x2 = const_pi_reference(ctx) * 2 - 6;
    CHECK(x2.to_fixed(10) == "0.2831853072");
  }
  SUBCASE("one digit rounds to 3") {
    const PrecisionContext ctx(1, 16);
    CHECK(const_pi_reference(ctx).to_scientific(1) == "3e0");
  }
  SUBCASE("1000 digits match Machin's formula") {
    const PrecisionContext ctx(1000, 32);
    const Real agm = const_pi_reference(ctx);
    const Real machin = oracle::machin_pi(ctx.working_digits());
    CHECK(agm.significant(1000).mantissa == machin.significant(1000).mantissa);
    CHECK(oracle::agreeing_digits(agm, machin) > 1025);
  }
  SUBCASE("agrees with the backend's own constant") {
    const PrecisionContext ctx(300, 32);
    const Real agm = const_pi_reference(ctx);
    // Third opinion, formatted through the backend directly.
    mpfr_t raw;
    mpfr_init2(raw, bits_for_digits(ctx.working_digits()));
    mpfr_const_pi(raw, MPFR_RNDN);
    char* s = nullptr;
    mpfr_asprintf(&s, "%.330Re", raw);
    const Real backend = Real::parse(s, ctx);
    mpfr_free_str(s);
    mpfr_clear(raw);
    CHECK(oracle::agreeing_digits(agm, backend) > 330);
  }
}

TEST_CASE("monotone precision: extra digits only change the tail") {
  const Real small = const_pi_reference(60);
  const Real large = const_pi_reference(200);
  CHECK(small.significant(58, DigitMode::truncate).mantissa ==
        large.significant(58, DigitMode::truncate).mantissa);
  const Real l60 = ln(Real(7, 60));
  const Real l200 = ln(Real(7, 200));
  CHECK(oracle::agreeing_digits(l200.with_digits(60), l60) > 58);
}

TEST_CASE("exp(ln x) roundtrip over [1e-6, 1e6]") {
  std::mt19937_64 rng(20261017);
  std::uniform_real_distribution<double> log10x(-6.0, 6.0);
  const PrecisionContext ctx(80, 20);
  for (int i = 0; i < 100; ++i) {
    const double e = log10x(rng);
    const Real x = Real::parse(std::to_string(std::pow(10.0, e)), ctx);
    const Real back = exp(ln(x));
    CHECK(oracle::agreeing_digits(back, x) > ctx.working_digits() - 2);
  }
}

TEST_CASE("formatting and digit helpers") {
  const PrecisionContext ctx(40, 16);
  const Real x = Real::parse("-9.32847364024e-3", ctx);
  CHECK(x.to_scientific(8) == "-9.3284736e-3");
  CHECK(x.decimal_exponent() == -3);
  CHECK(Real::parse("0.0005304994956", ctx).to_fixed(10) == "0.0005304995");
  CHECK(Real::parse("0.0005304994956", ctx).to_fixed(10, DigitMode::truncate) ==
        "0.0005304994");
  CHECK(Real::parse("9.99", ctx).decimal_exponent() == 0);
  CHECK(Real::parse("1e-1653", ctx).decimal_exponent() == -1653);
  CHECK_THROWS_AS(Real::parse("abc", ctx), DomainError);
  CHECK_THROWS_AS(Real::parse("", ctx), DomainError);
  CHECK(log10_magnitude(Real::parse("1e-5000", ctx)) == doctest::Approx(-5000));
}

TEST_CASE("printed-constant matching") {
  const PrecisionContext ctx(40, 16);
  // Rounded and truncated renderings are both accepted.
  CHECK(matches_printed(Real::parse("0.28318530717958", ctx), "0.2831853072"));
  CHECK(matches_printed(Real::parse("0.00053049949", ctx), "0.0005304994"));
  CHECK(matches_printed(Real::parse("-1.208404416e-69", ctx), "-1.20840441e-69"));
  // A wrong last digit, a wrong sign, or a wrong exponent is not.
  CHECK_FALSE(matches_printed(Real::parse("0.2831853074", ctx), "0.2831853072"));
  CHECK_FALSE(matches_printed(Real::parse("7.6641082e-5", ctx), "-7.6641082e-5"));
  CHECK_FALSE(matches_printed(Real::parse("7.6641082e-6", ctx), "7.6641082e-5"));
  CHECK(matches_printed(Real(14, ctx), "14"));
  CHECK(printed_significant_digits("0.0002844725721532") == 13);
  CHECK(printed_significant_digits("-9.3284736e-3") == 8);
}

TEST_CASE("leading digit agreement") {
  const PrecisionContext ctx(30, 16);
  const Real a = Real::parse("6.2925137808", ctx);
  const Real b = Real::parse("6.2831853071", ctx);
  CHECK(leading_digit_agreement(a, b) == 2);
  CHECK(leading_digit_agreement(a, a) == ctx.working_digits());
  CHECK(leading_digit_agreement(a, -a) == 0);
}
