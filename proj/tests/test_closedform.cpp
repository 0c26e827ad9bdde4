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

#include "oracles.hpp"
#include "rrpi/cfrac.hpp"
#include "rrpi/closedform.hpp"
#include "rrpi/modular.hpp"

using namespace rrpi;
using namespace rrpi::closedform;

namespace {

Real r_at(const Real& exponent, const PrecisionContext& ctx) {
  return cfrac::eval_R(exp(-exponent), ctx).value;
}

}  // namespace

TEST_CASE("golden constants") {
  const PrecisionContext ctx(100, 16);
  const auto g = golden(ctx);
  CHECK(oracle::agreeing_digits(g.phi * g.phi, g.phi + 1) > 110);
  CHECK(oracle::agreeing_digits(g.phi5, pow_int(g.phi, 5)) > 110);
}

TEST_CASE("R(e^{-2pi}) closed form") {
  const PrecisionContext c10(10, 16);
  CHECK(closed_R_2pi(c10).to_fixed(10) == "0.2840790438");

  const PrecisionContext ctx(200, 16);
  const auto g = golden(ctx);
  const Real r = closed_R_2pi(ctx);
  const Real shifted = r + g.phi;
  CHECK(oracle::agreeing_digits(shifted * shifted, g.phi * g.phi + 1) > 210);
  const Real two_pi = const_pi_reference(ctx) * 2;
  CHECK(oracle::agreeing_digits(r, r_at(two_pi, ctx)) > 198);
}

TEST_CASE("R^5(e^{-2pi/sqrt5}) closed form") {
  const PrecisionContext c10(10, 16);
  const Real x = closed_R5_2pi_over_sqrt5(c10);
  CHECK((6 * x / (1 - x)).to_fixed(10) == "0.2826810695");

  const PrecisionContext ctx(100, 16);
  const auto g = golden(ctx);
  const Real r5 = closed_R5_2pi_over_sqrt5(ctx);
  const Real shifted = r5 + g.phi5;
  CHECK(oracle::agreeing_digits(shifted * shifted, g.phi5 * g.phi5 + 1) > 110);
  const Real two_pi = const_pi_reference(ctx) * 2;
  CHECK(oracle::agreeing_digits(nth_root(r5, 5), r_at(two_pi / sqrt(Real(5, ctx)), ctx)) > 98);
}

TEST_CASE("R(e^{-2pi sqrt5}) closed form") {
  const PrecisionContext c10(10, 16);
  const Real x3 = closed_R_2pi_sqrt5(c10) / sqrt(closed_R5_2pi_over_sqrt5(c10));
  CHECK(x3.to_fixed(10) == "0.2838497335");

  const PrecisionContext ctx(100, 16);
  const Real two_pi = const_pi_reference(ctx) * 2;
  const Real x2 = two_pi - 6;
  const Real r = closed_R_2pi_sqrt5(ctx);
  CHECK(matches_printed(r - x2 * sqrt(x2 / two_pi), "8.97985e-5"));
  CHECK(oracle::agreeing_digits(r, r_at(two_pi * sqrt(Real(5, ctx)), ctx)) > 98);
}

TEST_CASE("ccl_step from R(e^{-2pi})") {
  const PrecisionContext ctx(60, 16);
  const auto g = golden(ctx);
  const Real u = closed_R_2pi(ctx);

  // Y^5 = 3 (sqrt(phi^2 + 1) - 1) - phi^2
  const Real y = ccl_y(u, ctx);
  const Real y5 = 3 * (sqrt(g.phi * g.phi + 1) - 1) - g.phi * g.phi;
  CHECK(oracle::agreeing_digits(pow_int(y, 5), y5) > 70);

  const Real v = ccl_step(u, ctx);
  CHECK(v > 0);
  CHECK(v < u);
  const Real two_pi = const_pi_reference(ctx) * 2;
  CHECK(matches_printed(two_pi + ln(v), "-2.2711010e-14"));
  CHECK(oracle::agreeing_digits(v, r_at(two_pi * 5, ctx)) > 70);

  // The textbook quotient (1 - phi Y)/(phi + Y) gives the same number
  // up to its cancellation loss.
  const Real direct = (1 - g.phi * y) / (g.phi + y);
  CHECK(oracle::agreeing_digits(direct, v) > 60);
}

TEST_CASE("ccl_step second application reaches R(e^{-50pi})") {
  const PrecisionContext ctx(120, 32);
  const Real v1 = ccl_step(closed_R_2pi(ctx), ctx);
  const Real v2 = ccl_step(v1, ctx);
  const Real two_pi = const_pi_reference(ctx) * 2;
  CHECK(matches_printed(two_pi + ln(v2) / 5, "-1.20840441e-69"));
  CHECK(modular::check(modular::Relation::degree5, v1, v2).holds());
}

TEST_CASE("ccl_step domain") {
  const PrecisionContext ctx(30, 16);
  // 1 - phi^5 u^5 <= 0 once u >= 1/phi.
  CHECK_THROWS_AS(ccl_step(Real::parse("0.7", ctx), ctx), DomainError);
  CHECK_THROWS_AS(ccl_step(Real(0, ctx), ctx), DomainError);
  CHECK_THROWS_AS(ccl_step(Real::parse("0.2", ctx).with_digits(20), ctx),
                  PrecisionMismatch);
}

TEST_CASE("tower") {
  SUBCASE("n = 0 is the base value") {
    const PrecisionContext ctx(40, 16);
    const auto t = tower(0, ctx);
    REQUIRE(t.size() == 1);
    CHECK(t[0].alpha == 1);
    CHECK(t[0].u == closed_R_2pi(ctx));
    CHECK_THROWS_AS(tower(-1, ctx), DomainError);
  }
  SUBCASE("n = 1 matches the nested radical at 50 digits") {
    const PrecisionContext ctx(50, 16);
    const auto g = golden(ctx);
    const Real x = nth_root(3 * (sqrt(g.phi * g.phi + 1) - 1) - g.phi * g.phi, 5);
    const Real nested = (1 - g.phi * x) / (g.phi + x);
    CHECK(oracle::agreeing_digits(tower(1, ctx)[1].u, nested) > 50);
  }
  SUBCASE("n = 2 matches the (B - phi A)/(A + phi B) form") {
    const PrecisionContext ctx(200, 32);
    const auto g = golden(ctx);
    const Real phi = g.phi;
    const Real x = nth_root(3 * (sqrt(phi * phi + 1) - 1) - phi * phi, 5);
    const Real p = phi + x;
    const Real m = 1 - phi * x;
    const Real a = nth_root(pow_int(p, 5) - g.phi5 * pow_int(m, 5), 5);
    const Real b = nth_root(g.phi5 * pow_int(p, 5) + pow_int(m, 5), 5);
    const Real v = (b - phi * a) / (a + phi * b);
    const auto t = tower(2, ctx);
    CHECK(t[2].alpha == 25);
    // The displayed quotient cancels about 23 digits; the tower does not.
    CHECK(oracle::agreeing_digits(t[2].u, v) > ctx.working_digits() - 30);
  }
  SUBCASE("values decrease, stay in (0,1), satisfy degree 5 and match R") {
    const PrecisionContext ctx(400, 32);
    const auto t = tower(4, ctx);
    const Real two_pi = const_pi_reference(ctx) * 2;
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t[i].u > 0);
      CHECK(t[i].u < 1);
      if (i > 0) {
        CHECK(t[i].u < t[i - 1].u);
        CHECK(modular::check(modular::Relation::degree5, t[i - 1].u, t[i].u).holds());
      }
      if (i <= 2) {
        const Real r = r_at(two_pi * static_cast<long>(t[i].alpha), ctx);
        CHECK(oracle::agreeing_digits(t[i].u, r) > ctx.working_digits() - 5);
      }
    }
  }
}
