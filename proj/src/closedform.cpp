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

#include "rrpi/closedform.hpp"


#include "rrpi/modular.hpp"

namespace rrpi::closedform {

namespace {

Real at_context(long value, const PrecisionContext& ctx) { return Real(value, ctx); }

// sqrt(x^2 + 1) - x, as 1 / (sqrt(x^2 + 1) + x).
Real radical_gap(const Real& x) { return 1 / (sqrt(x * x + 1) + x); }

}  // namespace

GoldenConstants golden(const PrecisionContext& ctx) {
  Real phi = (sqrt(at_context(5, ctx)) + 1) / 2;
  Real phi5 = pow_int(phi, 5);
  return {std::move(phi), std::move(phi5)};
}

Real closed_R_2pi(const PrecisionContext& ctx) {
  return radical_gap(golden(ctx).phi);
}

Real closed_R5_2pi_over_sqrt5(const PrecisionContext& ctx) {
  return radical_gap(golden(ctx).phi5);
}

Real closed_R_2pi_sqrt5(const PrecisionContext& ctx) {
  const Real& phi = golden(ctx).phi;
  const Real r = nth_root(closed_R5_2pi_over_sqrt5(ctx), 5);
  return (1 - phi * r) / (phi + r);
}

Real ccl_y(const Real& u, const PrecisionContext& ctx) {
  const GoldenConstants g = golden(ctx);
  const Real u5 = pow_int(u, 5);
  const Real numerator = 1 - g.phi5 * u5;
  if (numerator.sign() <= 0) {
    throw DomainError("ccl_step: 1 - phi^5 u^5 <= 0");
  }
  return nth_root(numerator / (g.phi5 + u5), 5);
}

Real ccl_step(const Real& u, const PrecisionContext& ctx) {
  if (u.digits() != ctx.working_digits()) {
    throw PrecisionMismatch("ccl_step: u does not carry working precision");
  }
  if (u.sign() <= 0 || u >= 1) throw DomainError("ccl_step needs 0 < u < 1");

  const GoldenConstants g = golden(ctx);
  const Real y = ccl_y(u, ctx);
  const Real u5 = pow_int(u, 5);
  const Real w = g.phi * y;
  // 1 - w^5 = u^5 (1 + phi^10) / (phi^5 + u^5)
  const Real gap5 = u5 * (g.phi5 * g.phi5 + 1) / (g.phi5 + u5);
  const Real w2 = w * w;
  const Real one_minus_w = gap5 / (1 + w + w2 + w2 * w + w2 * w2);
  Real v = one_minus_w / (g.phi + y);

  if (!(v.sign() > 0 && v < u)) {
    throw DomainError("ccl_step: result outside (0, u)");
  }
  if (!modular::check(modular::Relation::degree5, u, v).holds()) {
    throw ConvergenceError("ccl_step: degree-5 residual above tolerance");
  }
  return v;
}

std::vector<TowerLevel> tower(int n, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("tower level must be non-negative");
  // 5^27 is the largest power of five below 2^64.
  if (n > 27) throw DomainError("tower level too large for a 64-bit exponent");
  std::vector<TowerLevel> levels;
  levels.reserve(static_cast<std::size_t>(n) + 1);
  levels.push_back({0, 1, closed_R_2pi(ctx)});
  for (int i = 1; i <= n; ++i) {
    const TowerLevel& prev = levels.back();
    levels.push_back({i, prev.alpha * 5, ccl_step(prev.u, ctx)});
  }
  return levels;
}

}  // namespace rrpi::closedform
