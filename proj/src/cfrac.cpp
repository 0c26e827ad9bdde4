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

#include "rrpi/cfrac.hpp"

#include <cmath>
#include <string>

#include "rootfind.hpp"

namespace rrpi::cfrac {

namespace {

// Exact powers are recomputed this often; in between q^k is obtained by
// dividing q^(k+1) by q.
constexpr int kPowerRefresh = 64;
constexpr int kInversionCap = 400;

void require_context(const Real& x, const PrecisionContext& ctx,
                     const char* what) {
  if (x.digits() != ctx.working_digits()) {
    throw PrecisionMismatch(std::string(what) + ": argument has " +
                            std::to_string(x.digits()) +
                            " digits, context works at " +
                            std::to_string(ctx.working_digits()));
  }
}

void require_nome(const Real& q) {
  if (q.sign() <= 0 || q >= 1) {
    throw DomainError("R(q) needs 0 < q < 1");
  }
  if (q > 1 - Real::parse("1e-6", q.digits())) {
    throw DomainError("q too close to 1 (cap is 1 - 1e-6)");
  }
}

}  // namespace

int truncation_depth(const Real& q, const PrecisionContext& ctx,
                     const CfracOptions& options) {
  require_nome(q);
  const int exponent = ctx.working_digits() + 5;
  const double neg_log_q = -ln(q).to_double();
  const double estimate = exponent * std::log(10.0) / neg_log_q;
  if (!(estimate < options.max_depth)) {
    throw ConvergenceError("continued fraction needs depth ~" +
                           std::to_string(estimate) + " > cap " +
                           std::to_string(options.max_depth));
  }
  const Real threshold = pow_int(Real(10, q.digits()), -exponent);
  int depth = std::max(1, static_cast<int>(std::ceil(estimate)));
  while (pow_int(q, depth) >= threshold) ++depth;
  while (depth > 1 && pow_int(q, depth - 1) < threshold) --depth;
  if (depth > options.max_depth) {
    throw ConvergenceError("continued fraction depth exceeds cap");
  }
  return depth;
}

CfracEval eval_R_at_depth(const Real& q, int depth,
                          const PrecisionContext& ctx) {
  require_context(q, ctx, "eval_R");
  require_nome(q);
  if (depth < 1) throw DomainError("depth must be positive");

  Real tail(1, ctx);
  Real power = pow_int(q, depth);
  for (int k = depth; k >= 1; --k) {
    if (k != depth) {
      power = (k % kPowerRefresh == 0) ? pow_int(q, k) : power / q;
    }
    tail = 1 + power / tail;
  }
  return CfracEval{q, depth, nth_root(q, 5) / tail};
}

CfracEval eval_R(const Real& q, const PrecisionContext& ctx,
                 const CfracOptions& options) {
  require_context(q, ctx, "eval_R");
  return eval_R_at_depth(q, truncation_depth(q, ctx, options), ctx);
}

Real invert_R(const Real& target, const PrecisionContext& ctx,
              const std::pair<Real, Real>& bracket) {
  require_context(target, ctx, "invert_R");
  if (target.sign() <= 0 || target >= 1) {
    throw DomainError("invert_R target must lie in (0, 1)");
  }
  const auto& [q_lo, q_hi] = bracket;
  require_context(q_lo, ctx, "invert_R");
  require_context(q_hi, ctx, "invert_R");
  if (!(q_lo < q_hi)) throw BracketError("invert_R: empty bracket");

  auto residual = [&](const Real& s) {
    return eval_R(pow_int(s, 5), ctx).value - target;
  };
  const auto root = detail::refine_root(
      residual, nth_root(q_lo, 5), nth_root(q_hi, 5), target, kInversionCap,
      "invert_R");
  return pow_int(root.x, 5);
}

Real invert_R(const Real& target, const PrecisionContext& ctx) {
  require_context(target, ctx, "invert_R");
  const Real sup = 2 / (sqrt(Real(5, ctx)) + 1);  // R(q) -> 1/phi as q -> 1
  if (target.sign() <= 0 || target >= sup) {
    throw DomainError("invert_R target must lie in (0, 1/phi)");
  }
  Real q_lo = pow_int(target, 5);
  Real q_hi = q_lo;
  do {
    q_hi = (q_hi + 1) / 2;
    if (eval_R(q_hi, ctx).value > target) break;
    q_lo = q_hi;
  } while (true);
  return invert_R(target, ctx, {q_lo, q_hi});
}

}  // namespace rrpi::cfrac
