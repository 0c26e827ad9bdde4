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

#include "rrpi/piladder.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "rrpi/cfrac.hpp"
#include "rrpi/closedform.hpp"
#include "rrpi/modular.hpp"

namespace rrpi::piladder {

namespace {

constexpr int kCapacityMargin = 24;

LadderState make_state(Scheme scheme, int level, std::uint64_t alpha, Real u,
                       const Real& two_pi, const PrecisionContext& ctx) {
  if (alpha > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) {
    throw DomainError("alpha does not fit a signed 64-bit integer");
  }
  Real approx = -5 * ln(u) / Real(static_cast<long>(alpha), ctx);
  Real excess = approx - two_pi;
  const int k_correct = excess.is_zero()
                            ? ctx.working_digits()
                            : static_cast<int>(-excess.decimal_exponent());
  const int k_agree = leading_digit_agreement(approx, two_pi);
  Real signed_error = scheme == Scheme::deg5 ? -excess : std::move(excess);
  return LadderState{scheme,       level,
                     alpha,        std::move(u),
                     std::move(approx), std::move(signed_error),
                     k_correct,    k_agree};
}

Real reference_two_pi(const PrecisionContext& ctx) {
  return const_pi_reference(ctx) * 2;
}

}  // namespace

const char* to_string(Scheme s) { return s == Scheme::deg5 ? "deg5" : "deg11"; }

Scheme scheme_from_string(const std::string& text) {
  if (text == "deg5") return Scheme::deg5;
  if (text == "deg11") return Scheme::deg11;
  throw DomainError("unknown scheme '" + text + "' (expected deg5 or deg11)");
}

int max_tested_level(Scheme s) { return s == Scheme::deg5 ? 6 : 3; }

std::uint64_t alpha_for(Scheme scheme, int level) {
  if (level < 0) throw DomainError("ladder level must be non-negative");
  std::uint64_t alpha = scheme == Scheme::deg5 ? 1 : 5;
  const std::uint64_t factor = scheme == Scheme::deg5 ? 5 : 11;
  for (int i = 0; i < level; ++i) {
    if (alpha > std::numeric_limits<std::uint64_t>::max() / factor) {
      throw DomainError("ladder exponent overflows 64 bits");
    }
    alpha *= factor;
  }
  return alpha;
}

int predicted_k(Scheme scheme, int level) {
  const double alpha = static_cast<double>(alpha_for(scheme, level));
  const double neg_log10_error =
      2 * std::numbers::pi * alpha / std::numbers::ln10 - std::log10(5 / alpha);
  return static_cast<int>(std::ceil(neg_log10_error));
}

PrecisionContext recommended_context(Scheme scheme, int level) {
  const int k = predicted_k(scheme, level);
  return PrecisionContext::with_default_guard(
      static_cast<int>(std::ceil(1.1 * k)) + 64);
}

void require_capacity(Scheme scheme, int level, const PrecisionContext& ctx) {
  const int need = predicted_k(scheme, level) + kCapacityMargin;
  if (ctx.working_digits() < need) {
    throw ContextTooSmall(std::string(to_string(scheme)) + " level " +
                          std::to_string(level) + " needs " +
                          std::to_string(need) + " working digits, have " +
                          std::to_string(ctx.working_digits()));
  }
}

DigitReport digit_report(const LadderState& state) {
  const Real magnitude = abs(state.signed_error);
  if (magnitude.is_zero()) {
    return {state.level, state.k_correct, Real(0, magnitude.digits()), 0};
  }
  const long e = magnitude.decimal_exponent();
  Real mantissa = magnitude / pow_int(Real(10, magnitude.digits()), e);
  return {state.level, state.k_correct, std::move(mantissa), e};
}

std::vector<LadderState> ladder_deg5(int n_max, const PrecisionContext& ctx) {
  require_capacity(Scheme::deg5, n_max, ctx);
  const Real two_pi = reference_two_pi(ctx);
  std::vector<LadderState> out;
  for (auto& level : closedform::tower(n_max, ctx)) {
    out.push_back(make_state(Scheme::deg5, level.n, level.alpha,
                             std::move(level.u), two_pi, ctx));
  }
  return out;
}

std::vector<LadderState> ladder_deg11(int m_max, const PrecisionContext& ctx) {
  require_capacity(Scheme::deg11, m_max, ctx);
  const Real two_pi = reference_two_pi(ctx);
  std::vector<LadderState> out;
  Real u = std::move(closedform::tower(1, ctx).back().u);  // R(e^{-10 pi})
  out.push_back(make_state(Scheme::deg11, 0, alpha_for(Scheme::deg11, 0), u,
                           two_pi, ctx));
  for (int m = 1; m <= m_max; ++m) {
    auto root = modular::rogers_solve(u, ctx);
    u = root.v;
    out.push_back(make_state(Scheme::deg11, m, alpha_for(Scheme::deg11, m), u,
                             two_pi, ctx));
    out.back().newton_iterations = root.certificate.iterations;
  }
  return out;
}

std::vector<LadderState> ladder(Scheme scheme, int max_level,
                                const PrecisionContext& ctx) {
  return scheme == Scheme::deg5 ? ladder_deg5(max_level, ctx)
                                : ladder_deg11(max_level, ctx);
}

CertifiedDigits digits_of_2pi(Scheme scheme, int level,
                              const PrecisionContext& ctx) {
  const auto states = ladder(scheme, level, ctx);
  const int k = states.back().k_correct;
  if (ctx.working_digits() < k + PrecisionContext::kMinGuardDigits) {
    throw ContextTooSmall("reference 2pi is not precise enough to certify " +
                          std::to_string(k) + " digits");
  }
  const DecimalDigits d =
      reference_two_pi(ctx).significant(k, DigitMode::truncate);
  std::string text = d.mantissa.substr(0, 1);
  if (k > 1) text += "." + d.mantissa.substr(1);
  return {scheme, level, k, std::move(text)};
}

Real limit_ratio(const Real& alpha, const PrecisionContext& ctx) {
  if (alpha.digits() != ctx.working_digits()) {
    throw PrecisionMismatch("limit_ratio: alpha does not carry working precision");
  }
  if (alpha < 1) throw DomainError("limit_ratio needs alpha >= 1");
  const Real x = 2 * const_pi_reference(ctx) * alpha;
  return cfrac::eval_R(exp(-x), ctx).value / exp(-x / 5);
}

}  // namespace rrpi::piladder
