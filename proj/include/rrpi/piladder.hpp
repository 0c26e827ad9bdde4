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

#pragma once

// 2 pi from the Rogers-Ramanujan continued fraction:
//
//   2 pi ~ -(5 / alpha) ln R(exp(-2 alpha pi))
//
// driven along two ladders of exponents: alpha = 5^n (closed-form
// degree-5 tower) and alpha = 5 * 11^m (Newton on the degree-11
// relation, starting from R(exp(-10 pi))).

#include <cstdint>
#include <string>
#include <vector>

#include "rrpi/precision.hpp"

namespace rrpi::piladder {

enum class Scheme { deg5, deg11 };

const char* to_string(Scheme s);
Scheme scheme_from_string(const std::string& text);

/// Highest level each scheme is tested at.
int max_tested_level(Scheme s);

struct LadderState {
  Scheme scheme;
  int level;
  std::uint64_t alpha;  // 5^level or 5 * 11^level
  Real u;               // R(exp(-2 alpha pi))
  Real two_pi_approx;   // -(5 / alpha) ln u
  /// Sign convention of the published error tables: 2pi - approx for
  /// deg5, approx - 2pi for deg11.
  Real signed_error;
  /// Correct digits k: |error| = c * 10^-k with 1 <= c < 10.
  int k_correct;
  /// Leading decimal digits of approx that agree with the reference.
  int k_agree;
  /// Newton iterations spent on this level (deg11 only).
  int newton_iterations = 0;
};

struct DigitReport {
  int level;
  int k_correct;
  Real error_mantissa;  // c in [1, 10) with |error| = c * 10^exponent
  long error_exponent;
};

DigitReport digit_report(const LadderState& state);

/// Exponent alpha of a level; throws DomainError on 64-bit overflow.
std::uint64_t alpha_for(Scheme scheme, int level);

/// Predicted correct digits from the first-order error (5/alpha) e^{-2 pi alpha}.
int predicted_k(Scheme scheme, int level);

/// Context sized for a level: predicted k * 1.1 + 64 target digits.
PrecisionContext recommended_context(Scheme scheme, int level);

/// Throws ContextTooSmall when the context cannot resolve the predicted
/// error of `level` (needs predicted k + 24 working digits, enough for
/// an 11-digit error mantissa plus rounding).
void require_capacity(Scheme scheme, int level, const PrecisionContext& ctx);

std::vector<LadderState> ladder_deg5(int n_max, const PrecisionContext& ctx);
std::vector<LadderState> ladder_deg11(int m_max, const PrecisionContext& ctx);
std::vector<LadderState> ladder(Scheme scheme, int max_level,
                                const PrecisionContext& ctx);

struct CertifiedDigits {
  Scheme scheme;
  int level;
  int k;
  std::string digits;  // "6.2831853071795"
};

/// The first k_correct digits of 2 pi, taken from the independent
/// reference after the ladder has certified them.
CertifiedDigits digits_of_2pi(Scheme scheme, int level,
                              const PrecisionContext& ctx);

/// R(e^{-2 pi alpha}) / e^{-2 pi alpha / 5}; tends to 1 from below.
Real limit_ratio(const Real& alpha, const PrecisionContext& ctx);

}  // namespace rrpi::piladder
