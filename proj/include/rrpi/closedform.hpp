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

// Golden-ratio closed forms for R(q) and the degree-5 tower
// u_n = R(exp(-2 * 5^n * pi)).

#include <cstdint>
#include <vector>

#include "rrpi/precision.hpp"

namespace rrpi::closedform {

struct GoldenConstants {
  Real phi;   // (sqrt(5) + 1) / 2
  Real phi5;  // phi^5
};

GoldenConstants golden(const PrecisionContext& ctx);

/// R(e^{-2 pi}) = sqrt(phi^2 + 1) - phi.
Real closed_R_2pi(const PrecisionContext& ctx);

/// R^5(e^{-2 pi / sqrt 5}) = sqrt(phi^10 + 1) - phi^5.
Real closed_R5_2pi_over_sqrt5(const PrecisionContext& ctx);

/// R(e^{-2 pi sqrt 5}) = (1 - phi r) / (phi + r), r = R(e^{-2 pi / sqrt 5}).
Real closed_R_2pi_sqrt5(const PrecisionContext& ctx);

/// Y = ((1 - phi^5 u^5) / (phi^5 + u^5))^(1/5), the intermediate of a
/// degree-5 step. Throws DomainError unless 1 - phi^5 u^5 > 0.
Real ccl_y(const Real& u, const PrecisionContext& ctx);

/// v = R(q^5) from u = R(q): v = (1 - phi Y) / (phi + Y).
///
/// The numerator is formed without cancellation: with w = phi Y,
/// 1 - w = (1 - w^5) / (1 + w + w^2 + w^3 + w^4) and
/// 1 - w^5 = u^5 (1 + phi^10) / (phi^5 + u^5). Every result is checked
/// against the degree-5 modular equation before it is returned.
Real ccl_step(const Real& u, const PrecisionContext& ctx);

struct TowerLevel {
  int n;
  std::uint64_t alpha;  // 5^n
  Real u;               // R(exp(-2 alpha pi))
};

/// Levels 0..n; level 0 is closed_R_2pi, each later level one ccl_step.
std::vector<TowerLevel> tower(int n, const PrecisionContext& ctx);

}  // namespace rrpi::closedform
