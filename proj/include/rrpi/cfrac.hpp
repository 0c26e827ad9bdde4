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

// Rogers-Ramanujan continued fraction
//
//   R(q) = q^(1/5) / (1 + q / (1 + q^2 / (1 + q^3 / (1 + ...))))
//
// for real 0 < q < 1, evaluated bottom-up from a truncation depth N at
// which the dropped tail is below one unit in the last place.

#include <utility>

#include "rrpi/precision.hpp"

namespace rrpi::cfrac {

/// Largest nome accepted by eval_R; the depth grows like 1/(1-q).
inline constexpr double kMaxNomeGap = 1e-6;

struct CfracEval {
  Real q;
  int depth_used;
  Real value;
};

struct CfracOptions {
  int max_depth = 1 << 20;
};

/// Smallest N with q^N < 10^-(working digits + 5).
int truncation_depth(const Real& q, const PrecisionContext& ctx,
                     const CfracOptions& options = {});

/// R(q) at the context's working precision. `q` must carry that precision.
CfracEval eval_R(const Real& q, const PrecisionContext& ctx,
                 const CfracOptions& options = {});

/// R(q) truncated at an explicit depth; the tail below `depth` is set to 1.
CfracEval eval_R_at_depth(const Real& q, int depth, const PrecisionContext& ctx);

/// q in (lo, hi) with R(q) = target, by safeguarded secant refinement on
/// s = q^(1/5), seeded at s = target. Requires R(lo) < target < R(hi).
Real invert_R(const Real& target, const PrecisionContext& ctx,
              const std::pair<Real, Real>& bracket);

/// As above with a bracket found automatically: q_lo = target^5 (since
/// R(q) < q^(1/5)), q_hi grown geometrically until R(q_hi) > target.
Real invert_R(const Real& target, const PrecisionContext& ctx);

}  // namespace rrpi::cfrac
