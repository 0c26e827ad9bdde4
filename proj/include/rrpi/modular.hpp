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

// Modular equations for the Rogers-Ramanujan continued fraction.
//
// With u = R(q):
//   degree 5,  v = R(q^5):   u^5 = v (1-2v+4v^2-3v^3+v^4) / (1+3v+4v^2+2v^3+v^4)
//   degree 11, v = R(q^11):  uv (1-11u^5-u^10)(1-11v^5-v^10) = (u-v)^12
//
// Residuals are computed with cleared denominators as lhs - rhs.

#include <vector>

#include "rrpi/precision.hpp"

namespace rrpi::modular {

enum class Relation { degree5, degree11 };

const char* to_string(Relation r);

struct ModularResidual {
  Real u;
  Real v;
  Real residual;  // lhs - rhs
  Real scale;     // |lhs| + |rhs|
  Relation relation;

  /// |residual| / scale, or 0 when both sides vanish.
  Real relative() const;
  /// |residual| < 10^-(working-10), absolutely and relative to scale.
  bool holds() const;
};

/// 10^-(digits - 10): the acceptance bound for a residual at this precision.
Real residual_tolerance(int digits);

/// u^5 (1+3v+4v^2+2v^3+v^4) - v (1-2v+4v^2-3v^3+v^4).
Real residual_deg5(const Real& u, const Real& v);

/// uv (1-11u^5-u^10)(1-11v^5-v^10) - (u-v)^12.
Real residual_deg11(const Real& u, const Real& v);

ModularResidual check(Relation relation, const Real& u, const Real& v);

enum class NewtonSchedule {
  doubling,  // start at `start_digits`, double up to working precision
  fixed,     // every iteration at working precision
};

struct RogersOptions {
  NewtonSchedule schedule = NewtonSchedule::doubling;
  int start_digits = 64;
  int iteration_cap = 200;
};

struct NewtonCertificate {
  int iterations = 0;
  double final_step_log10 = 0;      // log10 |last step / v|
  std::vector<double> step_log10;   // every relative step, in order
  std::vector<int> stage_digits;    // precision of each iteration
};

struct RogersRoot {
  Real v;
  NewtonCertificate certificate;
};

/// Root v of the degree-11 relation for given u, i.e. v = R(q^11) when
/// u = R(q) with q = exp(-2 alpha pi), alpha >= 1.
///
/// Newton from the seed u^11. The returned root is pinned to the
/// R(q^11) branch: 0 < v < u, the residual changes sign across v, and v
/// stays within a factor 1/2..3/2 of the seed; otherwise BracketError.
RogersRoot rogers_solve(const Real& u, const PrecisionContext& ctx,
                        const RogersOptions& options = {});

}  // namespace rrpi::modular
