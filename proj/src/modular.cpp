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

#include "rrpi/modular.hpp"

#include <algorithm>
#include <string>

namespace rrpi::modular {

namespace {

struct Sides {
  Real lhs;
  Real rhs;
};

Sides sides_deg5(const Real& u, const Real& v) {
  const Real v2 = v * v;
  const Real v3 = v2 * v;
  const Real v4 = v2 * v2;
  Real num = 1 - 2 * v + 4 * v2 - 3 * v3 + v4;
  Real den = 1 + 3 * v + 4 * v2 + 2 * v3 + v4;
  return {pow_int(u, 5) * den, v * num};
}

// 1 - 11 x^5 - x^10
Real rogers_factor(const Real& x) {
  const Real x5 = pow_int(x, 5);
  return 1 - 11 * x5 - x5 * x5;
}

Sides sides_deg11(const Real& u, const Real& v) {
  return {u * v * rogers_factor(u) * rogers_factor(v), pow_int(u - v, 12)};
}

// d/dv of the degree-11 residual.
Real deg11_derivative(const Real& u, const Real& u_factor, const Real& v) {
  const Real v4 = pow_int(v, 4);
  const Real v5 = v4 * v;
  const Real factor = 1 - 11 * v5 - v5 * v5;
  const Real factor_prime = -55 * v4 - 10 * v4 * v5;
  return u * u_factor * (factor + v * factor_prime) +
         12 * pow_int(u - v, 11);
}

}  // namespace

const char* to_string(Relation r) {
  return r == Relation::degree5 ? "degree5" : "degree11";
}

Real residual_tolerance(int digits) {
  return pow_int(Real(10, digits), -(digits - 10));
}

Real ModularResidual::relative() const {
  if (scale.is_zero()) return Real(0, residual.digits());
  return abs(residual) / scale;
}

bool ModularResidual::holds() const {
  const Real tol = residual_tolerance(residual.digits());
  return abs(residual) < tol && relative() < tol;
}

Real residual_deg5(const Real& u, const Real& v) {
  Sides s = sides_deg5(u, v);
  return s.lhs - s.rhs;
}

Real residual_deg11(const Real& u, const Real& v) {
  Sides s = sides_deg11(u, v);
  return s.lhs - s.rhs;
}

ModularResidual check(Relation relation, const Real& u, const Real& v) {
  Sides s = relation == Relation::degree5 ? sides_deg5(u, v)
                                          : sides_deg11(u, v);
  Real residual = s.lhs - s.rhs;
  Real scale = abs(s.lhs) + abs(s.rhs);
  return {u, v, std::move(residual), std::move(scale), relation};
}

RogersRoot rogers_solve(const Real& u, const PrecisionContext& ctx,
                        const RogersOptions& options) {
  const int working = ctx.working_digits();
  if (u.digits() != working) {
    throw PrecisionMismatch("rogers_solve: u does not carry working precision");
  }
  if (u.sign() <= 0 || u >= 1) {
    throw DomainError("rogers_solve needs 0 < u < 1");
  }
  if (rogers_factor(u).sign() <= 0) {
    throw DomainError("rogers_solve: 1 - 11u^5 - u^10 <= 0, u too large");
  }

  std::vector<int> stages;
  if (options.schedule == NewtonSchedule::doubling) {
    for (int d = std::min(std::max(options.start_digits, 20), working);
         d < working; d *= 2) {
      stages.push_back(d);
    }
  }
  stages.push_back(working);

  NewtonCertificate cert;
  Real v = pow_int(u.with_digits(stages.front()), 11);
  for (const int digits : stages) {
    const bool last = digits == working;
    const Real uu = u.with_digits(digits);
    const Real u_factor = rogers_factor(uu);
    v = v.with_digits(digits);
    // Intermediate stages stop once the error is ~10^-digits.
    const double stop = last ? -(working - 8) : -(digits / 2.0);
    while (true) {
      if (cert.iterations >= options.iteration_cap) {
        throw ConvergenceError("rogers_solve: Newton exceeded " +
                               std::to_string(options.iteration_cap) +
                               " iterations");
      }
      const Real g = uu * v * u_factor * rogers_factor(v) - pow_int(uu - v, 12);
      const Real slope = deg11_derivative(uu, u_factor, v);
      if (slope.is_zero()) {
        throw ConvergenceError("rogers_solve: zero derivative");
      }
      const Real step = g / slope;
      v -= step;
      ++cert.iterations;
      cert.stage_digits.push_back(digits);
      if (v.sign() <= 0) {
        throw ConvergenceError("rogers_solve: Newton left (0, u)");
      }
      const double rel = step.is_zero() ? -double(digits) - 1
                                        : log10_magnitude(step / v);
      cert.step_log10.push_back(rel);
      cert.final_step_log10 = rel;
      if (rel < stop) break;
    }
  }

  // Branch pinning.
  if (!(v.sign() > 0 && v < u)) {
    throw BracketError("rogers_solve: root outside (0, u)");
  }
  const Real delta = pow_int(Real(10, working), -(working / 2));
  const Real below = residual_deg11(u, v * (1 - delta));
  const Real above = residual_deg11(u, v * (1 + delta));
  if (below.sign() == above.sign()) {
    throw BracketError("rogers_solve: residual does not change sign at root");
  }
  const Real seed_ratio = v / pow_int(u, 11);
  if (abs(seed_ratio - 1) * 2 >= 1) {
    throw BracketError("rogers_solve: root too far from the u^11 seed");
  }
  if (!check(Relation::degree11, u, v).holds()) {
    throw ConvergenceError("rogers_solve: final residual above tolerance");
  }
  return {std::move(v), std::move(cert)};
}

}  // namespace rrpi::modular
