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

// Bracketed scalar root refinement shared by the continued-fraction and
// ellipse inversions. Secant steps inside a sign-change bracket, with a
// bisection fallback whenever a step leaves the bracket or stalls.

#include <optional>
#include <string>
#include <utility>

#include "rrpi/precision.hpp"

namespace rrpi::detail {

struct RootResult {
  Real x;
  int iterations;
};

template <class F>
RootResult refine_root(F&& f, Real lo, Real hi, std::optional<Real> seed,
                       int iteration_cap, const char* what) {
  Real f_lo = f(lo);
  Real f_hi = f(hi);
  if (f_lo.is_zero()) return {lo, 0};
  if (f_hi.is_zero()) return {hi, 0};
  if (f_lo.sign() == f_hi.sign()) {
    throw BracketError(std::string(what) + ": bracket has no sign change");
  }
  const int digits = lo.digits();
  const Real tolerance = pow_int(Real(10, digits), -(digits - 2));

  Real prev = lo;
  Real f_prev = f_lo;
  Real cur = (seed && *seed > lo && *seed < hi) ? *seed : (lo + hi) / 2;
  Real f_cur = f(cur);
  Real last_step = hi - lo;
  Real older_step = last_step;

  for (int it = 1; it <= iteration_cap; ++it) {
    if (f_cur.is_zero()) return {cur, it};
    if (f_cur.sign() == f_lo.sign()) {
      lo = cur;
      f_lo = f_cur;
    } else {
      hi = cur;
      f_hi = f_cur;
    }

    std::optional<Real> next;
    if (f_cur != f_prev) {
      Real candidate = cur - f_cur * (cur - prev) / (f_cur - f_prev);
      if (candidate > lo && candidate < hi &&
          abs(candidate - cur) * 2 < abs(older_step)) {
        next = std::move(candidate);
      }
    }
    if (!next) next = (lo + hi) / 2;

    Real step = *next - cur;
    prev = std::move(cur);
    f_prev = std::move(f_cur);
    cur = std::move(*next);
    if (abs(step) <= tolerance * abs(cur) || abs(hi - lo) <= tolerance * abs(cur)) {
      return {cur, it};
    }
    f_cur = f(cur);
    older_step = std::move(last_step);
    last_step = std::move(step);
  }
  throw ConvergenceError(std::string(what) + ": no convergence after " +
                         std::to_string(iteration_cap) + " iterations");
}

}  // namespace rrpi::detail
