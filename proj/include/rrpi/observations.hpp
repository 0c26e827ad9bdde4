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

// Numerical observations relating R(q) to 2 pi - 6: the five-term chain
// and its residuals, the rho inversion, the ellipse-perimeter reading,
// and the golden-value suite that checks every published constant.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrpi/precision.hpp"

namespace rrpi::observations {

/// A published constant, stored verbatim with its printed digits.
struct PublishedConstant {
  std::string_view id;
  std::string_view printed;
  std::string_view description;
  /// The printed sign contradicts the neighbouring equations; only the
  /// magnitude is compared.
  bool sign_erratum = false;
};

/// Every published constant the suite checks, in report order.
const std::vector<PublishedConstant>& published_constants();
const PublishedConstant& published_constant(std::string_view id);

struct ObservationResult {
  std::string id;
  Real computed;
  std::string published_value;  // verbatim
  int printed_digits;
  Real abs_deviation;       // |computed - printed|
  bool match;
  std::string note;
};

/// Compares a computed value with the published constant `id`.
ObservationResult compare(std::string_view id, const Real& computed,
                          std::string note = {});

// --- five-term chain ---------------------------------------------------

struct Table1 {
  /// x1 = 6r/(1-r) with r = R^5(e^{-2pi/sqrt5}); x2 = 2pi - 6;
  /// x3 = R(e^{-2pi sqrt5}) / sqrt(r); x4 = R(e^{-2pi}); x5 = e^{-2pi/5}.
  std::array<Real, 5> values;
  std::array<Real, 4> differences;  // x2-x1, x3-x2, x4-x3, x5-x4
  bool chain_holds;                 // x1 < x2 < x3 < x4 < x5
};

Table1 table1(const PrecisionContext& ctx);
std::vector<ObservationResult> table1_checks(const PrecisionContext& ctx);

/// Residuals of the five observations eq1..eq5.
std::vector<ObservationResult> observation_errors(const PrecisionContext& ctx);

// --- rho ---------------------------------------------------------------

struct RhoResult {
  std::string base;  // which evaluation is being inverted
  Real target;       // R(q) to hit
  Real q;
  Real rho;          // q^(1/5) / base value
  Real rho_fifth_root;
};

/// q with R(q) = 2pi - 6, and rho = q^(1/5) / R(e^{-2pi}). The inversion
/// bracket is q in ((t(1-w))^5, (t(1+w))^5), t = 2pi - 6, w = 0.01 * widen.
RhoResult rho(const PrecisionContext& ctx, double widen = 1.0);

/// rho plus the analogous inversions built on R^5(e^{-2pi/sqrt5}) and
/// R(e^{-2pi sqrt5}). The last two have no published value.
std::vector<RhoResult> rho_variants(const PrecisionContext& ctx);

ObservationResult rho_check(const PrecisionContext& ctx);

// --- ellipse -----------------------------------------------------------

struct EllipseSpec {
  Real a;       // major semi-axis, 1 + d
  Real b;       // minor semi-axis, 1
  Real d;       // bulge
  Real lambda;  // (a - b) / (a + b) = d / (2 + d)
  Real p;       // perimeter
};

/// Ramanujan's approximation pi (a+b) (1 + 3 l^2 / (10 + sqrt(4 - 3 l^2))),
/// l = (a-b)/(a+b). Requires a >= b > 0.
Real ellipse_perimeter(const Real& a, const Real& b, const PrecisionContext& ctx);

/// Major semi-axis 1 + d of the ellipse with minor semi-axis 1 whose
/// approximate perimeter is p. Throws DomainError when p < 2 pi.
EllipseSpec ellipse_axis_from_perimeter(const Real& p, const PrecisionContext& ctx);

struct EllipseCase {
  std::string name;
  Real perimeter;
  std::optional<EllipseSpec> ellipse;  // empty when p < 2 pi
};

struct EllipseDigression {
  std::vector<EllipseCase> cases;  // 6 + x4, 6 / (1 - r), 6 + x3
  Real comparison;                 // R(e^{-2pi}) / 1000
};

EllipseDigression ellipse_digression(const PrecisionContext& ctx);
std::vector<ObservationResult> ellipse_checks(const PrecisionContext& ctx);

// --- golden-value suite ------------------------------------------------

struct SuiteOptions {
  /// Id of a check whose computed value is shifted by two units in its
  /// last printed digit (fault injection for tests).
  std::string inject_fault;
  bool parallel = true;
};

/// The five-term chain, eq1..eq5, rho, the ellipse constants, and the ladder errors
/// and digit counts for deg5 n <= 2 and deg11 m <= 2. Deterministic order.
std::vector<ObservationResult> golden_suite(const SuiteOptions& options = {});

}  // namespace rrpi::observations
