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

// Arbitrary-precision real arithmetic shared by every other module.
//
// A Real is bound to a working precision measured in decimal digits.
// Arithmetic between Reals of different working precision throws
// PrecisionMismatch; changing precision is always explicit
// (Real::with_digits). Each elementary operation is correctly rounded by
// the backend, well inside the 2 ulp budget promised to callers.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "rrpi/error.hpp"

namespace rrpi {

enum class Rounding { to_nearest };

/// Decimal precision of one computation: the digits the caller wants plus
/// a guard margin. Immutable.
class PrecisionContext {
 public:
  static constexpr int kMinGuardDigits = 16;

  PrecisionContext(int target_digits, int guard_digits,
                   Rounding rounding = Rounding::to_nearest);

  /// Guard digits default to max(32, ceil(0.05 * target)).
  static PrecisionContext with_default_guard(int target_digits);
  static int default_guard_digits(int target_digits);

  int target_digits() const noexcept { return target_digits_; }
  int guard_digits() const noexcept { return guard_digits_; }
  int working_digits() const noexcept { return target_digits_ + guard_digits_; }
  Rounding rounding() const noexcept { return rounding_; }

 private:
  int target_digits_;
  int guard_digits_;
  Rounding rounding_;
};

/// Leading decimal digits of a Real: value = ±0.mantissa × 10^point.
struct DecimalDigits {
  bool negative = false;
  std::string mantissa;
  long point = 0;
};

enum class DigitMode { nearest, truncate };

class Real {
 public:
  Real(long value, const PrecisionContext& ctx);
  Real(long value, int digits);

  /// Parses a decimal literal such as "0.2840790438" or "-9.3284736e-3".
  static Real parse(std::string_view text, const PrecisionContext& ctx);
  static Real parse(std::string_view text, int digits);
  /// num/den rounded once.
  static Real ratio(long num, long den, const PrecisionContext& ctx);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  /// Working precision in decimal digits.
  int digits() const noexcept { return digits_; }
  bool same_precision(const Real& other) const noexcept {
    return digits_ == other.digits_;
  }
  /// Copy rounded (or zero-extended) to another working precision.
  Real with_digits(int digits) const;
  Real with_context(const PrecisionContext& ctx) const {
    return with_digits(ctx.working_digits());
  }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real operator-() const;

  friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
  friend Real operator+(Real lhs, long rhs) { return lhs += rhs; }
  friend Real operator-(Real lhs, long rhs) { return lhs -= rhs; }
  friend Real operator*(Real lhs, long rhs) { return lhs *= rhs; }
  friend Real operator/(Real lhs, long rhs) { return lhs /= rhs; }
  friend Real operator+(long lhs, Real rhs) { return rhs += lhs; }
  friend Real operator*(long lhs, Real rhs) { return rhs *= lhs; }
  friend Real operator-(long lhs, const Real& rhs);
  friend Real operator/(long lhs, const Real& rhs);

  friend std::partial_ordering operator<=>(const Real& lhs, const Real& rhs);
  friend bool operator==(const Real& lhs, const Real& rhs);
  friend std::partial_ordering operator<=>(const Real& lhs, long rhs);
  friend bool operator==(const Real& lhs, long rhs);

  int sign() const noexcept;
  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  double to_double() const noexcept;

  /// floor(log10 |x|), exact. Throws DomainError for zero.
  long decimal_exponent() const;
  /// First `count` significant decimal digits.
  DecimalDigits significant(int count, DigitMode mode = DigitMode::nearest) const;
  /// "-9.3284736e-3" style, `count` significant digits.
  std::string to_scientific(int count, DigitMode mode = DigitMode::nearest) const;
  /// Fixed-point with `decimals` digits after the point.
  std::string to_fixed(int decimals, DigitMode mode = DigitMode::nearest) const;

  /// Read-only view of the backend value, for formatting and tests.
  mpfr_srcptr backend() const noexcept { return value_; }

 private:
  explicit Real(int digits);  // NaN placeholder, filled in by the caller
  void require_same(const Real& other, const char* op) const;

  friend struct RealAccess;

  mpfr_t value_;
  int digits_;
};

/// Binary precision used for a given count of decimal digits.
mpfr_prec_t bits_for_digits(int digits);

Real abs(const Real& x);
Real ln(const Real& x);
Real exp(const Real& x);
Real sqrt(const Real& x);
/// Real n-th root; odd n accepts negative x (real branch).
Real nth_root(const Real& x, unsigned long n);
/// x^k for integer k (negative k requires x != 0).
Real pow_int(const Real& x, long k);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

enum class ElementaryOp { ln, exp, sqrt, nth_root, pow_int };
/// Dispatching form of the five elementary functions; `arg` is n for
/// nth_root and k for pow_int.
Real elementary(const Real& x, ElementaryOp op, long arg = 0);

/// pi at the context's working precision, by the Gauss-Legendre
/// (Brent-Salamin) arithmetic-geometric-mean iteration. Independent of
/// everything else in this library.
Real const_pi_reference(const PrecisionContext& ctx);
Real const_pi_reference(int digits);

/// Agreement of a computed value with a printed decimal constant such as
/// "-9.3284736e-3": every printed digit must equal the computed value
/// either rounded to nearest or truncated at the same digit count.
bool matches_printed(const Real& computed, std::string_view printed);
/// Number of significant digits in a printed decimal literal.
int printed_significant_digits(std::string_view printed);

/// log10 |x| as a double, valid far outside the double exponent range.
double log10_magnitude(const Real& x);

/// Count of agreeing leading decimal digits (first disagreement stops).
int leading_digit_agreement(const Real& a, const Real& b);

}  // namespace rrpi
