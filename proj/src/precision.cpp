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

#include "rrpi/precision.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

namespace rrpi {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

struct MpfrString {
  char* text;
  ~MpfrString() { mpfr_free_str(text); }
};

}  // namespace

// Gives the free functions below write access to the backend value.
struct RealAccess {
  static Real blank(int digits) { return Real(digits); }
  static mpfr_ptr get(Real& x) { return x.value_; }
};

PrecisionContext::PrecisionContext(int target_digits, int guard_digits,
                                   Rounding rounding)
    : target_digits_(target_digits),
      guard_digits_(guard_digits),
      rounding_(rounding) {
  if (target_digits < 1) {
    throw DomainError("target_digits must be >= 1");
  }
  if (guard_digits < kMinGuardDigits) {
    throw DomainError("guard_digits must be >= " +
                      std::to_string(kMinGuardDigits));
  }
}

int PrecisionContext::default_guard_digits(int target_digits) {
  return std::max(32, static_cast<int>(std::ceil(0.05 * target_digits)));
}

PrecisionContext PrecisionContext::with_default_guard(int target_digits) {
  return PrecisionContext(target_digits, default_guard_digits(target_digits));
}

mpfr_prec_t bits_for_digits(int digits) {
  if (digits < 1) throw DomainError("precision must be at least one digit");
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4;
}

// ---------------------------------------------------------------------------
// Real

Real::Real(int digits) : digits_(digits) {
  mpfr_init2(value_, bits_for_digits(digits));
}

Real::Real(long value, int digits) : Real(digits) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

Real::Real(long value, const PrecisionContext& ctx)
    : Real(value, ctx.working_digits()) {}

Real Real::parse(std::string_view text, int digits) {
  Real r(digits);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end == nullptr || *end != '\0') {
    throw DomainError("not a decimal number: '" + s + "'");
  }
  return r;
}

Real Real::parse(std::string_view text, const PrecisionContext& ctx) {
  return parse(text, ctx.working_digits());
}

Real Real::ratio(long num, long den, const PrecisionContext& ctx) {
  if (den == 0) throw DomainError("ratio with zero denominator");
  Real r(num, ctx);
  mpfr_div_si(r.value_, r.value_, den, MPFR_RNDN);
  return r;
}

Real::Real(const Real& other) : Real(other.digits_) {
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
    digits_ = other.digits_;
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  std::swap(digits_, other.digits_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_digits(int digits) const {
  Real r(digits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

void Real::require_same(const Real& other, const char* op) const {
  if (digits_ != other.digits_) {
    throw PrecisionMismatch(std::string("operator") + op + ": " +
                            std::to_string(digits_) + " vs " +
                            std::to_string(other.digits_) + " digits");
  }
}

Real& Real::operator+=(const Real& rhs) {
  require_same(rhs, "+");
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  require_same(rhs, "-");
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  require_same(rhs, "*");
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  require_same(rhs, "/");
  if (rhs.is_zero()) throw DomainError("division by zero");
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

Real operator-(long lhs, const Real& rhs) {
  Real r(rhs.digits_);
  mpfr_si_sub(r.value_, lhs, rhs.value_, MPFR_RNDN);
  return r;
}

Real operator/(long lhs, const Real& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  Real r(rhs.digits_);
  mpfr_si_div(r.value_, lhs, rhs.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& lhs, const Real& rhs) {
  lhs.require_same(rhs, "<=>");
  if (mpfr_unordered_p(lhs.value_, rhs.value_)) {
    return std::partial_ordering::unordered;
  }
  const int c = mpfr_cmp(lhs.value_, rhs.value_);
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater
                       : std::partial_ordering::equivalent;
}

bool operator==(const Real& lhs, const Real& rhs) {
  return (lhs <=> rhs) == std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const Real& lhs, long rhs) {
  if (mpfr_nan_p(lhs.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(lhs.value_, rhs);
  return c < 0 ? std::partial_ordering::less
               : c > 0 ? std::partial_ordering::greater
                       : std::partial_ordering::equivalent;
}

bool operator==(const Real& lhs, long rhs) {
  return (lhs <=> rhs) == std::partial_ordering::equivalent;
}

int Real::sign() const noexcept { return mpfr_sgn(value_); }
bool Real::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
bool Real::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
double Real::to_double() const noexcept {
  return mpfr_get_d(value_, MPFR_RNDN);
}

DecimalDigits Real::significant(int count, DigitMode mode) const {
  if (!is_finite()) throw DomainError("cannot format a non-finite value");
  if (count < 1) throw DomainError("need at least one significant digit");
  DecimalDigits out;
  if (is_zero()) {
    out.mantissa.assign(static_cast<std::size_t>(count), '0');
    out.point = 1;
    return out;
  }
  mpfr_exp_t point = 0;
  const mpfr_rnd_t rnd = mode == DigitMode::truncate ? MPFR_RNDZ : MPFR_RNDN;
  MpfrString s{mpfr_get_str(nullptr, &point, 10, static_cast<size_t>(count),
                            value_, rnd)};
  std::string digits(s.text);
  if (!digits.empty() && digits.front() == '-') {
    out.negative = true;
    digits.erase(0, 1);
  }
  out.mantissa = digits;
  out.point = static_cast<long>(point);
  return out;
}

long Real::decimal_exponent() const {
  if (is_zero() || !is_finite()) {
    throw DomainError("decimal exponent of zero or non-finite value");
  }
  mpfr_exp_t point = 0;
  MpfrString s{mpfr_get_str(nullptr, &point, 10, 20, value_, MPFR_RNDZ)};
  return static_cast<long>(point) - 1;
}

std::string Real::to_scientific(int count, DigitMode mode) const {
  const DecimalDigits d = significant(count, mode);
  std::string out = d.negative ? "-" : "";
  out += d.mantissa.front();
  if (d.mantissa.size() > 1) {
    out += '.';
    out.append(d.mantissa, 1, std::string::npos);
  }
  out += 'e';
  out += std::to_string(is_zero() ? 0 : d.point - 1);
  return out;
}

std::string Real::to_fixed(int decimals, DigitMode mode) const {
  if (decimals < 0) throw DomainError("negative decimal count");
  char* text = nullptr;
  const char* fmt = mode == DigitMode::truncate ? "%.*RZf" : "%.*RNf";
  if (mpfr_asprintf(&text, fmt, decimals, value_) < 0) {
    throw Error("formatting failed");
  }
  std::string out(text);
  mpfr_free_str(text);
  return out;
}

// ---------------------------------------------------------------------------
// Elementary functions

Real abs(const Real& x) {
  Real r = RealAccess::blank(x.digits());
  mpfr_abs(RealAccess::get(r), x.backend(), MPFR_RNDN);
  return r;
}

Real ln(const Real& x) {
  if (x.sign() <= 0) throw DomainError("ln of a non-positive number");
  Real r = RealAccess::blank(x.digits());
  mpfr_log(RealAccess::get(r), x.backend(), MPFR_RNDN);
  return r;
}

Real exp(const Real& x) {
  Real r = RealAccess::blank(x.digits());
  mpfr_exp(RealAccess::get(r), x.backend(), MPFR_RNDN);
  if (!r.is_finite()) throw DomainError("exp overflow");
  return r;
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  Real r = RealAccess::blank(x.digits());
  mpfr_sqrt(RealAccess::get(r), x.backend(), MPFR_RNDN);
  return r;
}

Real nth_root(const Real& x, unsigned long n) {
  if (n == 0) throw DomainError("zeroth root");
  if (n % 2 == 0 && x.sign() < 0) {
    throw DomainError("even root of a negative number");
  }
  Real r = RealAccess::blank(x.digits());
  mpfr_rootn_ui(RealAccess::get(r), x.backend(), n, MPFR_RNDN);
  return r;
}

Real pow_int(const Real& x, long k) {
  if (k < 0 && x.is_zero()) throw DomainError("negative power of zero");
  Real r = RealAccess::blank(x.digits());
  mpfr_pow_si(RealAccess::get(r), x.backend(), k, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real elementary(const Real& x, ElementaryOp op, long arg) {
  switch (op) {
    case ElementaryOp::ln:
      return ln(x);
    case ElementaryOp::exp:
      return exp(x);
    case ElementaryOp::sqrt:
      return sqrt(x);
    case ElementaryOp::nth_root:
      if (arg < 1) throw DomainError("nth_root needs n >= 1");
      return nth_root(x, static_cast<unsigned long>(arg));
    case ElementaryOp::pow_int:
      return pow_int(x, arg);
  }
  throw DomainError("unknown elementary operation");
}

// ---------------------------------------------------------------------------
// Reference pi

Real const_pi_reference(int digits) {
  // Ten internal digits absorb the rounding of the final quotient.
  const int inner = digits + 10;
  Real a(1, inner);
  Real b = 1 / sqrt(Real(2, inner));
  Real t = Real(1, inner) / 4;
  Real p(1, inner);

  const long stop_exponent = -(inner - 4);
  const int cap = 8 + static_cast<int>(std::ceil(std::log2(inner + 1.0)));
  bool converged = false;
  for (int i = 0; i < cap; ++i) {
    Real next_a = (a + b) / 2;
    b = sqrt(a * b);
    Real gap = a - next_a;
    t -= p * gap * gap;
    p *= 2;
    a = std::move(next_a);
    Real spread = a - b;
    if (spread.is_zero() || spread.decimal_exponent() < stop_exponent) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw PrecisionExhausted("AGM iteration for pi did not reach " +
                             std::to_string(digits) + " digits");
  }
  Real sum = a + b;
  Real pi = sum * sum / (t * 4);
  return pi.with_digits(digits);
}

Real const_pi_reference(const PrecisionContext& ctx) {
  return const_pi_reference(ctx.working_digits());
}

// ---------------------------------------------------------------------------
// Printed-constant comparison

namespace {

struct ParsedLiteral {
  bool negative = false;
  std::string digits;  // significant digits, no leading zeros
  long point = 0;      // value = ±0.digits × 10^point
};

ParsedLiteral parse_literal(std::string_view text) {
  ParsedLiteral out;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    out.negative = text[i] == '-';
    ++i;
  }
  std::string all;
  long int_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      all += c;
      if (!seen_point) ++int_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  long exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    exponent = std::stol(std::string(text.substr(i + 1)));
    i = text.size();
  }
  if (i != text.size() || all.empty()) {
    throw DomainError("bad printed constant '" + std::string(text) + "'");
  }
  const auto first = all.find_first_not_of('0');
  if (first == std::string::npos) {
    out.digits = "0";
    out.point = 1;
    return out;
  }
  out.digits = all.substr(first);
  out.point = int_digits - static_cast<long>(first) + exponent;
  return out;
}

}  // namespace

int printed_significant_digits(std::string_view printed) {
  return static_cast<int>(parse_literal(printed).digits.size());
}

bool matches_printed(const Real& computed, std::string_view printed) {
  const ParsedLiteral lit = parse_literal(printed);
  const int count = static_cast<int>(lit.digits.size());
  for (DigitMode mode : {DigitMode::nearest, DigitMode::truncate}) {
    const DecimalDigits d = computed.significant(count, mode);
    if (d.negative == lit.negative && d.mantissa == lit.digits &&
        d.point == lit.point) {
      return true;
    }
  }
  return false;
}

double log10_magnitude(const Real& x) {
  if (x.is_zero() || !x.is_finite()) {
    throw DomainError("log10 of zero or non-finite value");
  }
  long exp2 = 0;
  const double m = mpfr_get_d_2exp(&exp2, x.backend(), MPFR_RNDN);
  return std::log10(std::fabs(m)) + static_cast<double>(exp2) * std::log10(2.0);
}

int leading_digit_agreement(const Real& a, const Real& b) {
  if (!a.same_precision(b)) {
    throw PrecisionMismatch("leading_digit_agreement: precisions differ");
  }
  const int n = a.digits();
  const DecimalDigits da = a.significant(n, DigitMode::truncate);
  const DecimalDigits db = b.significant(n, DigitMode::truncate);
  if (da.negative != db.negative || da.point != db.point) return 0;
  const auto mismatch =
      std::mismatch(da.mantissa.begin(), da.mantissa.end(),
                    db.mantissa.begin(), db.mantissa.end());
  return static_cast<int>(mismatch.first - da.mantissa.begin());
}

}  // namespace rrpi
