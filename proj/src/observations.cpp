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

#include "rrpi/observations.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <utility>

#include "rootfind.hpp"
#include "rrpi/cfrac.hpp"
#include "rrpi/closedform.hpp"
#include "rrpi/piladder.hpp"

namespace rrpi::observations {

namespace {

constexpr int kObservationDigits = 64;
constexpr int kRootCap = 400;

PrecisionContext observation_context() {
  return PrecisionContext::with_default_guard(kObservationDigits);
}

Real printed_value(std::string_view printed, int digits) {
  return Real::parse(printed, digits);
}

}  // namespace

const std::vector<PublishedConstant>& published_constants() {
  static const std::vector<PublishedConstant> constants = {
      {"table1.x1", "0.2826810695", "6r/(1-r), r = R^5(e^{-2pi/sqrt5})"},
      {"table1.x2", "0.2831853072", "2pi - 6"},
      {"table1.x3", "0.2838497335", "R(e^{-2pi sqrt5}) / sqrt(R^5(e^{-2pi/sqrt5}))"},
      {"table1.x4", "0.2840790438", "R(e^{-2pi})"},
      {"table1.x5", "0.2846095433", "e^{-2pi/5}"},
      {"table1.x2-x1", "0.0005042376", "x2 - x1"},
      {"table1.x3-x2", "0.0006644263", "x3 - x2"},
      {"table1.x4-x3", "0.0002293103", "x4 - x3"},
      {"table1.x5-x4", "0.0005304994", "x5 - x4"},
      {"eq1", "8.937e-4", "R(e^{-2pi}) - (2pi - 6)"},
      {"eq2", "7.6641082e-5", "R^5(e^{-2pi/sqrt5}) - (2pi - 6)/(2pi)", true},
      {"eq3", "-5.042376378e-4", "6r/(1-r) - (2pi - 6)"},
      {"eq4", "8.97985e-5", "R(e^{-2pi sqrt5}) - (2pi - 6) sqrt((2pi - 6)/(2pi))"},
      {"eq5", "6.6442631e-4", "R(e^{-2pi sqrt5}) / sqrt(r) - (2pi - 6)"},
      {"rho", "0.9997370833", "q^{1/5} / R(e^{-2pi}) where R(q) = 2pi - 6"},
      {"ellipse.d", "0.0002844725721532", "bulge d for perimeter 6 + R(e^{-2pi})"},
      {"ellipse.r_over_1000", "0.0002840790438404", "R(e^{-2pi}) / 1000"},
      {"deg5.n0.error", "-9.3284736e-3", "2pi + 5 ln R(e^{-2pi})"},
      {"deg5.n1.error", "-2.2711010e-14", "2pi + ln R(e^{-10pi})"},
      {"deg5.n2.error", "-1.20840441e-69", "2pi + (1/5) ln R(e^{-50pi})"},
      {"deg5.n0.k", "3", "correct digits, alpha = 1"},
      {"deg5.n1.k", "14", "correct digits, alpha = 5"},
      {"deg5.n2.k", "69", "correct digits, alpha = 25"},
      {"deg5.n3.k", "342", "correct digits, alpha = 125"},
      {"deg5.n4.k", "1706", "correct digits, alpha = 625"},
      {"deg5.n5.k", "8528", "correct digits, alpha = 3125"},
      {"deg5.n6.k", "42637", "correct digits, alpha = 15625"},
      {"deg11.m1.error", "7.5371714126e-152", "-(1/11) ln R(e^{-110pi}) - 2pi"},
      {"deg11.m2.error", "1.0515416546e-1653", "-(1/121) ln R(e^{-1210pi}) - 2pi"},
      {"deg11.m1.k", "152", "correct digits, alpha = 55"},
      {"deg11.m2.k", "1653", "correct digits, alpha = 605"},
  };
  return constants;
}

const PublishedConstant& published_constant(std::string_view id) {
  const auto& all = published_constants();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const PublishedConstant& c) { return c.id == id; });
  if (it == all.end()) {
    throw DomainError("unknown published constant '" + std::string(id) + "'");
  }
  return *it;
}

ObservationResult compare(std::string_view id, const Real& computed,
                          std::string note) {
  const PublishedConstant& c = published_constant(id);
  const Real printed = printed_value(c.printed, computed.digits());
  bool match = false;
  Real deviation = abs(computed - printed);
  if (c.sign_erratum) {
    match = matches_printed(abs(computed), c.printed);
    deviation = abs(abs(computed) - abs(printed));
    if (note.empty()) {
      note = "published sign disagrees with the computed sign; magnitude compared";
    }
  } else {
    match = matches_printed(computed, c.printed);
  }
  return ObservationResult{std::string(c.id),
                           computed,
                           std::string(c.printed),
                           printed_significant_digits(c.printed),
                           std::move(deviation),
                           match,
                           std::move(note)};
}

// --- five-term chain ---------------------------------------------------

Table1 table1(const PrecisionContext& ctx) {
  const Real two_pi = const_pi_reference(ctx) * 2;
  const Real r5 = closedform::closed_R5_2pi_over_sqrt5(ctx);
  Real x1 = 6 * r5 / (1 - r5);
  Real x2 = two_pi - 6;
  Real x3 = closedform::closed_R_2pi_sqrt5(ctx) / sqrt(r5);
  Real x4 = closedform::closed_R_2pi(ctx);
  Real x5 = exp(-two_pi / 5);
  std::array<Real, 5> x{std::move(x1), std::move(x2), std::move(x3),
                        std::move(x4), std::move(x5)};
  std::array<Real, 4> diff{x[1] - x[0], x[2] - x[1], x[3] - x[2], x[4] - x[3]};
  const bool chain = x[0] < x[1] && x[1] < x[2] && x[2] < x[3] && x[3] < x[4];
  return Table1{std::move(x), std::move(diff), chain};
}

std::vector<ObservationResult> table1_checks(const PrecisionContext& ctx) {
  const Table1 t = table1(ctx);
  std::vector<ObservationResult> out;
  for (int i = 0; i < 5; ++i) {
    out.push_back(compare("table1.x" + std::to_string(i + 1), t.values[i]));
  }
  for (int i = 0; i < 4; ++i) {
    out.push_back(compare("table1.x" + std::to_string(i + 2) + "-x" +
                              std::to_string(i + 1),
                          t.differences[i]));
  }
  if (!t.chain_holds) out.back().note = "strict chain x1 < ... < x5 violated";
  return out;
}

std::vector<ObservationResult> observation_errors(const PrecisionContext& ctx) {
  const Real two_pi = const_pi_reference(ctx) * 2;
  const Real x2 = two_pi - 6;
  const Real r = closedform::closed_R_2pi(ctx);
  const Real r5 = closedform::closed_R5_2pi_over_sqrt5(ctx);
  const Real r_sqrt5 = closedform::closed_R_2pi_sqrt5(ctx);

  std::vector<ObservationResult> out;
  out.push_back(compare("eq1", r - x2));
  out.push_back(compare("eq2", r5 - x2 / two_pi));
  out.push_back(compare("eq3", 6 * r5 / (1 - r5) - x2));
  out.push_back(compare("eq4", r_sqrt5 - x2 * sqrt(x2 / two_pi)));
  out.push_back(compare("eq5", r_sqrt5 / sqrt(r5) - x2));
  return out;
}

// --- rho ---------------------------------------------------------------

namespace {

// widen <= 0 selects the automatic bracket.
RhoResult invert_against(std::string base, const Real& target,
                         const Real& base_value, const PrecisionContext& ctx,
                         double widen) {
  Real q(0, ctx);
  if (widen > 0) {
    const Real w = Real::parse("0.01", ctx) *
                   Real::parse(std::to_string(widen), ctx);
    q = cfrac::invert_R(target, ctx,
                        {pow_int(target * (1 - w), 5), pow_int(target * (1 + w), 5)});
  } else {
    q = cfrac::invert_R(target, ctx);
  }
  Real ratio = nth_root(q, 5) / base_value;
  Real fifth = nth_root(ratio, 5);
  return RhoResult{std::move(base), target, std::move(q), std::move(ratio),
                   std::move(fifth)};
}

}  // namespace

RhoResult rho(const PrecisionContext& ctx, double widen) {
  if (!(widen > 0 && widen < 50)) throw DomainError("rho: bracket widening out of range");
  const Real x2 = const_pi_reference(ctx) * 2 - 6;
  return invert_against("R(e^{-2pi})", x2, closedform::closed_R_2pi(ctx), ctx,
                        widen);
}

std::vector<RhoResult> rho_variants(const PrecisionContext& ctx) {
  const Real two_pi = const_pi_reference(ctx) * 2;
  const Real x2 = two_pi - 6;
  const Real r5 = closedform::closed_R5_2pi_over_sqrt5(ctx);
  std::vector<RhoResult> out;
  out.push_back(rho(ctx));
  // 6 R^5(q) / (1 - R^5(q)) = 2pi - 6  <=>  R(q) = ((2pi - 6) / 2pi)^(1/5)
  out.push_back(invert_against("R(e^{-2pi/sqrt5})", nth_root(x2 / two_pi, 5),
                               nth_root(r5, 5), ctx, 0.0));
  // R(q) / sqrt(r) = 2pi - 6
  out.push_back(invert_against("R(e^{-2pi sqrt5})", x2 * sqrt(r5),
                               closedform::closed_R_2pi_sqrt5(ctx), ctx, 0.0));
  return out;
}

ObservationResult rho_check(const PrecisionContext& ctx) {
  const RhoResult r = rho(ctx);
  ObservationResult out = compare("rho", r.rho);
  if (!out.match) {
    out.note = "rho^(1/5) = " + r.rho_fifth_root.to_fixed(12);
  }
  return out;
}

// --- ellipse -----------------------------------------------------------

Real ellipse_perimeter(const Real& a, const Real& b, const PrecisionContext& ctx) {
  if (!(b.sign() > 0 && a >= b)) {
    throw DomainError("ellipse_perimeter needs a >= b > 0");
  }
  const Real lambda = (a - b) / (a + b);
  const Real l2 = lambda * lambda;
  const Real inner = 4 - 3 * l2;
  if (inner.sign() < 0) throw DomainError("ellipse_perimeter: 4 - 3 lambda^2 < 0");
  return const_pi_reference(ctx) * (a + b) * (1 + 3 * l2 / (10 + sqrt(inner)));
}

EllipseSpec ellipse_axis_from_perimeter(const Real& p, const PrecisionContext& ctx) {
  const Real pi = const_pi_reference(ctx);
  const Real circle = pi * 2;
  if (p < circle) {
    throw DomainError("no ellipse with minor semi-axis 1 has perimeter below 2pi");
  }
  const Real one(1, ctx);
  auto excess = [&](const Real& d) { return ellipse_perimeter(one + d, one, ctx) - p; };

  Real d(0, ctx);
  if (p != circle) {
    Real hi(1, ctx);
    while (excess(hi).sign() < 0) hi *= 2;
    const Real seed = (p - circle) / pi;
    d = detail::refine_root(excess, Real(0, ctx), hi, seed, kRootCap,
                            "ellipse_axis_from_perimeter")
            .x;
  }
  Real a = one + d;
  Real lambda = d / (d + 2);
  return EllipseSpec{std::move(a), one, std::move(d), std::move(lambda), p};
}

EllipseDigression ellipse_digression(const PrecisionContext& ctx) {
  const Table1 t = table1(ctx);
  const Real r5 = closedform::closed_R5_2pi_over_sqrt5(ctx);
  std::vector<std::pair<std::string, Real>> perimeters;
  perimeters.emplace_back("6 + R(e^{-2pi})", t.values[3] + 6);
  perimeters.emplace_back("6 / (1 - R^5(e^{-2pi/sqrt5}))", 6 / (1 - r5));
  perimeters.emplace_back("6 + R(e^{-2pi sqrt5}) / R^{5/2}(e^{-2pi/sqrt5})",
                          t.values[2] + 6);

  const Real circle = const_pi_reference(ctx) * 2;
  EllipseDigression out{{}, t.values[3] / 1000};
  for (auto& [name, p] : perimeters) {
    std::optional<EllipseSpec> e;
    if (p >= circle) e = ellipse_axis_from_perimeter(p, ctx);
    out.cases.push_back({name, p, std::move(e)});
  }
  return out;
}

std::vector<ObservationResult> ellipse_checks(const PrecisionContext& ctx) {
  const EllipseDigression e = ellipse_digression(ctx);
  std::vector<ObservationResult> out;
  out.push_back(compare("ellipse.d", e.cases.front().ellipse->d));
  out.push_back(compare("ellipse.r_over_1000", e.comparison));
  return out;
}

// --- golden-value suite ------------------------------------------------

namespace {

using Group = std::function<std::vector<ObservationResult>()>;

std::vector<ObservationResult> ladder_checks(piladder::Scheme scheme) {
  const char* name = piladder::to_string(scheme);
  const char* var = scheme == piladder::Scheme::deg5 ? "n" : "m";
  const int first = scheme == piladder::Scheme::deg5 ? 0 : 1;
  const auto ctx = piladder::recommended_context(scheme, 2);
  const auto states = piladder::ladder(scheme, 2, ctx);
  std::vector<ObservationResult> out;
  for (int level = first; level <= 2; ++level) {
    const std::string prefix =
        std::string(name) + "." + var + std::to_string(level);
    out.push_back(compare(prefix + ".error", states[level].signed_error));
  }
  for (int level = first; level <= 2; ++level) {
    const std::string prefix =
        std::string(name) + "." + var + std::to_string(level);
    out.push_back(compare(prefix + ".k", Real(states[level].k_correct, ctx)));
  }
  return out;
}

void inject(ObservationResult& r) {
  const int digits = r.computed.digits();
  const Real printed = Real::parse(r.published_value, digits);
  const long last_place = printed.decimal_exponent() - r.printed_digits + 1;
  r.computed += pow_int(Real(10, digits), last_place) * 2;
  r.abs_deviation = abs(r.computed - printed);
  r.match = matches_printed(r.computed, r.published_value);
  r.note = "fault injected";
}

}  // namespace

std::vector<ObservationResult> golden_suite(const SuiteOptions& options) {
  const std::vector<Group> groups = {
      [] { return table1_checks(observation_context()); },
      [] { return observation_errors(observation_context()); },
      [] { return std::vector<ObservationResult>{rho_check(observation_context())}; },
      [] { return ellipse_checks(observation_context()); },
      [] { return ladder_checks(piladder::Scheme::deg5); },
      [] { return ladder_checks(piladder::Scheme::deg11); },
  };

  std::vector<std::vector<ObservationResult>> results;
  if (options.parallel) {
    std::vector<std::future<std::vector<ObservationResult>>> futures;
    for (const auto& g : groups) {
      futures.push_back(std::async(std::launch::async, g));
    }
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& g : groups) results.push_back(g());
  }

  std::vector<ObservationResult> out;
  for (auto& group : results) {
    for (auto& r : group) out.push_back(std::move(r));
  }
  if (!options.inject_fault.empty()) {
    const auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) {
      return r.id == options.inject_fault;
    });
    if (it == out.end()) {
      throw DomainError("no check named '" + options.inject_fault + "'");
    }
    inject(*it);
  }
  return out;
}

}  // namespace rrpi::observations
