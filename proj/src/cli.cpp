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

#include "rrpi/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rrpi/observations.hpp"

namespace rrpi::cli {

using nlohmann::json;

namespace {

constexpr int kDefaultObservationDigits = 64;
constexpr int kErrorDigits = 12;

const char* command_name(Command c) {
  switch (c) {
    case Command::digits: return "digits";
    case Command::verify: return "verify";
    case Command::ladder: return "ladder";
    case Command::rho: return "rho";
    case Command::ellipse: return "ellipse";
    case Command::table1: return "table1";
  }
  return "?";
}

PrecisionContext ladder_context(const RunConfig& config, int level) {
  if (config.precision) {
    return PrecisionContext::with_default_guard(*config.precision);
  }
  return piladder::recommended_context(config.scheme, level);
}

PrecisionContext observation_context(const RunConfig& config) {
  return PrecisionContext::with_default_guard(
      config.precision.value_or(kDefaultObservationDigits));
}

std::string seconds(std::chrono::steady_clock::duration d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3)
    << std::chrono::duration<double>(d).count();
  return s.str();
}

std::string format_computed(const observations::ObservationResult& r) {
  const bool integer = r.published_value.find_first_of(".eE") == std::string::npos;
  if (integer) return r.computed.to_fixed(0);
  return r.computed.to_scientific(r.printed_digits + 3);
}

// --- report builders ---------------------------------------------------

json digits_report(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto ctx = ladder_context(config, config.level);
  const auto d = piladder::digits_of_2pi(config.scheme, config.level, ctx);
  return json{{"schema", kSchemaVersion},
              {"kind", "digits"},
              {"scheme", piladder::to_string(d.scheme)},
              {"level", d.level},
              {"k", d.k},
              {"digits", d.digits},
              {"working_digits", ctx.working_digits()},
              {"wall_time_s", seconds(std::chrono::steady_clock::now() - start)}};
}

json ladder_report(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const auto ctx = ladder_context(config, config.levels);
  const auto states = piladder::ladder(config.scheme, config.levels, ctx);
  json rows = json::array();
  for (const auto& s : states) {
    const auto report = piladder::digit_report(s);
    rows.push_back({{"level", s.level},
                    {"alpha", std::to_string(s.alpha)},
                    {"error", s.signed_error.to_scientific(kErrorDigits)},
                    {"error_exponent", std::to_string(report.error_exponent)},
                    {"k", s.k_correct},
                    {"k_agree", s.k_agree}});
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "ladder"},
              {"scheme", piladder::to_string(config.scheme)},
              {"levels", config.levels},
              {"working_digits", ctx.working_digits()},
              {"rows", rows},
              {"wall_time_s", seconds(std::chrono::steady_clock::now() - start)}};
}

json verify_report(const RunConfig& config) {
  observations::SuiteOptions options;
  options.inject_fault = config.inject_fault;
  const auto results = observations::golden_suite(options);
  json checks = json::array();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.match ? 1 : 0;
    checks.push_back({{"id", r.id},
                      {"computed", format_computed(r)},
                      {"published", r.published_value},
                      {"match", r.match},
                      {"note", r.note}});
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "verify"},
              {"checks", checks},
              {"passed", passed},
              {"failed", static_cast<int>(results.size()) - passed}};
}

json rho_report(const RunConfig& config) {
  const auto ctx = observation_context(config);
  json rows = json::array();
  for (const auto& r : observations::rho_variants(ctx)) {
    rows.push_back({{"base", r.base},
                    {"target", r.target.to_scientific(20)},
                    {"q", r.q.to_scientific(20)},
                    {"rho", r.rho.to_fixed(20)},
                    {"rho_fifth_root", r.rho_fifth_root.to_fixed(20)}});
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "rho"},
              {"working_digits", ctx.working_digits()},
              {"rows", rows}};
}

json ellipse_report(const RunConfig& config) {
  const auto ctx = observation_context(config);
  const auto e = observations::ellipse_digression(ctx);
  json rows = json::array();
  for (const auto& c : e.cases) {
    json row{{"perimeter_of", c.name}, {"perimeter", c.perimeter.to_fixed(20)}};
    if (c.ellipse) {
      row["d"] = c.ellipse->d.to_fixed(22);
      row["lambda"] = c.ellipse->lambda.to_scientific(16);
    } else {
      row["d"] = nullptr;
      row["lambda"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "ellipse"},
              {"working_digits", ctx.working_digits()},
              {"rows", rows},
              {"r_over_1000", e.comparison.to_fixed(22)}};
}

json table1_report(const RunConfig& config) {
  const auto ctx = observation_context(config);
  const auto t = observations::table1(ctx);
  json rows = json::array();
  for (int i = 0; i < 5; ++i) {
    json row{{"term", "x" + std::to_string(i + 1)},
             {"value", t.values[i].to_fixed(10)},
             {"value_full", t.values[i].to_fixed(30)}};
    if (i > 0) {
      row["difference"] = t.differences[i - 1].to_fixed(10);
    } else {
      row["difference"] = nullptr;
    }
    rows.push_back(std::move(row));
  }
  return json{{"schema", kSchemaVersion},
              {"kind", "table1"},
              {"working_digits", ctx.working_digits()},
              {"rows", rows},
              {"chain_holds", t.chain_holds}};
}

// --- text rendering ----------------------------------------------------

std::string str(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      text += cells[c];
      if (c + 1 < cells.size()) text += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string render_digits(const json& r) {
  std::ostringstream out;
  const std::string meta = "scheme=" + str(r["scheme"]) +
                           " level=" + str(r["level"]) + " k=" + str(r["k"]);
  out << "# 2pi digits " << meta << '\n';
  const std::string digits = r["digits"].get<std::string>();
  for (std::size_t i = 0; i < digits.size(); i += kDigitsPerLine) {
    out << digits.substr(i, kDigitsPerLine) << '\n';
  }
  out << "# k=" << str(r["k"]) << " scheme=" << str(r["scheme"])
      << " level=" << str(r["level"])
      << " working_digits=" << str(r["working_digits"])
      << " wall_time_s=" << str(r["wall_time_s"]) << '\n';
  return out.str();
}

std::string render_ladder(const json& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r["rows"]) {
    rows.push_back({str(row["level"]), str(row["alpha"]), str(row["error"]),
                    str(row["k"])});
  }
  std::ostringstream out;
  out << "# ladder scheme=" << str(r["scheme"]) << " levels=" << str(r["levels"])
      << " working_digits=" << str(r["working_digits"]) << '\n';
  out << render_table({str(r["scheme"]) == "deg5" ? "n" : "m", "alpha", "error", "k"},
                      rows);
  out << "# wall_time_s=" << str(r["wall_time_s"]) << '\n';
  return out.str();
}

std::string render_verify(const json& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r["checks"]) {
    std::string note = str(c["note"]);
    rows.push_back({c["match"].get<bool>() ? "PASS" : "FAIL", str(c["id"]),
                    str(c["computed"]), str(c["published"]), note});
  }
  std::ostringstream out;
  out << render_table({"status", "id", "computed", "published", "note"}, rows);
  out << "# passed=" << str(r["passed"]) << " failed=" << str(r["failed"]) << '\n';
  return out.str();
}

std::string render_rho(const json& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r["rows"]) {
    rows.push_back({str(row["base"]), str(row["q"]), str(row["rho"]),
                    str(row["rho_fifth_root"])});
  }
  return render_table({"base", "q", "rho", "rho^(1/5)"}, rows);
}

std::string render_ellipse(const json& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r["rows"]) {
    rows.push_back({str(row["perimeter_of"]), str(row["perimeter"]),
                    row["d"].is_null() ? "none (p < 2pi)" : str(row["d"])});
  }
  std::ostringstream out;
  out << render_table({"perimeter", "p", "d"}, rows);
  out << "# R(e^{-2pi})/1000 = " << str(r["r_over_1000"]) << '\n';
  return out.str();
}

std::string render_table1(const json& r) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : r["rows"]) {
    rows.push_back({str(row["term"]), str(row["value"]), str(row["difference"])});
  }
  std::ostringstream out;
  out << render_table({"term", "value", "difference"}, rows);
  out << "# chain x1 < x2 < x3 < x4 < x5: "
      << (r["chain_holds"].get<bool>() ? "holds" : "VIOLATED") << '\n';
  return out.str();
}

}  // namespace

// --- public API --------------------------------------------------------

std::optional<RunConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& out) {
  CLI::App app{"Rogers-Ramanujan continued fraction and 2pi ladders", "rrpi"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  RunConfig config;
  std::string scheme = "deg5";
  std::string format = "text";
  std::string out_path;
  int precision = 0;

  app.add_option("--scheme", scheme, "Ladder scheme")
      ->check(CLI::IsMember({"deg5", "deg11"}));
  app.add_option("--level", config.level, "Ladder level for digits");
  app.add_option("--levels", config.levels, "Highest ladder level");
  app.add_option("--precision", precision, "Target decimal digits");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "Write output to this file");
  app.add_flag("--allow-untested", config.allow_untested,
               "Permit levels beyond the tested range");
  app.add_option("--inject-fault", config.inject_fault)->group("");

  const std::vector<std::pair<const char*, Command>> commands = {
      {"digits", Command::digits},   {"verify", Command::verify},
      {"ladder", Command::ladder},   {"rho", Command::rho},
      {"ellipse", Command::ellipse}, {"table1", Command::table1}};
  const std::vector<std::pair<const char*, const char*>> help = {
      {"digits", "Certified digits of 2pi from one ladder level"},
      {"verify", "Check every published constant"},
      {"ladder", "Per-level errors and correct-digit counts"},
      {"rho", "Continued-fraction inversions of 2pi - 6"},
      {"ellipse", "Ellipse bulges for near-circular perimeters"},
      {"table1", "The five-term chain and its differences"}};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    app.add_subcommand(commands[i].first, help[i].second);
  }

  // CLI11 parses in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (const auto& [name, command] : commands) {
    if (app.got_subcommand(name)) config.command = command;
  }
  config.scheme = piladder::scheme_from_string(scheme);
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  if (app.count("--precision") > 0) config.precision = precision;
  if (!out_path.empty()) config.output_path = out_path;
  return config;
}

void validate(const RunConfig& config) {
  if (config.precision && *config.precision < 10) {
    throw UsageError("--precision must be at least 10");
  }
  const int max_level = piladder::max_tested_level(config.scheme);
  auto check_level = [&](int level, const char* flag) {
    if (level < 0) {
      throw UsageError(std::string(flag) + " must be non-negative");
    }
    if (level > max_level && !config.allow_untested) {
      throw UsageError(std::string(flag) + " " + std::to_string(level) +
                       " is beyond the tested range (max " +
                       std::to_string(max_level) + "); pass --allow-untested");
    }
  };
  if (config.command == Command::digits) check_level(config.level, "--level");
  if (config.command == Command::ladder) check_level(config.levels, "--levels");
}

json build_report(const RunConfig& config) {
  switch (config.command) {
    case Command::digits: return digits_report(config);
    case Command::verify: return verify_report(config);
    case Command::ladder: return ladder_report(config);
    case Command::rho: return rho_report(config);
    case Command::ellipse: return ellipse_report(config);
    case Command::table1: return table1_report(config);
  }
  throw UsageError("unknown command");
}

std::string render_text(const json& report) {
  if (!report.contains("schema") || report["schema"] != kSchemaVersion) {
    throw UsageError("unsupported report schema");
  }
  const std::string kind = report.at("kind").get<std::string>();
  if (kind == "digits") return render_digits(report);
  if (kind == "ladder") return render_ladder(report);
  if (kind == "verify") return render_verify(report);
  if (kind == "rho") return render_rho(report);
  if (kind == "ellipse") return render_ellipse(report);
  if (kind == "table1") return render_table1(report);
  throw UsageError("unknown report kind '" + kind + "'");
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  json report;
  try {
    validate(config);
    report = build_report(config);
  } catch (const UsageError& e) {
    err << "rrpi " << command_name(config.command) << ": " << e.what() << '\n';
    return exit_code::usage;
  } catch (const ContextTooSmall& e) {
    err << "rrpi " << command_name(config.command) << ": " << e.what() << '\n';
    return exit_code::usage;
  } catch (const Error& e) {
    err << "rrpi " << command_name(config.command)
        << ": numeric failure: " << e.what() << '\n';
    return exit_code::numeric;
  }

  const std::string text = config.format == OutputFormat::json
                               ? report.dump(2) + "\n"
                               : render_text(report);
  if (config.output_path) {
    std::ofstream file(*config.output_path);
    if (!file) {
      err << "rrpi: cannot open " << *config.output_path << " for writing\n";
      return exit_code::usage;
    }
    file << text;
  } else {
    out << text;
  }

  if (config.command == Command::verify) {
    if (report["failed"].get<int>() > 0) {
      for (const auto& c : report["checks"]) {
        if (!c["match"].get<bool>()) {
          err << "mismatch: " << str(c["id"]) << " computed=" << str(c["computed"])
              << " published=" << str(c["published"]) << '\n';
        }
      }
      return exit_code::mismatch;
    }
  }
  return exit_code::ok;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(args, out);
  } catch (const Error& e) {
    err << "rrpi: " << e.what() << '\n';
    return exit_code::usage;
  }
  if (!config) return exit_code::ok;
  return execute(*config, out, err);
}

}  // namespace rrpi::cli
