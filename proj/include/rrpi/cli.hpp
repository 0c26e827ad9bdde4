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

// rrpi command line: digits | verify | ladder | rho | ellipse | table1.
//
// Every command first builds a JSON report (schema 1, numbers as decimal
// strings); the text form is rendered from that same document, so a
// report parsed back from JSON renders to identical text.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rrpi/piladder.hpp"

namespace rrpi::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kDigitsPerLine = 80;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int usage = 2;
inline constexpr int numeric = 3;
}  // namespace exit_code

enum class Command { digits, verify, ladder, rho, ellipse, table1 };
enum class OutputFormat { text, json };

struct RunConfig {
  Command command = Command::verify;
  std::optional<int> precision;  // target digits
  int level = 0;
  int levels = 0;
  piladder::Scheme scheme = piladder::Scheme::deg5;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> output_path;
  bool allow_untested = false;
  std::string inject_fault;
};

/// Raised for invalid configurations; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Parses argv (argv[0] is the program name). Throws UsageError.
/// Returns nullopt when help was requested and printed to `out`.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& out);

/// Checks ranges that the parser cannot (precision >= 10, level range).
void validate(const RunConfig& config);

nlohmann::json build_report(const RunConfig& config);
std::string render_text(const nlohmann::json& report);

/// Runs one command and writes its output; returns the exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + validate + execute with the exit-code contract applied.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rrpi::cli
