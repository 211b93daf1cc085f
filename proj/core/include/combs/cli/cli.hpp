// Copyright 2026 The combs Authors
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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "combs/backend.hpp"
#include "combs/decision.hpp"
#include "combs/instances/finfun.hpp"
#include "combs/instances/idempotent.hpp"
#include "combs/instances/matrix_backend.hpp"
#include "combs/instances/pointed.hpp"
#include "combs/instances/unitary.hpp"

namespace combs::cli {

using AnyBackend =
    std::variant<BoolMatrices, ComplexMatrices, RationalMatrices, FinFunBackend,
                 IdempotentBackend, PointedBackend, UnitaryBackend>;

/// A parsed theory file: the backend with its generators and the default
/// enumeration budget.
struct Theory {
  std::string kind;
  AnyBackend backend;
  Bound bound;
};

/// Parses a theory file. Throws ParseError or TypeError prefixed with
/// "source:line:column".
Theory parse_theory(std::string_view text, const std::string& source);

/// One logical line of a program. `head` holds the tokens before a
/// top-level '=', parenthesised groups kept whole; `bodies` the
/// '|'-separated parts after it.
struct Statement {
  std::size_t line = 0;
  std::string text;
  std::vector<std::string> head;
  std::vector<std::string> bodies;
};

/// Splits a program into statements. Throws ParseError with a location.
std::vector<Statement> parse_program(std::string_view text,
                                     const std::string& source);

struct RunOptions {
  std::optional<std::string> strategy;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> hom_limit;
  std::optional<double> tolerance;
  std::string format = "text";
  bool timing = false;
};

/// The outcome of one query, in report order.
struct QueryReport {
  std::size_t line = 0;
  std::string query;
  nlohmann::ordered_json result;
  std::optional<double> elapsed_ms;
};

nlohmann::ordered_json decision_json(const Decision& d);
std::string render_text(const std::vector<QueryReport>& reports);
std::string render_json(const std::vector<QueryReport>& reports,
                        const std::string& theory_kind);

/// Exit codes of `run`.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,   // parse or type error in the theory or program
  kQueryError = 3,   // some query raised an error; its report says which
};

struct RunResult {
  int exit_code = kOk;
  std::string output;       // the report stream
  std::string diagnostics;  // human readable errors
};

RunResult run(std::string_view theory, const std::string& theory_name,
              std::string_view program, const std::string& program_name,
              const RunOptions& options);

/// Same, reading both files from disk.
RunResult run_files(const std::string& theory_path,
                    const std::string& program_path, const RunOptions& options);

// -- helpers shared by the parsers ------------------------------------------

/// Splits on whitespace, keeping (...) and [...] / {...} groups whole.
std::vector<std::string> tokenize(std::string_view text);
/// Splits at top-level occurrences of `sep`.
std::vector<std::string> split_top(std::string_view text, char sep);
std::string trim(std::string_view text);
/// Non-blank, non-comment lines with bracketed literals joined, paired with
/// the line number they start on.
std::vector<std::pair<std::size_t, std::string>> logical_lines(
    std::string_view text, const std::string& source);
/// "(A B, A')" -> {A B, A'}
std::pair<ObjectWord, ObjectWord> parse_pair(std::string_view text);

}  // namespace combs::cli
