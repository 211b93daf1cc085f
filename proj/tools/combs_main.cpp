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

// Batch driver: loads a theory file and a program file, runs every query in
// order and prints the report to stdout. Diagnostics go to stderr.

#include <iostream>

#include <CLI11.hpp>

#include "combs/cli/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Decide equivalence of combs and optics over a chosen base category"};

  std::string theory_path, program_path;
  combs::cli::RunOptions options;
  app.add_option("theory", theory_path, "Theory file (backend and generators)")
      ->required();
  app.add_option("program", program_path, "Program file (definitions and queries)")
      ->required();
  app.add_option("--strategy", options.strategy,
                 "Probe strategy for 'equiv comb': braid, cartesian, enumerate, positive");
  app.add_option("--bound", options.bound, "Probe word length (overrides the theory)");
  app.add_option("--hom-limit", options.hom_limit,
                 "Per-hom-set enumeration budget (overrides the theory)");
  app.add_option("--tolerance", options.tolerance,
                 "Numeric tolerance for approximate backends");
  app.add_option("--format", options.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", options.timing, "Include per-query wall time in reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : combs::cli::kUsage;
  }

  const auto result = combs::cli::run_files(theory_path, program_path, options);
  std::cout << result.output;
  std::cerr << result.diagnostics;
  return result.exit_code;
}
