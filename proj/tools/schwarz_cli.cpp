// Copyright 2026 The schwarzmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "schwarz/cli.hpp"

namespace cli = schwarz::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact Schwarz-map solver and Hessian group checks"};
  app.require_subcommand(1);
  cli::Options opt;
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "Omit timing_ms from the report (for golden files)");

  std::string solve_file;
  std::optional<std::string> order;
  auto* solve = app.add_subcommand("solve", "Compute the LODE for a problem file");
  solve->add_option("file", solve_file, "JSON problem file")->required();
  solve->add_option("--order", order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));

  app.add_subcommand("check-hessian", "Verify the Hessian group identities");

  std::optional<std::string> preset, gens_file;
  auto* group = app.add_subcommand("group", "Close a matrix group and report its facts");
  auto* preset_opt = group->add_option("--preset", preset, "Hessian group")->check(CLI::IsMember({"h216", "h72", "f36"}));
  auto* file_opt = group->add_option("--file", gens_file, "JSON generator file");
  preset_opt->excludes(file_opt);
  group->require_option(1);

  std::string obstruct_file;
  auto* obstruct = app.add_subcommand("obstruct", "Hypergeometric obstruction analysis");
  obstruct->add_option("file", obstruct_file, "JSON file with f6, r9, f12, phi6sq")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsageError;
  }
  opt.timing = !no_timing;

  cli::CommandResult result;
  try {
    opt.closure_cap = cli::closure_cap_from_env();
  } catch (const schwarz::Error& e) {
    std::cerr << e.what() << "\n";
    return cli::kUsageError;
  }
  if (solve->parsed()) result = cli::run_solve(solve_file, order, opt);
  else if (group->parsed()) result = cli::run_group(preset, gens_file, opt);
  else if (obstruct->parsed()) result = cli::run_obstruct(obstruct_file, opt);
  else result = cli::run_check_hessian(opt);
  std::cout << cli::dump(result.report);
  return result.exit_code;
}
