// Copyright 2026 The l0cover Authors
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

/**
 * @file cli.hpp
 * @brief Entry point of the l0cover command-line tool.
 */

#ifndef L0COVER_CLI_HPP
#define L0COVER_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace l0cover::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kInfeasible = 3,
  kLimit = 4,
  kInvalidSolution = 5,
  kBenchDisagreement = 6,
  kNumerical = 7,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace l0cover::cli

#endif  // L0COVER_CLI_HPP
