/* Copyright 2026 The HoTT Kernel Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef HOTT_CLI_HPP_
#define HOTT_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hott/eval.hpp"

namespace hott {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitSyntax = 2,
  kExitUsage = 3,
};

struct RunConfig {
  enum class Command { Check, Eval };
  Command command = Command::Check;
  std::vector<std::string> paths;
  std::optional<std::string> expr;  // eval only
  std::uint64_t max_steps = kDefaultMaxSteps;
  bool trace = false;
  bool print_normal_forms = true;
  unsigned jobs = 1;
};

int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches. Usage errors exit 3.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hott

#endif  // HOTT_CLI_HPP_
