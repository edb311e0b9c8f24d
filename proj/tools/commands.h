// Copyright 2026 The minmodel Authors
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

#ifndef MINMODEL_TOOLS_COMMANDS_H_
#define MINMODEL_TOOLS_COMMANDS_H_

#include <optional>
#include <string>
#include <vector>

#include "report.h"

namespace minmodel::tool {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitInconclusive = 2,
                kExitUsage = 3 };

struct Invocation {
  std::string workspace_path;
  std::string command;
  std::vector<std::string> args;
  // Override the workspace [config] section when set.
  std::optional<int> fuel;
  std::optional<std::string> bound;
  bool cross_check = false;
};

struct CommandResult {
  int exit_code = kExitPass;
  Json report;
};

// Loads the workspace and runs one command. Errors become a report with
// verdict "error" and exit code 3.
CommandResult RunCommand(const Invocation& invocation);

// Entry point of the minmodel executable.
int ToolMain(int argc, char** argv);

}  // namespace minmodel::tool

#endif  // MINMODEL_TOOLS_COMMANDS_H_
