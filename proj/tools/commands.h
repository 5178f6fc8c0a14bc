// Copyright 2026 The chanbound Authors
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


// Command-line front end. Exit codes: 0 success, 1 usage, 2 validation or
// I/O failure, 3 verification violation.

#ifndef CHANBOUND_TOOLS_COMMANDS_H
#define CHANBOUND_TOOLS_COMMANDS_H

#include <iosfwd>

namespace chanbound::tools {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitValidation = 2, kExitViolation = 3 };

inline constexpr unsigned long long kDefaultSeed = 1;

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace chanbound::tools

#endif  // CHANBOUND_TOOLS_COMMANDS_H
