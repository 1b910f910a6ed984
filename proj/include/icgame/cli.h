// Copyright 2026 The icgame Authors
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

#ifndef ICGAME_CLI_H
#define ICGAME_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace icgame {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolated = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitResource = 65;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace icgame

#endif
