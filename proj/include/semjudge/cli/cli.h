// Copyright 2026 The SemJudge Authors.
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

#ifndef SEMJUDGE_CLI_CLI_H_
#define SEMJUDGE_CLI_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "semjudge/cli/config.h"
#include "semjudge/error.h"

namespace semjudge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBackend = 3;
inline constexpr int kExitData = 4;

int ExitCodeFor(ErrorCode code);

// Runs the `semjudge` command line. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const EnvLookup& env = ProcessEnvironment());

}  // namespace semjudge::cli

#endif  // SEMJUDGE_CLI_CLI_H_
