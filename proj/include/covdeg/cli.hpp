// Copyright 2026 The covdeg Authors
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

#include <string>
#include <vector>

namespace covdeg::cli {

/// 0: success or affirmative verdict. 1: negative verdict or violated
/// property. 2: malformed input or usage error.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

struct CommandOutcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Environment variable overriding the default lattice cap.
inline constexpr const char* kLatticeCapEnv = "COVDEG_LATTICE_CAP";

/// Runs one command. args excludes the program name, e.g.
/// {"same", "a.cov", "b.cov"}.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace covdeg::cli
