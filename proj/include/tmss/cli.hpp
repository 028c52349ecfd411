// Copyright 2026 The tmss Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TMSS_CLI_HPP
#define TMSS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tmss {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // assertion or counterexample failure
  kExitInput = 2,    // malformed input, bad flags, dimension mismatch
  kExitNumerical = 3,
};

/// Runs the command-line interface. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tmss

#endif  // TMSS_CLI_HPP
