// Copyright 2026 The Littext Authors.
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

#ifndef LITTEXT_CLI_H_
#define LITTEXT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace littext::cli {

// Exit codes of Run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;  // also usage errors
inline constexpr int kExitOverflow = 2;

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics and usage to `err`.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace littext::cli

#endif  // LITTEXT_CLI_H_
