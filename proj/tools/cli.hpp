// Copyright 2026 The apnphi Authors
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

#ifndef APNPHI_TOOLS_CLI_HPP
#define APNPHI_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace apnphi::cli {

/// Version of the JSON documents written by the tool.
inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 success, 1 domain or usage error (JSON on `err`), 2 budget
/// exceeded (JSON on `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apnphi::cli

#endif  // APNPHI_TOOLS_CLI_HPP
