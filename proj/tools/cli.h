//
// Copyright 2026 The edgeldp Authors
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
//

#ifndef EDGELDP_TOOLS_CLI_H_
#define EDGELDP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace edgeldp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitResourceLimit = 2;

// Entry point of the `edgeldp` tool. args[0] is the program name. Results go
// to `out` (or --out), diagnostics to `err`.
int CliMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgeldp::cli

#endif  // EDGELDP_TOOLS_CLI_H_
