// Copyright 2026 The syncruise Authors
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

#ifndef SCC_CLI_CLI_HPP_
#define SCC_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace scc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name.
///
///   simulate --config FILE --scenario FILE [--format text|json] [--output FILE]
///   verify   --config FILE [--format text|json]
///   fsm      MODULE [--minimize] [--output PREFIX]
///   status   MODULE SIGNAL=present|absent|free ...
///
/// Every command also takes --mutate NAME, a test hook that builds the
/// controller with a deliberate defect.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scc::cli

#endif  // SCC_CLI_CLI_HPP_
