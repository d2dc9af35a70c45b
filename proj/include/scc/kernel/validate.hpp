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

#ifndef SCC_KERNEL_VALIDATE_HPP_
#define SCC_KERNEL_VALIDATE_HPP_

#include <string>
#include <vector>

#include "scc/kernel/program.hpp"

namespace scc::kernel {

enum class DiagnosticKind {
  DuplicateSignal,
  UndeclaredSignal,
  UndeclaredVariable,
  EmitOnInput,
  ValueOfPureSignal,   // ?S or emit S(v) with S pure
  MissingValue,        // emit S with S valued
  InstantaneousLoop,
  SharedVariable,      // written in one parallel branch, touched by another
};

const char* to_string(DiagnosticKind k);

struct Diagnostic {
  DiagnosticKind kind;
  std::string message;
};

/// Static checks; an empty result means the program may be executed.
std::vector<Diagnostic> validate_program(const Program& program);

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

/// Conservative test for "may terminate in the instant it is started".
bool can_terminate_instantly(const Stmt& s);

}  // namespace scc::kernel

#endif  // SCC_KERNEL_VALIDATE_HPP_
