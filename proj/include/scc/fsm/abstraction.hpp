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

#ifndef SCC_FSM_ABSTRACTION_HPP_
#define SCC_FSM_ABSTRACTION_HPP_

#include <map>
#include <stdexcept>
#include <string>

#include "scc/kernel/program.hpp"

namespace scc::fsm {

class UnabstractableValueUse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fresh pure input name -> the comparison it stands for. The fresh name is
/// the rendered comparison, so the map is a bijection by construction.
struct TestSignalMap {
  std::map<std::string, kernel::Expr> tests;

  bool empty() const { return tests.empty(); }
  std::size_t size() const { return tests.size(); }
};

struct AbstractedProgram {
  kernel::Program program;
  TestSignalMap map;
};

/// Replaces every comparison reading a signal value with a fresh pure input,
/// and every `emit S(c)` with constant c by the pure output `S(c)`. Valued
/// signals become pure; signals no longer referenced are dropped.
/// Throws UnabstractableValueUse on any other use of a signal value.
AbstractedProgram abstract_valued_tests(const kernel::Program& program);

/// True when every declared signal is pure and no expression reads a value.
bool is_pure(const kernel::Program& program);

}  // namespace scc::fsm

#endif  // SCC_FSM_ABSTRACTION_HPP_
