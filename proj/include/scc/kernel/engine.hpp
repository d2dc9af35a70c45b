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

#ifndef SCC_KERNEL_ENGINE_HPP_
#define SCC_KERNEL_ENGINE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scc/kernel/errors.hpp"
#include "scc/kernel/program.hpp"

namespace scc::kernel {

/// Signals present in one instant, with their value for valued signals.
/// Signals not listed are absent.
using SignalSet = std::map<std::string, std::optional<std::int64_t>>;

enum class Completion { Running, Terminated };

/// Resumable execution state of one program instance. Value type; safe to
/// copy and to move across threads, not to share mutably.
class ExecState {
 public:
  /// Validates the program and returns its boot state.
  /// Throws InvalidProgram when validate_program reports diagnostics.
  static ExecState initial(ProgramPtr program);

  const Program& program() const { return *program_; }
  const ProgramPtr& program_ptr() const { return program_; }

  bool booted() const { return booted_; }
  bool terminated() const { return booted_ && resume_.empty(); }
  const std::vector<NodeId>& resume_points() const { return resume_; }
  const std::vector<std::optional<std::int64_t>>& variables() const { return vars_; }
  const std::vector<std::optional<std::int64_t>>& signal_values() const { return values_; }

  /// Control configuration: boot flag, resume points, variable store. Equal
  /// keys denote states with identical future behaviour on pure programs.
  std::vector<std::int64_t> control_key() const;

  bool operator==(const ExecState& o) const {
    return program_ == o.program_ && booted_ == o.booted_ && resume_ == o.resume_ &&
           vars_ == o.vars_ && values_ == o.values_;
  }

 private:
  friend class Reactor;
  explicit ExecState(ProgramPtr p);

  ProgramPtr program_;
  bool booted_ = false;
  std::vector<NodeId> resume_;
  std::vector<std::optional<std::int64_t>> vars_;
  std::vector<std::optional<std::int64_t>> values_;
};

struct Reaction {
  SignalSet outputs;  // emitted output signals
  SignalSet locals;   // emitted local signals
  ExecState next;
  Completion completion = Completion::Running;
};

/// Executes one instant. Throws CausalityError, MultipleEmitConflict,
/// UndeclaredSignal (input not declared as an input) or KernelError.
Reaction run_tick(const ExecState& state, const SignalSet& inputs);

struct TraceResult {
  std::vector<SignalSet> outputs;
  bool terminated = false;
  std::size_t terminated_at = 0;  // tick index of termination when terminated
};

/// Repeated run_tick from the boot state. Stops after the tick on which the
/// program terminates. Errors carry the failing tick index.
TraceResult run_trace(const ProgramPtr& program, const std::vector<SignalSet>& trace);

}  // namespace scc::kernel

#endif  // SCC_KERNEL_ENGINE_HPP_
