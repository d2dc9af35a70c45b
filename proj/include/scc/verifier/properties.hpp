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

#ifndef SCC_VERIFIER_PROPERTIES_HPP_
#define SCC_VERIFIER_PROPERTIES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "scc/controller/system.hpp"
#include "scc/kernel/engine.hpp"
#include "scc/verifier/analysis.hpp"

namespace scc::verifier {

struct ModuleUnderTest {
  kernel::ProgramPtr program;
  MealyAutomaton automaton;
};

ModuleUnderTest analyse(kernel::ProgramPtr program);

struct SystemModules {
  ModuleUnderTest road_data;
  ModuleUnderTest host_vehicle;
  ModuleUnderTest cruise_control;
};

SystemModules system_modules(const controller::ThresholdConfig& config = {},
                             controller::Mutation mutation = controller::Mutation::none);

struct PropertyResult {
  std::string id;
  std::string module;
  std::string description;
  InputConstraint constraint;
  std::vector<std::pair<std::string, EmissionStatus>> expected;
  std::vector<OutputStatus> statuses;
  FormulaPtr formula;
  bool holds = false;
  std::optional<Trace> counterexample;  // set whenever the invariant fails
  std::optional<Trace> witness;         // supporting trace, e.g. the path to a halt sink
  std::string note;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

/// Runs p1..p4 on the given modules.
std::vector<PropertyResult> verify_properties(const SystemModules& modules);

/// Replays a counterexample through the kernel; true when the kernel's
/// outputs match the trace and the formula fails on its last step.
bool replays_violation(const ModuleUnderTest& m, const Trace& trace, const FormulaPtr& f);

std::string render_trace(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
                         const Trace& trace, const std::string& indent);
std::string render_text(const std::vector<PropertyResult>& results);
std::string render_json(const std::vector<PropertyResult>& results);

}  // namespace scc::verifier

#endif  // SCC_VERIFIER_PROPERTIES_HPP_
