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

#ifndef SCC_VERIFIER_ANALYSIS_HPP_
#define SCC_VERIFIER_ANALYSIS_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scc/fsm/mealy.hpp"

namespace scc::verifier {

using fsm::Letter;
using fsm::MealyAutomaton;
using fsm::StateId;

enum class InputMode { free, always_present, always_absent };

const char* to_string(InputMode m);
/// Accepts present|absent|free.
std::optional<InputMode> parse_input_mode(std::string_view s);

/// Per-input presence constraint. Inputs not mentioned are free.
struct InputConstraint {
  std::map<std::string, InputMode> modes;

  InputConstraint& set(const std::string& signal, InputMode m) {
    modes[signal] = m;
    return *this;
  }
  InputMode mode(const std::string& signal) const;
  std::string describe() const;
};

class EmptyBehavior : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letters satisfying c, ascending. Throws std::invalid_argument when c names
/// a signal that is not an input of a.
std::vector<Letter> allowed_letters(const MealyAutomaton& a, const InputConstraint& c);

/// (state, letter) pairs reachable from the initial state using allowed letters.
std::set<std::pair<StateId, Letter>> reachable_transitions(const MealyAutomaton& a, const InputConstraint& c);

enum class EmissionStatus { always_emitted, possibly_emitted, never_emitted };

const char* to_string(EmissionStatus s);

struct OutputStatus {
  std::string signal;
  EmissionStatus status;
};

/// One entry per output of a, in declaration order. Throws EmptyBehavior when
/// c admits no letter.
std::vector<OutputStatus> check_output_status(const MealyAutomaton& a, const InputConstraint& c);

EmissionStatus status_of(const std::vector<OutputStatus>& statuses, const std::string& signal);

// Boolean formulas over one transition.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, False, InputPresent, OutputEmitted, Not, And, Or, Implies };
  Kind kind = Kind::True;
  std::string signal;
  std::vector<FormulaPtr> operands;
};

FormulaPtr f_true();
FormulaPtr f_false();
FormulaPtr input_present(std::string signal);
FormulaPtr emitted(std::string signal);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs);
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);

std::string render(const FormulaPtr& f);

/// Throws std::invalid_argument when f names an undeclared signal.
void check_formula(const MealyAutomaton& a, const FormulaPtr& f);

bool evaluate(const FormulaPtr& f, const MealyAutomaton& a, Letter in, Letter out);

/// Input word with the outputs produced at each step.
struct Trace {
  std::vector<Letter> inputs;
  std::vector<Letter> outputs;
};

struct InvariantResult {
  bool holds = true;
  std::optional<Trace> counterexample;  // shortest; violation at its last step
};

/// Checks that f holds on every reachable transition under c.
InvariantResult check_invariant(const MealyAutomaton& a, const InputConstraint& c, const FormulaPtr& f);

/// Shortest word leading to a state whose allowed transitions are all silent
/// self-loops, if such a state is reachable under c.
std::optional<Trace> reach_silent_sink(const MealyAutomaton& a, const InputConstraint& c);

}  // namespace scc::verifier

#endif  // SCC_VERIFIER_ANALYSIS_HPP_
