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

#ifndef SCC_FSM_MEALY_HPP_
#define SCC_FSM_MEALY_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scc/kernel/engine.hpp"

namespace scc::fsm {

/// Bit i set = inputs[i] (or outputs[i]) present.
using Letter = std::uint64_t;
using StateId = std::uint32_t;

struct Transition {
  Letter outputs = 0;
  StateId next = 0;

  bool operator==(const Transition&) const = default;
};

/// Complete deterministic Mealy machine over all subsets of its inputs.
struct MealyAutomaton {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  StateId initial = 0;
  std::vector<std::vector<Transition>> transitions;  // [state][letter]

  std::size_t state_count() const { return transitions.size(); }
  std::size_t letter_count() const { return std::size_t{1} << inputs.size(); }
  const Transition& step(StateId s, Letter in) const { return transitions[s][in]; }

  bool operator==(const MealyAutomaton&) const = default;
};

class StateExplosion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxInputs = 16;

struct ExtractOptions {
  std::size_t max_states = 1'000'000;
};

/// Breadth-first exploration of the program's control states over every input
/// letter, letters in ascending order. Throws std::invalid_argument for
/// programs with valued signals or more than kMaxInputs inputs, StateExplosion
/// past the state cap, and propagates kernel errors.
MealyAutomaton extract_automaton(const kernel::ProgramPtr& program, const ExtractOptions& options = {});

/// Quotient by Mealy equivalence (partition refinement), unreachable states
/// removed, states renumbered in breadth-first order from the initial state.
MealyAutomaton minimize(const MealyAutomaton& a);

/// Renumbers reachable states in breadth-first order and drops the rest.
MealyAutomaton canonicalize(const MealyAutomaton& a);

/// Output letters along an input word from the initial state.
std::vector<Letter> simulate(const MealyAutomaton& a, const std::vector<Letter>& word);

/// Throws std::logic_error when the automaton is incomplete or has
/// unreachable states.
void check_well_formed(const MealyAutomaton& a);

Letter to_letter(const std::vector<std::string>& names, const kernel::SignalSet& signals);
kernel::SignalSet to_signals(const std::vector<std::string>& names, Letter letter);

/// Space-separated names of the set bits, with the given prefix on each.
std::string letter_text(const std::vector<std::string>& names, Letter letter, const char* prefix = "");

}  // namespace scc::fsm

#endif  // SCC_FSM_MEALY_HPP_
