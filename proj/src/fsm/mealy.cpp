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

#include "scc/fsm/mealy.hpp"

#include <deque>
#include <map>

#include "scc/fsm/abstraction.hpp"

namespace scc::fsm {

Letter to_letter(const std::vector<std::string>& names, const kernel::SignalSet& signals) {
  Letter l = 0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (signals.count(names[i])) l |= Letter{1} << i;
  }
  return l;
}

kernel::SignalSet to_signals(const std::vector<std::string>& names, Letter letter) {
  kernel::SignalSet s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (letter & (Letter{1} << i)) s.emplace(names[i], std::nullopt);
  }
  return s;
}

std::string letter_text(const std::vector<std::string>& names, Letter letter, const char* prefix) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!(letter & (Letter{1} << i))) continue;
    if (!out.empty()) out += ' ';
    out += prefix;
    out += names[i];
  }
  return out;
}

MealyAutomaton extract_automaton(const kernel::ProgramPtr& program, const ExtractOptions& options) {
  if (!is_pure(*program)) {
    throw std::invalid_argument("'" + program->name() + "' has valued signals; abstract it first");
  }
  MealyAutomaton a;
  a.name = program->name();
  a.inputs = program->signal_names(kernel::Direction::Input);
  a.outputs = program->signal_names(kernel::Direction::Output);
  if (a.inputs.size() > kMaxInputs) {
    throw std::invalid_argument("'" + program->name() + "' has " + std::to_string(a.inputs.size()) +
                                " inputs; at most " + std::to_string(kMaxInputs) + " are supported");
  }

  std::map<std::vector<std::int64_t>, StateId> ids;
  std::vector<kernel::ExecState> states;
  auto intern = [&](const kernel::ExecState& s) {
    auto [it, fresh] = ids.emplace(s.control_key(), static_cast<StateId>(states.size()));
    if (fresh) {
      if (states.size() >= options.max_states) {
        throw StateExplosion("'" + program->name() + "' exceeds " + std::to_string(options.max_states) + " states");
      }
      states.push_back(s);
    }
    return it->second;
  };

  intern(kernel::ExecState::initial(program));
  const std::size_t letters = a.letter_count();
  std::vector<kernel::SignalSet> letter_inputs(letters);
  for (Letter l = 0; l < letters; ++l) letter_inputs[l] = to_signals(a.inputs, l);

  for (std::size_t s = 0; s < states.size(); ++s) {
    std::vector<Transition> row(letters);
    for (Letter l = 0; l < letters; ++l) {
      auto r = kernel::run_tick(states[s], letter_inputs[l]);
      row[l] = {to_letter(a.outputs, r.outputs), intern(r.next)};
    }
    a.transitions.push_back(std::move(row));
  }
  return a;
}

MealyAutomaton canonicalize(const MealyAutomaton& a) {
  std::vector<std::int64_t> id(a.state_count(), -1);
  std::vector<StateId> order;
  std::deque<StateId> queue{a.initial};
  id[a.initial] = 0;
  order.push_back(a.initial);
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (const auto& t : a.transitions[s]) {
      if (id[t.next] < 0) {
        id[t.next] = static_cast<std::int64_t>(order.size());
        order.push_back(t.next);
        queue.push_back(t.next);
      }
    }
  }
  MealyAutomaton out{a.name, a.inputs, a.outputs, 0, {}};
  for (StateId old : order) {
    auto row = a.transitions[old];
    for (auto& t : row) t.next = static_cast<StateId>(id[t.next]);
    out.transitions.push_back(std::move(row));
  }
  return out;
}

MealyAutomaton minimize(const MealyAutomaton& input) {
  MealyAutomaton a = canonicalize(input);
  const std::size_t n = a.state_count();
  std::vector<std::size_t> block(n);
  std::size_t blocks = 0;
  {
    std::map<std::vector<Letter>, std::size_t> by_outputs;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Letter> sig;
      for (const auto& t : a.transitions[s]) sig.push_back(t.outputs);
      block[s] = by_outputs.emplace(std::move(sig), by_outputs.size()).first->second;
    }
    blocks = by_outputs.size();
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> by_signature;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{block[s]};
      for (const auto& t : a.transitions[s]) sig.push_back(block[t.next]);
      refined[s] = by_signature.emplace(std::move(sig), by_signature.size()).first->second;
    }
    block = std::move(refined);
    if (by_signature.size() == blocks) break;
    blocks = by_signature.size();
  }

  std::vector<std::int64_t> representative(blocks, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (representative[block[s]] < 0) representative[block[s]] = static_cast<std::int64_t>(s);
  }
  MealyAutomaton quotient{a.name, a.inputs, a.outputs, static_cast<StateId>(block[a.initial]), {}};
  for (std::size_t b = 0; b < blocks; ++b) {
    auto row = a.transitions[representative[b]];
    for (auto& t : row) t.next = static_cast<StateId>(block[t.next]);
    quotient.transitions.push_back(std::move(row));
  }
  return canonicalize(quotient);
}

std::vector<Letter> simulate(const MealyAutomaton& a, const std::vector<Letter>& word) {
  std::vector<Letter> out;
  out.reserve(word.size());
  StateId s = a.initial;
  for (Letter l : word) {
    const auto& t = a.step(s, l);
    out.push_back(t.outputs);
    s = t.next;
  }
  return out;
}

void check_well_formed(const MealyAutomaton& a) {
  if (a.transitions.empty() || a.initial >= a.state_count()) throw std::logic_error("automaton has no initial state");
  for (const auto& row : a.transitions) {
    if (row.size() != a.letter_count()) throw std::logic_error("automaton is incomplete");
    for (const auto& t : row) {
      if (t.next >= a.state_count()) throw std::logic_error("transition to an undefined state");
    }
  }
  if (canonicalize(a).state_count() != a.state_count()) throw std::logic_error("automaton has unreachable states");
}

}  // namespace scc::fsm
