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

#include "scc/verifier/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace scc::verifier {

const char* to_string(InputMode m) {
  switch (m) {
    case InputMode::free: return "free";
    case InputMode::always_present: return "present";
    case InputMode::always_absent: return "absent";
  }
  return "free";
}

std::optional<InputMode> parse_input_mode(std::string_view s) {
  if (s == "present") return InputMode::always_present;
  if (s == "absent") return InputMode::always_absent;
  if (s == "free") return InputMode::free;
  return std::nullopt;
}

InputMode InputConstraint::mode(const std::string& signal) const {
  auto it = modes.find(signal);
  return it == modes.end() ? InputMode::free : it->second;
}

std::string InputConstraint::describe() const {
  std::string out;
  for (const auto& [signal, m] : modes) {
    if (!out.empty()) out += ' ';
    out += signal + "=" + to_string(m);
  }
  return out.empty() ? "(unconstrained)" : out;
}

std::vector<Letter> allowed_letters(const MealyAutomaton& a, const InputConstraint& c) {
  Letter must = 0;
  Letter must_not = 0;
  for (const auto& [signal, m] : c.modes) {
    auto it = std::find(a.inputs.begin(), a.inputs.end(), signal);
    if (it == a.inputs.end()) {
      throw std::invalid_argument("'" + signal + "' is not an input of " + a.name);
    }
    Letter bit = Letter{1} << (it - a.inputs.begin());
    if (m == InputMode::always_present) must |= bit;
    if (m == InputMode::always_absent) must_not |= bit;
  }
  std::vector<Letter> out;
  for (Letter l = 0; l < a.letter_count(); ++l) {
    if ((l & must) == must && (l & must_not) == 0) out.push_back(l);
  }
  return out;
}

namespace {

struct Search {
  std::vector<Letter> letters;
  std::vector<std::int64_t> parent;  // predecessor state, -1 for none
  std::vector<Letter> via;
  std::vector<StateId> order;        // BFS order
};

Search explore(const MealyAutomaton& a, const InputConstraint& c) {
  Search s;
  s.letters = allowed_letters(a, c);
  if (s.letters.empty()) throw EmptyBehavior("constraint " + c.describe() + " admits no input letter");
  std::vector<bool> seen(a.state_count(), false);
  s.parent.assign(a.state_count(), -1);
  s.via.assign(a.state_count(), 0);
  seen[a.initial] = true;
  s.order.push_back(a.initial);
  for (std::size_t i = 0; i < s.order.size(); ++i) {
    StateId q = s.order[i];
    for (Letter l : s.letters) {
      StateId n = a.step(q, l).next;
      if (!seen[n]) {
        seen[n] = true;
        s.parent[n] = q;
        s.via[n] = l;
        s.order.push_back(n);
      }
    }
  }
  return s;
}

Trace path_to(const MealyAutomaton& a, const Search& s, StateId target) {
  std::vector<Letter> word;
  for (StateId q = target; s.parent[q] >= 0; q = static_cast<StateId>(s.parent[q])) word.push_back(s.via[q]);
  std::reverse(word.begin(), word.end());
  return {word, fsm::simulate(a, word)};
}

}  // namespace

std::set<std::pair<StateId, Letter>> reachable_transitions(const MealyAutomaton& a, const InputConstraint& c) {
  std::set<std::pair<StateId, Letter>> out;
  auto s = explore(a, c);
  for (StateId q : s.order) {
    for (Letter l : s.letters) out.emplace(q, l);
  }
  return out;
}

const char* to_string(EmissionStatus s) {
  switch (s) {
    case EmissionStatus::always_emitted: return "ALWAYS_EMITTED";
    case EmissionStatus::possibly_emitted: return "POSSIBLY_EMITTED";
    case EmissionStatus::never_emitted: return "NEVER_EMITTED";
  }
  return "?";
}

std::vector<OutputStatus> check_output_status(const MealyAutomaton& a, const InputConstraint& c) {
  auto s = explore(a, c);
  Letter any = 0;
  Letter all = ~Letter{0};
  for (StateId q : s.order) {
    for (Letter l : s.letters) {
      any |= a.step(q, l).outputs;
      all &= a.step(q, l).outputs;
    }
  }
  std::vector<OutputStatus> out;
  for (std::size_t i = 0; i < a.outputs.size(); ++i) {
    Letter bit = Letter{1} << i;
    EmissionStatus st = (all & bit)    ? EmissionStatus::always_emitted
                        : (any & bit) ? EmissionStatus::possibly_emitted
                                      : EmissionStatus::never_emitted;
    out.push_back({a.outputs[i], st});
  }
  return out;
}

EmissionStatus status_of(const std::vector<OutputStatus>& statuses, const std::string& signal) {
  for (const auto& s : statuses) {
    if (s.signal == signal) return s.status;
  }
  throw std::invalid_argument("no status for '" + signal + "'");
}

namespace {

FormulaPtr make(Formula::Kind k, std::string signal = {}, std::vector<FormulaPtr> ops = {}) {
  return std::make_shared<const Formula>(Formula{k, std::move(signal), std::move(ops)});
}

}  // namespace

FormulaPtr f_true() { return make(Formula::Kind::True); }
FormulaPtr f_false() { return make(Formula::Kind::False); }
FormulaPtr input_present(std::string signal) { return make(Formula::Kind::InputPresent, std::move(signal)); }
FormulaPtr emitted(std::string signal) { return make(Formula::Kind::OutputEmitted, std::move(signal)); }
FormulaPtr f_not(FormulaPtr f) { return make(Formula::Kind::Not, {}, {std::move(f)}); }
FormulaPtr f_and(std::vector<FormulaPtr> fs) { return make(Formula::Kind::And, {}, std::move(fs)); }
FormulaPtr f_or(std::vector<FormulaPtr> fs) { return make(Formula::Kind::Or, {}, std::move(fs)); }
FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs) {
  return make(Formula::Kind::Implies, {}, {std::move(lhs), std::move(rhs)});
}

std::string render(const FormulaPtr& f) {
  auto join = [&](const char* sep) {
    std::string out = "(";
    for (std::size_t i = 0; i < f->operands.size(); ++i) {
      if (i) out += sep;
      out += render(f->operands[i]);
    }
    return out + ")";
  };
  switch (f->kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::InputPresent: return "?" + f->signal;
    case Formula::Kind::OutputEmitted: return "!" + f->signal;
    case Formula::Kind::Not: return "not " + render(f->operands[0]);
    case Formula::Kind::And: return join(" and ");
    case Formula::Kind::Or: return join(" or ");
    case Formula::Kind::Implies: return join(" => ");
  }
  return "?";
}

namespace {

std::optional<std::size_t> index_of(const std::vector<std::string>& names, const std::string& n) {
  auto it = std::find(names.begin(), names.end(), n);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

void check_formula(const MealyAutomaton& a, const FormulaPtr& f) {
  if (f->kind == Formula::Kind::InputPresent && !index_of(a.inputs, f->signal)) {
    throw std::invalid_argument("'" + f->signal + "' is not an input of " + a.name);
  }
  if (f->kind == Formula::Kind::OutputEmitted && !index_of(a.outputs, f->signal)) {
    throw std::invalid_argument("'" + f->signal + "' is not an output of " + a.name);
  }
  for (const auto& op : f->operands) check_formula(a, op);
}

bool evaluate(const FormulaPtr& f, const MealyAutomaton& a, Letter in, Letter out) {
  switch (f->kind) {
    case Formula::Kind::True: return true;
    case Formula::Kind::False: return false;
    case Formula::Kind::InputPresent: return (in >> *index_of(a.inputs, f->signal)) & 1;
    case Formula::Kind::OutputEmitted: return (out >> *index_of(a.outputs, f->signal)) & 1;
    case Formula::Kind::Not: return !evaluate(f->operands[0], a, in, out);
    case Formula::Kind::And:
      return std::all_of(f->operands.begin(), f->operands.end(),
                         [&](const FormulaPtr& g) { return evaluate(g, a, in, out); });
    case Formula::Kind::Or:
      return std::any_of(f->operands.begin(), f->operands.end(),
                         [&](const FormulaPtr& g) { return evaluate(g, a, in, out); });
    case Formula::Kind::Implies:
      return !evaluate(f->operands[0], a, in, out) || evaluate(f->operands[1], a, in, out);
  }
  return false;
}

InvariantResult check_invariant(const MealyAutomaton& a, const InputConstraint& c, const FormulaPtr& f) {
  check_formula(a, f);
  auto s = explore(a, c);
  // States come out of the search in nondecreasing depth, so the first
  // violating transition ends a shortest counterexample.
  for (StateId q : s.order) {
    for (Letter l : s.letters) {
      const auto& t = a.step(q, l);
      if (!evaluate(f, a, l, t.outputs)) {
        Trace tr = path_to(a, s, q);
        tr.inputs.push_back(l);
        tr.outputs.push_back(t.outputs);
        return {false, std::move(tr)};
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<Trace> reach_silent_sink(const MealyAutomaton& a, const InputConstraint& c) {
  auto s = explore(a, c);
  for (StateId q : s.order) {
    bool sink = std::all_of(s.letters.begin(), s.letters.end(), [&](Letter l) {
      return a.step(q, l) == fsm::Transition{0, q};
    });
    if (sink) return path_to(a, s, q);
  }
  return std::nullopt;
}

}  // namespace scc::verifier
