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

#include "scc/fsm/export.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace scc::fsm {

std::string transition_label(const MealyAutomaton& a, Letter in, Letter out) {
  std::string label = letter_text(a.inputs, in, "?");
  label += label.empty() ? "/" : " /";
  if (out) label += " " + letter_text(a.outputs, out, "!");
  return label;
}

std::string export_dot(const MealyAutomaton& a) {
  std::ostringstream os;
  os << "digraph \"" << a.name << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  os << "  start [shape=point];\n";
  os << "  start -> " << a.initial << ";\n";
  for (StateId s = 0; s < a.state_count(); ++s) {
    std::map<std::tuple<StateId, Letter>, std::vector<Letter>> edges;
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const auto& t = a.step(s, l);
      edges[{t.next, t.outputs}].push_back(l);
    }
    for (const auto& [key, letters] : edges) {
      const auto& [next, out] = key;
      os << "  " << s << " -> " << next << " [label=\"";
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << "\\n";
        os << transition_label(a, letters[i], out);
      }
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_listing(const MealyAutomaton& a) {
  std::ostringstream os;
  auto or_dash = [](const std::string& s) { return s.empty() ? std::string("-") : s; };
  for (StateId s = 0; s < a.state_count(); ++s) {
    for (Letter l = 0; l < a.letter_count(); ++l) {
      const auto& t = a.step(s, l);
      os << s << '\t' << or_dash(letter_text(a.inputs, l)) << '\t' << or_dash(letter_text(a.outputs, t.outputs))
         << '\t' << t.next << '\n';
    }
  }
  return os.str();
}

}  // namespace scc::fsm
