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

#ifndef SCC_FSM_EXPORT_HPP_
#define SCC_FSM_EXPORT_HPP_

#include <string>

#include "scc/fsm/mealy.hpp"

namespace scc::fsm {

/// Transition label `?A ?B / !X`; an empty output set leaves just the slash.
std::string transition_label(const MealyAutomaton& a, Letter in, Letter out);

/// Graphviz text. Letters sharing source, target and outputs share one edge,
/// one label line per letter.
std::string export_dot(const MealyAutomaton& a);

/// One line per transition: `state TAB inputs TAB outputs TAB next`, `-` for
/// an empty set.
std::string export_listing(const MealyAutomaton& a);

}  // namespace scc::fsm

#endif  // SCC_FSM_EXPORT_HPP_
