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

#include <nlohmann/json.hpp>
#include <random>

#include "doctest.h"
#include "random_programs.hpp"
#include "scc/verifier/modules.hpp"
#include "scc/verifier/properties.hpp"

using namespace scc::verifier;
namespace fsm = scc::fsm;
namespace sig = scc::controller::sig;
using scc::controller::Mutation;
using EM = EmissionStatus;

namespace {

MealyAutomaton automaton(ModuleId m, Mutation mut = Mutation::none) {
  return fsm::minimize(fsm::extract_automaton(pure_module(m, {}, mut)));
}

InputConstraint random_constraint(std::mt19937& rng, const MealyAutomaton& a, int min_fixed) {
  InputConstraint c;
  std::vector<std::string> names = a.inputs;
  std::shuffle(names.begin(), names.end(), rng);
  std::uniform_int_distribution<int> mode(0, 2);
  for (std::size_t i = 0; i < names.size(); ++i) {
    int m = static_cast<int>(i) < min_fixed ? 1 + mode(rng) % 2 : mode(rng);
    c.set(names[i], static_cast<InputMode>(m));
  }
  return c;
}

FormulaPtr random_formula(std::mt19937& rng, const MealyAutomaton& a, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 5);
  auto any = [&](const std::vector<std::string>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  switch (pick(rng)) {
    case 0: return a.outputs.empty() ? f_true() : emitted(any(a.outputs));
    case 1: return a.inputs.empty() ? f_false() : input_present(any(a.inputs));
    case 2: return a.outputs.empty() ? f_false() : f_not(emitted(any(a.outputs)));
    case 3: return f_and({random_formula(rng, a, depth - 1), random_formula(rng, a, depth - 1)});
    case 4: return f_or({random_formula(rng, a, depth - 1), random_formula(rng, a, depth - 1)});
    default: return implies(random_formula(rng, a, depth - 1), random_formula(rng, a, depth - 1));
  }
}

std::optional<MealyAutomaton> random_automaton(std::mt19937& rng) {
  try {
    auto a = fsm::extract_automaton(scc::testing::random_program(rng, 5));
    if (a.state_count() > 64) return std::nullopt;
    return a;
  } catch (const scc::kernel::CausalityError&) {
    return std::nullopt;
  }
}

// Walks every constrained word up to `depth`, recording which outputs were
// seen at least once and which were seen at every step.
void enumerate(const MealyAutomaton& a, const std::vector<Letter>& letters, StateId s, int depth, Letter& any,
               Letter& all) {
  if (depth == 0) return;
  for (Letter l : letters) {
    const auto& t = a.step(s, l);
    any |= t.outputs;
    all &= t.outputs;
    enumerate(a, letters, t.next, depth - 1, any, all);
  }
}

int max_depth(const MealyAutomaton& a, const std::vector<Letter>& letters) {
  std::vector<int> d(a.state_count(), -1);
  std::vector<StateId> q{a.initial};
  d[a.initial] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (Letter l : letters) {
      StateId n = a.step(q[i], l).next;
      if (d[n] < 0) {
        d[n] = d[q[i]] + 1;
        q.push_back(n);
      }
    }
  }
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

TEST_CASE("ROAD_DATA statuses while running") {
  auto a = automaton(ModuleId::road_data);
  InputConstraint c;
  c.set(sig::kRunning, InputMode::always_present)
      .set(sig::kSampleFreq, InputMode::always_present)
      .set(sig::kDistance, InputMode::always_present)
      .set(sig::kSpeed, InputMode::always_present)
      .set(sig::kStopVehicle, InputMode::always_absent);
  auto st = check_output_status(a, c);
  CHECK(status_of(st, sig::kDistanceSignal) == EM::always_emitted);
  CHECK(status_of(st, sig::kSpeedSignal) == EM::always_emitted);
}

TEST_CASE("ROAD_DATA statuses when stopped") {
  auto a = automaton(ModuleId::road_data);
  InputConstraint c;
  c.set(sig::kStopVehicle, InputMode::always_present).set(sig::kRunning, InputMode::always_absent);
  auto st = check_output_status(a, c);
  CHECK(status_of(st, sig::kDistanceSignal) == EM::never_emitted);
  CHECK(status_of(st, sig::kSpeedSignal) == EM::never_emitted);
  auto sink = reach_silent_sink(a, c);
  REQUIRE(sink.has_value());
  // The abort is not immediate: STOP_VEHICLE at boot cannot preempt.
  CHECK(sink->inputs.size() == 2);
}

TEST_CASE("HOST_VEHICLE statuses under CruiseControlAlert") {
  auto a = automaton(ModuleId::host_vehicle);
  auto st = check_output_status(a, InputConstraint{}.set(sig::kCruiseControlAlert, InputMode::always_present));
  CHECK(status_of(st, sig::kCruiseControlMode) == EM::always_emitted);
  CHECK(status_of(st, sig::kLowNotification) == EM::never_emitted);
  auto free = check_output_status(a, {});
  CHECK(status_of(free, sig::kLowNotification) == EM::possibly_emitted);
}

TEST_CASE("CRUISE_CONTROL actuation invariant") {
  auto a = automaton(ModuleId::cruise_control);
  InputConstraint c;
  c.set(sig::kSampleFreq, InputMode::always_present).set(sig::kCruiseControlMode, InputMode::always_present);
  auto r = check_invariant(a, c, f_and({emitted(sig::kControlEngine), emitted(sig::kControlBrake),
                                        emitted(sig::kNotifyDriver)}));
  CHECK(r.holds);
  CHECK_FALSE(r.counterexample.has_value());
}

TEST_CASE("false fails in one step") {
  auto a = automaton(ModuleId::road_data);
  auto r = check_invariant(a, {}, f_false());
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->inputs.size() == 1);
}

TEST_CASE("constraint and formula validation") {
  auto a = automaton(ModuleId::road_data);
  CHECK_THROWS_AS(allowed_letters(a, InputConstraint{}.set("WHEEL", InputMode::free)), std::invalid_argument);
  CHECK_THROWS_AS(check_invariant(a, {}, emitted("Alert")), std::invalid_argument);
  CHECK_THROWS_AS(check_invariant(a, {}, input_present(sig::kDistanceSignal)), std::invalid_argument);
  CHECK(parse_input_mode("present") == InputMode::always_present);
  CHECK_FALSE(parse_input_mode("sometimes").has_value());
}

TEST_CASE("faithful build satisfies p1 to p4") {
  auto results = verify_properties(system_modules());
  REQUIRE(results.size() == 4);
  for (const auto& r : results) {
    INFO(r.id);
    CHECK(r.holds);
  }
  CHECK(results[1].witness.has_value());
  auto text = render_text(results);
  for (auto id : {"p1 PASS", "p2 PASS", "p3 PASS", "p4 PASS"}) CHECK(text.find(id) != std::string::npos);
  auto doc = nlohmann::json::parse(render_json(results));
  CHECK(doc.size() == 4);
  CHECK(doc[3]["statuses"]["NotifyDriver"] == "ALWAYS_EMITTED");
}

TEST_CASE("degenerate criticals leave the suite unaffected") {
  scc::controller::ThresholdConfig config;
  config.criticals = {0, 0};
  for (const auto& r : verify_properties(system_modules(config))) CHECK(r.holds);
}

TEST_CASE("mutations fail the suite with replayable counterexamples") {
  struct Case {
    Mutation m;
    std::size_t property;
  };
  for (auto [m, idx] : {Case{Mutation::drop_notify, 3}, Case{Mutation::drop_cruise, 2}}) {
    auto mods = system_modules({}, m);
    auto results = verify_properties(mods);
    const auto& r = results[idx];
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample.has_value());
    const auto& module = idx == 3 ? mods.cruise_control : mods.host_vehicle;
    CHECK(replays_violation(module, *r.counterexample, r.formula));
    CHECK(render_text(results).find(r.id + " FAIL") != std::string::npos);
  }
}

TEST_CASE("status agrees with exhaustive word enumeration") {
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 60) {
    auto a = random_automaton(rng);
    if (!a) continue;
    auto c = random_constraint(rng, *a, 1);
    auto letters = allowed_letters(*a, c);
    if (max_depth(*a, letters) > 7) continue;
    Letter any = 0, all = ~Letter{0};
    enumerate(*a, letters, a->initial, 8, any, all);
    for (const auto& s : check_output_status(*a, c)) {
      Letter bit = Letter{1} << (std::find(a->outputs.begin(), a->outputs.end(), s.signal) - a->outputs.begin());
      CHECK((s.status == EM::never_emitted) == !(any & bit));
      CHECK((s.status == EM::always_emitted) == bool(all & bit));
    }
    ++checked;
  }
}

TEST_CASE("counterexamples are shortest and replay through the kernel") {
  std::mt19937 rng(19);
  int failing = 0;
  for (int n = 0; n < 300; ++n) {
    auto p = scc::testing::random_program(rng, 4);
    ModuleUnderTest m;
    try {
      m = {p, fsm::extract_automaton(p)};
    } catch (const scc::kernel::CausalityError&) {
      continue;
    }
    auto c = random_constraint(rng, m.automaton, 1);
    auto f = random_formula(rng, m.automaton, 2);
    auto r = check_invariant(m.automaton, c, f);
    if (r.holds) continue;
    ++failing;
    REQUIRE(r.counterexample.has_value());
    CHECK(replays_violation(m, *r.counterexample, f));
    // No shorter constrained word violates f.
    auto letters = allowed_letters(m.automaton, c);
    std::size_t k = r.counterexample->inputs.size();
    std::function<bool(StateId, std::size_t)> clean = [&](StateId s, std::size_t left) {
      if (left == 0) return true;
      for (Letter l : letters) {
        const auto& t = m.automaton.step(s, l);
        if (!evaluate(f, m.automaton, l, t.outputs) || !clean(t.next, left - 1)) return false;
      }
      return true;
    };
    CHECK(clean(m.automaton.initial, k - 1));
  }
  CHECK(failing > 50);
}

TEST_CASE("tightening a constraint shrinks the reachable transitions") {
  std::mt19937 rng(29);
  int checked = 0;
  while (checked < 100) {
    auto a = random_automaton(rng);
    if (!a) continue;
    InputConstraint loose = random_constraint(rng, *a, 0);
    InputConstraint tight = loose;
    for (auto& [name, mode] : tight.modes) {
      if (mode == InputMode::free) {
        mode = rng() % 2 ? InputMode::always_present : InputMode::always_absent;
        break;
      }
    }
    auto small = reachable_transitions(*a, tight);
    auto big = reachable_transitions(*a, loose);
    CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
    ++checked;
  }
}
