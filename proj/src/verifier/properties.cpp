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

#include "scc/verifier/properties.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "scc/verifier/modules.hpp"

namespace scc::verifier {

namespace sig = controller::sig;

ModuleUnderTest analyse(kernel::ProgramPtr program) {
  auto a = fsm::minimize(fsm::extract_automaton(program));
  return {std::move(program), std::move(a)};
}

SystemModules system_modules(const controller::ThresholdConfig& config, controller::Mutation mutation) {
  return {analyse(pure_module(ModuleId::road_data, config, mutation)),
          analyse(pure_module(ModuleId::host_vehicle, config, mutation)),
          analyse(pure_module(ModuleId::cruise_control, config, mutation))};
}

namespace {

using Expectation = std::vector<std::pair<std::string, EmissionStatus>>;

// The invariant equivalent to a set of always/never expectations.
FormulaPtr formula_for(const Expectation& expected) {
  std::vector<FormulaPtr> parts;
  for (const auto& [signal, status] : expected) {
    parts.push_back(status == EmissionStatus::always_emitted ? emitted(signal) : f_not(emitted(signal)));
  }
  return f_and(std::move(parts));
}

PropertyResult run(std::string id, std::string description, const ModuleUnderTest& m, InputConstraint c,
                   Expectation expected) {
  PropertyResult r;
  r.id = std::move(id);
  r.module = m.automaton.name;
  r.description = std::move(description);
  r.constraint = std::move(c);
  r.expected = std::move(expected);
  r.inputs = m.automaton.inputs;
  r.outputs = m.automaton.outputs;
  r.statuses = check_output_status(m.automaton, r.constraint);
  r.formula = formula_for(r.expected);
  auto inv = check_invariant(m.automaton, r.constraint, r.formula);
  r.counterexample = inv.counterexample;
  r.holds = inv.holds;
  for (const auto& [signal, status] : r.expected) {
    if (status_of(r.statuses, signal) != status) r.holds = false;
  }
  return r;
}

}  // namespace

std::vector<PropertyResult> verify_properties(const SystemModules& modules) {
  using EM = EmissionStatus;
  std::vector<PropertyResult> out;

  auto p1 = run("p1", "RUNNING => eventually ValuesBroadcasted", modules.road_data,
                InputConstraint{}
                    .set(sig::kRunning, InputMode::always_present)
                    .set(sig::kSampleFreq, InputMode::always_present)
                    .set(sig::kDistance, InputMode::always_present)
                    .set(sig::kSpeed, InputMode::always_present)
                    .set(sig::kStopVehicle, InputMode::always_absent),
                {{sig::kDistanceSignal, EM::always_emitted}, {sig::kSpeedSignal, EM::always_emitted}});
  p1.note =
      "with RUNNING and SAMPLE_FREQ present in every instant the eventuality reduces to emission in every "
      "instant, checked as ALWAYS_EMITTED";
  out.push_back(std::move(p1));

  auto p2 = run("p2", "STOP_VEHICLE => always not EmitSignal", modules.road_data,
                InputConstraint{}
                    .set(sig::kStopVehicle, InputMode::always_present)
                    .set(sig::kRunning, InputMode::always_absent),
                {{sig::kDistanceSignal, EM::never_emitted}, {sig::kSpeedSignal, EM::never_emitted}});
  p2.witness = reach_silent_sink(modules.road_data.automaton, p2.constraint);
  if (p2.witness) {
    p2.note = "halts: a silent sink is reached after " + std::to_string(p2.witness->inputs.size()) + " instant(s)";
  } else {
    p2.holds = false;
    p2.note = "no silent sink is reachable";
  }
  out.push_back(std::move(p2));

  auto p3 = run("p3", "CruiseControlAlert => always CruiseControlMode", modules.host_vehicle,
                InputConstraint{}.set(sig::kCruiseControlAlert, InputMode::always_present),
                {{sig::kCruiseControlMode, EM::always_emitted}, {sig::kLowNotification, EM::never_emitted}});
  out.push_back(std::move(p3));

  auto p4 = run("p4", "CruiseControlMode => control of engine, brake and driver notification",
                modules.cruise_control,
                InputConstraint{}
                    .set(sig::kSampleFreq, InputMode::always_present)
                    .set(sig::kCruiseControlMode, InputMode::always_present),
                {{sig::kControlEngine, EM::always_emitted},
                 {sig::kControlBrake, EM::always_emitted},
                 {sig::kNotifyDriver, EM::always_emitted}});
  out.push_back(std::move(p4));
  return out;
}

bool replays_violation(const ModuleUnderTest& m, const Trace& trace, const FormulaPtr& f) {
  if (trace.inputs.empty()) return false;
  std::vector<kernel::SignalSet> inputs;
  for (Letter l : trace.inputs) inputs.push_back(fsm::to_signals(m.automaton.inputs, l));
  auto result = kernel::run_trace(m.program, inputs);
  std::vector<Letter> outs;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    outs.push_back(i < result.outputs.size() ? fsm::to_letter(m.automaton.outputs, result.outputs[i]) : 0);
  }
  if (outs != trace.outputs) return false;
  return !evaluate(f, m.automaton, trace.inputs.back(), outs.back());
}

std::string render_trace(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
                         const Trace& trace, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < trace.inputs.size(); ++i) {
    std::string in = fsm::letter_text(inputs, trace.inputs[i], "?");
    std::string out = fsm::letter_text(outputs, trace.outputs[i], "!");
    os << indent << i << ": " << (in.empty() ? "-" : in) << " / " << (out.empty() ? "-" : out) << '\n';
  }
  return os.str();
}

std::string render_text(const std::vector<PropertyResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.id << ' ' << (r.holds ? "PASS" : "FAIL") << ' ' << r.module << ": " << r.description << '\n';
    os << "  constraint: " << r.constraint.describe() << '\n';
    for (const auto& s : r.statuses) {
      os << "  " << s.signal << ' ' << to_string(s.status);
      for (const auto& [signal, expected] : r.expected) {
        if (signal == s.signal) os << " (expected " << to_string(expected) << ')';
      }
      os << '\n';
    }
    os << "  invariant: " << render(r.formula) << '\n';
    if (!r.note.empty()) os << "  note: " << r.note << '\n';
    if (r.counterexample) {
      os << "  counterexample:\n" << render_trace(r.inputs, r.outputs, *r.counterexample, "    ");
    }
  }
  return os.str();
}

namespace {

nlohmann::ordered_json trace_json(const PropertyResult& r, const Trace& t) {
  auto names = [](const std::vector<std::string>& all, Letter l) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (l & (Letter{1} << i)) arr.push_back(all[i]);
    }
    return arr;
  };
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.inputs.size(); ++i) {
    steps.push_back({{"tick", i}, {"inputs", names(r.inputs, t.inputs[i])}, {"outputs", names(r.outputs, t.outputs[i])}});
  }
  return steps;
}

}  // namespace

std::string render_json(const std::vector<PropertyResult>& results) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json constraint = nlohmann::ordered_json::object();
    for (const auto& [signal, mode] : r.constraint.modes) constraint[signal] = to_string(mode);
    nlohmann::ordered_json statuses = nlohmann::ordered_json::object();
    for (const auto& s : r.statuses) statuses[s.signal] = to_string(s.status);
    nlohmann::ordered_json rec = {
        {"id", r.id},
        {"status", r.holds ? "PASS" : "FAIL"},
        {"module", r.module},
        {"description", r.description},
        {"constraint", constraint},
        {"statuses", statuses},
        {"invariant", render(r.formula)},
        {"note", r.note},
    };
    rec["counterexample"] = r.counterexample ? trace_json(r, *r.counterexample) : nlohmann::ordered_json(nullptr);
    rec["witness"] = r.witness ? trace_json(r, *r.witness) : nlohmann::ordered_json(nullptr);
    doc.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

}  // namespace scc::verifier
