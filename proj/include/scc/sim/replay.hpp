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

#ifndef SCC_SIM_REPLAY_HPP_
#define SCC_SIM_REPLAY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "scc/controller/system.hpp"
#include "scc/controller/threat.hpp"
#include "scc/kernel/engine.hpp"
#include "scc/sim/scenario.hpp"

namespace scc::sim {

enum class Mode { normal, cruise };

const char* to_string(Mode m);

struct TickReport {
  std::size_t tick = 0;
  std::optional<SensorReading> reading;  // after gating
  controller::ThreatLevel threat = controller::ThreatLevel::none;
  std::optional<int> alert_value;
  std::vector<std::string> emitted;  // output signals, sorted
  Mode mode = Mode::normal;
  std::optional<controller::Thresholds> thresholds;  // effective this tick, unset once halted
};

/// Kernel inputs for one scenario row.
kernel::SignalSet tick_inputs(const ScenarioTick& t);

/// Replays the scenario through build_system(config, mutation), one kernel
/// instant per row. Kernel errors are rethrown with the scenario tick.
std::vector<TickReport> run_scenario(const controller::ThresholdConfig& config, const std::vector<ScenarioTick>& ticks,
                                     controller::Mutation mutation = controller::Mutation::none);

enum class ReportFormat { text, machine };

/// text: a header line, then one `key=value` line per tick.
/// machine: one JSON object per line.
std::string render_report(const std::vector<TickReport>& reports, ReportFormat format);

}  // namespace scc::sim

#endif  // SCC_SIM_REPLAY_HPP_
