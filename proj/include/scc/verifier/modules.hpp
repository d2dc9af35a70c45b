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

#ifndef SCC_VERIFIER_MODULES_HPP_
#define SCC_VERIFIER_MODULES_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "scc/controller/system.hpp"
#include "scc/kernel/program.hpp"

namespace scc::verifier {

/// Controller modules at the pure-signal level used for automaton analysis.
enum class ModuleId { road_data, host_vehicle, cruise_control, driver_alarm, full };

const char* to_string(ModuleId m);
std::optional<ModuleId> parse_module(std::string_view s);
const std::vector<ModuleId>& all_modules();

/// driver_alarm is abstracted over its value comparisons. full is ROAD_DATA,
/// the abstracted DRIVER_ALARM, alert dispatch, HOST_VEHICLE and
/// CRUISE_CONTROL in parallel, preempted by STOP_VEHICLE; threshold
/// resolution has no pure form and is left out.
kernel::ProgramPtr pure_module(ModuleId m, const controller::ThresholdConfig& config = {},
                               controller::Mutation mutation = controller::Mutation::none);

}  // namespace scc::verifier

#endif  // SCC_VERIFIER_MODULES_HPP_
