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

#ifndef SCC_CONTROLLER_SYSTEM_HPP_
#define SCC_CONTROLLER_SYSTEM_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "scc/controller/config.hpp"
#include "scc/kernel/program.hpp"

namespace scc::controller {

namespace sig {
inline constexpr const char* kDistance = "distance";
inline constexpr const char* kSpeed = "speed";
inline constexpr const char* kSampleFreq = "SAMPLE_FREQ";
inline constexpr const char* kRunning = "RUNNING";
inline constexpr const char* kStopVehicle = "STOP_VEHICLE";
inline constexpr const char* kClimate = "climate";
inline constexpr const char* kInputDistance = "InputDistance";
inline constexpr const char* kInputSpeed = "InputSpeed";
inline constexpr const char* kPreDefinedDistance = "PreDefinedDistance";
inline constexpr const char* kPreDefinedSpeed = "PreDefinedSpeed";
inline constexpr const char* kDistanceSignal = "DistanceSignal";
inline constexpr const char* kSpeedSignal = "SpeedSignal";
inline constexpr const char* kAlert = "Alert";
inline constexpr const char* kAlertHigh = "Alert(1)";
inline constexpr const char* kAlertLow = "Alert(0)";
inline constexpr const char* kLowAlert = "LowAlert";
inline constexpr const char* kCruiseControlAlert = "CruiseControlAlert";
inline constexpr const char* kLowNotification = "LowNotification";
inline constexpr const char* kCruiseControlMode = "CruiseControlMode";
inline constexpr const char* kControlEngine = "ControlEngine";
inline constexpr const char* kControlBrake = "ControlBrake";
inline constexpr const char* kNotifyDriver = "NotifyDriver";
}  // namespace sig

/// Deliberate defects used to show that the property suite can fail.
enum class Mutation { none, drop_notify, drop_cruise, invert_critical };

const char* to_string(Mutation m);
std::optional<Mutation> parse_mutation(std::string_view s);
const std::vector<Mutation>& all_mutations();

// Module programs. Distances travel in centimeters on every signal.

/// Threshold resolution, re-run every instant. Driver values from the config
/// are the initial driver input; InputDistance (cm) / InputSpeed replace them.
kernel::Program set_predefined_values(const ThresholdConfig& config);

/// Pure sensor front end: distance and speed are presence-only.
kernel::Program road_data();

/// Sensor front end forwarding the distance (cm) and speed values.
kernel::Program road_data_valued();

kernel::Program driver_alarm(const Criticals& criticals, Mutation m = Mutation::none);

/// Maps Alert(1) to CruiseControlAlert and Alert(0) to LowAlert.
kernel::Program alert_dispatch();

/// alert_dispatch over the pure Alert(1) / Alert(0) signals.
kernel::Program alert_dispatch_pure();

kernel::Program host_vehicle(Mutation m = Mutation::none);
kernel::Program cruise_control(Mutation m = Mutation::none);

/// The wired controller. STOP_VEHICLE preempts every module in the instant it
/// occurs. Throws ConfigValidationError on an invalid config.
kernel::ProgramPtr build_system(const ThresholdConfig& config, Mutation m = Mutation::none);

}  // namespace scc::controller

#endif  // SCC_CONTROLLER_SYSTEM_HPP_
