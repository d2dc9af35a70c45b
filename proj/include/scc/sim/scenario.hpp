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

#ifndef SCC_SIM_SCENARIO_HPP_
#define SCC_SIM_SCENARIO_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scc/controller/config.hpp"
#include "scc/controller/threat.hpp"

namespace scc::sim {

using controller::Climate;
using controller::SensorReading;

inline constexpr double kMinRangeM = 3.0;
inline constexpr double kHalfFieldOfViewDeg = 4.5;
inline constexpr int kMaxRelativeSpeedKmh = 160;
inline constexpr double kRangeStepM = 0.5;

/// Radar envelope: targets outside the field of view are dropped, short
/// ranges clamp to the minimum, speed clamps to the sensor span, and distance
/// is quantized to the range step (half up).
std::optional<SensorReading> sensor_gate(const SensorReading& target);

struct ScenarioTick {
  std::size_t tick = 0;
  std::optional<SensorReading> target;
  Climate climate = Climate::Unknown;
  bool running = false;
  bool stop = false;
  bool sample = false;
  std::optional<int> driver_distance;
  std::optional<int> driver_speed;
};

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MalformedRow : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

class NonMonotonicTick : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

class StopWhileRunning : public ScenarioError {
 public:
  using ScenarioError::ScenarioError;
};

inline constexpr const char* kScenarioHeader =
    "tick,distance,speed,azimuth,climate,running,stop,sample,driver_distance,driver_speed";

/// CSV with the kScenarioHeader columns. Empty cells are absent values; the
/// target needs distance, speed and azimuth together. Ticks start at 0 and
/// increase strictly.
std::vector<ScenarioTick> parse_scenario(const std::string& text);
std::vector<ScenarioTick> load_scenario(const std::string& path);

std::string format_scenario(const std::vector<ScenarioTick>& ticks);

}  // namespace scc::sim

#endif  // SCC_SIM_SCENARIO_HPP_
