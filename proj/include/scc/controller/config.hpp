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

#ifndef SCC_CONTROLLER_CONFIG_HPP_
#define SCC_CONTROLLER_CONFIG_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scc::controller {

/// Alert thresholds ("predefined parameters").
struct Thresholds {
  int distance_m = 0;
  int speed_kmh = 0;

  bool operator==(const Thresholds&) const = default;
};

/// Inner thresholds that escalate a low alert to a cruise-control takeover.
struct Criticals {
  int distance_m = 4;
  int speed_kmh = 10;

  bool operator==(const Criticals&) const = default;
};

enum class Climate { Normal, Rain, Mist, Unknown };

const char* to_string(Climate c);
std::optional<Climate> parse_climate(std::string_view s);

/// Integer code carried by the `climate` input signal.
int climate_code(Climate c);

/// Driver customisation; each component is optional on its own.
struct DriverInput {
  std::optional<int> distance_m;
  std::optional<int> speed_kmh;

  bool operator==(const DriverInput&) const = default;
};

struct ThresholdConfig {
  Thresholds manufacturer{12, 20};
  std::map<Climate, Thresholds> climate_table{
      {Climate::Normal, {5, 20}},
      {Climate::Rain, {10, 18}},
      {Climate::Mist, {8, 17}},
  };
  DriverInput driver;
  Criticals criticals;

  bool operator==(const ThresholdConfig&) const = default;
};

class ConfigValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws ConfigValidationError when a value is non-positive, the climate
/// table is incomplete, or a base threshold lies below its critical value.
void validate_config(const ThresholdConfig& config);

/// Climate base (manufacturer values when the climate is unknown), raised
/// componentwise to the driver's values when given.
Thresholds resolve_thresholds(const ThresholdConfig& config, Climate climate);

}  // namespace scc::controller

#endif  // SCC_CONTROLLER_CONFIG_HPP_
