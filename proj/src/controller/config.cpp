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

#include "scc/controller/config.hpp"

#include <algorithm>

namespace scc::controller {

const char* to_string(Climate c) {
  switch (c) {
    case Climate::Normal: return "normal";
    case Climate::Rain: return "rain";
    case Climate::Mist: return "mist";
    case Climate::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Climate> parse_climate(std::string_view s) {
  if (s == "normal") return Climate::Normal;
  if (s == "rain") return Climate::Rain;
  if (s == "mist") return Climate::Mist;
  if (s == "unknown") return Climate::Unknown;
  return std::nullopt;
}

int climate_code(Climate c) { return static_cast<int>(c); }

namespace {

void check_positive(int v, const std::string& what) {
  if (v <= 0) throw ConfigValidationError(what + " must be positive, got " + std::to_string(v));
}

void check_above_criticals(const Thresholds& t, const Criticals& c, const std::string& what) {
  if (t.distance_m < c.distance_m) {
    throw ConfigValidationError(what + " distance " + std::to_string(t.distance_m) +
                                " m is below the critical distance " + std::to_string(c.distance_m) + " m");
  }
  if (t.speed_kmh < c.speed_kmh) {
    throw ConfigValidationError(what + " speed " + std::to_string(t.speed_kmh) +
                                " km/h is below the critical speed " + std::to_string(c.speed_kmh) + " km/h");
  }
}

}  // namespace

void validate_config(const ThresholdConfig& config) {
  check_positive(config.criticals.distance_m, "critical distance");
  check_positive(config.criticals.speed_kmh, "critical speed");
  check_positive(config.manufacturer.distance_m, "manufacturer distance");
  check_positive(config.manufacturer.speed_kmh, "manufacturer speed");
  check_above_criticals(config.manufacturer, config.criticals, "manufacturer");
  for (Climate c : {Climate::Normal, Climate::Rain, Climate::Mist}) {
    auto it = config.climate_table.find(c);
    if (it == config.climate_table.end()) {
      throw ConfigValidationError(std::string("climate table has no entry for ") + to_string(c));
    }
    std::string what = std::string("climate ") + to_string(c);
    check_positive(it->second.distance_m, what + " distance");
    check_positive(it->second.speed_kmh, what + " speed");
    check_above_criticals(it->second, config.criticals, what);
  }
  if (config.driver.distance_m) check_positive(*config.driver.distance_m, "driver distance");
  if (config.driver.speed_kmh) check_positive(*config.driver.speed_kmh, "driver speed");
}

Thresholds resolve_thresholds(const ThresholdConfig& config, Climate climate) {
  Thresholds t = config.manufacturer;
  if (climate != Climate::Unknown) {
    auto it = config.climate_table.find(climate);
    if (it != config.climate_table.end()) t = it->second;
  }
  if (config.driver.distance_m) t.distance_m = std::max(t.distance_m, *config.driver.distance_m);
  if (config.driver.speed_kmh) t.speed_kmh = std::max(t.speed_kmh, *config.driver.speed_kmh);
  return t;
}

}  // namespace scc::controller
