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

#ifndef SCC_CONTROLLER_THREAT_HPP_
#define SCC_CONTROLLER_THREAT_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "scc/controller/config.hpp"

namespace scc::controller {

enum class ThreatLevel { none, low, high };

const char* to_string(ThreatLevel t);
std::optional<ThreatLevel> parse_threat(std::string_view s);

/// One radar return. Distance is kept at sensor resolution (0.5 m steps
/// after gating), so it is not restricted to whole meters.
struct SensorReading {
  double distance_m = 0.0;
  int relative_speed_kmh = 0;
  double azimuth_deg = 0.0;

  bool operator==(const SensorReading&) const = default;
};

/// Distance as carried on kernel signals.
std::int64_t to_centimeters(double meters);

ThreatLevel classify_threat(const SensorReading& reading, const Thresholds& thresholds,
                            const Criticals& criticals);

/// Same contract as classify_threat, computed independently.
ThreatLevel classify_threat_oracle(const SensorReading& reading, const Thresholds& thresholds,
                                   const Criticals& criticals);

/// Alert value carried for a level: 1 for high, 0 for low, none otherwise.
std::optional<int> alert_value(ThreatLevel t);

}  // namespace scc::controller

#endif  // SCC_CONTROLLER_THREAT_HPP_
