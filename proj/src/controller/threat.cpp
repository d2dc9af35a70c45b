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

#include "scc/controller/threat.hpp"

#include <cmath>

namespace scc::controller {

const char* to_string(ThreatLevel t) {
  switch (t) {
    case ThreatLevel::none: return "none";
    case ThreatLevel::low: return "low";
    case ThreatLevel::high: return "high";
  }
  return "none";
}

std::optional<ThreatLevel> parse_threat(std::string_view s) {
  if (s == "none") return ThreatLevel::none;
  if (s == "low") return ThreatLevel::low;
  if (s == "high") return ThreatLevel::high;
  return std::nullopt;
}

std::int64_t to_centimeters(double meters) { return std::llround(meters * 100.0); }

ThreatLevel classify_threat(const SensorReading& reading, const Thresholds& thresholds,
                            const Criticals& criticals) {
  const double d = reading.distance_m;
  const int v = reading.relative_speed_kmh;
  if (d > thresholds.distance_m && v > thresholds.speed_kmh) return ThreatLevel::none;
  if (d <= criticals.distance_m || v <= criticals.speed_kmh) return ThreatLevel::high;
  return ThreatLevel::low;
}

ThreatLevel classify_threat_oracle(const SensorReading& reading, const Thresholds& thresholds,
                                   const Criticals& criticals) {
  // Integer centimeters, counting how many gates the reading falls inside.
  const std::int64_t d = to_centimeters(reading.distance_m);
  const std::int64_t v = reading.relative_speed_kmh;
  const bool near_gate = !(d > 100LL * thresholds.distance_m) || !(v > thresholds.speed_kmh);
  const bool critical_gate = !(d > 100LL * criticals.distance_m) || !(v > criticals.speed_kmh);
  int score = static_cast<int>(near_gate) + static_cast<int>(near_gate && critical_gate);
  static constexpr ThreatLevel kByScore[] = {ThreatLevel::none, ThreatLevel::low, ThreatLevel::high};
  return kByScore[score];
}

std::optional<int> alert_value(ThreatLevel t) {
  switch (t) {
    case ThreatLevel::high: return 1;
    case ThreatLevel::low: return 0;
    case ThreatLevel::none: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace scc::controller
