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

#include <random>

#include "doctest.h"
#include "scc/controller/config_io.hpp"
#include "scc/controller/system.hpp"
#include "scc/controller/threat.hpp"
#include "scc/kernel/engine.hpp"
#include "scc/kernel/validate.hpp"

using namespace scc::controller;
using scc::kernel::SignalSet;

namespace {

SignalSet sensor_tick(double distance_m, int speed_kmh, Climate climate = Climate::Unknown) {
  SignalSet in = {{sig::kRunning, std::nullopt},
                  {sig::kSampleFreq, std::nullopt},
                  {sig::kDistance, to_centimeters(distance_m)},
                  {sig::kSpeed, speed_kmh}};
  if (climate != Climate::Unknown) in[sig::kClimate] = climate_code(climate);
  return in;
}

ThreatLevel threat_of(const SignalSet& out) {
  auto it = out.find(sig::kAlert);
  if (it == out.end()) return ThreatLevel::none;
  return *it->second == 1 ? ThreatLevel::high : ThreatLevel::low;
}

bool has(const SignalSet& s, const char* name) { return s.count(name) != 0; }

SignalSet first_tick(const ThresholdConfig& config, const SignalSet& in, Mutation m = Mutation::none) {
  return scc::kernel::run_tick(scc::kernel::ExecState::initial(build_system(config, m)), in).outputs;
}

}  // namespace

TEST_CASE("resolve_thresholds picks the climate base and raises it to driver values") {
  ThresholdConfig config;
  CHECK(resolve_thresholds(config, Climate::Rain) == Thresholds{10, 18});
  CHECK(resolve_thresholds(config, Climate::Unknown) == Thresholds{12, 20});
  config.driver = {9, 15};
  CHECK(resolve_thresholds(config, Climate::Normal) == Thresholds{9, 20});
}

TEST_CASE("classify_threat examples agree with the oracle") {
  const Thresholds t{12, 20};
  const Criticals c{4, 10};
  struct Case {
    SensorReading r;
    ThreatLevel expected;
  };
  for (const auto& [r, expected] : {Case{{3, 30, 0}, ThreatLevel::high}, Case{{11, 30, 0}, ThreatLevel::low},
                                    Case{{13, 25, 0}, ThreatLevel::none}}) {
    CHECK(classify_threat(r, t, c) == expected);
    CHECK(classify_threat_oracle(r, t, c) == expected);
  }
}

TEST_CASE("classify_threat ignores azimuth") {
  const Thresholds t{12, 20};
  for (double az : {-40.0, 0.0, 3.5, 90.0}) {
    CHECK(classify_threat({11, 30, az}, t, {}) == ThreatLevel::low);
  }
}

TEST_CASE("classify_threat matches the oracle on random half-meter readings") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> half_m(0, 80), speed(-50, 60), thr(4, 20), crit(1, 4);
  for (int i = 0; i < 20000; ++i) {
    Criticals c{crit(rng), crit(rng) * 3};
    Thresholds t{std::max(thr(rng), c.distance_m), std::max(thr(rng) + 5, c.speed_kmh)};
    SensorReading r{half_m(rng) / 2.0, speed(rng), 0};
    REQUIRE(classify_threat(r, t, c) == classify_threat_oracle(r, t, c));
  }
}

TEST_CASE("relaxing a reading never raises the threat level") {
  const Criticals c{4, 10};
  for (const Thresholds& t : {Thresholds{12, 20}, Thresholds{5, 20}, Thresholds{14, 25}}) {
    for (int d = 0; d <= 30; ++d) {
      for (int v = 0; v <= 40; ++v) {
        auto level = classify_threat({double(d), v, 0}, t, c);
        CHECK(classify_threat({double(d + 1), v, 0}, t, c) <= level);
        CHECK(classify_threat({double(d), v + 1, 0}, t, c) <= level);
        if (level == ThreatLevel::high) {
          CHECK_FALSE((d > t.distance_m && v > t.speed_kmh));
        }
      }
    }
  }
}

TEST_CASE("resolve_thresholds is monotone in driver input") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> val(1, 40);
  for (int i = 0; i < 2000; ++i) {
    ThresholdConfig config;
    config.driver = {val(rng), val(rng)};
    for (Climate climate : {Climate::Normal, Climate::Rain, Climate::Mist, Climate::Unknown}) {
      auto before = resolve_thresholds(config, climate);
      ThresholdConfig raised = config;
      *raised.driver.distance_m += val(rng);
      *raised.driver.speed_kmh += val(rng);
      auto after = resolve_thresholds(raised, climate);
      CHECK(after.distance_m >= before.distance_m);
      CHECK(after.speed_kmh >= before.speed_kmh);
    }
  }
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate_config(ThresholdConfig{}));
  ThresholdConfig bad;
  bad.climate_table[Climate::Mist] = {3, 17};
  CHECK_THROWS_AS(validate_config(bad), ConfigValidationError);
  bad = {};
  bad.criticals = {0, 0};
  CHECK_THROWS_AS(validate_config(bad), ConfigValidationError);
  bad = {};
  bad.manufacturer = {12, 9};
  CHECK_THROWS_AS(build_system(bad), ConfigValidationError);
  bad = {};
  bad.climate_table.erase(Climate::Rain);
  CHECK_THROWS_AS(validate_config(bad), ConfigValidationError);
}

TEST_CASE("the wired system passes static checks") {
  for (Mutation m : {Mutation::none, Mutation::drop_notify, Mutation::drop_cruise, Mutation::invert_critical}) {
    auto p = build_system({}, m);
    CHECK(scc::kernel::validate_program(*p).empty());
    auto inputs = p->signal_names(scc::kernel::Direction::Input);
    CHECK(inputs.size() == 8);
    auto outputs = p->signal_names(scc::kernel::Direction::Output);
    CHECK(outputs.size() == 6);
  }
}

TEST_CASE("system examples") {
  ThresholdConfig config;
  SUBCASE("distance 3 takes over") {
    auto out = first_tick(config, sensor_tick(3, 30));
    CHECK(out.at(sig::kAlert) == 1);
    for (auto s : {sig::kCruiseControlMode, sig::kControlEngine, sig::kControlBrake, sig::kNotifyDriver}) {
      CHECK(has(out, s));
    }
    CHECK_FALSE(has(out, sig::kLowNotification));
  }
  SUBCASE("distance 11 notifies") {
    auto out = first_tick(config, sensor_tick(11, 30));
    CHECK(out.at(sig::kAlert) == 0);
    CHECK(has(out, sig::kLowNotification));
    CHECK_FALSE(has(out, sig::kCruiseControlMode));
    CHECK_FALSE(has(out, sig::kControlEngine));
  }
  SUBCASE("distance 13 speed 25 is silent") {
    CHECK(first_tick(config, sensor_tick(13, 25)).empty());
  }
  SUBCASE("normal climate lowers the distance threshold") {
    CHECK(threat_of(first_tick(config, sensor_tick(11, 30, Climate::Normal))) == ThreatLevel::none);
    CHECK(threat_of(first_tick(config, sensor_tick(5, 30, Climate::Normal))) == ThreatLevel::low);
  }
}

TEST_CASE("driver input signals raise thresholds from the instant they arrive") {
  auto state = scc::kernel::ExecState::initial(build_system({}));
  auto in = sensor_tick(13, 30);
  auto r = scc::kernel::run_tick(state, in);
  CHECK(threat_of(r.outputs) == ThreatLevel::none);
  in[sig::kInputDistance] = 1400;
  r = scc::kernel::run_tick(r.next, in);
  CHECK(threat_of(r.outputs) == ThreatLevel::low);
  in.erase(sig::kInputDistance);
  r = scc::kernel::run_tick(r.next, in);
  CHECK(threat_of(r.outputs) == ThreatLevel::low);
}

TEST_CASE("random multi-tick runs: oracle agreement, alert encoding, cruise exclusivity") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> half_m(0, 70), speed(-5, 45), climate(0, 4), driver(1, 30);
  std::bernoulli_distribution coin(0.5), rare(0.1);
  for (int run = 0; run < 60; ++run) {
    ThresholdConfig config;
    if (coin(rng)) config.driver.distance_m = driver(rng);
    if (coin(rng)) config.driver.speed_kmh = driver(rng);
    ThresholdConfig current = config;
    auto state = scc::kernel::ExecState::initial(build_system(config));
    for (int tick = 0; tick < 20; ++tick) {
      SensorReading reading{half_m(rng) / 2.0, speed(rng), 0};
      int code = climate(rng);
      Climate c = code < 4 ? static_cast<Climate>(code) : Climate::Unknown;
      SignalSet in = sensor_tick(reading.distance_m, reading.relative_speed_kmh, c);
      if (rare(rng)) {
        int v = driver(rng);
        in[sig::kInputDistance] = 100LL * v;
        current.driver.distance_m = v;
      }
      if (rare(rng)) {
        int v = driver(rng);
        in[sig::kInputSpeed] = v;
        current.driver.speed_kmh = v;
      }
      auto r = scc::kernel::run_tick(state, in);
      state = r.next;
      auto expected = classify_threat_oracle(reading, resolve_thresholds(current, c), config.criticals);
      REQUIRE(threat_of(r.outputs) == expected);
      auto alert = r.outputs.find(sig::kAlert);
      CHECK((alert == r.outputs.end() ? std::nullopt : std::optional<int>(int(*alert->second))) ==
            alert_value(expected));
      CHECK_FALSE((has(r.outputs, sig::kLowNotification) && has(r.outputs, sig::kCruiseControlMode)));
      CHECK(has(r.outputs, sig::kControlEngine) == (expected == ThreatLevel::high));
    }
  }
}

TEST_CASE("STOP_VEHICLE silences the system for good") {
  auto p = build_system({});
  std::vector<SignalSet> trace = {sensor_tick(3, 30), sensor_tick(3, 30)};
  auto stop = sensor_tick(3, 30);
  stop.erase(sig::kRunning);
  stop[sig::kStopVehicle] = std::nullopt;
  trace.push_back(stop);
  trace.push_back(sensor_tick(3, 30));
  auto result = scc::kernel::run_trace(p, trace);
  CHECK(result.outputs[1].count(sig::kCruiseControlMode) == 1);
  CHECK(result.terminated);
  CHECK(result.terminated_at == 2);
  CHECK(result.outputs[2].empty());
}

TEST_CASE("mutations change the wired behaviour") {
  ThresholdConfig config;
  CHECK_FALSE(has(first_tick(config, sensor_tick(3, 30), Mutation::drop_notify), sig::kNotifyDriver));
  auto dropped = first_tick(config, sensor_tick(3, 30), Mutation::drop_cruise);
  CHECK_FALSE(has(dropped, sig::kCruiseControlMode));
  CHECK(threat_of(first_tick(config, sensor_tick(11, 30), Mutation::invert_critical)) == ThreatLevel::high);
  for (Mutation m : all_mutations()) CHECK(parse_mutation(to_string(m)) == m);
  CHECK_FALSE(parse_mutation("drop-everything").has_value());
}

TEST_CASE("config files") {
  SUBCASE("full file") {
    auto c = parse_config(
        "[manufacturer]\ndistance_m = 15\nspeed_kmh = 22\n"
        "[climate_rain]\ndistance_m = 11\nspeed_kmh = 19\n"
        "[driver]\nspeed_kmh = 30\n"
        "[criticals]\ndistance_m = 5\nspeed_kmh = 12\n");
    CHECK(c.manufacturer == Thresholds{15, 22});
    CHECK(c.climate_table.at(Climate::Rain) == Thresholds{11, 19});
    CHECK(c.climate_table.at(Climate::Mist) == Thresholds{8, 17});
    CHECK_FALSE(c.driver.distance_m.has_value());
    CHECK(c.driver.speed_kmh == 30);
    CHECK(c.criticals == Criticals{5, 12});
  }
  SUBCASE("empty file gives defaults") { CHECK(parse_config("") == ThresholdConfig{}); }
  SUBCASE("round trip") {
    ThresholdConfig c;
    c.driver = {9, std::nullopt};
    CHECK(parse_config(format_config(c)) == c);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_config("[manufacturer]\ndistance = 3\n"), ConfigParseError);
    CHECK_THROWS_AS(parse_config("[weather]\ndistance_m = 3\n"), ConfigParseError);
    CHECK_THROWS_AS(parse_config("[manufacturer]\ndistance_m = ten\n"), ConfigParseError);
    CHECK_THROWS_AS(parse_config("[manufacturer\n"), ConfigParseError);
    CHECK_THROWS_AS(parse_config("[climate_mist]\ndistance_m = 2\n"), ConfigValidationError);
    CHECK_THROWS_AS(load_config("/nonexistent/config.ini"), ConfigParseError);
  }
}
