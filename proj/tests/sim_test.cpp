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

#include <nlohmann/json.hpp>
#include <random>

#include "automata.hpp"
#include "doctest.h"
#include "scc/sim/replay.hpp"

using namespace scc::sim;
using scc::controller::ThreatLevel;
using scc::controller::ThresholdConfig;

namespace {

const char* kApproach =
    "tick,distance,speed,azimuth,climate,running,stop,sample,driver_distance,driver_speed\n"
    "0,15,30,0,unknown,1,0,1,,\n"
    "1,12,30,0,unknown,1,0,1,,\n"
    "2,10,30,0,unknown,1,0,1,,\n"
    "3,6,30,0,unknown,1,0,1,,\n"
    "4,4,30,0,unknown,1,0,1,,\n"
    "5,3,30,0,unknown,1,0,1,,\n";

std::vector<ThreatLevel> threats(const std::vector<TickReport>& reports) {
  std::vector<ThreatLevel> v;
  for (const auto& r : reports) v.push_back(r.threat);
  return v;
}

std::vector<ScenarioTick> random_scenario(std::mt19937& rng, std::size_t length) {
  std::uniform_real_distribution<double> dist(0.0, 30.0), az(-7.0, 7.0);
  std::uniform_int_distribution<int> speed(-200, 200), climate(0, 3), driver(1, 30), slow(0, 45);
  std::bernoulli_distribution coin(0.5), often(0.8), rare(0.08);
  std::vector<ScenarioTick> ticks;
  bool stopped = false;
  for (std::size_t i = 0; i < length; ++i) {
    ScenarioTick t;
    t.tick = i;
    if (often(rng)) t.target = SensorReading{dist(rng), coin(rng) ? slow(rng) : speed(rng), az(rng)};
    t.climate = static_cast<Climate>(climate(rng));
    stopped = stopped || rare(rng);
    t.stop = stopped && coin(rng);
    t.running = !t.stop && !stopped;
    t.sample = often(rng);
    if (rare(rng)) t.driver_distance = driver(rng);
    if (rare(rng)) t.driver_speed = driver(rng);
    ticks.push_back(t);
  }
  return ticks;
}

}  // namespace

TEST_CASE("sensor gate") {
  CHECK(sensor_gate({7.3, 40, 2}) == SensorReading{7.5, 40, 2});
  CHECK_FALSE(sensor_gate({8, 40, 6}).has_value());
  CHECK(sensor_gate({8, 200, 0}) == SensorReading{8, 160, 0});
  CHECK(sensor_gate({2.1, -300, -4.5}) == SensorReading{3, -160, -4.5});
  CHECK(sensor_gate({7.25, 0, 0})->distance_m == 7.5);
  CHECK(sensor_gate({7.24, 0, 0})->distance_m == 7.0);
}

TEST_CASE("sensor gate is idempotent") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-5.0, 80.0), az(-6.0, 6.0);
  std::uniform_int_distribution<int> speed(-400, 400);
  for (int i = 0; i < 20000; ++i) {
    auto once = sensor_gate({dist(rng), speed(rng), az(rng)});
    if (once) REQUIRE(sensor_gate(*once) == once);
  }
}

TEST_CASE("parse_scenario") {
  SUBCASE("valid rows") {
    auto ticks = parse_scenario(
        "tick,distance,speed,azimuth,climate,running,stop,sample,driver_distance,driver_speed\n"
        "0,15,30,0.5,rain,1,0,1,,\n"
        "1,,,,mist,1,0,0,9,\n"
        "2,7.5,-12,-1,normal,0,1,1,,18\n");
    REQUIRE(ticks.size() == 3);
    CHECK(ticks[0].target == SensorReading{15, 30, 0.5});
    CHECK(ticks[0].climate == Climate::Rain);
    CHECK_FALSE(ticks[1].target.has_value());
    CHECK(ticks[1].driver_distance == 9);
    CHECK_FALSE(ticks[1].sample);
    CHECK(ticks[2].stop);
    CHECK(ticks[2].driver_speed == 18);
  }
  SUBCASE("empty input") {
    CHECK(parse_scenario("").empty());
    CHECK(parse_scenario(std::string(kScenarioHeader) + "\n").empty());
  }
  SUBCASE("stop while running") {
    try {
      parse_scenario(std::string(kScenarioHeader) + "\n0,,,,normal,1,0,1,,\n1,,,,normal,1,1,1,,\n");
      FAIL("expected StopWhileRunning");
    } catch (const StopWhileRunning& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed rows") {
    std::string h = std::string(kScenarioHeader) + "\n";
    CHECK_THROWS_AS(parse_scenario("tick,distance\n"), MalformedRow);
    CHECK_THROWS_AS(parse_scenario(h + "0,1,2\n"), MalformedRow);
    CHECK_THROWS_AS(parse_scenario(h + "0,15,30,,normal,1,0,1,,\n"), MalformedRow);
    CHECK_THROWS_AS(parse_scenario(h + "0,15,30,0,foggy,1,0,1,,\n"), MalformedRow);
    CHECK_THROWS_AS(parse_scenario(h + "0,15,30,0,normal,yes,0,1,,\n"), MalformedRow);
    CHECK_THROWS_AS(parse_scenario(h + "0,x,30,0,normal,1,0,1,,\n"), MalformedRow);
  }
  SUBCASE("tick order") {
    std::string h = std::string(kScenarioHeader) + "\n";
    CHECK_THROWS_AS(parse_scenario(h + "1,,,,normal,1,0,1,,\n"), NonMonotonicTick);
    CHECK_THROWS_AS(parse_scenario(h + "0,,,,normal,1,0,1,,\n0,,,,normal,1,0,1,,\n"), NonMonotonicTick);
  }
  SUBCASE("round trip") {
    std::mt19937 rng(37);
    for (int i = 0; i < 50; ++i) {
      auto s = random_scenario(rng, 12);
      auto again = parse_scenario(format_scenario(s));
      REQUIRE(again.size() == s.size());
      CHECK(format_scenario(again) == format_scenario(s));
    }
  }
}

TEST_CASE("approach scenario") {
  auto ticks = parse_scenario(kApproach);
  auto reports = run_scenario(ThresholdConfig{}, ticks);
  using T = ThreatLevel;
  CHECK(threats(reports) == std::vector<T>{T::none, T::low, T::low, T::low, T::high, T::high});
  CHECK(reports[0].thresholds == scc::controller::Thresholds{12, 20});
  CHECK(reports[4].mode == Mode::cruise);
  CHECK(reports[3].mode == Mode::normal);
  CHECK(render_report(reports, ReportFormat::text) ==
        scc::testing::read_file(SCC_GOLDEN_DIR "/approach_report.txt"));
}

TEST_CASE("approach scenario in normal climate uses the 5 m threshold") {
  auto ticks = parse_scenario(kApproach);
  for (auto& t : ticks) t.climate = Climate::Normal;
  using T = ThreatLevel;
  CHECK(threats(run_scenario(ThresholdConfig{}, ticks)) ==
        std::vector<T>{T::none, T::none, T::none, T::none, T::high, T::high});
}

TEST_CASE("no target means no alerts") {
  std::vector<ScenarioTick> ticks(5);
  for (std::size_t i = 0; i < ticks.size(); ++i) {
    ticks[i].tick = i;
    ticks[i].running = ticks[i].sample = true;
  }
  for (const auto& r : run_scenario(ThresholdConfig{}, ticks)) {
    CHECK(r.threat == ThreatLevel::none);
    CHECK_FALSE(r.alert_value.has_value());
    CHECK(r.emitted.empty());
  }
}

TEST_CASE("random scenarios: halting, oracle agreement, cruise actuation, determinism") {
  std::mt19937 rng(41);
  for (int n = 0; n < 200; ++n) {
    ThresholdConfig config;
    std::vector<ScenarioTick> ticks = random_scenario(rng, 16);
    auto reports = run_scenario(config, ticks);
    REQUIRE(reports.size() == ticks.size());
    CHECK(render_report(reports, ReportFormat::machine) ==
          render_report(run_scenario(config, ticks), ReportFormat::machine));
    bool halted = false;
    ThresholdConfig current = config;
    for (std::size_t i = 0; i < ticks.size(); ++i) {
      const auto& t = ticks[i];
      const auto& r = reports[i];
      if (t.driver_distance) current.driver.distance_m = t.driver_distance;
      if (t.driver_speed) current.driver.speed_kmh = t.driver_speed;
      halted = halted || t.stop;
      if (halted) {
        CHECK(r.emitted.empty());
        CHECK(r.mode == Mode::normal);
        continue;
      }
      if (r.mode == Mode::cruise && t.sample) {
        for (auto s : {"ControlEngine", "ControlBrake", "NotifyDriver"}) {
          CHECK(std::count(r.emitted.begin(), r.emitted.end(), s) == 1);
        }
      }
      if (t.sample && t.running && r.reading) {
        auto thresholds = scc::controller::resolve_thresholds(current, t.climate);
        CHECK(r.thresholds == thresholds);
        REQUIRE(r.threat == scc::controller::classify_threat_oracle(*r.reading, thresholds, config.criticals));
      }
    }
  }
}

TEST_CASE("render_report") {
  CHECK(render_report({}, ReportFormat::text) ==
        "# tick reading(distance_m/speed_kmh/azimuth_deg) threat alert mode thresholds emitted\n");
  CHECK(render_report({}, ReportFormat::machine).empty());
  auto reports = run_scenario(ThresholdConfig{}, parse_scenario(kApproach));
  auto text = render_report(reports, ReportFormat::text);
  auto cruise_line = text.substr(text.find("tick=4 "));
  cruise_line = cruise_line.substr(0, cruise_line.find('\n'));
  CHECK(cruise_line.find("mode=cruise") != std::string::npos);
  for (auto s : {"ControlEngine", "ControlBrake", "NotifyDriver"}) CHECK(cruise_line.find(s) != std::string::npos);

  auto machine = render_report(reports, ReportFormat::machine);
  auto first = nlohmann::json::parse(machine.substr(0, machine.find('\n')));
  for (auto key : {"tick", "reading", "threat", "alert_value", "emitted", "mode"}) CHECK(first.contains(key));
  CHECK(first["threat"] == "none");
  CHECK(first["alert_value"].is_null());
  CHECK(first["reading"]["distance_m"] == 15.0);
}
