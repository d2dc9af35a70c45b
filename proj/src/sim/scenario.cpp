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

#include "scc/sim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace scc::sim {

std::optional<SensorReading> sensor_gate(const SensorReading& target) {
  if (!(std::fabs(target.azimuth_deg) <= kHalfFieldOfViewDeg)) return std::nullopt;
  SensorReading r = target;
  r.distance_m = std::max(r.distance_m, kMinRangeM);
  r.distance_m = std::floor(r.distance_m / kRangeStepM + 0.5) * kRangeStepM;
  r.relative_speed_kmh = std::clamp(r.relative_speed_kmh, -kMaxRelativeSpeedKmh, kMaxRelativeSpeedKmh);
  return r;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(std::string s) {
  auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

template <typename T>
T number(const std::string& cell, std::size_t line, const char* column) {
  T v{};
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw MalformedRow(line, std::string(column) + ": '" + cell + "' is not a number");
  }
  return v;
}

bool flag(const std::string& cell, std::size_t line, const char* column) {
  if (cell == "0") return false;
  if (cell == "1") return true;
  throw MalformedRow(line, std::string(column) + ": expected 0 or 1, got '" + cell + "'");
}

}  // namespace

std::vector<ScenarioTick> parse_scenario(const std::string& text) {
  std::vector<ScenarioTick> ticks;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    std::string row = trim(raw);
    if (row.empty()) continue;
    if (!header_seen) {
      if (row != kScenarioHeader) throw MalformedRow(line, std::string("expected header '") + kScenarioHeader + "'");
      header_seen = true;
      continue;
    }
    auto cells = split(row);
    if (cells.size() != 10) {
      throw MalformedRow(line, "expected 10 columns, got " + std::to_string(cells.size()));
    }
    for (auto& c : cells) c = trim(c);

    ScenarioTick t;
    if (cells[0].empty()) throw MalformedRow(line, "tick is required");
    long long tick = number<long long>(cells[0], line, "tick");
    if (tick < 0) throw NonMonotonicTick(line, "tick " + cells[0] + " is negative");
    if (ticks.empty() && tick != 0) throw NonMonotonicTick(line, "first tick must be 0, got " + cells[0]);
    if (!ticks.empty() && static_cast<std::size_t>(tick) <= ticks.back().tick) {
      throw NonMonotonicTick(line, "tick " + cells[0] + " does not follow " + std::to_string(ticks.back().tick));
    }
    t.tick = static_cast<std::size_t>(tick);

    int given = !cells[1].empty() + !cells[2].empty() + !cells[3].empty();
    if (given == 3) {
      t.target = SensorReading{number<double>(cells[1], line, "distance"), number<int>(cells[2], line, "speed"),
                               number<double>(cells[3], line, "azimuth")};
    } else if (given != 0) {
      throw MalformedRow(line, "distance, speed and azimuth must be given together");
    }

    auto climate = controller::parse_climate(cells[4]);
    if (!climate) throw MalformedRow(line, "climate: unknown value '" + cells[4] + "'");
    t.climate = *climate;
    t.running = flag(cells[5], line, "running");
    t.stop = flag(cells[6], line, "stop");
    t.sample = flag(cells[7], line, "sample");
    if (t.stop && t.running) throw StopWhileRunning(line, "stop and running are both set");
    if (!cells[8].empty()) t.driver_distance = number<int>(cells[8], line, "driver_distance");
    if (!cells[9].empty()) t.driver_speed = number<int>(cells[9], line, "driver_speed");
    ticks.push_back(std::move(t));
  }
  return ticks;
}

std::vector<ScenarioTick> load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scenario(buf.str());
  } catch (const ScenarioError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string format_scenario(const std::vector<ScenarioTick>& ticks) {
  std::ostringstream os;
  os << kScenarioHeader << '\n';
  for (const auto& t : ticks) {
    os << t.tick << ',';
    if (t.target) {
      os << t.target->distance_m << ',' << t.target->relative_speed_kmh << ',' << t.target->azimuth_deg;
    } else {
      os << ",,";
    }
    os << ',' << controller::to_string(t.climate) << ',' << t.running << ',' << t.stop << ',' << t.sample << ',';
    if (t.driver_distance) os << *t.driver_distance;
    os << ',';
    if (t.driver_speed) os << *t.driver_speed;
    os << '\n';
  }
  return os.str();
}

}  // namespace scc::sim
