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

#include "scc/controller/config_io.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace scc::controller {

namespace pt = boost::property_tree;

namespace {

const std::set<std::string> kKeys = {"distance_m", "speed_kmh"};

int parse_int(const std::string& section, const std::string& key, const std::string& raw) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (raw.empty() || ec != std::errc() || ptr != raw.data() + raw.size()) {
    throw ConfigParseError("[" + section + "] " + key + ": expected an integer, got '" + raw + "'");
  }
  return v;
}

std::optional<int> read_key(const pt::ptree& sec, const std::string& section, const std::string& key) {
  auto child = sec.get_child_optional(key);
  if (!child) return std::nullopt;
  return parse_int(section, key, child->data());
}

void read_thresholds(const pt::ptree& sec, const std::string& section, int& distance, int& speed) {
  if (auto v = read_key(sec, section, "distance_m")) distance = *v;
  if (auto v = read_key(sec, section, "speed_kmh")) speed = *v;
}

}  // namespace

ThresholdConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigParseError("line " + std::to_string(e.line()) + ": " + e.message());
  }

  ThresholdConfig config;
  for (const auto& [section, sec] : tree) {
    if (sec.empty() && !sec.data().empty()) {
      throw ConfigParseError("key '" + section + "' outside of any section");
    }
    for (const auto& [key, _] : sec) {
      if (!kKeys.count(key)) throw ConfigParseError("[" + section + "] unknown key '" + key + "'");
    }
    if (section == "manufacturer") {
      read_thresholds(sec, section, config.manufacturer.distance_m, config.manufacturer.speed_kmh);
    } else if (section == "criticals") {
      read_thresholds(sec, section, config.criticals.distance_m, config.criticals.speed_kmh);
    } else if (section == "driver") {
      config.driver.distance_m = read_key(sec, section, "distance_m");
      config.driver.speed_kmh = read_key(sec, section, "speed_kmh");
    } else if (section.rfind("climate_", 0) == 0) {
      auto climate = parse_climate(section.substr(8));
      if (!climate || *climate == Climate::Unknown) throw ConfigParseError("unknown section [" + section + "]");
      Thresholds& t = config.climate_table[*climate];
      read_thresholds(sec, section, t.distance_m, t.speed_kmh);
    } else {
      throw ConfigParseError("unknown section [" + section + "]");
    }
  }
  validate_config(config);
  return config;
}

ThresholdConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigParseError& e) {
    throw ConfigParseError(path + ": " + e.what());
  } catch (const ConfigValidationError& e) {
    throw ConfigValidationError(path + ": " + e.what());
  }
}

std::string format_config(const ThresholdConfig& config) {
  std::ostringstream os;
  auto section = [&](const std::string& name, const Thresholds& t) {
    os << '[' << name << "]\ndistance_m = " << t.distance_m << "\nspeed_kmh = " << t.speed_kmh << "\n\n";
  };
  section("manufacturer", config.manufacturer);
  for (const auto& [climate, t] : config.climate_table) section(std::string("climate_") + to_string(climate), t);
  if (config.driver.distance_m || config.driver.speed_kmh) {
    os << "[driver]\n";
    if (config.driver.distance_m) os << "distance_m = " << *config.driver.distance_m << '\n';
    if (config.driver.speed_kmh) os << "speed_kmh = " << *config.driver.speed_kmh << '\n';
    os << '\n';
  }
  section("criticals", {config.criticals.distance_m, config.criticals.speed_kmh});
  return os.str();
}

}  // namespace scc::controller
