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

#include "scc/sim/replay.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace scc::sim {

namespace sig = controller::sig;
using controller::ThreatLevel;

const char* to_string(Mode m) { return m == Mode::cruise ? "cruise" : "normal"; }

kernel::SignalSet tick_inputs(const ScenarioTick& t) {
  kernel::SignalSet in;
  if (t.running) in.emplace(sig::kRunning, std::nullopt);
  if (t.stop) in.emplace(sig::kStopVehicle, std::nullopt);
  if (t.sample) in.emplace(sig::kSampleFreq, std::nullopt);
  if (t.climate != Climate::Unknown) in.emplace(sig::kClimate, controller::climate_code(t.climate));
  if (t.target) {
    if (auto r = sensor_gate(*t.target)) {
      in.emplace(sig::kDistance, controller::to_centimeters(r->distance_m));
      in.emplace(sig::kSpeed, r->relative_speed_kmh);
    }
  }
  if (t.driver_distance) in.emplace(sig::kInputDistance, 100LL * *t.driver_distance);
  if (t.driver_speed) in.emplace(sig::kInputSpeed, *t.driver_speed);
  return in;
}

std::vector<TickReport> run_scenario(const controller::ThresholdConfig& config, const std::vector<ScenarioTick>& ticks,
                                     controller::Mutation mutation) {
  auto state = kernel::ExecState::initial(controller::build_system(config, mutation));
  std::vector<TickReport> reports;
  for (const auto& t : ticks) {
    TickReport rep;
    rep.tick = t.tick;
    if (t.target) rep.reading = sensor_gate(*t.target);
    kernel::Reaction r = [&] {
      try {
        return kernel::run_tick(state, tick_inputs(t));
      } catch (kernel::KernelError& e) {
        e.set_tick(t.tick);
        throw;
      }
    }();
    state = r.next;
    for (const auto& [name, value] : r.outputs) rep.emitted.push_back(name);
    if (auto it = r.outputs.find(sig::kAlert); it != r.outputs.end()) {
      rep.alert_value = static_cast<int>(*it->second);
      rep.threat = *rep.alert_value == 1 ? ThreatLevel::high : ThreatLevel::low;
    }
    rep.mode = r.outputs.count(sig::kCruiseControlMode) ? Mode::cruise : Mode::normal;
    auto d = r.locals.find(sig::kPreDefinedDistance);
    auto s = r.locals.find(sig::kPreDefinedSpeed);
    if (d != r.locals.end() && s != r.locals.end()) {
      rep.thresholds = controller::Thresholds{static_cast<int>(*d->second / 100), static_cast<int>(*s->second)};
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

namespace {

std::string reading_text(const std::optional<SensorReading>& r) {
  if (!r) return "-";
  std::ostringstream os;
  os << r->distance_m << '/' << r->relative_speed_kmh << '/' << r->azimuth_deg;
  return os.str();
}

std::string join(const std::vector<std::string>& v) {
  if (v.empty()) return "-";
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
  return out;
}

}  // namespace

std::string render_report(const std::vector<TickReport>& reports, ReportFormat format) {
  std::ostringstream os;
  if (format == ReportFormat::text) {
    os << "# tick reading(distance_m/speed_kmh/azimuth_deg) threat alert mode thresholds emitted\n";
    for (const auto& r : reports) {
      os << "tick=" << r.tick << " reading=" << reading_text(r.reading) << " threat=" << to_string(r.threat)
         << " alert=" << (r.alert_value ? std::to_string(*r.alert_value) : "-") << " mode=" << to_string(r.mode)
         << " thresholds="
         << (r.thresholds ? std::to_string(r.thresholds->distance_m) + "/" + std::to_string(r.thresholds->speed_kmh)
                          : "-")
         << " emitted=" << join(r.emitted) << '\n';
    }
    return os.str();
  }
  for (const auto& r : reports) {
    nlohmann::ordered_json rec;
    rec["tick"] = r.tick;
    rec["reading"] = r.reading ? nlohmann::ordered_json{{"distance_m", r.reading->distance_m},
                                                {"relative_speed_kmh", r.reading->relative_speed_kmh},
                                                {"azimuth_deg", r.reading->azimuth_deg}}
                               : nlohmann::ordered_json(nullptr);
    rec["threat"] = to_string(r.threat);
    rec["alert_value"] = r.alert_value ? nlohmann::ordered_json(*r.alert_value) : nlohmann::ordered_json(nullptr);
    rec["emitted"] = r.emitted;
    rec["mode"] = to_string(r.mode);
    rec["thresholds"] = r.thresholds ? nlohmann::ordered_json{{"distance_m", r.thresholds->distance_m},
                                                      {"speed_kmh", r.thresholds->speed_kmh}}
                                     : nlohmann::ordered_json(nullptr);
    os << rec.dump() << '\n';
  }
  return os.str();
}

}  // namespace scc::sim
