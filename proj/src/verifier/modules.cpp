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

#include "scc/verifier/modules.hpp"

#include <memory>

#include "scc/fsm/abstraction.hpp"

namespace scc::verifier {

namespace ctl = scc::controller;

const char* to_string(ModuleId m) {
  switch (m) {
    case ModuleId::road_data: return "road_data";
    case ModuleId::host_vehicle: return "host_vehicle";
    case ModuleId::cruise_control: return "cruise_control";
    case ModuleId::driver_alarm: return "driver_alarm";
    case ModuleId::full: return "full";
  }
  return "?";
}

const std::vector<ModuleId>& all_modules() {
  static const std::vector<ModuleId> v = {ModuleId::road_data, ModuleId::host_vehicle, ModuleId::cruise_control,
                                          ModuleId::driver_alarm, ModuleId::full};
  return v;
}

std::optional<ModuleId> parse_module(std::string_view s) {
  for (ModuleId m : all_modules()) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

kernel::ProgramPtr pure_module(ModuleId m, const ctl::ThresholdConfig& config, ctl::Mutation mutation) {
  auto wrap = [](kernel::Program p) { return std::make_shared<const kernel::Program>(std::move(p)); };
  switch (m) {
    case ModuleId::road_data: return wrap(ctl::road_data());
    case ModuleId::host_vehicle: return wrap(ctl::host_vehicle(mutation));
    case ModuleId::cruise_control: return wrap(ctl::cruise_control(mutation));
    case ModuleId::driver_alarm: return wrap(fsm::abstract_valued_tests(ctl::driver_alarm(config.criticals, mutation)).program);
    case ModuleId::full: break;
  }
  namespace sig = ctl::sig;
  auto wired = kernel::compose(
      "SAFETY_SYSTEM",
      {ctl::road_data(), fsm::abstract_valued_tests(ctl::driver_alarm(config.criticals, mutation)).program,
       ctl::alert_dispatch_pure(), ctl::host_vehicle(mutation), ctl::cruise_control(mutation)},
      {sig::kDistanceSignal, sig::kSpeedSignal, sig::kAlertHigh, sig::kAlertLow, sig::kLowAlert,
       sig::kCruiseControlAlert});
  return std::make_shared<const kernel::Program>(wired.name(), wired.signals(),
                                                 kernel::strong_abort(wired.body(), sig::kStopVehicle));
}

}  // namespace scc::verifier
