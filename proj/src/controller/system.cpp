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

#include "scc/controller/system.hpp"

#include <memory>

namespace scc::controller {

using namespace scc::kernel;

const char* to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::drop_notify: return "drop-notify";
    case Mutation::drop_cruise: return "drop-cruise";
    case Mutation::invert_critical: return "invert-critical";
  }
  return "none";
}

std::optional<Mutation> parse_mutation(std::string_view s) {
  for (Mutation m : {Mutation::none, Mutation::drop_notify, Mutation::drop_cruise, Mutation::invert_critical}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

const std::vector<Mutation>& all_mutations() {
  static const std::vector<Mutation> v = {Mutation::drop_notify, Mutation::drop_cruise,
                                          Mutation::invert_critical};
  return v;
}

namespace {

Stmt each_instant(Stmt body) { return loop(seq({std::move(body), pause_()})); }

std::int64_t cm(int meters) { return 100LL * meters; }

Stmt set_pair(const Thresholds& t) {
  return seq({assign("distance", lit(cm(t.distance_m))), assign("speed", lit(t.speed_kmh))});
}

}  // namespace

Program set_predefined_values(const ThresholdConfig& config) {
  const auto& table = config.climate_table;
  auto climate_is = [](Climate c) { return eq(value_of(sig::kClimate), lit(climate_code(c))); };
  auto base_for = [&](Climate c) {
    auto it = table.find(c);
    return set_pair(it != table.end() ? it->second : config.manufacturer);
  };

  Stmt climate_case = present(
      sig::kClimate,
      if_(climate_is(Climate::Rain), base_for(Climate::Rain),
          if_(climate_is(Climate::Mist), base_for(Climate::Mist),
              if_(climate_is(Climate::Normal), base_for(Climate::Normal)))));

  Stmt resolve = local_var(
      "distance", lit(cm(config.manufacturer.distance_m)),
      local_var("speed", lit(config.manufacturer.speed_kmh),
                seq({
                    climate_case,
                    if_(and_(eq(ref("hasInputDistance"), lit(1)), lt(ref("distance"), ref("inputDistance"))),
                        assign("distance", ref("inputDistance"))),
                    if_(and_(eq(ref("hasInputSpeed"), lit(1)), lt(ref("speed"), ref("inputSpeed"))),
                        assign("speed", ref("inputSpeed"))),
                    emit(sig::kPreDefinedDistance, ref("distance")),
                    emit(sig::kPreDefinedSpeed, ref("speed")),
                })));

  Stmt driver_update = seq({
      present(sig::kInputDistance, seq({assign("inputDistance", value_of(sig::kInputDistance)),
                                        assign("hasInputDistance", lit(1))})),
      present(sig::kInputSpeed,
              seq({assign("inputSpeed", value_of(sig::kInputSpeed)), assign("hasInputSpeed", lit(1))})),
  });

  const auto& d = config.driver;
  Stmt body = local_var(
      "inputDistance", lit(d.distance_m ? cm(*d.distance_m) : 0),
      local_var("hasInputDistance", lit(d.distance_m ? 1 : 0),
                local_var("inputSpeed", lit(d.speed_kmh.value_or(0)),
                          local_var("hasInputSpeed", lit(d.speed_kmh ? 1 : 0),
                                    each_instant(seq({driver_update, resolve}))))));

  return Program("SET_PREDEFINED_VALUES",
                 {valued_input(sig::kClimate), valued_input(sig::kInputDistance), valued_input(sig::kInputSpeed),
                  valued_output(sig::kPreDefinedDistance), valued_output(sig::kPreDefinedSpeed)},
                 body);
}

namespace {

Stmt road_data_body(Stmt broadcast) {
  return weak_abort(
      every_immediate(sig::kSampleFreq,
                      present(sig::kRunning,
                              each_instant(if_(and_(is_present(sig::kDistance), is_present(sig::kSpeed)),
                                               std::move(broadcast))))),
      sig::kStopVehicle);
}

}  // namespace

Program road_data() {
  return Program("ROAD_DATA",
                 {pure_input(sig::kDistance), pure_input(sig::kSpeed), pure_input(sig::kSampleFreq),
                  pure_input(sig::kStopVehicle), pure_input(sig::kRunning), pure_output(sig::kDistanceSignal),
                  pure_output(sig::kSpeedSignal)},
                 road_data_body(par({emit(sig::kDistanceSignal), emit(sig::kSpeedSignal)})));
}

Program road_data_valued() {
  return Program("ROAD_DATA",
                 {valued_input(sig::kDistance), valued_input(sig::kSpeed), pure_input(sig::kSampleFreq),
                  pure_input(sig::kStopVehicle), pure_input(sig::kRunning), valued_output(sig::kDistanceSignal),
                  valued_output(sig::kSpeedSignal)},
                 road_data_body(par({emit(sig::kDistanceSignal, value_of(sig::kDistance)),
                                     emit(sig::kSpeedSignal, value_of(sig::kSpeed))})));
}

Program driver_alarm(const Criticals& criticals, Mutation m) {
  Expr near = or_(le(value_of(sig::kDistanceSignal), value_of(sig::kPreDefinedDistance)),
                  le(value_of(sig::kSpeedSignal), value_of(sig::kPreDefinedSpeed)));
  Expr critical = m == Mutation::invert_critical
                      ? or_(gt(value_of(sig::kDistanceSignal), ref("criticalDistance")),
                            gt(value_of(sig::kSpeedSignal), ref("criticalSpeed")))
                      : or_(le(value_of(sig::kDistanceSignal), ref("criticalDistance")),
                            le(value_of(sig::kSpeedSignal), ref("criticalSpeed")));
  Stmt classify = if_(near, if_(critical, emit(sig::kAlert, lit(1)), emit(sig::kAlert, lit(0))));
  Stmt body = local_var(
      "criticalDistance", lit(cm(criticals.distance_m)),
      local_var("criticalSpeed", lit(criticals.speed_kmh),
                each_instant(present(sig::kDistanceSignal, present(sig::kSpeedSignal, classify)))));
  return Program("DRIVER_ALARM",
                 {valued_input(sig::kDistanceSignal), valued_input(sig::kSpeedSignal),
                  valued_input(sig::kPreDefinedDistance), valued_input(sig::kPreDefinedSpeed),
                  valued_output(sig::kAlert)},
                 body);
}

Program alert_dispatch() {
  return Program("ALERT_DISPATCH",
                 {valued_input(sig::kAlert), pure_output(sig::kLowAlert), pure_output(sig::kCruiseControlAlert)},
                 each_instant(present(sig::kAlert, if_(eq(value_of(sig::kAlert), lit(1)),
                                                       emit(sig::kCruiseControlAlert), emit(sig::kLowAlert)))));
}

Program alert_dispatch_pure() {
  return Program("ALERT_DISPATCH",
                 {pure_input(sig::kAlertHigh), pure_input(sig::kAlertLow), pure_output(sig::kLowAlert),
                  pure_output(sig::kCruiseControlAlert)},
                 each_instant(par({present(sig::kAlertHigh, emit(sig::kCruiseControlAlert)),
                                   present(sig::kAlertLow, emit(sig::kLowAlert))})));
}

Program host_vehicle(Mutation m) {
  std::vector<PresentArm> arms;
  if (m != Mutation::drop_cruise) arms.push_back({sig::kCruiseControlAlert, emit(sig::kCruiseControlMode)});
  arms.push_back({sig::kLowAlert, emit(sig::kLowNotification)});
  return Program("HOST_VEHICLE",
                 {pure_input(sig::kLowAlert), pure_input(sig::kCruiseControlAlert),
                  pure_output(sig::kLowNotification), pure_output(sig::kCruiseControlMode)},
                 each_instant(present_case(std::move(arms))));
}

Program cruise_control(Mutation m) {
  std::vector<Stmt> actuation = {emit(sig::kControlEngine), emit(sig::kControlBrake)};
  if (m != Mutation::drop_notify) actuation.push_back(emit(sig::kNotifyDriver));
  return Program("CRUISE_CONTROL",
                 {pure_input(sig::kSampleFreq), pure_input(sig::kCruiseControlMode), pure_output(sig::kControlEngine),
                  pure_output(sig::kControlBrake), pure_output(sig::kNotifyDriver)},
                 every_immediate(sig::kSampleFreq, present(sig::kCruiseControlMode, par(std::move(actuation)))));
}

ProgramPtr build_system(const ThresholdConfig& config, Mutation m) {
  validate_config(config);
  Program wired = compose("SAFETY_SYSTEM",
                          {set_predefined_values(config), road_data_valued(), driver_alarm(config.criticals, m),
                           alert_dispatch(), host_vehicle(m), cruise_control(m)},
                          {sig::kPreDefinedDistance, sig::kPreDefinedSpeed, sig::kDistanceSignal, sig::kSpeedSignal,
                           sig::kLowAlert, sig::kCruiseControlAlert});
  return std::make_shared<const Program>(wired.name(), wired.signals(),
                                         strong_abort(wired.body(), sig::kStopVehicle));
}

}  // namespace scc::controller
