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

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "automata.hpp"
#include "doctest.h"
#include "scc/cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = scc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SCC_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "scc_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

int count(const std::string& haystack, const std::string& needle) {
  int n = 0;
  for (auto pos = haystack.find(needle); pos != std::string::npos; pos = haystack.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("status reproduces the emission tables") {
  auto r = run({"status", "road_data", "RUNNING=present", "SAMPLE_FREQ=present", "distance=present",
                "speed=present", "STOP_VEHICLE=absent"});
  CHECK(r.code == 0);
  CHECK(r.out.find("DistanceSignal  ALWAYS_EMITTED") != std::string::npos);
  CHECK(r.out.find("SpeedSignal     ALWAYS_EMITTED") != std::string::npos);

  r = run({"status", "road_data", "STOP_VEHICLE=present", "RUNNING=absent"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "NEVER_EMITTED") == 2);

  r = run({"status", "host_vehicle", "CruiseControlAlert=present"});
  CHECK(r.out.find("CruiseControlMode  ALWAYS_EMITTED") != std::string::npos);
  CHECK(r.out.find("LowNotification    NEVER_EMITTED") != std::string::npos);
}

TEST_CASE("status rejects bad assignments") {
  CHECK(run({"status", "road_data", "WHEEL=present"}).code == 2);
  CHECK(run({"status", "road_data", "RUNNING=often"}).code == 2);
  CHECK(run({"status", "road_data", "RUNNING"}).code == 2);
  CHECK(run({"status", "gearbox"}).code == 2);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--config", data("default.ini")});
  CHECK(r.code == 0);
  CHECK(count(r.out, " PASS ") == 4);

  r = run({"verify", "--config", data("default.ini"), "--mutate", "drop-notify"});
  CHECK(r.code == 1);
  CHECK(r.out.find("p4 FAIL") != std::string::npos);
  CHECK(r.out.find("counterexample:") != std::string::npos);

  r = run({"verify", "--config", data("default.ini"), "--format", "json", "--mutate", "drop-cruise"});
  CHECK(r.code == 1);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc[2]["status"] == "FAIL");
  CHECK(doc[2]["counterexample"].size() >= 1);

  auto bad = write("bad.ini", "[climate_rain]\ndistance_m = 2\n");
  r = run({"verify", "--config", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("ConfigValidationError") != std::string::npos);

  CHECK(run({"verify", "--config", data("default.ini"), "--mutate", "drop-all"}).code == 2);
  CHECK(run({"verify"}).code == 2);
}

TEST_CASE("simulate") {
  auto r = run({"simulate", "--config", data("default.ini"), "--scenario", data("approach.csv")});
  CHECK(r.code == 0);
  CHECK(r.out == scc::testing::read_file(SCC_GOLDEN_DIR "/approach_report.txt"));
  CHECK(run({"simulate", "--config", data("default.ini"), "--scenario", data("approach.csv")}).out == r.out);

  r = run({"simulate", "--config", data("default.ini"), "--scenario", "/no/such/scenario.csv"});
  CHECK(r.code == 2);
  CHECK(r.err.find("/no/such/scenario.csv") != std::string::npos);

  auto bad_cfg = write("below.ini", "[manufacturer]\ndistance_m = 3\n");
  r = run({"simulate", "--config", bad_cfg, "--scenario", data("approach.csv")});
  CHECK(r.code == 2);
  CHECK(r.err.find("ConfigValidationError") != std::string::npos);

  auto bad_csv = write("bad.csv",
                       "tick,distance,speed,azimuth,climate,running,stop,sample,driver_distance,driver_speed\n"
                       "0,,,,normal,1,0,1,,\n"
                       "1,,,,normal,1,1,1,,\n");
  r = run({"simulate", "--config", data("default.ini"), "--scenario", bad_csv});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);

  auto garbage = write("garbage.csv", "\x01\x02 not a csv\n");
  CHECK(run({"simulate", "--config", data("default.ini"), "--scenario", garbage}).code == 2);

  auto out = scratch("report.jsonl");
  r = run({"simulate", "--config", data("default.ini"), "--scenario", data("rain_stop.csv"), "--format", "json",
           "--output", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  auto text = scc::testing::read_file(out.string());
  CHECK(count(text, "\n") == 9);
  CHECK(text.find("\"mode\":\"cruise\"") != std::string::npos);
}

TEST_CASE("fsm") {
  auto r = run({"fsm", "road_data", "--minimize"});
  CHECK(r.code == 0);
  CHECK(r.out == scc::testing::read_file(SCC_GOLDEN_DIR "/road_data_min.dot"));

  CHECK(run({"fsm", "unknown_module"}).code == 2);

  auto prefix = scratch("host").string();
  r = run({"fsm", "host_vehicle", "--output", prefix});
  CHECK(r.code == 0);
  auto listing = scc::testing::read_file(prefix + ".tsv");
  // Two reachable states (boot and steady) times four letters.
  CHECK(count(listing, "\n") == 8);
  CHECK(listing.find("\n1\t") != std::string::npos);
  CHECK(fs::exists(prefix + ".dot"));
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"launch"}).code == 2);
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
}
