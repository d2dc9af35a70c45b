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

#include "scc/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>

#include "scc/controller/config_io.hpp"
#include "scc/fsm/export.hpp"
#include "scc/kernel/errors.hpp"
#include "scc/sim/replay.hpp"
#include "scc/verifier/modules.hpp"
#include "scc/verifier/properties.hpp"

namespace scc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string config_path;
  std::string scenario_path;
  std::string format = "text";
  std::string output;
  std::string mutate = "none";
  std::string module;
  bool minimize = false;
  std::vector<std::string> assignments;
};

controller::Mutation mutation(const Options& o) {
  auto m = controller::parse_mutation(o.mutate);
  if (!m) throw UsageError("unknown mutation '" + o.mutate + "'");
  return *m;
}

controller::ThresholdConfig config(const Options& o) {
  return o.config_path.empty() ? controller::ThresholdConfig{} : controller::load_config(o.config_path);
}

verifier::ModuleId module(const Options& o) {
  auto m = verifier::parse_module(o.module);
  if (!m) {
    throw UsageError("unknown module '" + o.module +
                     "' (expected road_data, host_vehicle, cruise_control, driver_alarm or full)");
  }
  return *m;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f.flush()) throw std::runtime_error("cannot write '" + path + "'");
}

int cmd_simulate(const Options& o, std::ostream& out) {
  auto cfg = config(o);
  auto m = mutation(o);
  auto ticks = sim::load_scenario(o.scenario_path);
  auto reports = sim::run_scenario(cfg, ticks, m);
  auto text = sim::render_report(reports, o.format == "json" ? sim::ReportFormat::machine : sim::ReportFormat::text);
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto results = verifier::verify_properties(verifier::system_modules(config(o), mutation(o)));
  out << (o.format == "json" ? verifier::render_json(results) : verifier::render_text(results));
  bool all = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.holds; });
  return all ? kExitOk : kExitPropertyFailed;
}

int cmd_fsm(const Options& o, std::ostream& out) {
  auto id = module(o);
  auto a = fsm::extract_automaton(verifier::pure_module(id, config(o), mutation(o)));
  if (o.minimize) a = fsm::minimize(a);
  if (o.output.empty()) {
    out << fsm::export_dot(a);
  } else {
    write_file(o.output + ".dot", fsm::export_dot(a));
    write_file(o.output + ".tsv", fsm::export_listing(a));
    out << "wrote " << o.output << ".dot and " << o.output << ".tsv (" << a.state_count() << " states)\n";
  }
  return kExitOk;
}

int cmd_status(const Options& o, std::ostream& out) {
  auto id = module(o);
  auto a = fsm::minimize(fsm::extract_automaton(verifier::pure_module(id, config(o), mutation(o))));
  verifier::InputConstraint c;
  for (const auto& assignment : o.assignments) {
    auto eq = assignment.rfind('=');
    if (eq == std::string::npos) throw UsageError("expected SIGNAL=present|absent|free, got '" + assignment + "'");
    std::string signal = assignment.substr(0, eq);
    auto mode = verifier::parse_input_mode(assignment.substr(eq + 1));
    if (!mode) throw UsageError("'" + assignment + "': mode must be present, absent or free");
    if (std::find(a.inputs.begin(), a.inputs.end(), signal) == a.inputs.end()) {
      throw UsageError("'" + signal + "' is not an input of " + a.name);
    }
    c.set(signal, *mode);
  }
  std::size_t width = 0;
  for (const auto& name : a.outputs) width = std::max(width, name.size());
  out << a.name << " under " << c.describe() << '\n';
  for (const auto& s : verifier::check_output_status(a, c)) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << s.signal << verifier::to_string(s.status) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronous safety cruise controller: simulation, automata and verification", "scc"};
  app.require_subcommand(1);
  Options o;
  auto add_mutate = [&](CLI::App* sub) {
    sub->add_option("--mutate", o.mutate, "test hook: drop-notify, drop-cruise or invert-critical");
  };

  auto* simulate = app.add_subcommand("simulate", "replay a scenario through the controller");
  simulate->add_option("--config", o.config_path, "threshold configuration (INI)")->required();
  simulate->add_option("--scenario", o.scenario_path, "scenario CSV")->required();
  simulate->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  simulate->add_option("--output", o.output, "write the report here instead of standard output");
  add_mutate(simulate);

  auto* verify = app.add_subcommand("verify", "check properties p1 to p4");
  verify->add_option("--config", o.config_path, "threshold configuration (INI)")->required();
  verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  add_mutate(verify);

  auto* fsm_cmd = app.add_subcommand("fsm", "extract a module's automaton");
  fsm_cmd->add_option("module", o.module, "road_data, host_vehicle, cruise_control, driver_alarm or full")
      ->required();
  fsm_cmd->add_flag("--minimize", o.minimize, "minimize before export");
  fsm_cmd->add_option("--output", o.output, "write PREFIX.dot and PREFIX.tsv");
  fsm_cmd->add_option("--config", o.config_path, "threshold configuration (INI)");
  add_mutate(fsm_cmd);

  auto* status = app.add_subcommand("status", "output emission status under input constraints");
  status->add_option("module", o.module, "module selector")->required();
  status->add_option("constraints", o.assignments, "SIGNAL=present|absent|free");
  status->add_option("--config", o.config_path, "threshold configuration (INI)");
  add_mutate(status);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (fsm_cmd->parsed()) return cmd_fsm(o, out);
    return cmd_status(o, out);
  } catch (const controller::ConfigValidationError& e) {
    err << "ConfigValidationError: " << e.what() << '\n';
  } catch (const kernel::KernelError& e) {
    err << "kernel error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace scc::cli
