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

#ifndef SCC_CONTROLLER_CONFIG_IO_HPP_
#define SCC_CONTROLLER_CONFIG_IO_HPP_

#include <stdexcept>
#include <string>

#include "scc/controller/config.hpp"

namespace scc::controller {

class ConfigParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// INI layout:
//
//   [manufacturer]     distance_m = 12   speed_kmh = 20
//   [climate_normal]   ...
//   [climate_rain]     ...
//   [climate_mist]     ...
//   [driver]           either key may be omitted
//   [criticals]        ...
//
// Omitted sections keep their defaults. Unknown sections or keys are errors.

/// Throws ConfigParseError on syntax problems, ConfigValidationError when the
/// parsed values are inconsistent.
ThresholdConfig parse_config(const std::string& text);
ThresholdConfig load_config(const std::string& path);

std::string format_config(const ThresholdConfig& config);

}  // namespace scc::controller

#endif  // SCC_CONTROLLER_CONFIG_IO_HPP_
