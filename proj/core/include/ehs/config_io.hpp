// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ehs/config.hpp"

namespace ehs {

// Sectioned key = value text, keys in SI units. Sections: [pv] [converter]
// [ripple] [oscillator] [mppt] [trojan] [sim] [budget]; [trojan] and [budget]
// are optional. Unknown sections or keys are rejected.
std::string serialize_config(const ScenarioConfig& cfg);

struct ConfigParseResult {
  std::optional<ScenarioConfig> config;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty() && config.has_value(); }
};

ConfigParseResult parse_config(std::string_view text);
ConfigParseResult load_config_file(const std::string& path);

}  // namespace ehs
