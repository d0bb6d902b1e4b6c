// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>

#include "ehs/units.hpp"

namespace ehs {

// Static per-block power accounting. The defaults total 22 uW with the
// oscillator and current sensor carrying 80% of it; the finer split is a
// configuration choice, not a measurement.
struct PowerBudget {
  std::map<std::string, Watt> per_block{
      {"RO", Watt{12.0e-6}},
      {"CurrentSensor", Watt{5.6e-6}},
      {"FSM", Watt{2.0e-6}},
      {"Comparator", Watt{1.2e-6}},
      {"ChargePumpControl", Watt{0.8e-6}},
      {"Misc", Watt{0.4e-6}},
  };

  Watt total() const;
  double ro_sensor_share() const;  // (RO + CurrentSensor) / total
};

struct ScenarioConfig;

PowerBudget power_budget(const ScenarioConfig& cfg);
std::string format_budget(const PowerBudget& b);

}  // namespace ehs
