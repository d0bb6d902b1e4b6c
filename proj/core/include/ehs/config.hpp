// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehs/budget.hpp"
#include "ehs/converter.hpp"
#include "ehs/mppt.hpp"
#include "ehs/oscillator.hpp"
#include "ehs/ripple.hpp"
#include "ehs/trojan.hpp"
#include "ehs/units.hpp"

namespace ehs {

struct SimControl {
  Second duration{5e-3};
  std::uint64_t seed{1};
  unsigned trace_decimation{1};
};

// Everything a run needs. Immutable after construction; share freely across
// concurrent runs.
struct ScenarioConfig {
  PvParams pv{};
  ConverterParams converter{};
  RippleParams ripple{};
  OscillatorConfig oscillator{};
  MpptConfig mppt{};
  std::optional<TrojanConfig> trojan{};
  SimControl sim{};
  PowerBudget budget{};
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool ok() const { return violations.empty(); }
};

/// Report-style validation; never mutates or throws. An empty violations list
/// means the scenario is runnable.
ValidationReport validate_scenario(const ScenarioConfig& cfg);

}  // namespace ehs
