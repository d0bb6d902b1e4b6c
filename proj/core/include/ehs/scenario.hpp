// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehs/config.hpp"
#include "ehs/trace.hpp"

namespace ehs {

struct TrojanSummary {
  bool enabled{false};
  bool rst_fired{false};
  std::optional<std::uint64_t> first_rst_clock{};
  std::optional<std::uint64_t> first_flag_clock{};
  std::uint64_t flagged_clocks{0};
};

struct Summary {
  bool complete{false};
  bool locked{false};
  unsigned locked_code{0};
  unsigned cycles_used{0};
  bool exhausted{false};
  std::uint64_t lock_clock{0};   // global clock index of the lock decision
  double lock_latency_us{0.0};   // from the MPPT trigger to the lock decision
  unsigned mppt_attempts{0};
  Hertz f_osc{};
  Volt final_v_solar{};
  Volt final_v_out{};
  double final_pce{0.0};
  Watt final_p_sense{};
  Volt ripple_max_v{};
  bool ripple_clamped{false};
  TrojanSummary trojan{};
};

struct RunResult {
  std::vector<TraceRecord> trace;
  Summary summary;
};

/// Deterministic clock-by-clock run of the full chain: idle window, MPPT
/// attempt(s), optional trojan dynamics and detection, re-trigger on solar
/// drop. forced_v_solar pins the PV terminal voltage instead of solving the
/// operating point (used by the SolarVoltage sweep axis).
RunResult run_scenario(const ScenarioConfig& cfg,
                       std::optional<Volt> forced_v_solar = std::nullopt);

std::string format_summary(const Summary& s);

enum class SweepAxis { AgeYears, TemperatureC, SolarVoltage, ToggleRate };

const char* to_string(SweepAxis a);
std::optional<SweepAxis> sweep_axis_from_string(const char* name);

struct SweepSpec {
  SweepAxis axis{SweepAxis::AgeYears};
  std::vector<double> values;
  ScenarioConfig scenario{};
};

struct SweepRow {
  double axis_value{0.0};
  Hertz f_osc{};
  Volt ripple_max_v{};
  Volt v_out{};
  double pce{0.0};
  unsigned locked_code{0};
  unsigned cycles_used{0};
  bool trojan_flag{false};
  bool rst_fired{false};
  std::string error;  // empty on success; sweep continues past failures
};

struct SweepReport {
  SweepAxis axis{SweepAxis::AgeYears};
  std::vector<SweepRow> rows;
};

SweepReport run_sweep(const SweepSpec& spec);
std::string sweep_csv(const SweepReport& report);

}  // namespace ehs
