// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <sstream>

#include "ehs/config.hpp"
#include "ehs/oscillator.hpp"

namespace ehs {

namespace {

void require(ValidationReport& rep, bool ok, const std::string& msg) {
  if (!ok) rep.violations.push_back(msg);
}

bool pos(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

ValidationReport validate_scenario(const ScenarioConfig& cfg) {
  ValidationReport rep;

  // pv
  require(rep, pos(cfg.pv.i_ph.value), "pv: photocurrent i_ph must be positive");
  require(rep, pos(cfg.pv.i_sat.value), "pv: saturation current i_sat must be positive");
  require(rep, pos(cfg.pv.n_vt.value), "pv: thermal voltage n_vt must be positive");
  require(rep, cfg.pv.irradiance_scale > 0.0 && cfg.pv.irradiance_scale <= 1.5,
          "pv: irradiance_scale must lie in (0, 1.5]");

  // converter
  require(rep, pos(cfg.converter.f_s.value), "oscillator frequency must be positive");
  require(rep, pos(cfg.converter.c_u_full.value), "converter: c_u_full must be positive");
  require(rep, pos(cfg.converter.alpha), "converter: alpha must be positive");
  require(rep, cfg.converter.conversion_ratio == 3.0, "converter: conversion ratio is fixed at 3");
  require(rep, pos(cfg.converter.r_l.value), "converter: load resistance r_l must be positive");
  require(rep, cfg.converter.n_code_max == 16, "converter: n_code_max is fixed at 16");

  // ripple
  require(rep, pos(cfg.ripple.r_on.value), "ripple: r_on must be positive");
  require(rep, pos(cfg.ripple.c.value), "ripple: c must be positive");
  require(rep, pos(cfg.ripple.c0.value), "ripple: c0 must be positive");
  require(rep, std::isfinite(cfg.ripple.i0.value) && cfg.ripple.i0.value >= 0.0,
          "ripple: i0 must be non-negative");
  require(rep, pos(cfg.ripple.mobility_term), "ripple: mobility_term must be positive");
  require(rep, cfg.ripple.v_gs.value > cfg.ripple.v_t.value,
          "ripple: v_gs must exceed v_t for a defined on-resistance");

  // oscillator
  require(rep, pos(cfg.oscillator.f_nominal.value), "oscillator frequency must be positive");
  require(rep, cfg.oscillator.age.value >= 0.0, "oscillator: age must be non-negative");
  require(rep, cfg.oscillator.accel_factor_per_40c >= 1.0,
          "oscillator: accel_factor_per_40c must be >= 1");
  if (rep.violations.empty()) {
    require(rep, frequency_at(cfg.oscillator).value > 0.0,
            "oscillator: computed frequency must be positive");
    if (age_clamped(cfg.oscillator)) {
      rep.warnings.push_back(
          "oscillator: effective age beyond 20 years, clamped to the 20-year anchor");
    }
  }

  // mppt
  require(rep, cfg.mppt.clocks_per_cycle == 32, "mppt: clocks_per_cycle is fixed at 32");
  require(rep, cfg.mppt.max_cycles == 16, "mppt: max_cycles is fixed at 16");
  require(rep, cfg.mppt.sense_clocks == 14, "mppt: sense_clocks is fixed at 14");
  require(rep, pos(cfg.mppt.r_sen.value), "mppt: sense resistor r_sen must be positive");
  require(rep, cfg.mppt.normal_operation_time.value >= 0.0,
          "mppt: normal_operation_time must be non-negative");
  require(rep, std::isfinite(cfg.mppt.v_solar_threshold.value),
          "mppt: v_solar_threshold must be finite");

  // trojan
  if (cfg.trojan) {
    const auto& t = *cfg.trojan;
    require(rep, t.eta > 0.0 && t.eta < 1.0, "trojan: eta must lie in (0, 1)");
    require(rep, pos(t.tau_leak.value), "trojan: tau_leak must be positive");
    require(rep, t.v_trig.value > 0.0 && t.v_trig.value < t.v_dd.value,
            "trojan: v_trig must lie in (0, v_dd)");
    require(rep, t.v_ref.value > 0.0 && t.v_ref.value < t.v_trig.value,
            "trojan: v_ref must lie in (0, v_trig)");
    if (t.toggle_source == ToggleSource::ExternalRate) {
      require(rep, t.toggle_rate.value >= 0.0, "trojan: toggle_rate must be non-negative");
    }
  }

  // sim
  require(rep, std::isfinite(cfg.sim.duration.value) && cfg.sim.duration.value > 0.0,
          "sim: duration must be positive");
  require(rep, cfg.sim.trace_decimation >= 1, "sim: trace_decimation must be >= 1");

  // budget
  for (const auto& [name, w] : cfg.budget.per_block) {
    require(rep, std::isfinite(w.value) && w.value >= 0.0,
            "budget: block '" + name + "' power must be non-negative");
  }

  return rep;
}

}  // namespace ehs
