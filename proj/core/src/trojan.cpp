// SPDX-License-Identifier: Apache-2.0
#include "ehs/trojan.hpp"

#include <cmath>
#include <cstring>

namespace ehs {

const char* to_string(ToggleSource s) {
  switch (s) {
    case ToggleSource::MpptClock: return "mppt_clock";
    case ToggleSource::ExternalRate: return "external_rate";
  }
  return "?";
}

std::optional<ToggleSource> toggle_source_from_string(const char* name) {
  if (std::strcmp(name, "mppt_clock") == 0) return ToggleSource::MpptClock;
  if (std::strcmp(name, "external_rate") == 0) return ToggleSource::ExternalRate;
  return std::nullopt;
}

TrojanState accumulate(const TrojanState& state, const TrojanConfig& cfg, unsigned toggles,
                       Second dt) {
  TrojanState s = state;
  s.v_cap = Volt{s.v_cap.value * std::exp(-dt.value / cfg.tau_leak.value)};
  for (unsigned i = 0; i < toggles; ++i) {
    s.v_cap = Volt{s.v_cap.value + cfg.eta * (cfg.v_dd.value - s.v_cap.value)};
  }
  if (s.v_cap.value >= cfg.v_trig.value) s.rst_fired = true;
  return s;
}

bool rst_level(const TrojanState& state, const TrojanConfig& cfg) {
  return state.v_cap.value >= cfg.v_trig.value;
}

bool detect_decision(const TrojanConfig& cfg, Volt v_cap, std::uint16_t counter_bits,
                     bool window) {
  const bool v_outc = !(window && v_cap.value > cfg.v_ref.value);
  const bool counter_nonzero = counter_bits != 0;
  const bool mux_out = window ? counter_nonzero : true;
  return window && (!v_outc || !mux_out);
}

bool detect(TrojanState& state, const TrojanConfig& cfg, std::uint16_t counter_bits, bool window) {
  state.detection_window_i = window;
  state.v_outc = !(window && state.v_cap.value > cfg.v_ref.value);
  if (window && counter_bits == 0) state.counter_zero_seen = true;
  const bool flag = detect_decision(cfg, state.v_cap, counter_bits, window);
  if (flag) state.trojan_flag = true;
  return flag;
}

FeasibilityReport attack_feasibility(const TrojanConfig& cfg, Second window, Hertz toggle_rate) {
  FeasibilityReport rep;
  if (toggle_rate.value <= 0.0) return rep;

  const Second interval{1.0 / toggle_rate.value};
  TrojanState s;
  unsigned k = 0;
  double t = interval.value;  // first toggle one period in
  while (t <= window.value + 1e-18) {
    ++k;
    s = accumulate(s, cfg, 1, interval);
    if (s.rst_fired) {
      rep.fires = true;
      rep.time_to_fire = Second{t};
      rep.toggles_to_fire = k;
      return rep;
    }
    t += interval.value;
  }
  rep.v_cap_end = s.v_cap;
  return rep;
}

}  // namespace ehs
