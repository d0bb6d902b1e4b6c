// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "ehs/units.hpp"

namespace ehs {

enum class ToggleSource { MpptClock, ExternalRate };

const char* to_string(ToggleSource s);
std::optional<ToggleSource> toggle_source_from_string(const char* name);

// A2-style charge-accumulating trigger: every transition on the tapped wire
// shares a fraction eta of the remaining headroom onto the trigger capacitor,
// which otherwise leaks with time constant tau_leak. Crossing v_trig drives
// the victim counter's reset.
struct TrojanConfig {
  bool enabled{true};
  double eta{0.05};
  Second tau_leak{5e-3};
  Volt v_trig{0.96};
  Volt v_dd{1.2};
  ToggleSource toggle_source{ToggleSource::MpptClock};
  Hertz toggle_rate{150e3};  // used when toggle_source == ExternalRate
  Volt v_ref{0.48};          // detector comparator reference
};

struct TrojanState {
  Volt v_cap{0.0};
  bool rst_fired{false};          // latched: v_cap reached v_trig at some step
  bool detection_window_i{false}; // last window bit seen by detect()
  bool v_outc{true};              // comparator stage output (0 = suspicious)
  bool counter_zero_seen{false};  // latched counter-zero inside the window
  bool trojan_flag{false};        // latched detection verdict
};

/// Leak over dt, then apply `toggles` charge-share steps. Latches rst_fired
/// when v_cap reaches v_trig.
TrojanState accumulate(const TrojanState& state, const TrojanConfig& cfg, unsigned toggles,
                       Second dt);

/// Level on the victim RST node for the current state.
bool rst_level(const TrojanState& state, const TrojanConfig& cfg);

/// Combinational detector: comparator stage (v_outc = 0 iff window and
/// v_cap > v_ref), counter-zero stage behind the window mux, final OR.
/// Returns 1 = Trojan present.
bool detect_decision(const TrojanConfig& cfg, Volt v_cap, std::uint16_t counter_bits, bool window);

/// detect_decision plus latch updates on the state (v_outc, counter_zero_seen,
/// trojan_flag). Returns the instantaneous decision.
bool detect(TrojanState& state, const TrojanConfig& cfg, std::uint16_t counter_bits, bool window);

struct FeasibilityReport {
  bool fires{false};
  Second time_to_fire{0.0};
  unsigned toggles_to_fire{0};
  Volt v_cap_end{0.0};  // capacitor voltage at window close when it never fires
};

/// Simulates periodic toggling at toggle_rate over the window (first toggle
/// one period in) and reports whether/when the trigger fires.
FeasibilityReport attack_feasibility(const TrojanConfig& cfg, Second window, Hertz toggle_rate);

}  // namespace ehs
