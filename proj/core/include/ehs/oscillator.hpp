// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "ehs/units.hpp"

namespace ehs {

// Ring-oscillator flavors with different NBTI exposure. ReducedSupply is the
// aging-tolerant design that removes supply stress in non-oscillation mode.
enum class RoVariant { Conventional, Aro, ReducedSupply };

const char* to_string(RoVariant v);
std::optional<RoVariant> ro_variant_from_string(const char* name);

struct OscillatorConfig {
  RoVariant variant{RoVariant::ReducedSupply};
  Hertz f_nominal{150e3};
  Year age{0.0};
  Celsius temperature{27.0};
  // Reversible shift in Hz per degree C. Unset means the per-variant default
  // (Conventional -30, Aro -20, ReducedSupply -10).
  std::optional<double> temp_sensitivity_hz_per_c{};
  Celsius accel_ref_temp{27.0};
  double accel_factor_per_40c{1.5};  // aging acceleration multiplier per 40 C above reference
};

double default_temp_sensitivity(RoVariant v);

/// Frequency after irreversible aging (tabulated anchors, piecewise-linear in
/// effective age) plus the reversible temperature shift. Effective age grows
/// by accel_factor_per_40c^((T - ref)/40) above the reference temperature and
/// clamps at the 20-year anchor.
Hertz frequency_at(const OscillatorConfig& cfg);

/// 100 * (f_nominal - frequency_at) / f_nominal.
double degradation_percent(const OscillatorConfig& cfg);

/// true when the (accelerated) age was clamped to the last tabulated anchor.
bool age_clamped(const OscillatorConfig& cfg);

}  // namespace ehs
