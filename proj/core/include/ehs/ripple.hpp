// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ehs/units.hpp"

namespace ehs {

// Output-stage equivalent circuit of the pump: pump-side capacitor C feeding
// the output capacitor C0 through the MOS on-resistance, load current I0.
struct RippleParams {
  Ohm r_on{200.0};
  Farad c{1.2e-9};
  Farad c0{1.2e-9};
  Ampere i0{9e-6};
  double mobility_term{5e-3};  // mu_n * C_ox * W/L, A/V^2
  Volt v_gs{1.6};
  Volt v_t{0.6};

  // Effective capacitance seen during the half-period charge transfer.
  // The source equations leave C_p undefined; the series combination is the
  // only choice consistent with the C0-parallel-with-C transfer picture.
  constexpr Farad series_cp() const {
    return Farad{c.value * c0.value / (c.value + c0.value)};
  }
};

double on_resistance_raw(double mobility_term, double v_gs, double v_t);

/// Triode-region on-resistance 1/(mobility_term * (v_gs - v_t)).
/// Throws SubthresholdError when v_gs <= v_t.
Ohm on_resistance(const RippleParams& p);

double ripple_waveform_raw(double r, double c, double c0, double i0, double t_period, double t);

/// Ripple voltage at time t within the transfer half-period [0, T/2].
Volt ripple_waveform(const RippleParams& p, Second period, Second t);

double t_max_raw(double r, double c, double c0, double t_period);

/// Time of the ripple peak within (0, T/2).
Second ripple_t_max(const RippleParams& p, Second period);

double ripple_max_raw(double r, double c, double c0, double i0, double t_period);

/// Peak ripple magnitude. The closed form can go negative for extreme
/// on-resistance (outside its R*C_p << T/2 premise); the reported value is
/// clamped at zero - use ripple_max_unclamped to see the raw formula value.
Volt ripple_max(const RippleParams& p, Second period);
double ripple_max_unclamped(const RippleParams& p, Second period);

}  // namespace ehs
