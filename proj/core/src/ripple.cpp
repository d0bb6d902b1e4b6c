// SPDX-License-Identifier: Apache-2.0
#include "ehs/ripple.hpp"

#include <algorithm>
#include <cmath>

#include "ehs/errors.hpp"

namespace ehs {

double on_resistance_raw(double mobility_term, double v_gs, double v_t) {
  const double overdrive = v_gs - v_t;
  if (overdrive <= 0.0) {
    throw SubthresholdError("on_resistance: requires v_gs > v_t");
  }
  return 1.0 / (mobility_term * overdrive);
}

Ohm on_resistance(const RippleParams& p) {
  return Ohm{on_resistance_raw(p.mobility_term, p.v_gs.value, p.v_t.value)};
}

namespace {
inline double series_cp(double c, double c0) { return c * c0 / (c + c0); }
}  // namespace

// Charge transfer happens within T/2, so the drive term carries T/2; the
// peak-time and peak-value closed forms below are the exact stationary point
// of this waveform (up to the 1-exp factor kept in t_max).
double ripple_waveform_raw(double r, double c, double c0, double i0, double t_period, double t) {
  const double tau = r * series_cp(c, c0);
  return (t_period * i0 / (2.0 * (c + c0))) * -std::expm1(-t / tau) - i0 * t / (c + c0);
}

Volt ripple_waveform(const RippleParams& p, Second period, Second t) {
  return Volt{ripple_waveform_raw(p.r_on.value, p.c.value, p.c0.value, p.i0.value, period.value,
                                  t.value)};
}

double t_max_raw(double r, double c, double c0, double t_period) {
  const double tau = r * series_cp(c, c0);
  const double half = t_period / 2.0;
  return tau * std::log(half / (tau * -std::expm1(-half / tau)));
}

Second ripple_t_max(const RippleParams& p, Second period) {
  return Second{t_max_raw(p.r_on.value, p.c.value, p.c0.value, period.value)};
}

double ripple_max_raw(double r, double c, double c0, double i0, double t_period) {
  const double half = t_period / 2.0;
  const double sum = c + c0;
  const double tau = r * series_cp(c, c0);
  return t_period * i0 / (2.0 * sum) -
         (r * i0 * c * c0 / (sum * sum)) * (1.0 + std::log(half / tau));
}

double ripple_max_unclamped(const RippleParams& p, Second period) {
  return ripple_max_raw(p.r_on.value, p.c.value, p.c0.value, p.i0.value, period.value);
}

Volt ripple_max(const RippleParams& p, Second period) {
  return Volt{std::max(0.0, ripple_max_unclamped(p, period))};
}

}  // namespace ehs
