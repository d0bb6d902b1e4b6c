// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace ehs {

// Bad or missing parameter names for an equation (a usage error, not a
// numerical one).
struct EvalUsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Direct access to the model formulas by equation number 1..8:
///  1 impedance            f_s, c_u, alpha, v_solar, v_out
///  2 output voltage       v_solar, t, r_l, alpha_c_u
///  3 matching capacitance v_mpp, v_out, t, r_l
///  4 pce                  v_out, v_solar, cr
///  5 on-resistance        mobility_term, v_gs, v_t
///  6 ripple waveform      r, c, c0, i0, t_period, t
///  7 ripple peak time     r, c, c0, t_period
///  8 ripple peak value    r, c, c0, i0, t_period
/// Numerical domain violations propagate as the module exceptions.
double eval_equation(int eq, const std::map<std::string, double>& params);

}  // namespace ehs
