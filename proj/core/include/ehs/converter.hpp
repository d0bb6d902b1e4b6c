// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ehs/units.hpp"

namespace ehs {

// Switched-capacitor voltage tripler, small-signal steady-state model.
struct ConverterParams {
  Hertz f_s{150e3};          // switching frequency, normally driven by the oscillator model
  Farad c_u_full{100e-12};   // power capacitor with all 16 bank units engaged
  double alpha{1.0};         // inter-stage capacitor ratio
  double conversion_ratio{3.0};
  Ohm r_l{1e6};              // SoC load
  unsigned n_code_max{16};

  // uniform bank units: C_u scales linearly with the thermometer count
  constexpr Farad c_u_at(unsigned code) const {
    return Farad{c_u_full.value * static_cast<double>(code) / static_cast<double>(n_code_max)};
  }
};

// Single-diode PV cell (no series/shunt resistance). Defaults are calibrated
// so the maximum-power voltage sits at 1.220 V and the MPP source impedance
// lands inside the converter's code-16..code-1 input-impedance range, which
// puts the power-vs-code peak at code 14 for the default scenario.
struct PvParams {
  Ampere i_ph{1.857e-6};     // photocurrent at reference irradiance
  Ampere i_sat{6.63e-16};    // diode saturation current
  Volt n_vt{0.065};          // ideality x thermal voltage
  double irradiance_scale{1.0};
};

struct ConverterState {
  Volt v_solar{};
  Ampere i_in{};
  Volt v_out{};
  Ampere i_out{};  // load current v_out / R_L
  Ohm z_cp{};
  double pce{};  // percent
};

// Raw formula shared by the typed entry point and the equation evaluator:
// Z = 1/(2 f_s C_u) * (1+alpha) / ((3 - v_out/v_solar) * alpha)
double impedance_raw(double f_s, double c_u, double alpha, double v_solar, double v_out);

/// Input impedance of the tripler at a given bank code. Throws
/// SingularityError when v_out >= 3 v_solar.
Ohm impedance(const ConverterParams& p, unsigned code, Volt v_solar, Volt v_out);

double output_voltage_raw(double v_solar, double t_period, double r_l, double alpha_c_u);

/// Steady-state output voltage from the charge-balance relation; always in
/// (0, 3 v_solar) for positive parameters.
Volt output_voltage(const ConverterParams& p, unsigned code, Volt v_solar);

double match_capacitance_raw(double v_mpp, double v_out_target, double t_period, double r_l);

/// alpha*C_u that balances the converter at (v_mpp, v_out_target). Throws
/// InfeasibleError when v_out_target >= 3 v_mpp.
Farad match_capacitance(const ConverterParams& p, Volt v_mpp, Volt v_out_target);

/// Power conversion efficiency in percent: v_out / (v_solar * cr) * 100.
double pce(Volt v_solar, Volt v_out, double cr);

/// I = g*i_ph - i_sat*(exp(v/n_vt) - 1); strictly decreasing in v.
Ampere pv_current(const PvParams& pv, Volt v);

struct OperatingPointOptions {
  double damping{0.5};        // initial step fraction; halved while the residual grows
  double tol_v{1e-9};         // volts
  double tol_residual{1e-12}; // amperes
  int max_iterations{1000};
  Volt start{1.0};
};

/// Solves pv_current(v) = v / Z_cp(code, v) for the PV terminal voltage and
/// fills the full converter state. Throws NonConvergenceError with the last
/// residual when the iteration budget runs out.
ConverterState operating_point(const PvParams& pv, const ConverterParams& p, unsigned code,
                               const OperatingPointOptions& opt = {});

}  // namespace ehs
