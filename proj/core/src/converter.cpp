// SPDX-License-Identifier: Apache-2.0
#include "ehs/converter.hpp"

#include <cmath>
#include <sstream>

#include "ehs/errors.hpp"

namespace ehs {

double impedance_raw(double f_s, double c_u, double alpha, double v_solar, double v_out) {
  const double ratio = v_out / v_solar;
  if (ratio >= 3.0) {
    std::ostringstream msg;
    msg << "impedance singular: v_out/v_solar = " << ratio << " >= 3";
    throw SingularityError(msg.str());
  }
  return (1.0 / (2.0 * f_s * c_u)) * (1.0 + alpha) / ((3.0 - ratio) * alpha);
}

Ohm impedance(const ConverterParams& p, unsigned code, Volt v_solar, Volt v_out) {
  if (code < 1 || code > p.n_code_max) {
    throw std::invalid_argument("impedance: code must be in 1..16");
  }
  return Ohm{impedance_raw(p.f_s.value, p.c_u_at(code).value, p.alpha, v_solar.value, v_out.value)};
}

double output_voltage_raw(double v_solar, double t_period, double r_l, double alpha_c_u) {
  return 3.0 * v_solar / (1.0 + t_period / (2.0 * r_l * alpha_c_u));
}

Volt output_voltage(const ConverterParams& p, unsigned code, Volt v_solar) {
  const double t = 1.0 / p.f_s.value;
  return Volt{output_voltage_raw(v_solar.value, t, p.r_l.value, p.alpha * p.c_u_at(code).value)};
}

double match_capacitance_raw(double v_mpp, double v_out_target, double t_period, double r_l) {
  const double denom = 3.0 * v_mpp / v_out_target - 1.0;
  if (denom <= 0.0) {
    throw InfeasibleError("match_capacitance: requires v_out_target < 3 * v_mpp");
  }
  return (t_period / (2.0 * r_l)) / denom;
}

Farad match_capacitance(const ConverterParams& p, Volt v_mpp, Volt v_out_target) {
  return Farad{match_capacitance_raw(v_mpp.value, v_out_target.value, 1.0 / p.f_s.value,
                                     p.r_l.value)};
}

double pce(Volt v_solar, Volt v_out, double cr) {
  return v_out.value / (v_solar.value * cr) * 100.0;
}

Ampere pv_current(const PvParams& pv, Volt v) {
  return Ampere{pv.irradiance_scale * pv.i_ph.value -
                pv.i_sat.value * std::expm1(v.value / pv.n_vt.value)};
}

namespace {

// The charge-balance relation fixes v_out/v_solar per code, so the converter
// input impedance is a constant for the solve; evaluating the ratio at 1 V
// keeps it well-defined as v_solar -> 0 (dark cell).
double converter_impedance(const ConverterParams& p, unsigned code) {
  const double ratio = output_voltage(p, code, Volt{1.0}).value;
  return impedance_raw(p.f_s.value, p.c_u_at(code).value, p.alpha, 1.0, ratio);
}

}  // namespace

ConverterState operating_point(const PvParams& pv, const ConverterParams& p, unsigned code,
                               const OperatingPointOptions& opt) {
  if (code < 1 || code > p.n_code_max) {
    throw std::invalid_argument("operating_point: code must be in 1..16");
  }
  const double z = converter_impedance(p, code);

  auto residual = [&](double v) { return pv_current(pv, Volt{v}).value - v / z; };
  // fixed-point form v <- Z * I_pv(v); step = damping * (Z*I - v)
  auto fp_step = [&](double v) { return z * pv_current(pv, Volt{v}).value - v; };

  double v = opt.start.value;
  if (v < 0.0) v = 0.0;
  double last_residual = residual(v);
  bool converged = false;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const double step = fp_step(v);
    double d = opt.damping;
    double v_next = v + d * step;
    // The plain 0.5-damped update diverges once the cell runs near open
    // circuit (|d(Z*I)/dv| > 3); halve the step until the residual shrinks.
    for (int halvings = 0; halvings < 60; ++halvings) {
      if (v_next >= 0.0 && std::abs(fp_step(v_next)) <= std::abs(step)) break;
      d *= 0.5;
      v_next = v + d * step;
    }
    const double dv = std::abs(v_next - v);
    v = v_next;
    last_residual = residual(v);
    if (dv <= opt.tol_v && std::abs(last_residual) <= opt.tol_residual) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "operating_point: no convergence after " << opt.max_iterations
        << " iterations, residual " << last_residual << " A";
    throw NonConvergenceError(msg.str(), last_residual);
  }

  ConverterState cs;
  cs.v_solar = Volt{v};
  cs.i_in = pv_current(pv, cs.v_solar);
  cs.v_out = output_voltage(p, code, cs.v_solar);
  cs.i_out = cs.v_out / p.r_l;
  cs.z_cp = Ohm{z};
  cs.pce = pce(cs.v_solar, cs.v_out, p.conversion_ratio);
  return cs;
}

}  // namespace ehs
