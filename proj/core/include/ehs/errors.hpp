// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ehs {

// v_out at or above CR * v_solar: the converter draws no input current and
// the impedance expression is unbounded.
struct SingularityError : std::domain_error {
  using std::domain_error::domain_error;
};

// Requested operating target cannot be met by any capacitance value.
struct InfeasibleError : std::domain_error {
  using std::domain_error::domain_error;
};

// MOS gate drive at or below threshold: on-resistance undefined.
struct SubthresholdError : std::domain_error {
  using std::domain_error::domain_error;
};

// Iterative solver exhausted its iteration budget.
struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& what, double residual_amps)
      : std::runtime_error(what), residual(residual_amps) {}
  double residual;  // last |I_pv - V/Z| in amperes
};

// FSM stepped while locked, or a decision requested out of sequence.
struct ScheduleViolationError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace ehs
