// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ehs/converter.hpp"
#include "ehs/units.hpp"

namespace ehs {

enum class MpptPhase { Idle, SenseP_n, Cvm, SenseP_n1, Compare, Decide, Locked };

const char* to_string(MpptPhase p);

struct MpptConfig {
  unsigned clocks_per_cycle{32};
  unsigned max_cycles{16};
  unsigned sense_clocks{14};
  Ohm r_sen{1e3};
  Second normal_operation_time{150e-6};
  Volt v_solar_threshold{1.0};  // environment-sensor trip level for re-triggering
};

struct MpptSignals {
  bool s{false};   // environment-sensor trigger
  bool s1{false};  // P_n sense window
  bool s2{false};  // P_n+1 sense window
  bool ssen{false};
  bool ssenbar{true};
  bool s3{false};  // comparator enable
  bool s4{false};  // decision strobe
  bool s5{false};  // end-of-cycle I/O strobe
};

// One P&O controller. clock_in_cycle is the 1-based clock number within the
// 32-clock cycle (0 before the first MPPT clock).
//
// Schedule per cycle: S1 on 1-14 (accumulate P_n), CVM on 15 (code - 1),
// S2 on 16-29 (accumulate P_n+1), S3 on 30-31, S4 on 31, S5 on 32.
// Ssen follows S1 or S2, so it is low on 15 and 30-32.
struct MpptState {
  MpptPhase phase{MpptPhase::Idle};
  unsigned cycle_index{0};     // 0..max_cycles-1
  unsigned clock_in_cycle{0};  // 1..32 while a cycle runs
  unsigned code{16};           // thermometer count, 16 down to 0
  Watt p_n{};
  Watt p_n1{};
  bool p_n_valid{false};
  bool p_n1_valid{false};
  MpptSignals signals{};
  bool v_out_comp{true};  // comparator output, drops on MPP achievement
  bool xnor_out{true};
  Volt v_out1{};  // sample-and-hold of V_sens during S1
  Volt v_out2{};  // sample-and-hold of V_sens during S2
  bool exhausted{false};
  // window accumulator scratch
  double accum{0.0};
  unsigned accum_samples{0};
};

/// Advances the controller by one oscillator clock. sensed_power is the
/// current-sensor reading valid during the new clock period; v_sens is the
/// voltage across the sense resistor (held into v_out1/v_out2 at the end of
/// each sense window). Throws ScheduleViolationError when called in Locked.
MpptState step_clock(const MpptState& state, const MpptConfig& cfg, Watt sensed_power,
                     Volt v_sens = Volt{0.0});

/// End-of-cycle P&O decision; callable in the Compare phase with both powers
/// populated. On P_n > P_n+1 locks and reverts the code one step; otherwise
/// carries P_n+1 forward (the Decide slot of clock 32 then leads into the
/// next cycle), or locks by exhaustion at the end of the last cycle.
MpptState compare_and_decide(const MpptState& state);

/// Power delivered into the SoC load, v_out^2 / R_L.
Watt sense_power(const ConverterState& cs, Ohm r_sen);

/// Voltage across the sense resistor, R_sen * i_out.
Volt sense_voltage(const ConverterState& cs, Ohm r_sen);

struct MpptResult {
  unsigned locked_code{0};
  unsigned cycles_used{0};
  bool exhausted{false};
  std::vector<std::pair<Watt, Watt>> cycle_powers;  // (P_n, P_n+1) per cycle
};

using PowerProfile = std::function<Watt(unsigned code)>;
using MpptObserver = std::function<void(const MpptState&, Watt sensed)>;

/// Runs the P&O loop against an arbitrary power-vs-code profile until lock or
/// exhaustion. Deterministic; the observer sees every clock.
MpptResult run_mppt(const PowerProfile& profile, const MpptConfig& cfg,
                    const MpptObserver& observer = {});

/// Same, with the profile built from the PV + converter operating point.
MpptResult run_mppt(const PvParams& pv, const ConverterParams& conv, const MpptConfig& cfg,
                    const MpptObserver& observer = {});

}  // namespace ehs
