// SPDX-License-Identifier: Apache-2.0
#include "ehs/mppt.hpp"

#include <map>

#include "ehs/errors.hpp"

namespace ehs {

const char* to_string(MpptPhase p) {
  switch (p) {
    case MpptPhase::Idle: return "Idle";
    case MpptPhase::SenseP_n: return "SenseP_n";
    case MpptPhase::Cvm: return "Cvm";
    case MpptPhase::SenseP_n1: return "SenseP_n1";
    case MpptPhase::Compare: return "Compare";
    case MpptPhase::Decide: return "Decide";
    case MpptPhase::Locked: return "Locked";
  }
  return "?";
}

namespace {

void clear_control_signals(MpptSignals& sig) {
  sig.s1 = sig.s2 = sig.s3 = sig.s4 = sig.s5 = false;
  sig.ssen = false;
  sig.ssenbar = true;
}

}  // namespace

MpptState step_clock(const MpptState& state, const MpptConfig& cfg, Watt sensed_power,
                     Volt v_sens) {
  if (state.phase == MpptPhase::Locked) {
    throw ScheduleViolationError("step_clock: controller is locked, signals must remain reset");
  }

  MpptState s = state;

  if (s.phase == MpptPhase::Idle && !s.signals.s) {
    clear_control_signals(s.signals);
    return s;  // waiting for the environment sensor
  }

  const unsigned n_clocks = cfg.clocks_per_cycle;       // 32
  const unsigned sense = cfg.sense_clocks;              // 14
  const unsigned cvm_clock = sense + 1;                 // 15
  const unsigned sense2_end = cvm_clock + sense;        // 29
  const unsigned compare_first = sense2_end + 1;        // 30
  const unsigned compare_last = n_clocks - 1;           // 31

  // advance to the next clock slot
  unsigned n;
  if (s.phase == MpptPhase::Idle) {
    n = 1;
  } else if (s.clock_in_cycle == compare_last) {
    if (s.phase == MpptPhase::Compare) {
      throw ScheduleViolationError("step_clock: compare_and_decide must resolve clock 31 first");
    }
    n = n_clocks;  // Decide slot
  } else if (s.clock_in_cycle >= n_clocks) {
    s.cycle_index += 1;  // wrap into the next MPPT cycle
    n = 1;
  } else {
    n = s.clock_in_cycle + 1;
  }
  s.clock_in_cycle = n;

  s.signals.s1 = (n >= 1 && n <= sense);
  s.signals.s2 = (n >= cvm_clock + 1 && n <= sense2_end);
  s.signals.ssen = s.signals.s1 || s.signals.s2;
  s.signals.ssenbar = !s.signals.ssen;
  s.signals.s3 = (n == compare_first || n == compare_last);
  s.signals.s4 = (n == compare_last);
  s.signals.s5 = (n == n_clocks);

  if (n <= sense) {
    s.phase = MpptPhase::SenseP_n;
  } else if (n == cvm_clock) {
    s.phase = MpptPhase::Cvm;
  } else if (n <= sense2_end) {
    s.phase = MpptPhase::SenseP_n1;
  } else if (n <= compare_last) {
    s.phase = MpptPhase::Compare;
  } else {
    s.phase = MpptPhase::Decide;
  }

  if (n == 1 || n == cvm_clock + 1) {
    s.accum = 0.0;
    s.accum_samples = 0;
  }

  if (s.signals.s1 || s.signals.s2) {
    s.accum += sensed_power.value;
    s.accum_samples += 1;
  }
  if (n == sense) {  // P_n window closes
    s.p_n = Watt{s.accum / s.accum_samples};
    s.p_n_valid = true;
    s.v_out1 = v_sens;
  } else if (n == cvm_clock) {
    if (s.code > 0) s.code -= 1;  // thermometer bit b[code-1] goes low
  } else if (n == sense2_end) {  // P_n+1 window closes
    s.p_n1 = Watt{s.accum / s.accum_samples};
    s.p_n1_valid = true;
    s.v_out2 = v_sens;
  }

  return s;
}

MpptState compare_and_decide(const MpptState& state) {
  if (state.phase != MpptPhase::Compare) {
    throw ScheduleViolationError("compare_and_decide: controller not in the Compare phase");
  }
  if (!state.p_n_valid || !state.p_n1_valid) {
    throw ScheduleViolationError("compare_and_decide: both power samples must be populated");
  }

  MpptState s = state;
  const bool power_dropped = s.p_n.value > s.p_n1.value;
  const bool last_cycle = s.cycle_index + 1 >= 16;

  if (power_dropped) {
    // previous code had more power: revert one step and freeze
    s.phase = MpptPhase::Locked;
    s.v_out_comp = false;
    s.xnor_out = false;
    s.code = s.code >= 16 ? 16 : s.code + 1;
    clear_control_signals(s.signals);
    s.signals.s = false;
    return s;
  }
  if (last_cycle) {
    // never saw a decrease: the walk ends at the final code
    s.phase = MpptPhase::Locked;
    s.exhausted = true;
    clear_control_signals(s.signals);
    s.signals.s = false;
    return s;
  }
  s.phase = MpptPhase::Decide;  // clock 32 runs next, then the next cycle
  s.p_n = s.p_n1;
  s.v_out1 = s.v_out2;
  s.p_n1_valid = false;
  return s;
}

Watt sense_power(const ConverterState& cs, Ohm /*r_sen*/) {
  // R_sen only scales the measurement node, not the measured power
  return cs.v_out * cs.i_out;
}

Volt sense_voltage(const ConverterState& cs, Ohm r_sen) {
  return cs.i_out * r_sen;
}

namespace {

// power and sense-node voltage as seen by the controller at a given code
using CodeReadout = std::function<std::pair<Watt, Volt>(unsigned)>;

MpptResult drive_mppt(const CodeReadout& readout, const MpptConfig& cfg,
                      const MpptObserver& observer) {
  MpptState st;
  st.signals.s = true;  // triggered
  MpptResult res;

  const unsigned max_steps = cfg.max_cycles * cfg.clocks_per_cycle + 4;
  for (unsigned i = 0; i < max_steps && st.phase != MpptPhase::Locked; ++i) {
    const auto [power, v_sens] = readout(st.code);
    st = step_clock(st, cfg, power, v_sens);
    if (observer) observer(st, power);
    if (st.phase == MpptPhase::Compare && st.clock_in_cycle == cfg.clocks_per_cycle - 1) {
      res.cycle_powers.emplace_back(st.p_n, st.p_n1);
      st = compare_and_decide(st);
    }
  }

  res.locked_code = st.code;
  res.cycles_used = st.cycle_index + 1;
  res.exhausted = st.exhausted;
  return res;
}

}  // namespace

MpptResult run_mppt(const PowerProfile& profile, const MpptConfig& cfg,
                    const MpptObserver& observer) {
  return drive_mppt([&](unsigned code) { return std::pair{profile(code), Volt{0.0}}; }, cfg,
                    observer);
}

MpptResult run_mppt(const PvParams& pv, const ConverterParams& conv, const MpptConfig& cfg,
                    const MpptObserver& observer) {
  std::map<unsigned, ConverterState> cache;
  auto readout = [&](unsigned code) -> std::pair<Watt, Volt> {
    if (code == 0) return {Watt{0.0}, Volt{0.0}};
    auto it = cache.find(code);
    if (it == cache.end()) {
      it = cache.emplace(code, operating_point(pv, conv, code)).first;
    }
    return {sense_power(it->second, cfg.r_sen), sense_voltage(it->second, cfg.r_sen)};
  };
  return drive_mppt(readout, cfg, observer);
}

}  // namespace ehs
