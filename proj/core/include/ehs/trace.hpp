// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ehs/mppt.hpp"
#include "ehs/thermometer.hpp"
#include "ehs/units.hpp"

namespace ehs {

struct TraceSignals {
  bool s{false};
  bool s1{false};
  bool s2{false};
  bool ssen{false};
  bool s3{false};
  bool s4{false};
  bool s5{false};
  bool window_i{false};
};

// One record per oscillator clock period.
struct TraceRecord {
  Second time{};
  std::uint64_t clock_index{};
  MpptPhase fsm_state{MpptPhase::Idle};
  unsigned code{16};
  Volt v_solar{};
  Volt v_out{};
  Watt p_sense{};
  TraceSignals signals{};
  Volt trojan_cap_v{};
  bool rst{false};
  bool trojan_flag{false};
};

// Column order is fixed and the header is mandatory:
// time_us,clock_index,fsm_state,code,b15..b0,v_solar,v_out,p_sense_uw,
// S,S1,S2,Ssen,S3,S4,S5,i,v_cap_mv,rst,trojan_flag
std::string trace_csv_header();
std::string trace_csv_row(const TraceRecord& r);
void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace);

}  // namespace ehs
