// SPDX-License-Identifier: Apache-2.0
#include "ehs/trace.hpp"

#include <cstdio>
#include <ostream>

namespace ehs {

namespace {

// regression-stable float rendering, 9 significant digits
std::string fmt_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string trace_csv_header() {
  std::string h = "time_us,clock_index,fsm_state,code";
  for (int b = 15; b >= 0; --b) {
    h += ",b" + std::to_string(b);
  }
  h += ",v_solar,v_out,p_sense_uw,S,S1,S2,Ssen,S3,S4,S5,i,v_cap_mv,rst,trojan_flag";
  return h;
}

std::string trace_csv_row(const TraceRecord& r) {
  std::string row;
  row.reserve(160);
  row += fmt_g9(r.time.value * 1e6);
  row += ',';
  row += std::to_string(r.clock_index);
  row += ',';
  row += to_string(r.fsm_state);
  row += ',';
  row += std::to_string(r.code);
  const std::uint16_t mask = ThermometerCode{r.code}.mask();
  for (int b = 15; b >= 0; --b) {
    row += ',';
    row += ((mask >> b) & 1u) ? '1' : '0';
  }
  row += ',';
  row += fmt_g9(r.v_solar.value);
  row += ',';
  row += fmt_g9(r.v_out.value);
  row += ',';
  row += fmt_g9(r.p_sense.value * 1e6);
  const bool bits[] = {r.signals.s,  r.signals.s1, r.signals.s2,       r.signals.ssen,
                       r.signals.s3, r.signals.s4, r.signals.s5,       r.signals.window_i};
  for (bool bit : bits) {
    row += bit ? ",1" : ",0";
  }
  row += ',';
  row += fmt_g9(r.trojan_cap_v.value * 1e3);
  row += r.rst ? ",1" : ",0";
  row += r.trojan_flag ? ",1" : ",0";
  return row;
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace) {
  os << trace_csv_header() << '\n';
  for (const auto& r : trace) {
    os << trace_csv_row(r) << '\n';
  }
}

}  // namespace ehs
