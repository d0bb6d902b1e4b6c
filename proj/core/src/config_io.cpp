// SPDX-License-Identifier: Apache-2.0
#include "ehs/config_io.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

namespace ehs {

namespace {

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);  // exact double round-trip
  return buf;
}

std::string trim(std::string_view sv) {
  size_t b = 0, e = sv.size();
  while (b < e && std::isspace(static_cast<unsigned char>(sv[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(sv[e - 1]))) --e;
  return std::string(sv.substr(b, e - b));
}

bool parse_double(const std::string& s, double& out) {
  errno = 0;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end && *end == '\0' && !s.empty() && errno == 0;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  errno = 0;
  char* end = nullptr;
  out = std::strtoull(s.c_str(), &end, 10);
  return end && *end == '\0' && !s.empty() && errno == 0;
}

bool parse_bool(const std::string& s, bool& out) {
  if (s == "true" || s == "1") { out = true; return true; }
  if (s == "false" || s == "0") { out = false; return true; }
  return false;
}

using Setter = std::function<bool(ScenarioConfig&, const std::string&)>;

struct Key {
  const char* section;
  const char* name;
  Setter set;
};

template <class F>
Setter num(F assign) {
  return [assign](ScenarioConfig& c, const std::string& v) {
    double d;
    if (!parse_double(v, d)) return false;
    assign(c, d);
    return true;
  };
}

template <class F>
Setter uns(F assign) {
  return [assign](ScenarioConfig& c, const std::string& v) {
    std::uint64_t u;
    if (!parse_u64(v, u)) return false;
    assign(c, u);
    return true;
  };
}

template <class F>
Setter flag(F assign) {
  return [assign](ScenarioConfig& c, const std::string& v) {
    bool b;
    if (!parse_bool(v, b)) return false;
    assign(c, b);
    return true;
  };
}

TrojanConfig& trojan_of(ScenarioConfig& c) {
  if (!c.trojan) c.trojan.emplace();
  return *c.trojan;
}

const std::vector<Key>& key_table() {
  static const std::vector<Key> keys = {
      {"pv", "i_ph", num([](ScenarioConfig& c, double v) { c.pv.i_ph = Ampere{v}; })},
      {"pv", "i_sat", num([](ScenarioConfig& c, double v) { c.pv.i_sat = Ampere{v}; })},
      {"pv", "n_vt", num([](ScenarioConfig& c, double v) { c.pv.n_vt = Volt{v}; })},
      {"pv", "irradiance_scale",
       num([](ScenarioConfig& c, double v) { c.pv.irradiance_scale = v; })},

      {"converter", "f_s", num([](ScenarioConfig& c, double v) { c.converter.f_s = Hertz{v}; })},
      {"converter", "c_u_full",
       num([](ScenarioConfig& c, double v) { c.converter.c_u_full = Farad{v}; })},
      {"converter", "alpha", num([](ScenarioConfig& c, double v) { c.converter.alpha = v; })},
      {"converter", "conversion_ratio",
       num([](ScenarioConfig& c, double v) { c.converter.conversion_ratio = v; })},
      {"converter", "r_l", num([](ScenarioConfig& c, double v) { c.converter.r_l = Ohm{v}; })},
      {"converter", "n_code_max",
       uns([](ScenarioConfig& c, std::uint64_t v) { c.converter.n_code_max = static_cast<unsigned>(v); })},

      {"ripple", "r_on", num([](ScenarioConfig& c, double v) { c.ripple.r_on = Ohm{v}; })},
      {"ripple", "c", num([](ScenarioConfig& c, double v) { c.ripple.c = Farad{v}; })},
      {"ripple", "c0", num([](ScenarioConfig& c, double v) { c.ripple.c0 = Farad{v}; })},
      {"ripple", "i0", num([](ScenarioConfig& c, double v) { c.ripple.i0 = Ampere{v}; })},
      {"ripple", "mobility_term",
       num([](ScenarioConfig& c, double v) { c.ripple.mobility_term = v; })},
      {"ripple", "v_gs", num([](ScenarioConfig& c, double v) { c.ripple.v_gs = Volt{v}; })},
      {"ripple", "v_t", num([](ScenarioConfig& c, double v) { c.ripple.v_t = Volt{v}; })},

      {"oscillator", "variant",
       [](ScenarioConfig& c, const std::string& v) {
         auto var = ro_variant_from_string(v.c_str());
         if (!var) return false;
         c.oscillator.variant = *var;
         return true;
       }},
      {"oscillator", "f_nominal",
       num([](ScenarioConfig& c, double v) { c.oscillator.f_nominal = Hertz{v}; })},
      {"oscillator", "age", num([](ScenarioConfig& c, double v) { c.oscillator.age = Year{v}; })},
      {"oscillator", "temperature",
       num([](ScenarioConfig& c, double v) { c.oscillator.temperature = Celsius{v}; })},
      {"oscillator", "temp_sensitivity",
       num([](ScenarioConfig& c, double v) { c.oscillator.temp_sensitivity_hz_per_c = v; })},
      {"oscillator", "accel_ref_temp",
       num([](ScenarioConfig& c, double v) { c.oscillator.accel_ref_temp = Celsius{v}; })},
      {"oscillator", "accel_factor_per_40c",
       num([](ScenarioConfig& c, double v) { c.oscillator.accel_factor_per_40c = v; })},

      {"mppt", "clocks_per_cycle",
       uns([](ScenarioConfig& c, std::uint64_t v) { c.mppt.clocks_per_cycle = static_cast<unsigned>(v); })},
      {"mppt", "max_cycles",
       uns([](ScenarioConfig& c, std::uint64_t v) { c.mppt.max_cycles = static_cast<unsigned>(v); })},
      {"mppt", "sense_clocks",
       uns([](ScenarioConfig& c, std::uint64_t v) { c.mppt.sense_clocks = static_cast<unsigned>(v); })},
      {"mppt", "r_sen", num([](ScenarioConfig& c, double v) { c.mppt.r_sen = Ohm{v}; })},
      {"mppt", "normal_operation_time",
       num([](ScenarioConfig& c, double v) { c.mppt.normal_operation_time = Second{v}; })},
      {"mppt", "v_solar_threshold",
       num([](ScenarioConfig& c, double v) { c.mppt.v_solar_threshold = Volt{v}; })},

      {"trojan", "enabled",
       flag([](ScenarioConfig& c, bool v) { trojan_of(c).enabled = v; })},
      {"trojan", "eta", num([](ScenarioConfig& c, double v) { trojan_of(c).eta = v; })},
      {"trojan", "tau_leak",
       num([](ScenarioConfig& c, double v) { trojan_of(c).tau_leak = Second{v}; })},
      {"trojan", "v_trig", num([](ScenarioConfig& c, double v) { trojan_of(c).v_trig = Volt{v}; })},
      {"trojan", "v_dd", num([](ScenarioConfig& c, double v) { trojan_of(c).v_dd = Volt{v}; })},
      {"trojan", "toggle_source",
       [](ScenarioConfig& c, const std::string& v) {
         auto src = toggle_source_from_string(v.c_str());
         if (!src) return false;
         trojan_of(c).toggle_source = *src;
         return true;
       }},
      {"trojan", "toggle_rate",
       num([](ScenarioConfig& c, double v) { trojan_of(c).toggle_rate = Hertz{v}; })},
      {"trojan", "v_ref", num([](ScenarioConfig& c, double v) { trojan_of(c).v_ref = Volt{v}; })},

      {"sim", "duration", num([](ScenarioConfig& c, double v) { c.sim.duration = Second{v}; })},
      {"sim", "seed", uns([](ScenarioConfig& c, std::uint64_t v) { c.sim.seed = v; })},
      {"sim", "trace_decimation",
       uns([](ScenarioConfig& c, std::uint64_t v) { c.sim.trace_decimation = static_cast<unsigned>(v); })},

      {"budget", "ro",
       num([](ScenarioConfig& c, double v) { c.budget.per_block["RO"] = Watt{v}; })},
      {"budget", "current_sensor",
       num([](ScenarioConfig& c, double v) { c.budget.per_block["CurrentSensor"] = Watt{v}; })},
      {"budget", "fsm",
       num([](ScenarioConfig& c, double v) { c.budget.per_block["FSM"] = Watt{v}; })},
      {"budget", "comparator",
       num([](ScenarioConfig& c, double v) { c.budget.per_block["Comparator"] = Watt{v}; })},
      {"budget", "charge_pump_control",
       num([](ScenarioConfig& c, double v) { c.budget.per_block["ChargePumpControl"] = Watt{v}; })},
      {"budget", "misc",
       num([](ScenarioConfig& c, double v) { c.budget.per_block["Misc"] = Watt{v}; })},
  };
  return keys;
}

bool known_section(const std::string& s) {
  static const char* sections[] = {"pv", "converter", "ripple", "oscillator",
                                   "mppt", "trojan", "sim", "budget"};
  for (const char* k : sections) {
    if (s == k) return true;
  }
  return false;
}

}  // namespace

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "[pv]\n";
  os << "i_ph = " << fmt_full(cfg.pv.i_ph.value) << "\n";
  os << "i_sat = " << fmt_full(cfg.pv.i_sat.value) << "\n";
  os << "n_vt = " << fmt_full(cfg.pv.n_vt.value) << "\n";
  os << "irradiance_scale = " << fmt_full(cfg.pv.irradiance_scale) << "\n";

  os << "\n[converter]\n";
  os << "f_s = " << fmt_full(cfg.converter.f_s.value) << "\n";
  os << "c_u_full = " << fmt_full(cfg.converter.c_u_full.value) << "\n";
  os << "alpha = " << fmt_full(cfg.converter.alpha) << "\n";
  os << "conversion_ratio = " << fmt_full(cfg.converter.conversion_ratio) << "\n";
  os << "r_l = " << fmt_full(cfg.converter.r_l.value) << "\n";
  os << "n_code_max = " << cfg.converter.n_code_max << "\n";

  os << "\n[ripple]\n";
  os << "r_on = " << fmt_full(cfg.ripple.r_on.value) << "\n";
  os << "c = " << fmt_full(cfg.ripple.c.value) << "\n";
  os << "c0 = " << fmt_full(cfg.ripple.c0.value) << "\n";
  os << "i0 = " << fmt_full(cfg.ripple.i0.value) << "\n";
  os << "mobility_term = " << fmt_full(cfg.ripple.mobility_term) << "\n";
  os << "v_gs = " << fmt_full(cfg.ripple.v_gs.value) << "\n";
  os << "v_t = " << fmt_full(cfg.ripple.v_t.value) << "\n";

  os << "\n[oscillator]\n";
  os << "variant = " << to_string(cfg.oscillator.variant) << "\n";
  os << "f_nominal = " << fmt_full(cfg.oscillator.f_nominal.value) << "\n";
  os << "age = " << fmt_full(cfg.oscillator.age.value) << "\n";
  os << "temperature = " << fmt_full(cfg.oscillator.temperature.value) << "\n";
  if (cfg.oscillator.temp_sensitivity_hz_per_c) {
    os << "temp_sensitivity = " << fmt_full(*cfg.oscillator.temp_sensitivity_hz_per_c) << "\n";
  }
  os << "accel_ref_temp = " << fmt_full(cfg.oscillator.accel_ref_temp.value) << "\n";
  os << "accel_factor_per_40c = " << fmt_full(cfg.oscillator.accel_factor_per_40c) << "\n";

  os << "\n[mppt]\n";
  os << "clocks_per_cycle = " << cfg.mppt.clocks_per_cycle << "\n";
  os << "max_cycles = " << cfg.mppt.max_cycles << "\n";
  os << "sense_clocks = " << cfg.mppt.sense_clocks << "\n";
  os << "r_sen = " << fmt_full(cfg.mppt.r_sen.value) << "\n";
  os << "normal_operation_time = " << fmt_full(cfg.mppt.normal_operation_time.value) << "\n";
  os << "v_solar_threshold = " << fmt_full(cfg.mppt.v_solar_threshold.value) << "\n";

  if (cfg.trojan) {
    const auto& t = *cfg.trojan;
    os << "\n[trojan]\n";
    os << "enabled = " << (t.enabled ? "true" : "false") << "\n";
    os << "eta = " << fmt_full(t.eta) << "\n";
    os << "tau_leak = " << fmt_full(t.tau_leak.value) << "\n";
    os << "v_trig = " << fmt_full(t.v_trig.value) << "\n";
    os << "v_dd = " << fmt_full(t.v_dd.value) << "\n";
    os << "toggle_source = " << to_string(t.toggle_source) << "\n";
    os << "toggle_rate = " << fmt_full(t.toggle_rate.value) << "\n";
    os << "v_ref = " << fmt_full(t.v_ref.value) << "\n";
  }

  os << "\n[sim]\n";
  os << "duration = " << fmt_full(cfg.sim.duration.value) << "\n";
  os << "seed = " << cfg.sim.seed << "\n";
  os << "trace_decimation = " << cfg.sim.trace_decimation << "\n";

  os << "\n[budget]\n";
  auto block = [&](const char* key, const char* name) {
    auto it = cfg.budget.per_block.find(name);
    os << key << " = " << fmt_full(it == cfg.budget.per_block.end() ? 0.0 : it->second.value)
       << "\n";
  };
  block("ro", "RO");
  block("current_sensor", "CurrentSensor");
  block("fsm", "FSM");
  block("comparator", "Comparator");
  block("charge_pump_control", "ChargePumpControl");
  block("misc", "Misc");

  return os.str();
}

ConfigParseResult parse_config(std::string_view text) {
  ConfigParseResult res;
  ScenarioConfig cfg;
  cfg.trojan.reset();  // only engaged when a [trojan] section appears

  std::string section;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        res.errors.push_back("line " + std::to_string(line_no) + ": malformed section header");
        continue;
      }
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!known_section(section)) {
        res.errors.push_back("line " + std::to_string(line_no) + ": unknown section [" + section +
                             "]");
        section.clear();
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      res.errors.push_back("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    if (section.empty()) {
      res.errors.push_back("line " + std::to_string(line_no) + ": key outside any section");
      continue;
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    bool found = false;
    for (const auto& k : key_table()) {
      if (section == k.section && key == k.name) {
        found = true;
        if (!k.set(cfg, value)) {
          res.errors.push_back("line " + std::to_string(line_no) + ": bad value for " + section +
                               "." + key + ": '" + value + "'");
        }
        break;
      }
    }
    if (!found) {
      res.errors.push_back("line " + std::to_string(line_no) + ": unknown key '" + key +
                           "' in section [" + section + "]");
    }
  }

  if (res.errors.empty()) res.config = std::move(cfg);
  return res;
}

ConfigParseResult load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    ConfigParseResult res;
    res.errors.push_back("cannot open config file: " + path);
    return res;
  }
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace ehs
