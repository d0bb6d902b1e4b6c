// SPDX-License-Identifier: Apache-2.0
#include "ehs/oscillator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>

namespace ehs {

const char* to_string(RoVariant v) {
  switch (v) {
    case RoVariant::Conventional: return "conventional";
    case RoVariant::Aro: return "aro";
    case RoVariant::ReducedSupply: return "reduced_supply";
  }
  return "?";
}

std::optional<RoVariant> ro_variant_from_string(const char* name) {
  if (std::strcmp(name, "conventional") == 0) return RoVariant::Conventional;
  if (std::strcmp(name, "aro") == 0) return RoVariant::Aro;
  if (std::strcmp(name, "reduced_supply") == 0) return RoVariant::ReducedSupply;
  return std::nullopt;
}

double default_temp_sensitivity(RoVariant v) {
  switch (v) {
    case RoVariant::Conventional: return -30.0;
    case RoVariant::Aro: return -20.0;
    case RoVariant::ReducedSupply: return -10.0;
  }
  return 0.0;
}

namespace {

constexpr std::array<double, 5> kAnchorYears{0.0, 5.0, 10.0, 15.0, 20.0};

// Measured frequency anchors at the reference temperature, in Hz.
constexpr std::array<double, 5> kConventional{150000.0, 130000.0, 115500.0, 111000.0, 110000.0};
constexpr std::array<double, 5> kAro{150000.0, 139900.0, 138700.0, 138500.0, 138000.0};
constexpr std::array<double, 5> kReducedSupply{150000.0, 148200.0, 147600.0, 147300.0, 147000.0};

const std::array<double, 5>& anchors_for(RoVariant v) {
  switch (v) {
    case RoVariant::Conventional: return kConventional;
    case RoVariant::Aro: return kAro;
    case RoVariant::ReducedSupply: return kReducedSupply;
  }
  return kConventional;
}

double effective_age(const OscillatorConfig& cfg) {
  double age = std::max(0.0, cfg.age.value);
  const double over = cfg.temperature.value - cfg.accel_ref_temp.value;
  if (over > 0.0) {
    age *= std::pow(cfg.accel_factor_per_40c, over / 40.0);
  }
  return age;
}

double interp_anchors(const std::array<double, 5>& f, double age) {
  if (age <= kAnchorYears.front()) return f.front();
  if (age >= kAnchorYears.back()) return f.back();
  std::size_t hi = 1;
  while (kAnchorYears[hi] < age) ++hi;
  if (kAnchorYears[hi] == age) return f[hi];  // exact anchor, no rounding
  const std::size_t lo = hi - 1;
  const double t = (age - kAnchorYears[lo]) / (kAnchorYears[hi] - kAnchorYears[lo]);
  return f[lo] + t * (f[hi] - f[lo]);
}

}  // namespace

bool age_clamped(const OscillatorConfig& cfg) {
  return effective_age(cfg) > kAnchorYears.back();
}

Hertz frequency_at(const OscillatorConfig& cfg) {
  const auto& anchors = anchors_for(cfg.variant);
  // anchors are stated for the nominal 150 kHz design; scale for other nominals
  const double scale = cfg.f_nominal.value / anchors.front();
  const double aged = interp_anchors(anchors, effective_age(cfg)) * scale;
  const double sens =
      cfg.temp_sensitivity_hz_per_c.value_or(default_temp_sensitivity(cfg.variant));
  return Hertz{aged + sens * (cfg.temperature.value - cfg.accel_ref_temp.value)};
}

double degradation_percent(const OscillatorConfig& cfg) {
  return 100.0 * (cfg.f_nominal.value - frequency_at(cfg).value) / cfg.f_nominal.value;
}

}  // namespace ehs
