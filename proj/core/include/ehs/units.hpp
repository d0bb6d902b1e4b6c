// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <compare>

namespace ehs {

// Strong scalar wrapper: one tag type per physical unit, magnitude in SI.
// Arithmetic is deliberately limited to same-unit add/sub and scaling by a
// dimensionless factor; anything else goes through .value explicitly.
template <class Tag>
struct Quantity {
  double value{0.0};

  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value(v) {}

  friend constexpr auto operator<=>(const Quantity&, const Quantity&) = default;

  friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity{a.value + b.value}; }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity{a.value - b.value}; }
  friend constexpr Quantity operator-(Quantity a) { return Quantity{-a.value}; }
  friend constexpr Quantity operator*(Quantity a, double k) { return Quantity{a.value * k}; }
  friend constexpr Quantity operator*(double k, Quantity a) { return Quantity{a.value * k}; }
  friend constexpr Quantity operator/(Quantity a, double k) { return Quantity{a.value / k}; }
  // ratio of two like quantities is dimensionless
  friend constexpr double operator/(Quantity a, Quantity b) { return a.value / b.value; }

  constexpr bool finite() const { return std::isfinite(value); }
};

using Volt = Quantity<struct VoltTag>;
using Ampere = Quantity<struct AmpereTag>;
using Ohm = Quantity<struct OhmTag>;
using Farad = Quantity<struct FaradTag>;
using Hertz = Quantity<struct HertzTag>;
using Second = Quantity<struct SecondTag>;
using Watt = Quantity<struct WattTag>;
using Celsius = Quantity<struct CelsiusTag>;
using Year = Quantity<struct YearTag>;

// The few cross-unit products the models actually use.
constexpr Ampere operator/(Volt v, Ohm r) { return Ampere{v.value / r.value}; }
constexpr Ohm operator/(Volt v, Ampere i) { return Ohm{v.value / i.value}; }
constexpr Watt operator*(Volt v, Ampere i) { return Watt{v.value * i.value}; }
constexpr Volt operator*(Ampere i, Ohm r) { return Volt{i.value * r.value}; }
constexpr Second period_of(Hertz f) { return Second{1.0 / f.value}; }

}  // namespace ehs
