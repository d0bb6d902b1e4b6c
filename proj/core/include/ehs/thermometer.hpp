// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace ehs {

// Thermometer-coded capacitor-bank selection. Stored as a set-bit count so an
// invalid (non-contiguous) pattern cannot be represented; the mask rendering
// sets b0..b(count-1). Decrementing clears the highest set bit.
class ThermometerCode {
 public:
  static constexpr unsigned kBits = 16;

  constexpr ThermometerCode() = default;
  constexpr explicit ThermometerCode(unsigned count) : count_(count > kBits ? kBits : count) {}

  constexpr unsigned count() const { return count_; }

  constexpr std::uint16_t mask() const {
    return count_ >= kBits ? 0xFFFFu : static_cast<std::uint16_t>((1u << count_) - 1u);
  }

  // true if a bit was cleared, false when already all-zero
  constexpr bool decrement() {
    if (count_ == 0) return false;
    --count_;
    return true;
  }

  static constexpr bool valid_pattern(std::uint16_t mask) {
    // ones must form a contiguous prefix from b0
    return (mask & (mask + 1u)) == 0u;
  }

 private:
  unsigned count_{kBits};
};

}  // namespace ehs
