// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <optional>
#include <string>

#include "graphlab/errors.hpp"

namespace glab {

struct Infinity {};
inline constexpr Infinity kInfinity{};

// A natural number or infinity. Used for block counts of W*_{r,s}-type
// graphons and for the coloring number of a (possibly empty) family.
class ExtendedNat {
 public:
  constexpr ExtendedNat(Infinity) noexcept {}
  constexpr ExtendedNat(int v) : value_(v) {
    if (v < 0) throw ValidationError("ExtendedNat: negative value");
  }

  [[nodiscard]] constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  [[nodiscard]] constexpr bool is_finite() const noexcept { return value_.has_value(); }
  [[nodiscard]] int value() const {
    if (!value_) throw ValidationError("ExtendedNat: value() on infinity");
    return *value_;
  }

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

  [[nodiscard]] std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
  }

 private:
  std::optional<int> value_;
};

}  // namespace glab
