// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "graphlab/errors.hpp"

namespace glab {

// Exact rational with 64-bit numerator/denominator. Overflow is reported as a
// ValidationError instead of wrapping, so that block refinements are either
// exact or refused.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw ValidationError("Rational: zero denominator");
    normalize();
  }

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t bd = b.den_ / g;
    const std::int64_t ad = a.den_ / g;
    return Rational(checked_add(checked_mul(a.num_, bd), checked_mul(b.num_, ad)),
                    checked_mul(a.den_, bd));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(checked_neg(b.num_), b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t h1 = g1 == 0 ? 1 : g1;
    const std::int64_t h2 = g2 == 0 ? 1 : g2;
    return Rational(checked_mul(a.num_ / h1, b.num_ / h2), checked_mul(a.den_ / h2, b.den_ / h1));
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // a/b < c/d  <=>  a*d < c*b (denominators positive)
    return checked_mul(a.num_, b.den_) <=> checked_mul(b.num_, a.den_);
  }

  [[nodiscard]] std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "p/q" or an integer "p".
  static Rational parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      if (slash == std::string_view::npos) return Rational(parse_int(text));
      return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    } catch (const ValidationError&) {
      throw ValidationError("Rational: cannot parse '" + std::string(text) + "'");
    }
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = checked_neg(num_);
      den_ = checked_neg(den_);
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static std::int64_t parse_int(std::string_view s) {
    if (s.empty()) throw ValidationError("empty integer");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw ValidationError("bad integer");
    std::int64_t v = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9') throw ValidationError("bad integer");
      v = checked_add(checked_mul(v, 10), s[pos] - '0');
    }
    return neg ? -v : v;
  }

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw ValidationError("Rational: 64-bit overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw ValidationError("Rational: 64-bit overflow");
    return r;
  }
  static std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace glab
