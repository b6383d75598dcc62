#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace rado {

// Exact arithmetic over the half-integers Z/2. Every counting identity in this
// library evaluates to an integer or half-integer, so a single numerator over
// a fixed denominator of 2 is enough; no floating tolerance appears anywhere.
struct Half {
  std::int64_t halves = 0; // value = halves / 2

  constexpr Half() = default;
  constexpr explicit Half(std::int64_t whole) : halves(2 * whole) {}

  static constexpr Half from_halves(std::int64_t h) {
    Half x;
    x.halves = h;
    return x;
  }

  constexpr bool is_integer() const { return halves % 2 == 0; }
  constexpr std::int64_t numerator() const { return is_integer() ? halves / 2 : halves; }
  constexpr std::int64_t denominator() const { return is_integer() ? 1 : 2; }
  constexpr double to_double() const { return static_cast<double>(halves) / 2.0; }

  friend constexpr Half operator+(Half a, Half b) { return from_halves(a.halves + b.halves); }
  friend constexpr Half operator-(Half a, Half b) { return from_halves(a.halves - b.halves); }
  friend constexpr Half operator-(Half a) { return from_halves(-a.halves); }
  friend constexpr Half operator*(std::int64_t n, Half a) { return from_halves(n * a.halves); }
  Half& operator+=(Half o) {
    halves += o.halves;
    return *this;
  }
  Half& operator-=(Half o) {
    halves -= o.halves;
    return *this;
  }

  friend constexpr bool operator==(Half a, Half b) { return a.halves == b.halves; }
  friend constexpr bool operator!=(Half a, Half b) { return a.halves != b.halves; }
  friend constexpr bool operator<(Half a, Half b) { return a.halves < b.halves; }
  friend constexpr bool operator<=(Half a, Half b) { return a.halves <= b.halves; }
  friend constexpr bool operator>(Half a, Half b) { return a.halves > b.halves; }
  friend constexpr bool operator>=(Half a, Half b) { return a.halves >= b.halves; }

  std::string str() const {
    if (is_integer()) return std::to_string(halves / 2);
    return std::to_string(halves) + "/2";
  }
  friend std::ostream& operator<<(std::ostream& os, Half h) { return os << h.str(); }
};

constexpr Half half_of(std::int64_t n) { return Half::from_halves(n); }

} // namespace rado
