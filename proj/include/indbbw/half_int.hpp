#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>

namespace indbbw {

/// Exact half-integer, stored as its numerator over the fixed denominator 2.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(std::int64_t value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(std::int64_t twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Requires is_integer().
  constexpr std::int64_t as_integer() const { return twice_ / 2; }

  /// Smallest integer not below this value.
  constexpr std::int64_t ceil() const {
    return twice_ >= 0 ? (twice_ + 1) / 2 : -((-twice_) / 2);
  }

  constexpr int sign() const { return (twice_ > 0) - (twice_ < 0); }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) {
    return from_twice(k * a.twice_);
  }
  friend constexpr HalfInt abs(HalfInt a) { return from_twice(a.twice_ < 0 ? -a.twice_ : a.twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
  friend constexpr bool operator==(HalfInt, HalfInt) = default;

  std::string to_string() const {
    if (is_integer())
      return std::to_string(as_integer());
    return std::to_string(twice_) + "/2";
  }

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

private:
  std::int64_t twice_ = 0;
};

} // namespace indbbw
