#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace sdd {

/// Exact value in (1/2)Z. Distances and scores are always half-integers.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(std::int64_t whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_halves(std::int64_t halves) {
    HalfInt h;
    h.twice_ = halves;
    return h;
  }

  constexpr std::int64_t halves() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  /// Reduced fraction numerator/denominator (denominator 1 or 2).
  constexpr std::int64_t num() const { return is_integer() ? twice_ / 2 : twice_; }
  constexpr std::int64_t den() const { return is_integer() ? 1 : 2; }

  constexpr HalfInt operator+(HalfInt o) const { return from_halves(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_halves(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return from_halves(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// "5/2", "2", "-1/2".
  std::string to_string() const {
    return is_integer() ? std::to_string(num()) : std::to_string(num()) + "/2";
  }

  /// "2.5", "2".
  std::string to_decimal() const {
    if (is_integer()) return std::to_string(num());
    const std::int64_t whole = twice_ / 2;
    std::string s = std::to_string(whole == 0 && twice_ < 0 ? 0 : whole);
    if (whole == 0 && twice_ < 0) s = "-" + s;
    return s + ".5";
  }

 private:
  std::int64_t twice_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

}  // namespace sdd
