#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace z4dna {

/// Residue modulo 4. Stored reduced, so `value()` is always in {0,1,2,3}.
class Z4 {
public:
  constexpr Z4() = default;
  constexpr Z4(int v) : v_(static_cast<std::uint8_t>(((v % 4) + 4) % 4)) {}

  constexpr std::uint8_t value() const { return v_; }

  static constexpr Z4 zero() { return Z4{0}; }
  static constexpr Z4 one() { return Z4{1}; }
  static constexpr std::size_t order() { return 4; }
  static constexpr Z4 from_index(std::size_t i) { return Z4{static_cast<int>(i)}; }
  constexpr std::size_t index() const { return v_; }

  constexpr bool is_zero() const { return v_ == 0; }
  constexpr bool is_unit() const { return (v_ & 1U) != 0; }
  // 1 and 3 are self-inverse.
  constexpr std::optional<Z4> inverse() const {
    if (!is_unit()) return std::nullopt;
    return *this;
  }

  friend constexpr Z4 operator+(Z4 x, Z4 y) { return raw((x.v_ + y.v_) & 3U); }
  friend constexpr Z4 operator-(Z4 x, Z4 y) { return raw((x.v_ + 4U - y.v_) & 3U); }
  friend constexpr Z4 operator*(Z4 x, Z4 y) { return raw((x.v_ * y.v_) & 3U); }
  constexpr Z4 operator-() const { return raw((4U - v_) & 3U); }
  constexpr Z4& operator+=(Z4 y) { return *this = *this + y; }
  constexpr Z4& operator-=(Z4 y) { return *this = *this - y; }
  constexpr Z4& operator*=(Z4 y) { return *this = *this * y; }

  friend constexpr bool operator==(Z4, Z4) = default;
  friend constexpr auto operator<=>(Z4, Z4) = default;

  /// Lee weight: 0,1,2,1.
  constexpr int lee_weight() const { return v_ == 2 ? 2 : (v_ == 0 ? 0 : 1); }

private:
  static constexpr Z4 raw(unsigned v) {
    Z4 z;
    z.v_ = static_cast<std::uint8_t>(v);
    return z;
  }
  std::uint8_t v_ = 0;
};

std::string to_string(Z4 x);

} // namespace z4dna
