#ifndef SUPERLEIBNIZ_PARITY_HPP
#define SUPERLEIBNIZ_PARITY_HPP

#include <cstdint>
#include <string_view>

namespace superleibniz {

/// Z/2 degree of a homogeneous element or map.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

/// a·b in Z/2.
constexpr bool odd_product(Parity a, Parity b) { return a == Parity::Odd && b == Parity::Odd; }

/// (-1)^{ab}.
constexpr int koszul_sign(Parity a, Parity b) { return odd_product(a, b) ? -1 : 1; }

/// (-1)^k for an integer exponent.
constexpr int sign_of_power(long k) { return (k % 2 == 0) ? 1 : -1; }

constexpr int as_int(Parity p) { return static_cast<int>(p); }

constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace superleibniz

#endif  // SUPERLEIBNIZ_PARITY_HPP
