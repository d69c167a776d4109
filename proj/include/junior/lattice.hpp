#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>

namespace junior {

/// A point or vector of the 2D chart Z^2 (the (y, z) coordinates of the
/// affine plane x + y + z = 1).
struct Vec2 {
  std::int64_t y = 0;
  std::int64_t z = 0;

  friend constexpr Vec2 operator+(Vec2 p, Vec2 q) { return {p.y + q.y, p.z + q.z}; }
  friend constexpr Vec2 operator-(Vec2 p, Vec2 q) { return {p.y - q.y, p.z - q.z}; }
  friend constexpr Vec2 operator*(std::int64_t k, Vec2 p) { return {k * p.y, k * p.z}; }
  friend constexpr auto operator<=>(const Vec2&, const Vec2&) = default;
  friend std::ostream& operator<<(std::ostream& os, Vec2 p) {
    return os << '(' << p.y << ',' << p.z << ')';
  }
};

constexpr std::int64_t det(Vec2 u, Vec2 v) { return u.y * v.z - u.z * v.y; }

inline std::int64_t content(Vec2 v) { return std::gcd(v.y, v.z); }

/// Floor-safe modulus into [0, m).
constexpr std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

/// Inverse of x modulo m; requires gcd(x, m) == 1.
std::int64_t inverse_mod(std::int64_t x, std::int64_t m);

}  // namespace junior
