#pragma once

#include <cstdint>
#include <vector>

#include "junior/orbifold.hpp"

namespace junior {

/// Minus-sign continued fraction r/c = [[b_1, ..., b_m]] with its convergent
/// data. Index conventions: b[0] is b_1; P, Q and d are indexed 0..m.
struct ContinuedFraction {
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> P;
  std::vector<std::int64_t> Q;
  std::vector<std::int64_t> d;

  std::size_t length() const { return b.size(); }
};

/// Throws InvalidFraction unless 0 < c < r and gcd(c, r) = 1.
ContinuedFraction hj_expand(std::int64_t r, std::int64_t c);

/// Checks every recurrence and identity the expansion must satisfy.
bool satisfies_invariants(const ContinuedFraction& cf);

struct FanRay {
  std::size_t point = 0;  // position in the simplex
  std::int64_t strength = 0;
};

/// Minimal resolution of the 2D cone at one corner: rays ordered outward
/// from the side toward corner k+2 (cyclically), ray j carrying strength b_j.
struct CornerFan {
  int corner = 0;  // 0-based corner position
  ContinuedFraction fraction;
  std::vector<FanRay> rays;
};

/// The corner parameter c_k = w_{k+2} * w_{k+1}^{-1} mod r (cyclic indices).
std::int64_t corner_parameter(const GroupAction& action, int corner);

/// Ray j ends at the interior point with (nu_{k+1}, nu_{k+2}) =
/// (P_{j-1}, d_{j-1}) / r. Throws Internal if such a point is missing.
CornerFan corner_fan(const Simplex& simplex, int corner);

}  // namespace junior
