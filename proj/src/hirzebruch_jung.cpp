#include "junior/hirzebruch_jung.hpp"

#include <numeric>
#include <string>

#include "junior/error.hpp"

namespace junior {

ContinuedFraction hj_expand(std::int64_t r, std::int64_t c) {
  if (c <= 0 || c >= r || std::gcd(c, r) != 1) {
    throw Error(ErrorKind::InvalidFraction,
                std::to_string(r) + "/" + std::to_string(c) + " needs 0 < c < r, gcd(c, r) = 1");
  }
  ContinuedFraction cf;
  cf.r = r;
  cf.c = c;
  cf.d.push_back(c);
  std::int64_t prev = r, cur = c;
  while (cur > 0) {
    const std::int64_t bi = (prev + cur - 1) / cur;  // ceil
    const std::int64_t next = bi * cur - prev;
    cf.b.push_back(bi);
    cf.d.push_back(next);
    prev = cur;
    cur = next;
  }
  cf.P = {1};
  cf.Q = {0};
  for (std::size_t i = 0; i < cf.b.size(); ++i) {
    const std::int64_t p2 = i == 0 ? 0 : cf.P[i - 1];
    const std::int64_t q2 = i == 0 ? -1 : cf.Q[i - 1];
    cf.P.push_back(cf.b[i] * cf.P[i] - p2);
    cf.Q.push_back(cf.b[i] * cf.Q[i] - q2);
  }
  return cf;
}

bool satisfies_invariants(const ContinuedFraction& cf) {
  const std::size_t m = cf.b.size();
  if (m == 0 || cf.P.size() != m + 1 || cf.Q.size() != m + 1 || cf.d.size() != m + 1) return false;
  if (cf.d[0] != cf.c || cf.d[m] != 0 || cf.P[m] != cf.r) return false;
  if (cf.P[0] != 1 || cf.P[1] != cf.b[0] || cf.Q[0] != 0 || cf.Q[1] != 1) return false;
  if (cf.r != cf.c * cf.b[0] - cf.d[1]) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (cf.b[i] < 2) return false;
    if (cf.d[i + 1] >= cf.d[i]) return false;
  }
  for (std::size_t i = 1; i < m; ++i) {
    if (cf.d[i - 1] != cf.d[i] * cf.b[i] - cf.d[i + 1]) return false;
  }
  for (std::size_t i = 2; i <= m; ++i) {
    if (cf.P[i] != cf.b[i - 1] * cf.P[i - 1] - cf.P[i - 2]) return false;
    if (cf.Q[i] != cf.b[i - 1] * cf.Q[i - 1] - cf.Q[i - 2]) return false;
  }
  for (std::size_t j = 1; j <= m; ++j) {
    if (cf.r != cf.P[j] * cf.d[j - 1] - cf.P[j - 1] * cf.d[j]) return false;
  }
  return true;
}

std::int64_t corner_parameter(const GroupAction& action, int corner) {
  const int k1 = (corner + 1) % 3, k2 = (corner + 2) % 3;
  return mod(action.weight(k2) * inverse_mod(action.weight(k1), action.r()), action.r());
}

CornerFan corner_fan(const Simplex& simplex, int corner) {
  CornerFan fan;
  fan.corner = corner;
  fan.fraction = hj_expand(simplex.r(), corner_parameter(simplex.action(), corner));
  const int k1 = (corner + 1) % 3, k2 = (corner + 2) % 3;
  const auto& cf = fan.fraction;
  for (std::size_t j = 0; j < cf.length(); ++j) {
    bool found = false;
    for (std::size_t p = 3; p < simplex.size(); ++p) {
      const auto& nu = simplex[p].nu.num;
      if (nu[k1] == cf.P[j] && nu[k2] == cf.d[j]) {
        fan.rays.push_back({p, cf.b[j]});
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::Internal, "corner " + std::to_string(corner + 1) +
                                           ": no interior point for ray " + std::to_string(j + 1));
    }
  }
  return fan;
}

}  // namespace junior
