#include <doctest.h>

#include "junior/error.hpp"
#include "junior/hirzebruch_jung.hpp"
#include "oracles.hpp"

using namespace junior;

TEST_CASE("Z11 corner fractions") {
  const Simplex s(GroupAction::make(11, 2, 8));
  CHECK(corner_fan(s, 2).fraction.b == std::vector<std::int64_t>{6, 2});
  CHECK(corner_fan(s, 1).fraction.b == std::vector<std::int64_t>{2, 3, 2, 2});
  CHECK(corner_fan(s, 0).fraction.b == std::vector<std::int64_t>{3, 4});
  CHECK(corner_fan(s, 2).fraction.c == 2);
  CHECK(corner_fan(s, 1).fraction.c == 7);
  CHECK(corner_fan(s, 0).fraction.c == 4);

  const CornerFan f = corner_fan(s, 2);
  REQUIRE(f.rays.size() == 2);
  CHECK(f.rays[0].point == 3);
  CHECK(f.rays[0].strength == 6);
  CHECK(f.rays[1].point == 6);
  CHECK(f.rays[1].strength == 2);
}

TEST_CASE("expansion agrees with rational recursion") {
  for (std::int64_t r = 2; r <= 80; ++r) {
    for (std::int64_t c = 1; c < r; ++c) {
      if (std::gcd(r, c) != 1) continue;
      const ContinuedFraction cf = hj_expand(r, c);
      CHECK(cf.b == oracle::continued_fraction(r, c));
      CHECK(satisfies_invariants(cf));
      for (std::int64_t b : cf.b) CHECK(b >= 2);
    }
  }
}

TEST_CASE("invalid fractions") {
  CHECK_THROWS_AS(hj_expand(10, 4), Error);
  CHECK_THROWS_AS(hj_expand(5, 0), Error);
  CHECK_THROWS_AS(hj_expand(5, 5), Error);
  try {
    hj_expand(10, 4);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidFraction);
  }
}

TEST_CASE("fan rays are primitive, ordered and unimodular") {
  for (const auto& act : isolated_actions(41)) {
    const Simplex s(act);
    for (int k = 0; k < 3; ++k) {
      const CornerFan f = corner_fan(s, k);
      const Vec2 o = s.chart(static_cast<std::size_t>(k));
      Vec2 prev = s.chart(static_cast<std::size_t>((k + 2) % 3)) - o;
      for (const FanRay& ray : f.rays) {
        const Vec2 v = s.chart(ray.point) - o;
        CHECK(content(v) == 1);
        CHECK(std::abs(det(prev, v)) == 1);
        prev = v;
      }
      CHECK(std::abs(det(prev, s.chart(static_cast<std::size_t>((k + 1) % 3)) - o)) == 1);
    }
  }
}
