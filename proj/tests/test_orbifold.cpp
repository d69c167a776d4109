#include <doctest.h>

#include <set>

#include "junior/error.hpp"
#include "junior/orbifold.hpp"
#include "oracles.hpp"

using namespace junior;

namespace {

ErrorKind kind_of(std::int64_t r, std::int64_t w1, std::int64_t w2, std::int64_t w3) {
  try {
    normalize_action(r, w1, w2, w3);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("Z11 interior points and nu-table") {
  const Simplex s(normalize_action(11, 1, 2, 8));
  REQUIRE(s.size() == 8);
  const std::vector<std::array<std::int64_t, 3>> coords{
      {11, -2, -8}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {2, 0, -1}, {3, 0, -2}, {6, -1, -4}, {7, -1, -5}};
  const std::vector<std::array<std::int64_t, 3>> nu{{1, 2, 8}, {2, 4, 5}, {3, 6, 2}, {6, 1, 4}, {7, 3, 1}};
  for (std::size_t p = 0; p < 8; ++p) {
    CHECK(s[p].coords3 == coords[p]);
    CHECK(s[p].label == static_cast<int>(p + 1));
  }
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(s[k + 3].nu.num == nu[k]);
    CHECK(s[k + 3].nu.den == 11);
  }
}

TEST_CASE("Z11 charge matrix rows") {
  const Simplex s(normalize_action(11, 1, 2, 8));
  const ChargeMatrix phi = charge_matrix(s);
  REQUIRE(phi.row_count() == 5);
  REQUIRE(phi.column_count() == 8);
  CHECK(phi.entry(0, 0) == Rational(1, 11));
  CHECK(phi.entry(0, 2) == Rational(8, 11));
  CHECK(phi.entry(0, 3) == Rational(-1));
  CHECK(phi.entry(4, 1) == Rational(3, 11));
  CHECK(phi.entry(4, 7) == Rational(-1));
  CHECK(phi.entry(4, 3) == Rational(0));
  CHECK(annihilates_points(phi, s));
}

TEST_CASE("interior points agree with a bounding-box scan") {
  for (const auto& act : isolated_actions(41)) {
    const Simplex s(act);
    std::set<oracle::P2> mine;
    for (std::size_t p = 3; p < s.size(); ++p) mine.insert({s.chart(p).y, s.chart(p).z});
    CAPTURE(act.r());
    CAPTURE(act.a());
    CHECK(mine == oracle::interior_points(act.a(), act.b()));
    CHECK(static_cast<std::int64_t>(2 * s.interior_count() + 1) == act.r());
    CHECK(s.doubled_area() == act.r());
  }
}

TEST_CASE("nu equals barycentric coordinates") {
  for (const auto& act : isolated_actions(31)) {
    const Simplex s(act);
    for (std::size_t p = 0; p < s.size(); ++p) {
      const auto bary = oracle::barycentric(act.a(), act.b(), {s.chart(p).y, s.chart(p).z});
      for (int k = 0; k < 3; ++k) CHECK(s[p].nu[k] == bary[k]);
    }
    CHECK(annihilates_points(charge_matrix(s), s));
  }
}

TEST_CASE("normalization") {
  const GroupAction g = normalize_action(11, 2, 4, 5);
  CHECK(g == GroupAction::make(11, 2, 8));
  CHECK(normalize_action(7, 3, 6, 5) == GroupAction::make(7, 2, 4));
  CHECK(kind_of(4, 1, 1, 2) == ErrorKind::NotIsolated);
  CHECK(kind_of(9, 1, 2, 6) == ErrorKind::NotIsolated);
  CHECK(kind_of(11, 1, 2, 7) == ErrorKind::NotCalabiYau);
  CHECK(kind_of(2, 1, 1, 0) == ErrorKind::InvalidInput);
  CHECK(kind_of(11, 0, 2, 9) == ErrorKind::InvalidInput);
  CHECK_THROWS_AS(GroupAction::make(9, 2, 6), Error);
  CHECK_THROWS_AS(sector_nu(GroupAction::make(11, 2, 8), 11), Error);
}

TEST_CASE("inverse_mod") {
  for (std::int64_t r = 3; r < 60; ++r)
    for (std::int64_t x = 1; x < r; ++x)
      if (std::gcd(x, r) == 1) CHECK(mod(x * inverse_mod(x, r), r) == 1);
  CHECK_THROWS_AS(inverse_mod(4, 8), Error);
}

TEST_CASE("isolated actions") {
  const auto acts = isolated_actions(31);
  CHECK(acts.size() == 173);
  for (const auto& g : acts) {
    CHECK(1 + g.a() + g.b() == g.r());
    CHECK(std::gcd(g.a(), g.r()) == 1);
    CHECK(std::gcd(g.b(), g.r()) == 1);
  }
  CHECK(isolated_actions(3).size() == 1);
}
