#pragma once

// Cyclic Calabi-Yau orbifolds C^3/Z_r with an isolated singularity: the
// normalized group action, the lattice points of the junior triangle, the
// twisted-sector data nu and the charge matrix.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

#include "junior/lattice.hpp"

namespace junior {

using Rational = boost::rational<std::int64_t>;

/// The action (zeta^1, zeta^a, zeta^b) of Z_r, with 1 + a + b = r and
/// gcd(a, r) = gcd(b, r) = 1. Only constructible through validation.
class GroupAction {
 public:
  /// Validates an already-normalized action (r; 1, a, b).
  static GroupAction make(std::int64_t r, std::int64_t a, std::int64_t b);

  std::int64_t r() const { return r_; }
  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  /// Weight of coordinate k in {0, 1, 2}: 1, a, b.
  std::int64_t weight(int k) const { return k == 0 ? 1 : (k == 1 ? a_ : b_); }

  friend bool operator==(const GroupAction&, const GroupAction&) = default;

 private:
  GroupAction(std::int64_t r, std::int64_t a, std::int64_t b) : r_(r), a_(a), b_(b) {}
  std::int64_t r_, a_, b_;
};

/// Normalizes weights (w1, w2, w3) by multiplying with w1^{-1} mod r.
/// Throws NotIsolated when some gcd(w_i, r) > 1, NotCalabiYau when the weight
/// sum is not divisible by r, InvalidInput for r < 3 or weights outside (0, r).
GroupAction normalize_action(std::int64_t r, std::int64_t w1, std::int64_t w2,
                             std::int64_t w3);

/// Rational triple with a shared denominator (always r for nu-data).
struct NuTriple {
  std::array<std::int64_t, 3> num{};
  std::int64_t den = 1;

  Rational operator[](int i) const { return Rational(num[i], den); }
  std::int64_t sum_num() const { return num[0] + num[1] + num[2]; }
  /// Numerator of c . nu over den.
  std::int64_t dot_num(const std::array<std::int64_t, 3>& c) const {
    return c[0] * num[0] + c[1] * num[1] + c[2] * num[2];
  }
  friend bool operator==(const NuTriple&, const NuTriple&) = default;
};

enum class PointKind { Corner, Interior };

/// A ray generator of any crepant resolution. Corners carry their barycentric
/// coordinates as nu (one entry equal to 1).
struct SimplexPoint {
  int label = 0;                          // 1-based: u_1..u_3 corners, u_4.. interior
  std::array<std::int64_t, 3> coords3{};  // lattice point with x + y + z = 1
  Vec2 chart;                             // (y, z)
  NuTriple nu;
  PointKind kind = PointKind::Interior;

  bool is_corner() const { return kind == PointKind::Corner; }
};

/// (j/r, (ja mod r)/r, (jb mod r)/r). Throws OutOfRange unless 0 < j < r.
NuTriple sector_nu(const GroupAction& action, std::int64_t j);

/// Interior lattice points of the junior triangle in order of first
/// coordinate, labelled 4, 5, ...
std::vector<SimplexPoint> interior_points(const GroupAction& action);

/// The three corners followed by the interior points. Positions in points()
/// are 0-based; position p carries label p + 1.
class Simplex {
 public:
  explicit Simplex(GroupAction action);

  const GroupAction& action() const { return action_; }
  std::int64_t r() const { return action_.r(); }
  const std::vector<SimplexPoint>& points() const { return points_; }
  const SimplexPoint& operator[](std::size_t p) const { return points_[p]; }
  std::size_t size() const { return points_.size(); }
  std::size_t interior_count() const { return points_.size() - 3; }
  static bool is_corner(std::size_t p) { return p < 3; }

  Vec2 chart(std::size_t p) const { return points_[p].chart; }
  std::optional<std::size_t> find(Vec2 chart) const;

  /// Twice the lattice area of the big triangle; equals r.
  std::int64_t doubled_area() const;

 private:
  GroupAction action_;
  std::vector<SimplexPoint> points_;
  std::map<Vec2, std::size_t> by_chart_;
};

/// Chart coordinates (y, z) of a point on the plane x + y + z = 1.
inline Vec2 to_chart(const std::array<std::int64_t, 3>& x) { return {x[1], x[2]}; }
inline std::array<std::int64_t, 3> from_chart(Vec2 p) { return {1 - p.y - p.z, p.y, p.z}; }

/// Phi': one row per interior point alpha, (nu^alpha, 0..-1..0). Entries are
/// stored as numerators over den = r.
struct ChargeMatrix {
  std::int64_t den = 1;
  std::vector<std::vector<std::int64_t>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
  Rational entry(std::size_t row, std::size_t col) const {
    return Rational(rows[row][col], den);
  }
  /// Charge q_j: column j as exact rationals.
  std::vector<Rational> charge(std::size_t col) const;
};

ChargeMatrix charge_matrix(const Simplex& simplex);

/// True when every row of Phi' annihilates every coordinate column of the
/// point matrix A.
bool annihilates_points(const ChargeMatrix& phi, const Simplex& simplex);

/// All isolated Calabi-Yau actions (r; 1, a, b) with 3 <= r <= rmax, ordered
/// by (r, a).
std::vector<GroupAction> isolated_actions(std::int64_t rmax);

}  // namespace junior
