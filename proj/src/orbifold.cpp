#include "junior/orbifold.hpp"

#include <numeric>
#include <utility>
#include <string>

#include "junior/error.hpp"

namespace junior {

std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  // Extended Euclid on (x mod m, m).
  std::int64_t old_r = mod(x, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorKind::InvalidInput,
                std::to_string(x) + " is not invertible mod " + std::to_string(m));
  }
  return mod(old_s, m);
}

GroupAction GroupAction::make(std::int64_t r, std::int64_t a, std::int64_t b) {
  if (r < 3) throw Error(ErrorKind::InvalidInput, "group order must be >= 3");
  if (a <= 0 || a >= r || b <= 0 || b >= r) {
    throw Error(ErrorKind::InvalidInput, "weights must lie in (0, r)");
  }
  if (std::gcd(a, r) != 1 || std::gcd(b, r) != 1) {
    throw Error(ErrorKind::NotIsolated,
                "weights (1, " + std::to_string(a) + ", " + std::to_string(b) +
                    ") share a factor with r = " + std::to_string(r));
  }
  if (1 + a + b != r) {
    throw Error(ErrorKind::NotCalabiYau, "1 + a + b must equal r");
  }
  return GroupAction(r, a, b);
}

GroupAction normalize_action(std::int64_t r, std::int64_t w1, std::int64_t w2,
                             std::int64_t w3) {
  if (r < 3) throw Error(ErrorKind::InvalidInput, "group order must be >= 3");
  for (std::int64_t w : {w1, w2, w3}) {
    if (w <= 0 || w >= r) throw Error(ErrorKind::InvalidInput, "weights must lie in (0, r)");
  }
  for (std::int64_t w : {w1, w2, w3}) {
    if (std::gcd(w, r) != 1) {
      throw Error(ErrorKind::NotIsolated,
                  "weight " + std::to_string(w) + " shares a factor with r = " +
                      std::to_string(r) + "; the singularity is not isolated");
    }
  }
  if ((w1 + w2 + w3) % r != 0) {
    throw Error(ErrorKind::NotCalabiYau, "weight sum is not divisible by r");
  }
  const std::int64_t pivot = inverse_mod(w1, r);
  return GroupAction::make(r, mod(w2 * pivot, r), mod(w3 * pivot, r));
}

NuTriple sector_nu(const GroupAction& action, std::int64_t j) {
  const std::int64_t r = action.r();
  if (j <= 0 || j >= r) {
    throw Error(ErrorKind::OutOfRange, "sector index " + std::to_string(j) + " not in (0, r)");
  }
  return NuTriple{{j, mod(j * action.a(), r), mod(j * action.b(), r)}, r};
}

std::vector<SimplexPoint> interior_points(const GroupAction& action) {
  const std::int64_t r = action.r(), a = action.a(), b = action.b();
  std::vector<SimplexPoint> out;
  for (std::int64_t i = 1; i < r; ++i) {
    // rs < ia < r(s+1) and rt < ib < r(t+1): s, t are the floors, and the
    // strict inequalities hold because gcd(a, r) = gcd(b, r) = 1.
    const std::int64_t s = (i * a) / r;
    const std::int64_t t = (i * b) / r;
    if (i - s - t != 1) continue;
    SimplexPoint p;
    p.label = static_cast<int>(out.size()) + 4;
    p.coords3 = {i, -s, -t};
    p.chart = to_chart(p.coords3);
    p.nu = sector_nu(action, i);
    p.kind = PointKind::Interior;
    out.push_back(p);
  }
  return out;
}

Simplex::Simplex(GroupAction action) : action_(action) {
  const std::int64_t r = action.r();
  const std::array<std::array<std::int64_t, 3>, 3> corners{
      {{r, -action.a(), -action.b()}, {0, 1, 0}, {0, 0, 1}}};
  for (int k = 0; k < 3; ++k) {
    SimplexPoint p;
    p.label = k + 1;
    p.coords3 = corners[k];
    p.chart = to_chart(p.coords3);
    p.nu = NuTriple{{0, 0, 0}, r};
    p.nu.num[k] = r;
    p.kind = PointKind::Corner;
    points_.push_back(p);
  }
  for (auto& p : interior_points(action)) points_.push_back(p);
  for (std::size_t i = 0; i < points_.size(); ++i) by_chart_.emplace(points_[i].chart, i);
}

std::optional<std::size_t> Simplex::find(Vec2 chart) const {
  auto it = by_chart_.find(chart);
  if (it == by_chart_.end()) return std::nullopt;
  return it->second;
}

std::int64_t Simplex::doubled_area() const {
  const Vec2 u1 = chart(0), u2 = chart(1), u3 = chart(2);
  const std::int64_t d = det(u2 - u1, u3 - u1);
  return d < 0 ? -d : d;
}

std::vector<Rational> ChargeMatrix::charge(std::size_t col) const {
  std::vector<Rational> q;
  q.reserve(rows.size());
  for (const auto& row : rows) q.emplace_back(row[col], den);
  return q;
}

ChargeMatrix charge_matrix(const Simplex& simplex) {
  ChargeMatrix phi;
  phi.den = simplex.r();
  const std::size_t n = simplex.size();
  for (std::size_t alpha = 3; alpha < n; ++alpha) {
    std::vector<std::int64_t> row(n, 0);
    for (int k = 0; k < 3; ++k) row[k] = simplex[alpha].nu.num[k];
    row[alpha] = -phi.den;
    phi.rows.push_back(std::move(row));
  }
  return phi;
}

bool annihilates_points(const ChargeMatrix& phi, const Simplex& simplex) {
  for (const auto& row : phi.rows) {
    for (int coord = 0; coord < 3; ++coord) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < simplex.size(); ++j) acc += row[j] * simplex[j].coords3[coord];
      if (acc != 0) return false;
    }
  }
  return true;
}

std::vector<GroupAction> isolated_actions(std::int64_t rmax) {
  std::vector<GroupAction> out;
  for (std::int64_t r = 3; r <= rmax; ++r) {
    for (std::int64_t a = 1; a < r - 1; ++a) {
      const std::int64_t b = r - 1 - a;
      if (std::gcd(a, r) == 1 && std::gcd(b, r) == 1) out.push_back(GroupAction::make(r, a, b));
    }
  }
  return out;
}

}  // namespace junior
