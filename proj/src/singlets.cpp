#include "junior/singlets.hpp"

#include <algorithm>
#include <tuple>

#include "junior/error.hpp"
#include "junior/series.hpp"

namespace junior {

TwistedSector twisted_sector(const GroupAction& action, std::int64_t j) {
  TwistedSector s;
  s.j = j;
  s.nu = sector_nu(action, j);
  const std::int64_t r = action.r();
  Rational e_sum = 0, tilde_sum = 0;
  for (int i = 0; i < 3; ++i) {
    const std::int64_t n = s.nu.num[i];
    s.tilde_num[i] = 2 * n <= r ? 2 * n - r : 2 * n - 3 * r;
    const Rational nu = s.nu[i], t = s.tilde(i);
    e_sum += nu * (1 - nu) + t * (1 + t);
    tilde_sum += t;
  }
  s.energy = e_sum / 2 - Rational(5, 8);
  s.charge = Rational(-3, 2) - tilde_sum;
  return s;
}

std::vector<TwistedSector> junior_sectors(const Simplex& simplex) {
  std::vector<TwistedSector> out;
  for (std::size_t p = 3; p < simplex.size(); ++p) {
    out.push_back(twisted_sector(simplex.action(), simplex[p].coords3[0]));
  }
  return out;
}

namespace {

bool triple_less(const SingletTriple& x, const SingletTriple& y) {
  return std::make_tuple(x.index, x.depth(), x.c) < std::make_tuple(y.index, y.depth(), y.c);
}

}  // namespace

std::vector<SingletTriple> singlets_case1(const TwistedSector& sector) {
  const auto& n = sector.nu.num;
  std::vector<SingletTriple> out;
  for (int i = 0; i < 3; ++i) {
    for (std::int64_t c1 = 0; c1 * n[0] <= n[i]; ++c1) {
      for (std::int64_t c2 = 0; c1 * n[0] + c2 * n[1] <= n[i]; ++c2) {
        const std::int64_t rem = n[i] - c1 * n[0] - c2 * n[1];
        if (rem % n[2] != 0) continue;
        out.push_back({{c1, c2, rem / n[2]}, SingletCase::One, i});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.index, x.c) < std::tie(y.index, y.c);
  });
  return out;
}

std::vector<SingletTriple> singlets_case2(const TwistedSector& sector) {
  const auto& n = sector.nu.num;
  const std::int64_t r = sector.nu.den;
  std::vector<SingletTriple> out;
  for (int i = 0; i < 3; ++i) {
    const int o1 = (i + 1) % 3, o2 = (i + 2) % 3;
    for (std::int64_t d = 2; r - d * (r - n[i]) >= 0; ++d) {
      const std::int64_t rhs = r - d * (r - n[i]);
      for (std::int64_t x = 0; x * n[o1] <= rhs; ++x) {
        const std::int64_t rem = rhs - x * n[o1];
        if (rem % n[o2] != 0) continue;
        SingletTriple s{{0, 0, 0}, SingletCase::Two, i};
        s.c[i] = -d;
        s.c[o1] = x;
        s.c[o2] = rem / n[o2];
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(), triple_less);
  return out;
}

bool is_invariant(const GroupAction& action, const SingletTriple& s) {
  std::array<std::int64_t, 3> c = s.c;
  if (s.kind == SingletCase::One) c[s.index] -= 1;
  return mod(c[0] + action.a() * c[1] + action.b() * c[2], action.r()) == 0;
}

std::vector<SingletTriple> invariant_only(const GroupAction& action,
                                          std::vector<SingletTriple> singlets) {
  std::erase_if(singlets, [&](const SingletTriple& s) { return !is_invariant(action, s); });
  return singlets;
}

std::array<std::int64_t, 3> count_by_target(const std::vector<SingletTriple>& case1) {
  std::array<std::int64_t, 3> out{};
  for (const auto& s : case1) {
    if (s.kind == SingletCase::One) ++out[s.index];
  }
  return out;
}

std::int64_t singlet_count_pf(const TwistedSector& sector, std::size_t term_cap) {
  const std::int64_t r = sector.nu.den;
  const std::int64_t unit = 2 * r;  // q-exponents in (1/2r)Z
  Rational tilde_sum = 0;
  for (int i = 0; i < 3; ++i) tilde_sum += sector.tilde(i);
  const Rational z_offset = Rational(-3, 2) - tilde_sum;
  if (z_offset.denominator() != 1 || sector.energy > 0) return 0;
  const Rational target = -sector.energy * unit;
  if (target.denominator() != 1) return 0;
  const std::int64_t limit = target.numerator();

  TruncatedSeries series(limit, term_cap);
  for (int i = 0; i < 3; ++i) {
    const std::int64_t t = sector.tilde_num[i];
    series.multiply({{0, 0, 1}, {unit + t, -1, 1}});
    series.multiply({{0, 0, 1}, {-t, 1, 1}});
    series.multiply_geometric(2 * sector.nu.num[i]);
    series.multiply_geometric(2 * (r - sector.nu.num[i]));
  }
  return series.coefficient(limit, -z_offset.numerator());
}

}  // namespace junior
