#pragma once

// Singlets of the junior twisted sectors, classified by integer triples:
//   case 1: c >= 0 with c . nu = nu_i                      (target corner i)
//   case 2: c_i <= -2, other entries >= 0, c . nu = c_i + 1 (negative index i)
// The partition-function expansion is kept as an independent counter.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "junior/orbifold.hpp"

namespace junior {

struct TwistedSector {
  std::int64_t j = 0;
  NuTriple nu;
  std::array<std::int64_t, 3> tilde_num{};  // nu-tilde numerators over 2r
  Rational energy;
  Rational charge;

  Rational tilde(int i) const { return Rational(tilde_num[i], 2 * nu.den); }
  bool junior() const { return nu.sum_num() == nu.den; }
};

/// Throws OutOfRange unless 0 < j < r.
TwistedSector twisted_sector(const GroupAction& action, std::int64_t j);

/// The sector of every interior point of the simplex, in point order.
std::vector<TwistedSector> junior_sectors(const Simplex& simplex);

enum class SingletCase { One, Two };

struct SingletTriple {
  std::array<std::int64_t, 3> c{};
  SingletCase kind = SingletCase::One;
  int index = 0;  // case 1: target corner; case 2: position of the negative entry

  std::int64_t depth() const { return -c[index]; }
  friend bool operator==(const SingletTriple&, const SingletTriple&) = default;
};

/// All case-1 triples, sorted by target corner then lexicographically.
/// Entries are bounded by c_j <= nu_i / nu_j, so the scan is exhaustive.
std::vector<SingletTriple> singlets_case1(const TwistedSector& sector);

/// All case-2 triples, sorted by (negative index, depth) then
/// lexicographically. The depth d satisfies r - d(r - n_i) >= 0 and each
/// non-negative entry is bounded by that right-hand side over n_j.
std::vector<SingletTriple> singlets_case2(const TwistedSector& sector);

/// Orbifold projection: the monomial x^c / x_i (case 1) or x^c (case 2) in
/// the coordinates of C^3 must be invariant under (1, a, b). Automatic when
/// gcd(j, r) = 1.
bool is_invariant(const GroupAction& action, const SingletTriple& s);

std::vector<SingletTriple> invariant_only(const GroupAction& action,
                                          std::vector<SingletTriple> singlets);

/// Case-1 counts per target corner.
std::array<std::int64_t, 3> count_by_target(const std::vector<SingletTriple>& case1);

/// q^0 z^0 coefficient of the sector partition function. Returns 0 when
/// E > 0 or the z-offset is not integral. Throws TruncationOverflow past
/// term_cap terms.
std::int64_t singlet_count_pf(const TwistedSector& sector, std::size_t term_cap = 1'000'000);

}  // namespace junior
