#include <doctest.h>

#include "junior/deformations.hpp"
#include "junior/error.hpp"
#include "junior/singlets.hpp"
#include "oracles.hpp"

using namespace junior;

namespace {

std::vector<oracle::V3> rays(const Simplex& s) {
  std::vector<oracle::V3> out;
  for (const auto& p : s.points()) out.push_back(p.coords3);
  return out;
}

ErrorKind kind_of_edge_k(const Simplex& s, const Triangulation& t, std::size_t p, std::size_t q) {
  try {
    edge_k(s, t, p, q);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

// Every pair dimension of t recomputed on characters of the dual lattice.
void check_against_characters(const Simplex& s, const Triangulation& t) {
  const auto u = rays(s);
  const std::int64_t M = 3 * s.r();
  for (std::size_t alpha = 3; alpha < s.size(); ++alpha) {
    const auto nb = t.neighbors(alpha);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(ext_dim_vertex_pair(s, t, alpha, static_cast<int>(i)).dim == oracle::vertex_pair(u, alpha, i, nb, M));
    }
    for (std::size_t beta = 3; beta < s.size(); ++beta) {
      if (beta == alpha) continue;
      const auto& w = t.opposite(alpha, beta);
      const std::int64_t want = w.size() == 2 ? oracle::interior_pair(u, alpha, beta, w, M) : 0;
      CHECK(ext_dim_interior_pair(s, t, alpha, beta).dim == want);
    }
  }
}

}  // namespace

TEST_CASE("Z11 edge_k") {
  const Simplex s(GroupAction::make(11, 2, 8));
  const Triangulation g = ghilbert_triangulation(s);
  CHECK(edge_k(s, g, 2, 3) == 5);
  CHECK(std::abs(edge_k(s, g, 3, 4)) == 3);
  CHECK(edge_k(s, g, 6, 4) == 0);
  CHECK(kind_of_edge_k(s, g, 0, 1) == ErrorKind::BoundaryEdge);
  CHECK(kind_of_edge_k(s, g, 3, 7) == ErrorKind::NotAnEdge);
}

TEST_CASE("Z11 vertex pairs") {
  const Simplex s(GroupAction::make(11, 2, 8));
  const Triangulation g = ghilbert_triangulation(s);
  const ExtCount e = ext_dim_vertex_pair(s, g, 3, 2);
  CHECK(e.dim == 6);
  const auto it = std::find(e.triples.begin(), e.triples.end(), std::array<std::int64_t, 3>{2, 3, 0});
  REQUIRE(it != e.triples.end());
  // x1^2 x2^3 x5 x6^2 x7 x8^2
  const LaurentMonomial& m = e.monomials[static_cast<std::size_t>(it - e.triples.begin())];
  CHECK(m.exponents == std::vector<std::int64_t>{2, 3, 0, 0, 1, 2, 1, 2});
  for (const auto& mono : e.monomials) CHECK(monomial_consistent(s, mono, 3, 2));

  const ExtCount u5 = ext_dim_vertex_pair(s, g, 4, 0);
  CHECK(u5.dim == 1);
  CHECK(u5.triples.front() == std::array<std::int64_t, 3>{1, 0, 0});
}

TEST_CASE("Z11 interior pairs") {
  const Simplex s(GroupAction::make(11, 2, 8));
  const Triangulation g = ghilbert_triangulation(s);
  CHECK(ext_dim_interior_pair(s, g, 4, 3).dim + ext_dim_interior_pair(s, g, 3, 4).dim == 3);
  CHECK(ext_dim_interior_pair(s, g, 6, 7).dim == 0);
  CHECK(ext_dim_interior_pair(s, g, 7, 6).dim == 0);
  CHECK(ext_dim_interior_pair(s, g, 3, 7).dim == 0);
  for (const auto& m : ext_dim_interior_pair(s, g, 4, 3).monomials) CHECK(monomial_consistent(s, m, 4, 3));
  CHECK_THROWS_AS(ext_dim_interior_pair(s, g, 3, 3), Error);
}

TEST_CASE("Z11 report: 39 = 31 + 8") {
  const Simplex s(GroupAction::make(11, 2, 8));
  const Triangulation g = ghilbert_triangulation(s);
  const DeformationReport rep = deformation_report(s, g);
  CHECK(rep.vertex_total == 31);
  CHECK(rep.interior_total == 8);
  CHECK(rep.grand_total == 39);
  CHECK(rep.singlet_total == 39);
  CHECK(rep.ext_quiver.arrows == quiver_from_singlets(s).arrows);
  for (const auto& sec : rep.sectors)
    for (int i = 0; i < 3; ++i) CHECK(sec.delta(i) == 0);
  // Independent re-derivation: sum of character counts over every pair.
  const auto u = rays(s);
  std::int64_t total = 0;
  for (std::size_t alpha = 3; alpha < s.size(); ++alpha) {
    for (std::size_t i = 0; i < 3; ++i) total += oracle::vertex_pair(u, alpha, i, g.neighbors(alpha), 33);
    for (std::size_t beta = 3; beta < s.size(); ++beta) {
      const auto& w = g.opposite(alpha, beta);
      if (beta != alpha && w.size() == 2) total += oracle::interior_pair(u, alpha, beta, w, 33);
    }
  }
  CHECK(total == 39);
}

TEST_CASE("Z3 vertex dimensions equal case-1 counts") {
  const Simplex s(GroupAction::make(3, 1, 1));
  const auto all = all_triangulations(s);
  REQUIRE(all.size() == 1);
  const auto counts = count_by_target(singlets_case1(junior_sectors(s)[0]));
  for (int i = 0; i < 3; ++i) {
    CHECK(ext_dim_vertex_pair(s, all[0], 3, i).dim == counts[i]);
    CHECK(edge_k(s, all[0], static_cast<std::size_t>(i), 3) + 1 == counts[i]);
  }
  CHECK(deformation_report(s, all[0]).grand_total == 9);
}

TEST_CASE("enumeration matches the character oracle on every triangulation") {
  for (std::int64_t r : {7, 11, 13}) {
    for (const auto& act : isolated_actions(r)) {
      if (act.r() != r) continue;
      const Simplex s(act);
      for (const auto& t : all_triangulations(s)) check_against_characters(s, t);
    }
  }
}

TEST_CASE("Z11 minimality and witness") {
  const Simplex s(GroupAction::make(11, 2, 8));
  const MinimalityTable table = minimality_sweep(s);
  CHECK(table.triangulations.size() == 5);
  CHECK(table.minimum == 39);
  CHECK(table.ghilbert_is_minimal());
  CHECK(table.minimum_is_singlet_total());
  CHECK(table.lower_bounds_hold());
  for (const auto& row : table.rows) CHECK(row.grand_total >= 39);
  const auto w = table.witnesses(3, 6, 7);
  REQUIRE(w.size() == 1);
  CHECK(w.front() != table.ghilbert_index);
}

TEST_CASE("minimality for small primes") {
  const std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> want{
      {{7, 1}, 29}, {{7, 2}, 24}, {{11, 2}, 39}, {{11, 1}, 57}, {{13, 1}, 74}, {{13, 2}, 47}, {{13, 3}, 45}};
  for (const auto& [key, total] : want) {
    const Simplex s(GroupAction::make(key.first, key.second, key.first - 1 - key.second));
    const MinimalityTable t = minimality_sweep(s);
    CHECK(t.minimum == total);
    CHECK(t.ghilbert_is_minimal());
    CHECK(t.minimum_is_singlet_total());
  }
}

TEST_CASE("bound handling") {
  const Simplex s(GroupAction::make(11, 2, 8));
  const Triangulation g = ghilbert_triangulation(s);
  // (8,0,0) lies on the shell of B = 8; one doubling recovers it.
  CHECK(ext_dim_vertex_pair(s, g, 3, 2, {8, true}).dim == 6);
  CHECK_THROWS_AS(ext_dim_vertex_pair(s, g, 3, 2, {8, false}), Error);
  CHECK_THROWS_AS(ext_dim_vertex_pair(s, g, 3, 2, {4, true}), Error);
}
