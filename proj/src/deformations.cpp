#include "junior/deformations.hpp"

#include <algorithm>
#include <string>

#include "junior/error.hpp"
#include "junior/singlets.hpp"

namespace junior {

std::int64_t edge_k(const Simplex& simplex, const Triangulation& t, std::size_t p, std::size_t q) {
  if (Simplex::is_corner(p) && Simplex::is_corner(q)) {
    throw Error(ErrorKind::BoundaryEdge, "u" + std::to_string(p + 1) + " u" + std::to_string(q + 1));
  }
  const auto& w = t.opposite(p, q);
  if (w.size() != 2) {
    throw Error(ErrorKind::NotAnEdge, "u" + std::to_string(p + 1) + " u" + std::to_string(q + 1));
  }
  const Vec2 d = simplex.chart(w[0]) + simplex.chart(w[1]) - simplex.chart(p) - simplex.chart(q);
  const Vec2 v = simplex.chart(q) - simplex.chart(p);
  if (det(d, v) != 0) throw Error(ErrorKind::Internal, "opposite points not parallel to the edge");
  return v.y != 0 ? d.y / v.y : d.z / v.z;
}

namespace {

using Triple = std::array<std::int64_t, 3>;

std::int64_t dot(const Triple& c, const Triple& n) { return c[0] * n[0] + c[1] * n[1] + c[2] * n[2]; }

// All c with n^alpha . c = rhs, |c_j| <= B, passing `keep`. Retries once with
// 2B if a solution sits on the outer shell.
template <class Keep>
std::vector<Triple> scan(const Simplex& simplex, std::size_t alpha, std::int64_t rhs,
                         EnumerationBound bound, Keep keep) {
  const Triple& n = simplex[alpha].nu.num;
  std::int64_t B = bound.initial > 0 ? bound.initial : 2 * simplex.r();
  for (int attempt = 0;; ++attempt) {
    std::vector<Triple> out;
    bool shell = false;
    for (std::int64_t c1 = -B; c1 <= B; ++c1) {
      for (std::int64_t c2 = -B; c2 <= B; ++c2) {
        const std::int64_t rem = rhs - n[0] * c1 - n[1] * c2;
        if (rem % n[2] != 0) continue;
        const std::int64_t c3 = rem / n[2];
        if (c3 < -B || c3 > B) continue;
        const Triple c{c1, c2, c3};
        if (!keep(c)) continue;
        out.push_back(c);
        if (std::max({std::abs(c1), std::abs(c2), std::abs(c3)}) == B) shell = true;
      }
    }
    if (!shell) return out;
    if (!bound.retry || attempt == 1) {
      throw Error(ErrorKind::BoundUnstable,
                  "solutions on the shell |c| = " + std::to_string(B) + " for u" + std::to_string(alpha + 1));
    }
    B *= 2;
  }
}

bool invariant(const GroupAction& action, const Triple& c) {
  return mod(c[0] + action.a() * c[1] + action.b() * c[2], action.r()) == 0;
}

// Induced exponents: corners take c, interior gamma takes
// (n^gamma . c - shift_gamma) / r.
LaurentMonomial induced(const Simplex& simplex, const Triple& c, const std::vector<std::int64_t>& shift) {
  LaurentMonomial m;
  m.exponents.resize(simplex.size());
  for (std::size_t p = 0; p < simplex.size(); ++p) {
    if (Simplex::is_corner(p)) {
      m.exponents[p] = c[p];
    } else {
      m.exponents[p] = (dot(c, simplex[p].nu.num) - shift[p]) / simplex.r();
    }
  }
  return m;
}

ExtCount finish(const Simplex& simplex, std::vector<Triple> triples, const std::vector<std::int64_t>& shift) {
  std::sort(triples.begin(), triples.end());
  ExtCount out;
  out.dim = static_cast<std::int64_t>(triples.size());
  for (const Triple& c : triples) out.monomials.push_back(induced(simplex, c, shift));
  out.triples = std::move(triples);
  return out;
}

}  // namespace

ExtCount ext_dim_vertex_pair(const Simplex& simplex, const Triangulation& t, std::size_t alpha,
                             int corner, EnumerationBound bound) {
  if (Simplex::is_corner(alpha) || corner < 0 || corner > 2) {
    throw Error(ErrorKind::InvalidInput, "vertex pair needs an interior point and a corner");
  }
  const GroupAction& action = simplex.action();
  const std::int64_t target = simplex[alpha].nu.num[corner];
  const auto around = t.neighbors(alpha);
  Triple unit{0, 0, 0};
  unit[corner] = 1;
  auto keep = [&](const Triple& c) {
    if (!invariant(action, {c[0] - unit[0], c[1] - unit[1], c[2] - unit[2]})) return false;
    for (std::size_t p : around) {
      const std::int64_t e = Simplex::is_corner(p) ? c[p] : dot(c, simplex[p].nu.num) - simplex[p].nu.num[corner];
      if (e < 0) return false;
    }
    return true;
  };
  std::vector<std::int64_t> shift(simplex.size());
  for (std::size_t p = 3; p < simplex.size(); ++p) shift[p] = simplex[p].nu.num[corner];
  return finish(simplex, scan(simplex, alpha, target, bound, keep), shift);
}

ExtCount ext_dim_interior_pair(const Simplex& simplex, const Triangulation& t, std::size_t alpha,
                               std::size_t beta, EnumerationBound bound) {
  if (Simplex::is_corner(alpha) || Simplex::is_corner(beta) || alpha == beta) {
    throw Error(ErrorKind::InvalidInput, "interior pair needs two distinct interior points");
  }
  const auto& w = t.opposite(alpha, beta);
  if (w.size() != 2) return {};
  const GroupAction& action = simplex.action();
  const std::int64_t r = simplex.r();
  auto keep = [&](const Triple& c) {
    if (dot(c, simplex[beta].nu.num) != -r || !invariant(action, c)) return false;
    for (std::size_t p : w) {
      const std::int64_t e = Simplex::is_corner(p) ? c[p] : dot(c, simplex[p].nu.num);
      if (e < 0) return false;
    }
    return true;
  };
  std::vector<std::int64_t> shift(simplex.size(), 0);
  shift[beta] = -r;
  return finish(simplex, scan(simplex, alpha, 0, bound, keep), shift);
}

bool monomial_consistent(const Simplex& simplex, const LaurentMonomial& m, std::size_t alpha,
                         std::size_t target) {
  if (m.exponents.size() != simplex.size() || m.exponents[alpha] != 0) return false;
  const bool vertex = Simplex::is_corner(target);
  if (!vertex && m.exponents[target] != 0) return false;
  for (std::size_t g = 3; g < simplex.size(); ++g) {
    Rational lhs = -Rational(m.exponents[g]);
    for (int j = 0; j < 3; ++j) lhs += m.exponents[j] * simplex[g].nu[j];
    Rational want = 0;
    if (vertex) want = simplex[g].nu[static_cast<int>(target)];
    if (!vertex && g == target) want = -1;
    if (lhs != want) return false;
  }
  return true;
}

DeformationReport deformation_report(const Simplex& simplex, const Triangulation& t,
                                     EnumerationBound bound) {
  DeformationReport rep;
  rep.r = simplex.r();
  rep.a = simplex.action().a();
  rep.b = simplex.action().b();
  rep.ext_quiver.node_count = simplex.size();
  const auto sectors = junior_sectors(simplex);
  for (std::size_t alpha = 3; alpha < simplex.size(); ++alpha) {
    SectorComparison cmp;
    cmp.point = alpha;
    const auto& sector = sectors[alpha - 3];
    cmp.case1 = count_by_target(invariant_only(simplex.action(), singlets_case1(sector)));
    cmp.case2 = static_cast<std::int64_t>(invariant_only(simplex.action(), singlets_case2(sector)).size());
    for (int i = 0; i < 3; ++i) {
      const std::int64_t dim = ext_dim_vertex_pair(simplex, t, alpha, i, bound).dim;
      cmp.vertex_dims[i] = dim;
      rep.pairs.push_back({alpha, static_cast<std::size_t>(i), dim});
      if (dim > 0) rep.ext_quiver.add(alpha, static_cast<std::size_t>(i), dim);
      rep.vertex_total += dim;
    }
    rep.singlet_total += cmp.case1[0] + cmp.case1[1] + cmp.case1[2] + cmp.case2;
    rep.sectors.push_back(cmp);
  }
  for (const Edge& e : t.edges()) {
    if (Simplex::is_corner(e.first)) continue;
    for (auto [s, g] : {e, Edge{e.second, e.first}}) {
      const std::int64_t dim = ext_dim_interior_pair(simplex, t, s, g, bound).dim;
      rep.pairs.push_back({s, g, dim});
      if (dim > 0) rep.ext_quiver.add(s, g, dim);
      rep.interior_total += dim;
    }
  }
  std::sort(rep.pairs.begin(), rep.pairs.end(), [](const PairDim& x, const PairDim& y) {
    return std::tie(x.source, x.target) < std::tie(y.source, y.target);
  });
  rep.grand_total = rep.vertex_total + rep.interior_total;
  return rep;
}

SweepRow sweep_row(const Simplex& simplex, const Triangulation& t, const Quiver& singlets,
                   EnumerationBound bound) {
  SweepRow row;
  std::int64_t case2_total = 0;
  for (const auto& [arrow, m] : singlets.arrows) {
    if (!Simplex::is_corner(arrow.second)) case2_total += m;
  }
  row.ext_quiver.node_count = simplex.size();
  for (std::size_t alpha = 3; alpha < simplex.size(); ++alpha) {
    for (int i = 0; i < 3; ++i) {
      const std::int64_t dim = ext_dim_vertex_pair(simplex, t, alpha, i, bound).dim;
      if (dim < singlets.multiplicity(alpha, static_cast<std::size_t>(i))) row.vertex_bound_ok = false;
      if (dim > 0) row.ext_quiver.add(alpha, static_cast<std::size_t>(i), dim);
      row.vertex_total += dim;
    }
  }
  for (const Edge& e : t.edges()) {
    if (Simplex::is_corner(e.first)) continue;
    for (auto [s, g] : {e, Edge{e.second, e.first}}) {
      const std::int64_t dim = ext_dim_interior_pair(simplex, t, s, g, bound).dim;
      if (dim > 0) row.ext_quiver.add(s, g, dim);
      row.interior_total += dim;
    }
  }
  row.grand_total = row.vertex_total + row.interior_total;
  row.interior_bound_ok = row.interior_total >= case2_total;
  for (const auto& [arrow, m] : singlets.arrows) {
    row.missing_arrows += std::max<std::int64_t>(0, m - row.ext_quiver.multiplicity(arrow.first, arrow.second));
  }
  for (const auto& [arrow, m] : row.ext_quiver.arrows) {
    row.extra_arrows += std::max<std::int64_t>(0, m - singlets.multiplicity(arrow.first, arrow.second));
  }
  return row;
}

bool MinimalityTable::lower_bounds_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SweepRow& row) { return row.vertex_bound_ok && row.interior_bound_ok; });
}

std::vector<std::size_t> MinimalityTable::witnesses(std::size_t p, std::size_t q, std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].unordered(p, q) == 0 && rows[k].unordered(p, w) >= 1) out.push_back(k);
  }
  return out;
}

MinimalityTable minimality_sweep(const Simplex& simplex, std::size_t cap, EnumerationBound bound) {
  MinimalityTable table;
  table.r = simplex.r();
  table.a = simplex.action().a();
  table.b = simplex.action().b();
  const Quiver singlets = quiver_from_singlets(simplex);
  const Triangulation g = ghilbert_triangulation(simplex, singlets);
  table.triangulations = all_triangulations(simplex, g, cap);
  table.ghilbert_index = static_cast<std::size_t>(
      std::lower_bound(table.triangulations.begin(), table.triangulations.end(), g) -
      table.triangulations.begin());
  for (const Triangulation& t : table.triangulations) table.rows.push_back(sweep_row(simplex, t, singlets, bound));
  table.singlet_total = singlets.total();
  table.minimum = table.rows.front().grand_total;
  for (const auto& row : table.rows) table.minimum = std::min(table.minimum, row.grand_total);
  return table;
}

}  // namespace junior
