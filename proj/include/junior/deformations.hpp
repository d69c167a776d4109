#pragma once

// First-order framed deformations of the tangent sheaf of a crepant
// resolution, counted per ordered pair of divisors. Two routes: the edge
// formula on the triangulation, and direct enumeration of integer triples.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "junior/triangulation.hpp"

namespace junior {

/// Exponents of a Laurent monomial, one per simplex point: corners carry
/// c_1..c_3, interior points the induced exponents c_beta.
struct LaurentMonomial {
  std::vector<std::int64_t> exponents;
  friend bool operator==(const LaurentMonomial&, const LaurentMonomial&) = default;
};

/// The integer k with w1 + w2 - p - q = k (q - p), where w1, w2 are the
/// points opposite the edge. Throws NotAnEdge, or BoundaryEdge for a side of
/// the big triangle.
std::int64_t edge_k(const Simplex& simplex, const Triangulation& t, std::size_t p, std::size_t q);

struct ExtCount {
  std::int64_t dim = 0;
  std::vector<std::array<std::int64_t, 3>> triples;  // sorted
  std::vector<LaurentMonomial> monomials;            // parallel to triples
};

struct EnumerationBound {
  std::int64_t initial = 0;  // 0 means 2r
  bool retry = true;         // double once when the outer shell is hit
};

/// Ext^1(O_{D_alpha}, O(q_i)): triples c with c . nu^alpha = nu_i^alpha whose
/// monomial is invariant and non-negative at every neighbor of alpha.
/// Throws BoundUnstable when solutions persist on the outer shell.
ExtCount ext_dim_vertex_pair(const Simplex& simplex, const Triangulation& t, std::size_t alpha,
                             int corner, EnumerationBound bound = {});

/// Ext^1(O_{D_alpha}, O_{D_beta}): triples with c . nu^alpha = 0 and
/// c . nu^beta = -1, non-negative at the two points opposite the edge.
/// Zero when alpha, beta do not span an edge.
ExtCount ext_dim_interior_pair(const Simplex& simplex, const Triangulation& t, std::size_t alpha,
                               std::size_t beta, EnumerationBound bound = {});

/// Exact check of the induced-exponent identities of a vertex-pair
/// (target >= 0 is the corner) or interior-pair (target is the interior
/// point beta) monomial.
bool monomial_consistent(const Simplex& simplex, const LaurentMonomial& m, std::size_t alpha,
                         std::size_t target);

struct PairDim {
  std::size_t source = 0;
  std::size_t target = 0;
  std::int64_t dim = 0;
};

struct SectorComparison {
  std::size_t point = 0;
  std::array<std::int64_t, 3> case1{};  // invariant case-1 singlets per target
  std::int64_t case2 = 0;               // invariant case-2 singlets
  std::array<std::int64_t, 3> vertex_dims{};

  std::int64_t delta(int corner) const { return vertex_dims[corner] - case1[corner]; }
};

struct DeformationReport {
  std::int64_t r = 0, a = 0, b = 0;
  std::vector<PairDim> pairs;  // every (alpha, i) and both directions of every interior edge
  Quiver ext_quiver;
  std::int64_t vertex_total = 0;
  std::int64_t interior_total = 0;
  std::int64_t grand_total = 0;
  std::int64_t singlet_total = 0;
  std::vector<SectorComparison> sectors;
};

DeformationReport deformation_report(const Simplex& simplex, const Triangulation& t,
                                     EnumerationBound bound = {});

/// Totals of one triangulation inside a sweep.
struct SweepRow {
  std::int64_t vertex_total = 0;
  std::int64_t interior_total = 0;
  std::int64_t grand_total = 0;
  bool vertex_bound_ok = true;    // every (alpha, i) >= its case-1 count
  bool interior_bound_ok = true;  // interior_total >= case-2 total
  std::int64_t missing_arrows = 0;  // singlet arrows absent from the Ext-quiver
  std::int64_t extra_arrows = 0;    // Ext-quiver arrows without a singlet
  Quiver ext_quiver;

  /// Dimension summed over both directions of an unordered pair.
  std::int64_t unordered(std::size_t p, std::size_t q) const {
    return ext_quiver.multiplicity(p, q) + ext_quiver.multiplicity(q, p);
  }
  friend bool operator==(const SweepRow& x, const SweepRow& y) {
    return x.grand_total == y.grand_total && x.vertex_total == y.vertex_total &&
           x.interior_total == y.interior_total && x.vertex_bound_ok == y.vertex_bound_ok &&
           x.interior_bound_ok == y.interior_bound_ok && x.missing_arrows == y.missing_arrows &&
           x.extra_arrows == y.extra_arrows && x.ext_quiver.arrows == y.ext_quiver.arrows;
  }
};

SweepRow sweep_row(const Simplex& simplex, const Triangulation& t, const Quiver& singlets,
                   EnumerationBound bound = {});

struct MinimalityTable {
  std::int64_t r = 0, a = 0, b = 0;
  std::vector<Triangulation> triangulations;
  std::vector<SweepRow> rows;
  std::size_t ghilbert_index = 0;
  std::int64_t minimum = 0;
  std::int64_t singlet_total = 0;

  bool ghilbert_is_minimal() const { return rows[ghilbert_index].grand_total == minimum; }
  bool minimum_is_singlet_total() const { return minimum == singlet_total; }
  bool lower_bounds_hold() const;
  /// Triangulations where pair (p, q) carries nothing and (p, w) does.
  std::vector<std::size_t> witnesses(std::size_t p, std::size_t q, std::size_t w) const;
};

/// Serial reference. The parallel version lives in sweep.hpp.
MinimalityTable minimality_sweep(const Simplex& simplex, std::size_t cap = 200'000,
                                 EnumerationBound bound = {});

}  // namespace junior
