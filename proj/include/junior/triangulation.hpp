#pragma once

// Unimodular triangulations of the junior triangle and the two constructions
// of the G-Hilbert triangulation: the singlet quiver and the modified
// knockout of corner fans.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "junior/orbifold.hpp"

namespace junior {

/// Unordered pair of point positions, stored with first < second.
using Edge = std::pair<std::size_t, std::size_t>;
inline Edge make_edge(std::size_t p, std::size_t q) { return p < q ? Edge{p, q} : Edge{q, p}; }

/// Sorted point positions.
using Triangle = std::array<std::size_t, 3>;
Triangle make_triangle(std::size_t p, std::size_t q, std::size_t w);

/// Directed multigraph on the simplex points.
struct Quiver {
  std::size_t node_count = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> arrows;  // (source, target) -> multiplicity

  std::int64_t multiplicity(std::size_t source, std::size_t target) const;
  std::int64_t total() const;
  void add(std::size_t source, std::size_t target, std::int64_t count = 1);
};

/// One arrow u_alpha -> u_i per invariant case-1 singlet; per invariant
/// case-2 singlet of depth n, one arrow from u_i + n(u_alpha - u_i) to
/// u_i + (n-1)(u_alpha - u_i). Throws MissingNode if that point is absent.
Quiver quiver_from_singlets(const Simplex& simplex);

class Triangulation {
 public:
  Triangulation() = default;
  /// Canonicalizes the triangle list (sorted). Does not validate.
  Triangulation(std::size_t point_count, std::vector<Triangle> triangles,
                std::map<Edge, std::int64_t> strengths = {});

  std::size_t point_count() const { return point_count_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  /// Edge annotations; empty when the triangulation was not built by one of
  /// the G-Hilbert constructions.
  const std::map<Edge, std::int64_t>& strengths() const { return strengths_; }

  std::vector<Edge> edges() const;
  bool has_edge(std::size_t p, std::size_t q) const;
  /// Third vertices of the triangles containing edge (p, q).
  const std::vector<std::size_t>& opposite(std::size_t p, std::size_t q) const;
  /// Points sharing a triangle with p.
  std::vector<std::size_t> neighbors(std::size_t p) const;

  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.triangles_ == y.triangles_;
  }
  friend bool operator<(const Triangulation& x, const Triangulation& y) {
    return x.triangles_ < y.triangles_;
  }

 private:
  std::size_t point_count_ = 0;
  std::vector<Triangle> triangles_;
  std::map<Edge, std::int64_t> strengths_;
  std::map<Edge, std::vector<std::size_t>> opposite_;
};

/// Empty string when t is a unimodular triangulation of the junior triangle
/// using every lattice point; otherwise the first violation found.
std::string validation_error(const Simplex& simplex, const Triangulation& t);
inline bool is_valid(const Simplex& simplex, const Triangulation& t) {
  return validation_error(simplex, t).empty();
}

/// Completes a non-crossing edge set (which must contain the three boundary
/// edges) to a triangulation: every bounded face has to be a k-fold lattice
/// triangle and is filled with its regular tessellation (k^2 triangles, all
/// edges parallel to the sides). Throws IrregularHole otherwise.
std::vector<Triangle> complete_by_tessellation(const Simplex& simplex, const std::set<Edge>& edges);

/// Quiver method: corner arrows of multiplicity >= 2, all case-2 arrows and
/// the boundary, completed by regular tessellation. Strengths are arrow
/// multiplicities (0 on tessellation-only edges).
Triangulation ghilbert_triangulation(const Simplex& simplex);
Triangulation ghilbert_triangulation(const Simplex& simplex, const Quiver& quiver);

enum class KnockoutRule {
  Modified,  // extra -1 on the first interior-to-interior segment; stop at <= 0
  Classic,   // no extra subtraction; stop at <= 1
};

/// Knockout method on the corner fans. Survival of the extended lines is the
/// fixed point of the antitone survival map; when plain iteration oscillates,
/// every fixed point between the oscillating states is examined and the one
/// completing to a valid triangulation is taken. Throws NonConvergent when
/// that choice is not unique.
Triangulation knockout_triangulation(const Simplex& simplex,
                                     KnockoutRule rule = KnockoutRule::Modified);

/// Interior edges whose two triangles form a parallelogram.
std::vector<Edge> flippable_edges(const Simplex& simplex, const Triangulation& t);
Triangulation flip(const Simplex& simplex, const Triangulation& t, Edge e);

/// Breadth-first closure under flips from `start` (the G-Hilbert
/// triangulation when omitted). Sorted. Throws SizeLimit past `cap`.
std::vector<Triangulation> all_triangulations(const Simplex& simplex, std::size_t cap = 200'000);
std::vector<Triangulation> all_triangulations(const Simplex& simplex, const Triangulation& start,
                                              std::size_t cap = 200'000);

}  // namespace junior
