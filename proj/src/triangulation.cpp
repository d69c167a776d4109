#include "junior/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <string>

#include "junior/error.hpp"

namespace junior {

Triangle make_triangle(std::size_t p, std::size_t q, std::size_t w) {
  Triangle t{p, q, w};
  std::sort(t.begin(), t.end());
  return t;
}

Triangulation::Triangulation(std::size_t point_count, std::vector<Triangle> triangles,
                             std::map<Edge, std::int64_t> strengths)
    : point_count_(point_count), triangles_(std::move(triangles)), strengths_(std::move(strengths)) {
  for (auto& t : triangles_) std::sort(t.begin(), t.end());
  std::sort(triangles_.begin(), triangles_.end());
  for (const auto& t : triangles_) {
    opposite_[make_edge(t[0], t[1])].push_back(t[2]);
    opposite_[make_edge(t[0], t[2])].push_back(t[1]);
    opposite_[make_edge(t[1], t[2])].push_back(t[0]);
  }
}

std::vector<Edge> Triangulation::edges() const {
  std::vector<Edge> out;
  out.reserve(opposite_.size());
  for (const auto& [e, _] : opposite_) out.push_back(e);
  return out;
}

bool Triangulation::has_edge(std::size_t p, std::size_t q) const {
  return opposite_.contains(make_edge(p, q));
}

const std::vector<std::size_t>& Triangulation::opposite(std::size_t p, std::size_t q) const {
  static const std::vector<std::size_t> none;
  auto it = opposite_.find(make_edge(p, q));
  return it == opposite_.end() ? none : it->second;
}

std::vector<std::size_t> Triangulation::neighbors(std::size_t p) const {
  std::set<std::size_t> out;
  for (const auto& t : triangles_) {
    if (std::find(t.begin(), t.end(), p) == t.end()) continue;
    for (std::size_t v : t) {
      if (v != p) out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

std::string validation_error(const Simplex& simplex, const Triangulation& t) {
  const std::size_t n = simplex.size();
  if (t.point_count() != n) return "point count mismatch";
  if (static_cast<std::int64_t>(t.triangles().size()) != simplex.doubled_area()) {
    return "triangle count " + std::to_string(t.triangles().size()) + " != doubled area " +
           std::to_string(simplex.doubled_area());
  }
  std::vector<bool> used(n, false);
  for (const auto& tri : t.triangles()) {
    for (std::size_t v : tri) {
      if (v >= n) return "vertex index out of range";
      used[v] = true;
    }
    if (tri[0] == tri[1] || tri[1] == tri[2]) return "degenerate triangle";
    const std::int64_t d = det(simplex.chart(tri[1]) - simplex.chart(tri[0]),
                               simplex.chart(tri[2]) - simplex.chart(tri[0]));
    if (d != 1 && d != -1) return "triangle is not unimodular";
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return "unused lattice point";
  for (const Edge& e : t.edges()) {
    const auto& opp = t.opposite(e.first, e.second);
    const bool boundary = Simplex::is_corner(e.first) && Simplex::is_corner(e.second);
    if (boundary) {
      if (opp.size() != 1) return "boundary edge not covered exactly once";
      continue;
    }
    if (opp.size() != 2) return "interior edge not shared by exactly two triangles";
    const Vec2 p = simplex.chart(e.first), q = simplex.chart(e.second);
    const std::int64_t s1 = det(q - p, simplex.chart(opp[0]) - p);
    const std::int64_t s2 = det(q - p, simplex.chart(opp[1]) - p);
    if ((s1 > 0) == (s2 > 0)) return "triangles overlap along an edge";
  }
  return {};
}

namespace {

int half_plane(Vec2 d) { return (d.z > 0 || (d.z == 0 && d.y > 0)) ? 0 : 1; }

bool angle_less(Vec2 a, Vec2 b) {
  const int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return det(a, b) > 0;
}

int sign(std::int64_t x) { return (x > 0) - (x < 0); }

// Segments share more than a common endpoint.
bool segments_conflict(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int d1 = sign(det(b - a, c - a)), d2 = sign(det(b - a, d - a));
  const int d3 = sign(det(d - c, a - c)), d4 = sign(det(d - c, b - c));
  if (d1 == 0 && d2 == 0) {
    // Collinear: overlap iff the parameter intervals intersect in more than a point.
    const Vec2 dir = b - a;
    auto param = [&](Vec2 p) { return (p - a).y * dir.y + (p - a).z * dir.z; };
    const std::int64_t len = param(b);
    std::int64_t lo = param(c), hi = param(d);
    if (lo > hi) std::swap(lo, hi);
    return std::min(hi, len) > std::max<std::int64_t>(lo, 0);
  }
  return d1 * d2 < 0 && d3 * d4 < 0;
}

}  // namespace

std::vector<Triangle> complete_by_tessellation(const Simplex& simplex, const std::set<Edge>& edges) {
  const std::size_t n = simplex.size();
  for (const Edge& e : {make_edge(0, 1), make_edge(0, 2), make_edge(1, 2)}) {
    if (!edges.contains(e)) throw Error(ErrorKind::IrregularHole, "boundary edge missing");
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto [a, b] = list[i];
      const auto [c, d] = list[j];
      if (a == c || a == d || b == c || b == d) {
        // Sharing an endpoint: conflict only when collinear and pointing the same way.
        const std::size_t common = (a == c || a == d) ? a : b;
        const std::size_t x = a == common ? b : a, y = c == common ? d : c;
        const Vec2 u = simplex.chart(x) - simplex.chart(common);
        const Vec2 v = simplex.chart(y) - simplex.chart(common);
        if (det(u, v) == 0 && u.y * v.y + u.z * v.z > 0) {
          throw Error(ErrorKind::IrregularHole, "overlapping edges");
        }
        continue;
      }
      if (segments_conflict(simplex.chart(a), simplex.chart(b), simplex.chart(c), simplex.chart(d))) {
        throw Error(ErrorKind::IrregularHole, "crossing edges");
      }
    }
  }

  std::vector<std::vector<std::size_t>> around(n);
  for (const auto& [p, q] : list) {
    around[p].push_back(q);
    around[q].push_back(p);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end(), [&](std::size_t x, std::size_t y) {
      return angle_less(simplex.chart(x) - simplex.chart(v), simplex.chart(y) - simplex.chart(v));
    });
  }

  std::vector<Triangle> out;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [p0, q0] : list) {
    for (auto [u, v] : {std::pair{p0, q0}, std::pair{q0, p0}}) {
      if (seen.contains({u, v})) continue;
      std::vector<std::size_t> face;
      std::size_t a = u, b = v;
      while (!seen.contains({a, b})) {
        seen.insert({a, b});
        face.push_back(a);
        const auto& ring = around[b];
        const auto k = static_cast<std::size_t>(std::find(ring.begin(), ring.end(), a) - ring.begin());
        const std::size_t c = ring[(k + ring.size() - 1) % ring.size()];
        a = b;
        b = c;
      }
      std::int64_t area2 = 0;
      for (std::size_t i = 0; i < face.size(); ++i) {
        area2 += det(simplex.chart(face[i]), simplex.chart(face[(i + 1) % face.size()]));
      }
      if (area2 <= 0) continue;  // the unbounded face

      std::ostringstream where;
      for (std::size_t v2 : face) where << " u" << v2 + 1;
      if (std::set<std::size_t>(face.begin(), face.end()).size() != face.size()) {
        throw Error(ErrorKind::IrregularHole, "face is not a simple polygon:" + where.str());
      }
      std::vector<std::size_t> corners;
      for (std::size_t i = 0; i < face.size(); ++i) {
        const Vec2 prev = simplex.chart(face[(i + face.size() - 1) % face.size()]);
        const Vec2 cur = simplex.chart(face[i]);
        const Vec2 next = simplex.chart(face[(i + 1) % face.size()]);
        if (det(cur - prev, next - cur) != 0) corners.push_back(face[i]);
      }
      if (corners.size() != 3) {
        throw Error(ErrorKind::IrregularHole, "face is not a triangle:" + where.str());
      }
      const Vec2 o = simplex.chart(corners[0]);
      const Vec2 s1 = simplex.chart(corners[1]) - o, s2 = simplex.chart(corners[2]) - o;
      const std::int64_t k = content(s1);
      if (k <= 0 || s2.y % k != 0 || s2.z % k != 0 || content(s2 - s1) != k) {
        throw Error(ErrorKind::IrregularHole, "sides of different lattice length:" + where.str());
      }
      const Vec2 e1{s1.y / k, s1.z / k}, e2{s2.y / k, s2.z / k};
      if (std::abs(det(e1, e2)) != 1 || static_cast<std::int64_t>(face.size()) != 3 * k) {
        throw Error(ErrorKind::IrregularHole, "not a scaled unimodular triangle:" + where.str());
      }
      auto grid = [&](std::int64_t i, std::int64_t j) {
        auto p = simplex.find(o + i * e1 + j * e2);
        if (!p) throw Error(ErrorKind::IrregularHole, "tessellation point missing");
        return *p;
      };
      for (std::int64_t i = 0; i < k; ++i) {
        for (std::int64_t j = 0; i + j < k; ++j) {
          out.push_back(make_triangle(grid(i, j), grid(i + 1, j), grid(i, j + 1)));
          if (i + j < k - 1) out.push_back(make_triangle(grid(i + 1, j), grid(i, j + 1), grid(i + 1, j + 1)));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> flippable_edges(const Simplex& simplex, const Triangulation& t) {
  std::vector<Edge> out;
  for (const Edge& e : t.edges()) {
    const auto& opp = t.opposite(e.first, e.second);
    if (opp.size() != 2) continue;
    if (simplex.chart(opp[0]) + simplex.chart(opp[1]) == simplex.chart(e.first) + simplex.chart(e.second)) {
      out.push_back(e);
    }
  }
  return out;
}

Triangulation flip(const Simplex& simplex, const Triangulation& t, Edge e) {
  const auto& opp = t.opposite(e.first, e.second);
  if (opp.size() != 2 ||
      simplex.chart(opp[0]) + simplex.chart(opp[1]) != simplex.chart(e.first) + simplex.chart(e.second)) {
    throw Error(ErrorKind::InvalidInput, "edge is not flippable");
  }
  const Triangle drop1 = make_triangle(e.first, e.second, opp[0]);
  const Triangle drop2 = make_triangle(e.first, e.second, opp[1]);
  std::vector<Triangle> tris;
  for (const auto& tri : t.triangles()) {
    if (tri != drop1 && tri != drop2) tris.push_back(tri);
  }
  tris.push_back(make_triangle(opp[0], opp[1], e.first));
  tris.push_back(make_triangle(opp[0], opp[1], e.second));
  return Triangulation(t.point_count(), std::move(tris));
}

std::vector<Triangulation> all_triangulations(const Simplex& simplex, std::size_t cap) {
  return all_triangulations(simplex, ghilbert_triangulation(simplex), cap);
}

std::vector<Triangulation> all_triangulations(const Simplex& simplex, const Triangulation& start,
                                              std::size_t cap) {
  std::set<Triangulation> seen;
  const Triangulation root(start.point_count(), start.triangles());
  seen.insert(root);
  std::deque<Triangulation> queue{root};
  while (!queue.empty()) {
    const Triangulation cur = std::move(queue.front());
    queue.pop_front();
    for (const Edge& e : flippable_edges(simplex, cur)) {
      Triangulation next = flip(simplex, cur, e);
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(ErrorKind::SizeLimit, "more than " + std::to_string(cap) + " triangulations");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace junior
