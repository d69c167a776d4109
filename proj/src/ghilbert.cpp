#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "junior/error.hpp"
#include "junior/hirzebruch_jung.hpp"
#include "junior/singlets.hpp"
#include "junior/triangulation.hpp"

namespace junior {

std::int64_t Quiver::multiplicity(std::size_t source, std::size_t target) const {
  auto it = arrows.find({source, target});
  return it == arrows.end() ? 0 : it->second;
}

std::int64_t Quiver::total() const {
  std::int64_t sum = 0;
  for (const auto& [_, m] : arrows) sum += m;
  return sum;
}

void Quiver::add(std::size_t source, std::size_t target, std::int64_t count) {
  arrows[{source, target}] += count;
}

Quiver quiver_from_singlets(const Simplex& simplex) {
  const GroupAction& action = simplex.action();
  Quiver q;
  q.node_count = simplex.size();
  const auto sectors = junior_sectors(simplex);
  for (std::size_t alpha = 3; alpha < simplex.size(); ++alpha) {
    const TwistedSector& sector = sectors[alpha - 3];
    for (const auto& s : invariant_only(action, singlets_case1(sector))) {
      q.add(alpha, static_cast<std::size_t>(s.index));
    }
    for (const auto& s : invariant_only(action, singlets_case2(sector))) {
      const Vec2 base = simplex.chart(static_cast<std::size_t>(s.index));
      const Vec2 step = simplex.chart(alpha) - base;
      const auto from = simplex.find(base + s.depth() * step);
      const auto to = simplex.find(base + (s.depth() - 1) * step);
      if (!from || !to) {
        throw Error(ErrorKind::MissingNode, "case-2 singlet of u" + std::to_string(alpha + 1) +
                                                " points outside the simplex");
      }
      q.add(*from, *to);
    }
  }
  return q;
}

namespace {

Triangulation finish(const Simplex& simplex, std::map<Edge, std::int64_t> strengths) {
  for (const Edge& e : {make_edge(0, 1), make_edge(0, 2), make_edge(1, 2)}) strengths[e] = 0;
  std::set<Edge> edges;
  for (const auto& [e, _] : strengths) edges.insert(e);
  Triangulation t(simplex.size(), complete_by_tessellation(simplex, edges));
  for (const Edge& e : t.edges()) strengths.try_emplace(e, 0);
  return Triangulation(simplex.size(), t.triangles(), std::move(strengths));
}

}  // namespace

Triangulation ghilbert_triangulation(const Simplex& simplex) {
  return ghilbert_triangulation(simplex, quiver_from_singlets(simplex));
}

Triangulation ghilbert_triangulation(const Simplex& simplex, const Quiver& quiver) {
  std::map<Edge, std::int64_t> strengths;
  for (const auto& [arrow, m] : quiver.arrows) {
    const auto [s, t] = arrow;
    if (Simplex::is_corner(t) && m < 2) continue;
    strengths[make_edge(s, t)] += m;
  }
  return finish(simplex, std::move(strengths));
}

namespace {

struct Line {
  std::vector<std::size_t> points;  // corner first, then the ray point, then onward
  std::int64_t strength = 0;
};

std::vector<Line> fan_lines(const Simplex& simplex) {
  std::vector<Line> lines;
  for (int k = 0; k < 3; ++k) {
    for (const FanRay& ray : corner_fan(simplex, k).rays) {
      const std::size_t corner = static_cast<std::size_t>(k);
      const Vec2 step = simplex.chart(ray.point) - simplex.chart(corner);
      Line line{{corner, ray.point}, ray.strength};
      while (auto next = simplex.find(simplex.chart(line.points.back()) + step)) {
        line.points.push_back(*next);
      }
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

using Reach = std::vector<std::size_t>;

// One step of the survival map: given how far each line reaches, how far
// would each line reach, and with which segment strengths.
Reach survive(const std::vector<Line>& lines, const Reach& reach, KnockoutRule rule,
              std::vector<std::vector<std::int64_t>>* segments = nullptr) {
  std::map<std::size_t, std::vector<std::size_t>> reached;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    for (std::size_t t = 1; t <= reach[li]; ++t) reached[lines[li].points[t]].push_back(li);
  }
  const std::int64_t stop = rule == KnockoutRule::Modified ? 0 : 1;
  Reach out(lines.size());
  if (segments) segments->assign(lines.size(), {});
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const Line& line = lines[li];
    std::int64_t cur = line.strength;
    std::vector<std::int64_t> seg{cur};
    std::size_t r = 1;
    for (std::size_t t = 1; t + 1 < line.points.size(); ++t) {
      const auto it = reached.find(line.points[t]);
      if (it != reached.end()) {
        cur -= static_cast<std::int64_t>(
            std::count_if(it->second.begin(), it->second.end(), [&](std::size_t o) { return o != li; }));
      }
      if (rule == KnockoutRule::Modified && t == 1) --cur;
      if (cur <= stop) break;
      seg.push_back(cur);
      r = t + 1;
    }
    out[li] = r;
    if (segments) (*segments)[li] = std::move(seg);
  }
  return out;
}

std::vector<Reach> fixed_points(const std::vector<Line>& lines, KnockoutRule rule) {
  Reach x(lines.size());
  for (std::size_t li = 0; li < lines.size(); ++li) x[li] = lines[li].points.size() - 1;
  std::set<Reach> seen;
  while (true) {
    Reach y = survive(lines, x, rule);
    if (y == x) return {x};
    if (seen.contains(y)) {
      // Oscillation between y and its image: every fixed point lies between them.
      const Reach z = survive(lines, y, rule);
      Reach lo(x.size()), hi(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        lo[i] = std::min(y[i], z[i]);
        hi[i] = std::max(y[i], z[i]);
      }
      std::size_t combos = 1;
      for (std::size_t i = 0; i < x.size(); ++i) {
        combos *= hi[i] - lo[i] + 1;
        if (combos > 1'000'000) throw Error(ErrorKind::NonConvergent, "knockout bracket too wide");
      }
      std::vector<Reach> found;
      Reach cand = lo;
      while (true) {
        if (survive(lines, cand, rule) == cand) found.push_back(cand);
        std::size_t i = 0;
        while (i < cand.size() && cand[i] == hi[i]) {
          cand[i] = lo[i];
          ++i;
        }
        if (i == cand.size()) break;
        ++cand[i];
      }
      return found;
    }
    seen.insert(x);
    x = std::move(y);
  }
}

}  // namespace

Triangulation knockout_triangulation(const Simplex& simplex, KnockoutRule rule) {
  const std::vector<Line> lines = fan_lines(simplex);
  std::vector<Triangulation> good;
  for (const Reach& reach : fixed_points(lines, rule)) {
    std::vector<std::vector<std::int64_t>> segments;
    survive(lines, reach, rule, &segments);
    std::map<Edge, std::int64_t> strengths;
    bool overlap = false;
    for (std::size_t li = 0; li < lines.size() && !overlap; ++li) {
      for (std::size_t t = 0; t < reach[li]; ++t) {
        const Edge e = make_edge(lines[li].points[t], lines[li].points[t + 1]);
        if (!strengths.emplace(e, segments[li][t]).second) overlap = true;
      }
    }
    if (overlap) continue;
    try {
      Triangulation t = finish(simplex, std::move(strengths));
      if (is_valid(simplex, t)) good.push_back(std::move(t));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IrregularHole) throw;
    }
  }
  if (good.size() != 1) {
    throw Error(ErrorKind::NonConvergent,
                std::to_string(good.size()) + " stable knockout states complete to a triangulation");
  }
  return std::move(good.front());
}

}  // namespace junior
