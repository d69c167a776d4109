// One line per acceptance criterion. Exit status is nonzero if any criterion
// fails for a reason other than the single documented deviation of #2.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "junior/cli.hpp"
#include "junior/error.hpp"
#include "junior/hirzebruch_jung.hpp"
#include "junior/singlets.hpp"
#include "junior/sweep.hpp"
#include "oracles.hpp"

using namespace junior;

namespace {

enum class Outcome { Pass, Fail, KnownDeviation };

struct Result {
  Outcome outcome = Outcome::Fail;
  std::string note;
};

int unexpected = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Result()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Result res;
  try {
    res = body();
  } catch (const std::exception& e) {
    res = {Outcome::Fail, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (res.outcome == Outcome::Pass && secs > limit_s) {
    res = {Outcome::Fail, "exceeded time limit " + std::to_string(limit_s) + " s"};
  }
  if (res.outcome == Outcome::Fail) ++unexpected;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2f s", secs);
  std::cout << (res.outcome == Outcome::Pass ? "[PASS] " : "[FAIL] ") << id << ". " << title << " (" << timing << ")";
  if (!res.note.empty()) std::cout << ": " << res.note;
  std::cout << std::endl;
}

Result verdict(bool ok, std::string note = {}) { return {ok ? Outcome::Pass : Outcome::Fail, std::move(note)}; }

const GroupAction& z11() {
  static const GroupAction g = normalize_action(11, 1, 2, 8);
  return g;
}

Result fixture() {
  const Simplex s(z11());
  const std::vector<std::array<std::int64_t, 3>> points{{1, 0, 0}, {2, 0, -1}, {3, 0, -2}, {6, -1, -4}, {7, -1, -5}};
  const std::vector<std::array<std::int64_t, 3>> nu{{1, 2, 8}, {2, 4, 5}, {3, 6, 2}, {6, 1, 4}, {7, 3, 1}};
  if (s.size() != 8) return verdict(false, "point count " + std::to_string(s.size()));
  for (std::size_t k = 0; k < 5; ++k) {
    if (s[k + 3].coords3 != points[k]) return verdict(false, "interior point u" + std::to_string(k + 4));
    if (s[k + 3].nu.num != nu[k] || s[k + 3].nu.den != 11) return verdict(false, "nu of u" + std::to_string(k + 4));
  }
  const ChargeMatrix phi = charge_matrix(s);
  for (std::size_t row = 0; row < 5; ++row) {
    for (std::size_t col = 0; col < 8; ++col) {
      const Rational want = col < 3 ? Rational(nu[row][col], 11) : Rational(col == row + 3 ? -1 : 0);
      if (phi.entry(row, col) != want) return verdict(false, "charge matrix entry");
    }
  }
  if (!annihilates_points(phi, s)) return verdict(false, "charge matrix does not annihilate the points");
  const std::vector<std::vector<std::int64_t>> fractions{{3, 4}, {2, 3, 2, 2}, {6, 2}};
  for (int k = 0; k < 3; ++k) {
    if (corner_fan(s, k).fraction.b != fractions[static_cast<std::size_t>(k)]) {
      return verdict(false, "continued fraction at corner " + std::to_string(k + 1));
    }
  }
  return verdict(true, "5 points, nu-table, 5 charge rows, [[6,2]] [[2,3,2,2]] [[3,4]]");
}

std::string triple_text(const std::array<std::int64_t, 3>& c) {
  std::ostringstream os;
  os << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
  return os.str();
}

Result case2_fixture() {
  const Simplex s(z11());
  const TwistedSector sector = junior_sectors(s)[0];
  std::set<std::array<std::int64_t, 3>> got;
  for (const auto& t : singlets_case2(sector)) got.insert(t.c);
  const std::set<std::array<std::int64_t, 3>> quoted{{5, 0, -2}, {3, 1, -2}, {1, 2, -2}, {1, 0, -3}, {0, 1, -3}};
  const Quiver q = quiver_from_singlets(s);
  const bool arrows = q.multiplicity(4, 3) == 3 && q.multiplicity(5, 4) == 2;
  if (got == quoted) return verdict(arrows, arrows ? "" : "arrow multiplicities differ");

  std::vector<std::array<std::int64_t, 3>> missing, extra;
  std::set_difference(quoted.begin(), quoted.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), quoted.begin(), quoted.end(), std::back_inserter(extra));
  std::ostringstream note;
  note << "quoted set mismatch:";
  for (const auto& c : missing) note << " " << triple_text(c) << " absent";
  for (const auto& c : extra) note << ", " << triple_text(c) << " found";
  // The quoted (1,0,-3) gives c.nu = -23/11; the defining equation needs c_3 + 1 = -2.
  const bool documented = missing == std::vector<std::array<std::int64_t, 3>>{{1, 0, -3}} &&
                          extra == std::vector<std::array<std::int64_t, 3>>{{2, 0, -3}} &&
                          sector.nu.dot_num({1, 0, -3}) != 11 * (-3 + 1) &&
                          sector.nu.dot_num({2, 0, -3}) == 11 * (-3 + 1);
  if (documented) {
    note << "; (1,0,-3).nu = " << sector.nu.dot_num({1, 0, -3}) << "/11 violates c.nu = c_3+1 = -2, so the quoted triple"
         << " cannot be a singlet; arrows u5->u4 x" << q.multiplicity(4, 3) << ", u6->u5 x" << q.multiplicity(5, 4)
         << (arrows ? " match" : " DIFFER");
  }
  return {documented && arrows ? Outcome::KnownDeviation : Outcome::Fail, note.str()};
}

Result knockout_agreement() {
  std::size_t n = 0;
  for (const auto& act : isolated_actions(31)) {
    const Simplex s(act);
    const Triangulation g = ghilbert_triangulation(s);
    const Triangulation k = knockout_triangulation(s);
    if (!(g == k) || g.strengths() != k.strengths() || !is_valid(s, g)) {
      return verdict(false, "r=" + std::to_string(act.r()) + " a=" + std::to_string(act.a()));
    }
    ++n;
  }
  return verdict(true, std::to_string(n) + " actions, triangles and strengths identical");
}

Result three_routes() {
  VerifyOptions opt;
  opt.rmax = 31;
  opt.minimality_rmax = 0;
  const VerifyReport rep = verify_all(opt);
  if (!rep.ok()) {
    const Violation& v = rep.violations.front();
    return verdict(false, std::to_string(rep.violations.size()) + " violations, first r=" + std::to_string(v.r) +
                              " a=" + std::to_string(v.a) + " " + v.check + " " + v.detail);
  }
  return verdict(true, std::to_string(rep.actions) + " actions, " + std::to_string(rep.checks) +
                           " checks (edge formula, enumeration, singlets, partition function)");
}

Result z11_total() {
  const Simplex s(z11());
  const Triangulation g = ghilbert_triangulation(s);
  const DeformationReport rep = deformation_report(s, g);
  const std::int64_t singlets = quiver_from_singlets(s).total();
  // Edge route: corner edges give k+1, interior edges |k|; non-edge vertex
  // pairs carry their case-1 singlets.
  std::int64_t edges = 0;
  const auto sectors = junior_sectors(s);
  for (std::size_t alpha = 3; alpha < s.size(); ++alpha) {
    const auto c1 = count_by_target(invariant_only(s.action(), singlets_case1(sectors[alpha - 3])));
    for (std::size_t i = 0; i < 3; ++i) edges += g.has_edge(alpha, i) ? edge_k(s, g, i, alpha) + 1 : c1[i];
  }
  for (const Edge& e : g.edges()) {
    if (!Simplex::is_corner(e.first)) edges += std::abs(edge_k(s, g, e.first, e.second));
  }
  // Independent oracle: characters of the dual lattice, pair by pair.
  std::vector<oracle::V3> u;
  for (const auto& p : s.points()) u.push_back(p.coords3);
  std::int64_t characters = 0;
  for (std::size_t alpha = 3; alpha < s.size(); ++alpha) {
    for (std::size_t i = 0; i < 3; ++i) characters += oracle::vertex_pair(u, alpha, i, g.neighbors(alpha), 33);
    for (std::size_t beta = 3; beta < s.size(); ++beta) {
      const auto& w = g.opposite(alpha, beta);
      if (beta != alpha && w.size() == 2) characters += oracle::interior_pair(u, alpha, beta, w, 33);
    }
  }
  std::ostringstream note;
  note << "enumeration " << rep.grand_total << " = " << rep.vertex_total << " + " << rep.interior_total
       << ", edge formula " << edges << ", singlets " << singlets << ", character oracle " << characters;
  const bool ok = rep.grand_total == 39 && rep.vertex_total == 31 && rep.interior_total == 8 && edges == 39 &&
                  singlets == 39 && characters == 39;
  return verdict(ok, note.str());
}

std::vector<MinimalityTable>& tables() {
  static std::vector<MinimalityTable> t;
  return t;
}

Result minimality() {
  std::ostringstream note;
  bool ok = true;
  std::size_t count = 0;
  for (std::int64_t r : {7, 11, 13}) {
    for (const auto& act : isolated_actions(r)) {
      if (act.r() != r) continue;
      tables().push_back(minimality_sweep_parallel(Simplex(act)));
      const MinimalityTable& t = tables().back();
      count += t.triangulations.size();
      if (!t.ghilbert_is_minimal() || !t.minimum_is_singlet_total()) {
        ok = false;
        note << " r=" << r << " a=" << act.a() << " min " << t.minimum << " G " << t.rows[t.ghilbert_index].grand_total
             << " singlets " << t.singlet_total << ";";
      }
    }
  }
  return verdict(ok, std::to_string(tables().size()) + " actions, " + std::to_string(count) + " triangulations" +
                         note.str());
}

Result lower_bounds() {
  if (tables().empty()) return verdict(false, "no sweep data");
  std::size_t rows = 0;
  for (const auto& t : tables()) {
    rows += t.rows.size();
    if (!t.lower_bounds_hold()) return verdict(false, "violated at r=" + std::to_string(t.r) + " a=" + std::to_string(t.a));
  }
  return verdict(true, std::to_string(rows) + " triangulations, vertex and interior bounds hold");
}

Result witness() {
  const MinimalityTable t = minimality_sweep(Simplex(z11()));
  const auto w = t.witnesses(3, 6, 7);
  if (w.empty()) return verdict(false, "no triangulation found");
  const SweepRow& row = t.rows[w.front()];
  return verdict(true, "triangulation " + std::to_string(w.front()) + " of " + std::to_string(t.rows.size()) +
                           ": (u4,u7) = " + std::to_string(row.unordered(3, 6)) +
                           ", (u4,u8) = " + std::to_string(row.unordered(3, 7)));
}

Result rejection() {
  bool library = false;
  try {
    normalize_action(4, 1, 1, 2);
  } catch (const Error& e) {
    library = e.kind() == ErrorKind::NotIsolated;
  }
  RunConfig c;
  c.command = Command::Sweep;
  c.action = {4, 1, 1, 2};
  std::ostringstream out, err;
  const int status = run(c, out, err);
  const bool cli = status == kExitInvalid && err.str().find("NotIsolated") != std::string::npos && out.str().empty();
  return verdict(library && cli, "library raises NotIsolated, CLI exits " + std::to_string(status) + " with no output");
}

}  // namespace

int main() {
  criterion(1, "Z11 points, nu-table, charge matrix, continued fractions", 1, fixture);
  criterion(2, "Z11 case-2 singlets of u4 and induced arrows", 1, case2_fixture);
  criterion(3, "quiver and knockout G-Hilbert triangulations agree, r <= 31", 120, knockout_agreement);
  criterion(4, "three-route agreement and partition function, r <= 31", 300, three_routes);
  criterion(5, "Z11 grand total 39 by all routes", 10, z11_total);
  criterion(6, "minimality for r in {7, 11, 13}", 600, minimality);
  criterion(7, "lower bounds on every swept triangulation", 600, lower_bounds);
  criterion(8, "Z11 witness: (u4,u7) empty, (u4,u8) nonempty", 60, witness);
  criterion(9, "non-isolated action rejected before enumeration", 1, rejection);
  std::cout << (unexpected == 0 ? "acceptance: ok" : "acceptance: unexpected failures") << std::endl;
  return unexpected == 0 ? 0 : 1;
}
