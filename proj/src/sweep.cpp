#include "junior/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "junior/error.hpp"
#include "junior/hirzebruch_jung.hpp"
#include "junior/singlets.hpp"

namespace junior {

int thread_limit() {
  const char* env = std::getenv("JUNIOR_RESOLVE_THREADS");
  if (env != nullptr) {
    int n = 0;
    const char* end = env + std::char_traits<char>::length(env);
    if (std::from_chars(env, end, n).ptr == end && n > 0) return n;
  }
  return omp_get_max_threads();
}

MinimalityTable minimality_sweep_parallel(const Simplex& simplex, std::size_t cap, EnumerationBound bound) {
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
  const auto n = static_cast<std::int64_t>(table.triangulations.size());
  table.rows.resize(table.triangulations.size());
  std::string failure;
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (std::int64_t k = 0; k < n; ++k) {
    try {
      table.rows[k] = sweep_row(simplex, table.triangulations[k], singlets, bound);
    } catch (const std::exception& e) {
#pragma omp critical
      failure = e.what();
    }
  }
  if (!failure.empty()) throw Error(ErrorKind::BoundUnstable, failure);
  table.singlet_total = singlets.total();
  table.minimum = table.rows.front().grand_total;
  for (const auto& row : table.rows) table.minimum = std::min(table.minimum, row.grand_total);
  return table;
}

namespace {

class Checker {
 public:
  Checker(const GroupAction& action, std::vector<Violation>& out) : action_(action), out_(out) {}

  void expect(bool ok, const char* check, const std::string& detail = {}) {
    ++count_;
    if (!ok) out_.push_back({action_.r(), action_.a(), action_.b(), check, detail});
  }
  std::size_t count() const { return count_; }

 private:
  const GroupAction& action_;
  std::vector<Violation>& out_;
  std::size_t count_ = 0;
};

std::string pair_name(std::size_t p, std::size_t q) {
  std::ostringstream os;
  os << "u" << p + 1 << " u" << q + 1;
  return os.str();
}

void check_points(const Simplex& simplex, Checker& c) {
  c.expect(static_cast<std::int64_t>(2 * simplex.interior_count() + 1) == simplex.r(), "interior-count");
  c.expect(annihilates_points(charge_matrix(simplex), simplex), "charge-matrix");
}

void check_fans(const Simplex& simplex, const std::vector<TwistedSector>& sectors, Checker& c) {
  for (int k = 0; k < 3; ++k) {
    const CornerFan fan = corner_fan(simplex, k);
    c.expect(satisfies_invariants(fan.fraction), "hj-invariants", "corner " + std::to_string(k + 1));
    for (const FanRay& ray : fan.rays) {
      const auto case1 = invariant_only(simplex.action(), singlets_case1(sectors[ray.point - 3]));
      c.expect(count_by_target(case1)[k] == ray.strength, "fan-strength", pair_name(ray.point, k));
    }
  }
}

void check_sectors(const std::vector<TwistedSector>& sectors, const VerifyOptions& opt, Checker& c) {
  for (const auto& s : sectors) {
    const auto raw = static_cast<std::int64_t>(singlets_case1(s).size() + singlets_case2(s).size());
    c.expect(singlet_count_pf(s, opt.term_cap) == raw, "partition-function", "j=" + std::to_string(s.j));
  }
}

void check_routes(const Simplex& simplex, const Triangulation& g, const Quiver& singlets,
                  const VerifyOptions& opt, Checker& c) {
  const std::size_t n = simplex.size();
  std::int64_t grand = 0;
  for (std::size_t alpha = 3; alpha < n; ++alpha) {
    for (std::size_t i = 0; i < 3; ++i) {
      const ExtCount e = ext_dim_vertex_pair(simplex, g, alpha, static_cast<int>(i), opt.bound);
      grand += e.dim;
      c.expect(e.dim == singlets.multiplicity(alpha, i), "vertex-enumeration", pair_name(alpha, i));
      if (g.has_edge(alpha, i)) {
        c.expect(edge_k(simplex, g, i, alpha) + 1 == e.dim, "vertex-edge-formula", pair_name(alpha, i));
      }
      bool consistent = true;
      for (const auto& m : e.monomials) consistent = consistent && monomial_consistent(simplex, m, alpha, i);
      c.expect(consistent, "monomials", pair_name(alpha, i));
    }
    for (std::size_t beta = 3; beta < n; ++beta) {
      if (beta == alpha) continue;
      const ExtCount e = ext_dim_interior_pair(simplex, g, alpha, beta, opt.bound);
      grand += e.dim;
      c.expect(e.dim == singlets.multiplicity(alpha, beta), "interior-enumeration", pair_name(alpha, beta));
      if (g.has_edge(alpha, beta) && alpha < beta) {
        const std::int64_t both = e.dim + ext_dim_interior_pair(simplex, g, beta, alpha, opt.bound).dim;
        c.expect(std::abs(edge_k(simplex, g, alpha, beta)) == both, "interior-edge-formula",
                 pair_name(alpha, beta));
      }
      bool consistent = true;
      for (const auto& m : e.monomials) consistent = consistent && monomial_consistent(simplex, m, alpha, beta);
      c.expect(consistent, "monomials", pair_name(alpha, beta));
    }
  }
  c.expect(grand == singlets.total(), "grand-total",
           std::to_string(grand) + " vs " + std::to_string(singlets.total()));
}

void check_minimality(const Simplex& simplex, const VerifyOptions& opt, Checker& c) {
  const MinimalityTable t = minimality_sweep(simplex, opt.triangulation_cap, opt.bound);
  c.expect(t.ghilbert_is_minimal(), "minimality", "min " + std::to_string(t.minimum));
  c.expect(t.minimum_is_singlet_total(), "minimum-equals-singlets");
  c.expect(t.lower_bounds_hold(), "lower-bounds");
}

}  // namespace

std::size_t verify_action(const GroupAction& action, const VerifyOptions& opt, std::vector<Violation>& out) {
  Checker c(action, out);
  try {
    const Simplex simplex(action);
    const auto sectors = junior_sectors(simplex);
    check_points(simplex, c);
    check_fans(simplex, sectors, c);
    check_sectors(sectors, opt, c);
    const Quiver singlets = quiver_from_singlets(simplex);
    const Triangulation g = ghilbert_triangulation(simplex, singlets);
    const Triangulation k = knockout_triangulation(simplex);
    c.expect(is_valid(simplex, g), "ghilbert-valid", validation_error(simplex, g));
    c.expect(g == k && g.strengths() == k.strengths(), "knockout-equals-quiver");
    check_routes(simplex, g, singlets, opt, c);
    if (action.r() <= opt.minimality_rmax) check_minimality(simplex, opt, c);
  } catch (const Error& e) {
    c.expect(false, "exception", e.what());
  }
  return c.count();
}

VerifyReport verify_all_serial(const VerifyOptions& opt) {
  VerifyReport rep;
  const auto actions = isolated_actions(opt.rmax);
  rep.actions = actions.size();
  for (const auto& a : actions) rep.checks += verify_action(a, opt, rep.violations);
  return rep;
}

VerifyReport verify_all(const VerifyOptions& opt) {
  VerifyReport rep;
  const auto actions = isolated_actions(opt.rmax);
  rep.actions = actions.size();
  std::vector<std::vector<Violation>> found(actions.size());
  std::vector<std::size_t> checks(actions.size());
  const auto n = static_cast<std::int64_t>(actions.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (std::int64_t k = 0; k < n; ++k) checks[k] = verify_action(actions[k], opt, found[k]);
  for (std::size_t k = 0; k < actions.size(); ++k) {
    rep.checks += checks[k];
    rep.violations.insert(rep.violations.end(), found[k].begin(), found[k].end());
  }
  return rep;
}

}  // namespace junior
