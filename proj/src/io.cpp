#include "junior/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "junior/error.hpp"
#include "junior/hirzebruch_jung.hpp"
#include "junior/singlets.hpp"

namespace junior {

namespace {

std::string str(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string label(std::size_t p) { return "u" + std::to_string(p + 1); }

Json triple(const std::array<std::int64_t, 3>& c) { return Json::array({c[0], c[1], c[2]}); }

std::string triple_text(const std::array<std::int64_t, 3>& c) {
  std::ostringstream os;
  os << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
  return os.str();
}

}  // namespace

Json triangulation_to_json(const Simplex& simplex, const Triangulation& t) {
  Json j;
  j["schema"] = kSchema;
  j["r"] = simplex.r();
  j["a"] = simplex.action().a();
  j["b"] = simplex.action().b();
  j["points"] = Json::array();
  for (const auto& p : simplex.points()) j["points"].push_back(triple(p.coords3));
  j["triangles"] = Json::array();
  for (const auto& tri : t.triangles()) j["triangles"].push_back(Json::array({tri[0] + 1, tri[1] + 1, tri[2] + 1}));
  if (!t.strengths().empty()) {
    j["strengths"] = Json::array();
    for (const auto& [e, s] : t.strengths()) j["strengths"].push_back(Json::array({e.first + 1, e.second + 1, s}));
  }
  return j;
}

LoadedTriangulation triangulation_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "triangulation must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchema) {
      throw Error(ErrorKind::InvalidInput, "unsupported schema " + j.at("schema").dump());
    }
    const GroupAction action =
        GroupAction::make(j.at("r").get<std::int64_t>(), j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>());
    Simplex simplex(action);
    const auto& pts = j.at("points");
    if (!pts.is_array() || pts.size() != simplex.size()) {
      throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(simplex.size()) + " points");
    }
    for (std::size_t p = 0; p < simplex.size(); ++p) {
      if (pts[p].get<std::array<std::int64_t, 3>>() != simplex[p].coords3) {
        throw Error(ErrorKind::InvalidInput, "point " + std::to_string(p + 1) + " is " + pts[p].dump());
      }
    }
    std::vector<Triangle> tris;
    for (const auto& tri : j.at("triangles")) {
      const auto v = tri.get<std::array<std::int64_t, 3>>();
      for (std::int64_t x : v) {
        if (x < 1 || x > static_cast<std::int64_t>(simplex.size())) {
          throw Error(ErrorKind::InvalidInput, "triangle index out of range: " + tri.dump());
        }
      }
      tris.push_back(make_triangle(v[0] - 1, v[1] - 1, v[2] - 1));
    }
    std::map<Edge, std::int64_t> strengths;
    if (j.contains("strengths")) {
      for (const auto& s : j.at("strengths")) {
        const auto v = s.get<std::array<std::int64_t, 3>>();
        if (v[0] < 1 || v[1] < 1 || v[0] > static_cast<std::int64_t>(simplex.size()) ||
            v[1] > static_cast<std::int64_t>(simplex.size())) {
          throw Error(ErrorKind::InvalidInput, "strength index out of range: " + s.dump());
        }
        strengths[make_edge(v[0] - 1, v[1] - 1)] = v[2];
      }
    }
    Triangulation t(simplex.size(), std::move(tris), std::move(strengths));
    if (auto why = validation_error(simplex, t); !why.empty()) throw Error(ErrorKind::InvalidInput, why);
    return {std::move(simplex), std::move(t)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, e.what());
  }
}

LoadedTriangulation read_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return triangulation_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

std::string quiver_to_dot(const Quiver& q, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t p = 0; p < q.node_count; ++p) {
    os << "  " << label(p) << (p < 3 ? " [shape=box];\n" : ";\n");
  }
  for (const auto& [arrow, m] : q.arrows) {
    for (std::int64_t k = 0; k < m; ++k) os << "  " << label(arrow.first) << " -> " << label(arrow.second) << ";\n";
  }
  os << "}\n";
  return os.str();
}

Json report_to_json(const DeformationReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["r"] = rep.r;
  j["a"] = rep.a;
  j["b"] = rep.b;
  j["pairs"] = Json::array();
  for (const auto& p : rep.pairs) {
    j["pairs"].push_back({{"source", p.source + 1}, {"target", p.target + 1}, {"dim", p.dim}});
  }
  j["totals"] = {{"vertex", rep.vertex_total},
                 {"interior", rep.interior_total},
                 {"grand", rep.grand_total},
                 {"singlets", rep.singlet_total}};
  j["sectors"] = Json::array();
  for (const auto& s : rep.sectors) {
    j["sectors"].push_back({{"point", s.point + 1},
                            {"case1", s.case1},
                            {"case2", s.case2},
                            {"vertex_dims", s.vertex_dims},
                            {"delta", {s.delta(0), s.delta(1), s.delta(2)}}});
  }
  j["ext_quiver_dot"] = quiver_to_dot(rep.ext_quiver, "ext");
  return j;
}

Json sweep_to_json(const MinimalityTable& table) {
  Json j;
  j["schema"] = kSchema;
  j["r"] = table.r;
  j["a"] = table.a;
  j["b"] = table.b;
  j["triangulations"] = table.triangulations.size();
  j["ghilbert_index"] = table.ghilbert_index;
  j["minimum"] = table.minimum;
  j["singlet_total"] = table.singlet_total;
  j["ghilbert_is_minimal"] = table.ghilbert_is_minimal();
  j["minimum_is_singlet_total"] = table.minimum_is_singlet_total();
  j["lower_bounds_hold"] = table.lower_bounds_hold();
  j["rows"] = Json::array();
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const SweepRow& row = table.rows[k];
    j["rows"].push_back({{"index", k},
                         {"vertex", row.vertex_total},
                         {"interior", row.interior_total},
                         {"grand", row.grand_total},
                         {"delta", row.grand_total - table.minimum},
                         {"vertex_bound_ok", row.vertex_bound_ok},
                         {"interior_bound_ok", row.interior_bound_ok},
                         {"missing_arrows", row.missing_arrows},
                         {"extra_arrows", row.extra_arrows}});
  }
  return j;
}

Json verify_to_json(const VerifyReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["actions"] = rep.actions;
  j["checks"] = rep.checks;
  j["ok"] = rep.ok();
  j["violations"] = Json::array();
  for (const auto& v : rep.violations) {
    j["violations"].push_back({{"r", v.r}, {"a", v.a}, {"b", v.b}, {"check", v.check}, {"detail", v.detail}});
  }
  return j;
}

std::string tikz_figure(const Simplex& simplex, const Triangulation& t) {
  // Equilateral picture: barycentric coordinates against fixed corners.
  constexpr double cx[3] = {0.0, 8.0, 4.0};
  constexpr double cy[3] = {0.0, 0.0, 6.928};
  auto place = [&](std::size_t p, double& x, double& y) {
    x = y = 0;
    for (int k = 0; k < 3; ++k) {
      const double w = static_cast<double>(simplex[p].nu.num[k]) / static_cast<double>(simplex[p].nu.den);
      x += w * cx[k];
      y += w * cy[k];
    }
  };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return std::string(buf);
  };
  std::ostringstream os;
  os << "\\begin{tikzpicture}[every node/.style={font=\\scriptsize}]\n";
  for (std::size_t p = 0; p < simplex.size(); ++p) {
    double x, y;
    place(p, x, y);
    os << "  \\coordinate (" << label(p) << ") at (" << fmt(x) << "," << fmt(y) << ");\n";
  }
  for (const Edge& e : t.edges()) {
    os << "  \\draw (" << label(e.first) << ") -- (" << label(e.second) << ")";
    const auto it = t.strengths().find(e);
    if (it != t.strengths().end() && it->second > 0) {
      os << " node[midway,fill=white,inner sep=1pt] {" << it->second << "}";
    }
    os << ";\n";
  }
  for (std::size_t p = 0; p < simplex.size(); ++p) {
    os << "  \\fill (" << label(p) << ") circle (1.5pt) node[above right] {$u_{" << p + 1 << "}$};\n";
  }
  os << "\\end{tikzpicture}\n";
  return os.str();
}

Json info_to_json(const Simplex& simplex) {
  Json j;
  j["schema"] = kSchema;
  j["r"] = simplex.r();
  j["a"] = simplex.action().a();
  j["b"] = simplex.action().b();
  j["points"] = Json::array();
  for (std::size_t p = 0; p < simplex.size(); ++p) {
    const auto& pt = simplex[p];
    j["points"].push_back({{"label", pt.label},
                           {"coords", triple(pt.coords3)},
                           {"nu", {str(pt.nu[0]), str(pt.nu[1]), str(pt.nu[2])}}});
  }
  const ChargeMatrix phi = charge_matrix(simplex);
  j["charge_matrix"] = Json::array();
  for (std::size_t row = 0; row < phi.row_count(); ++row) {
    Json entries = Json::array();
    for (std::size_t col = 0; col < phi.column_count(); ++col) entries.push_back(str(phi.entry(row, col)));
    j["charge_matrix"].push_back(entries);
  }
  j["continued_fractions"] = Json::array();
  for (int k = 0; k < 3; ++k) {
    const CornerFan fan = corner_fan(simplex, k);
    j["continued_fractions"].push_back({{"corner", k + 1},
                                        {"r", fan.fraction.r},
                                        {"c", fan.fraction.c},
                                        {"b", fan.fraction.b}});
  }
  return j;
}

void write_info_text(std::ostream& os, const Simplex& simplex) {
  os << "action r=" << simplex.r() << " weights (1," << simplex.action().a() << "," << simplex.action().b()
     << ")\n";
  for (std::size_t p = 0; p < simplex.size(); ++p) {
    const auto& pt = simplex[p];
    os << label(p) << " = " << triple_text(pt.coords3) << "  nu = (" << str(pt.nu[0]) << ", " << str(pt.nu[1])
       << ", " << str(pt.nu[2]) << ")" << (p < 3 ? "  corner" : "") << "\n";
  }
  os << "charge matrix (rows u4..):\n";
  const ChargeMatrix phi = charge_matrix(simplex);
  for (std::size_t row = 0; row < phi.row_count(); ++row) {
    os << " ";
    for (std::size_t col = 0; col < phi.column_count(); ++col) os << " " << std::setw(6) << str(phi.entry(row, col));
    os << "\n";
  }
  for (int k = 0; k < 3; ++k) {
    const CornerFan fan = corner_fan(simplex, k);
    os << "corner " << label(static_cast<std::size_t>(k)) << ": " << fan.fraction.r << "/" << fan.fraction.c << " = [[";
    for (std::size_t i = 0; i < fan.fraction.b.size(); ++i) os << (i ? "," : "") << fan.fraction.b[i];
    os << "]]  rays";
    for (const auto& ray : fan.rays) os << " " << label(ray.point) << ":" << ray.strength;
    os << "\n";
  }
}

Json sectors_to_json(const Simplex& simplex) {
  Json j;
  j["schema"] = kSchema;
  j["r"] = simplex.r();
  j["a"] = simplex.action().a();
  j["b"] = simplex.action().b();
  j["sectors"] = Json::array();
  const auto sectors = junior_sectors(simplex);
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    const TwistedSector& s = sectors[k];
    Json c1 = Json::array(), c2 = Json::array();
    for (const auto& t : singlets_case1(s)) {
      c1.push_back({{"c", triple(t.c)}, {"target", t.index + 1}, {"invariant", is_invariant(simplex.action(), t)}});
    }
    for (const auto& t : singlets_case2(s)) {
      c2.push_back({{"c", triple(t.c)}, {"index", t.index + 1}, {"invariant", is_invariant(simplex.action(), t)}});
    }
    j["sectors"].push_back({{"point", k + 4},
                            {"j", s.j},
                            {"nu", {str(s.nu[0]), str(s.nu[1]), str(s.nu[2])}},
                            {"nu_tilde", {str(s.tilde(0)), str(s.tilde(1)), str(s.tilde(2))}},
                            {"energy", str(s.energy)},
                            {"charge", str(s.charge)},
                            {"case1", c1},
                            {"case2", c2},
                            {"partition_function", singlet_count_pf(s)}});
  }
  return j;
}

void write_sectors_text(std::ostream& os, const Simplex& simplex) {
  const auto sectors = junior_sectors(simplex);
  for (std::size_t k = 0; k < sectors.size(); ++k) {
    const TwistedSector& s = sectors[k];
    os << label(k + 3) << "  j=" << s.j << "  nu=(" << str(s.nu[0]) << "," << str(s.nu[1]) << "," << str(s.nu[2])
       << ")  nu~=(" << str(s.tilde(0)) << "," << str(s.tilde(1)) << "," << str(s.tilde(2)) << ")  E=" << str(s.energy)
       << "  q=" << str(s.charge) << "\n";
    const auto c1 = singlets_case1(s);
    const auto c2 = singlets_case2(s);
    os << "  case 1:";
    for (const auto& t : c1) {
      os << " " << triple_text(t.c) << "->" << label(static_cast<std::size_t>(t.index))
         << (is_invariant(simplex.action(), t) ? "" : "*");
    }
    os << "\n  case 2:";
    for (const auto& t : c2) os << " " << triple_text(t.c) << (is_invariant(simplex.action(), t) ? "" : "*");
    os << "\n  singlets " << c1.size() + c2.size() << ", partition function " << singlet_count_pf(s) << "\n";
  }
  os << "(* = removed by the orbifold projection)\n";
}

void write_report_text(std::ostream& os, const DeformationReport& rep) {
  os << "r=" << rep.r << " weights (1," << rep.a << "," << rep.b << ")\n";
  for (const auto& p : rep.pairs) {
    if (p.dim != 0) os << "  " << label(p.source) << " -> " << label(p.target) << "  " << p.dim << "\n";
  }
  os << "vertex " << rep.vertex_total << "  interior " << rep.interior_total << "  grand " << rep.grand_total
     << "  singlets " << rep.singlet_total << "\n";
}

void write_sweep_text(std::ostream& os, const MinimalityTable& table) {
  os << "r=" << table.r << " weights (1," << table.a << "," << table.b << "): " << table.triangulations.size()
     << " triangulations\n";
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const SweepRow& row = table.rows[k];
    os << std::setw(5) << k << "  grand " << std::setw(4) << row.grand_total << " = " << row.vertex_total << " + "
       << row.interior_total << "  missing " << row.missing_arrows << "  extra " << row.extra_arrows
       << (row.vertex_bound_ok && row.interior_bound_ok ? "" : "  BOUND VIOLATED")
       << (k == table.ghilbert_index ? "  G-Hilbert" : "") << "\n";
  }
  os << "minimum " << table.minimum << ", G-Hilbert " << table.rows[table.ghilbert_index].grand_total
     << ", singlets " << table.singlet_total << "\n";
}

void write_verify_text(std::ostream& os, const VerifyReport& rep) {
  for (const auto& v : rep.violations) {
    os << "FAIL r=" << v.r << " (1," << v.a << "," << v.b << ") " << v.check;
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  os << rep.actions << " actions, " << rep.checks << " checks, " << rep.violations.size() << " violations\n";
}

}  // namespace junior
