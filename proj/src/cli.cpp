#include "junior/cli.hpp"

#include <ostream>

#include "junior/error.hpp"
#include "junior/io.hpp"

namespace junior {

namespace {

Format resolve(Format f, Command c) {
  if (f != Format::Default) return f;
  switch (c) {
    case Command::Hilb:
    case Command::Deform:
      return Format::Json;
    case Command::Quiver:
      return Format::Dot;
    default:
      return Format::Text;
  }
}

bool allowed(Format f, Command c) {
  switch (f) {
    case Format::Dot:
      return c == Command::Quiver || c == Command::Deform;
    case Format::Tikz:
      return c == Command::Hilb;
    default:
      return true;
  }
}

bool is_validation(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotIsolated:
    case ErrorKind::NotCalabiYau:
    case ErrorKind::InvalidInput:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidFraction:
    case ErrorKind::NotAnEdge:
    case ErrorKind::BoundaryEdge:
      return true;
    default:
      return false;
  }
}

Simplex action_of(const RunConfig& c) {
  if (c.action.size() != 4) throw Error(ErrorKind::InvalidInput, "expected r w1 w2 w3");
  return Simplex(normalize_action(c.action[0], c.action[1], c.action[2], c.action[3]));
}

EnumerationBound bound_of(const RunConfig& c) {
  EnumerationBound b;
  if (c.bound) {
    if (*c.bound < 1) throw Error(ErrorKind::InvalidInput, "bound must be positive");
    b.initial = *c.bound;
  }
  return b;
}

// The triangulation a deform/quiver --ext run works on.
LoadedTriangulation chosen(const RunConfig& c) {
  if (c.triangulation_file) {
    if (c.hilb) throw Error(ErrorKind::InvalidInput, "--hilb and --triangulation are exclusive");
    LoadedTriangulation lt = read_triangulation(*c.triangulation_file);
    if (!c.action.empty() && !(action_of(c).action() == lt.simplex.action())) {
      throw Error(ErrorKind::InvalidInput, "triangulation file is for a different action");
    }
    return lt;
  }
  if (!c.hilb) throw Error(ErrorKind::InvalidInput, "need --hilb or --triangulation FILE");
  Simplex s = action_of(c);
  Triangulation t = ghilbert_triangulation(s);
  return {std::move(s), std::move(t)};
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int dispatch(const RunConfig& c, Format f, std::ostream& out) {
  switch (c.command) {
    case Command::Info: {
      const Simplex s = action_of(c);
      if (f == Format::Json) print(out, info_to_json(s));
      else write_info_text(out, s);
      return kExitOk;
    }
    case Command::Sectors: {
      const Simplex s = action_of(c);
      if (f == Format::Json) print(out, sectors_to_json(s));
      else write_sectors_text(out, s);
      return kExitOk;
    }
    case Command::Hilb: {
      const Simplex s = action_of(c);
      const Triangulation t = ghilbert_triangulation(s);
      if (f == Format::Tikz) {
        out << tikz_figure(s, t);
      } else if (f == Format::Json) {
        print(out, triangulation_to_json(s, t));
      } else {
        for (const auto& tri : t.triangles()) {
          out << "u" << tri[0] + 1 << " u" << tri[1] + 1 << " u" << tri[2] + 1 << "\n";
        }
      }
      return kExitOk;
    }
    case Command::Quiver: {
      Quiver q;
      std::string name = "singlets";
      if (c.ext) {
        const LoadedTriangulation lt = chosen(c);
        q = deformation_report(lt.simplex, lt.triangulation, bound_of(c)).ext_quiver;
        name = "ext";
      } else {
        q = quiver_from_singlets(action_of(c));
      }
      if (f == Format::Dot) {
        out << quiver_to_dot(q, name);
      } else if (f == Format::Json) {
        Json j;
        j["schema"] = kSchema;
        j["arrows"] = Json::array();
        for (const auto& [arrow, m] : q.arrows) {
          j["arrows"].push_back({{"source", arrow.first + 1}, {"target", arrow.second + 1}, {"multiplicity", m}});
        }
        j["total"] = q.total();
        print(out, j);
      } else {
        for (const auto& [arrow, m] : q.arrows) {
          out << "u" << arrow.first + 1 << " -> u" << arrow.second + 1 << "  x" << m << "\n";
        }
      }
      return kExitOk;
    }
    case Command::Deform: {
      const LoadedTriangulation lt = chosen(c);
      const DeformationReport rep = deformation_report(lt.simplex, lt.triangulation, bound_of(c));
      if (f == Format::Json) print(out, report_to_json(rep));
      else if (f == Format::Dot) out << quiver_to_dot(rep.ext_quiver, "ext");
      else write_report_text(out, rep);
      return kExitOk;
    }
    case Command::Sweep: {
      const Simplex s = action_of(c);
      const MinimalityTable t =
          minimality_sweep_parallel(s, c.triangulation_cap.value_or(200'000), bound_of(c));
      if (f == Format::Json) print(out, sweep_to_json(t));
      else write_sweep_text(out, t);
      return kExitOk;
    }
    case Command::Verify: {
      VerifyOptions opt;
      opt.rmax = c.rmax;
      opt.minimality_rmax = c.minimality_rmax;
      if (c.term_cap) opt.term_cap = *c.term_cap;
      if (c.triangulation_cap) opt.triangulation_cap = *c.triangulation_cap;
      opt.bound = bound_of(c);
      if (opt.rmax < 3) throw Error(ErrorKind::InvalidInput, "--rmax must be at least 3");
      const VerifyReport rep = verify_all(opt);
      if (f == Format::Json) print(out, verify_to_json(rep));
      else write_verify_text(out, rep);
      return rep.ok() ? kExitOk : kExitCheckFailed;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const Format f = resolve(config.format, config.command);
  if (!allowed(f, config.command)) {
    err << "error: format not available for this command\n";
    return kExitInvalid;
  }
  try {
    return dispatch(config, f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation(e.kind()) ? kExitInvalid : kExitCheckFailed;
  }
}

}  // namespace junior
