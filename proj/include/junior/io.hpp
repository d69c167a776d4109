#pragma once

// Serialization: triangulation JSON, deformation reports, DOT quivers and
// TikZ pictures. Every emitter is deterministic for fixed input.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "junior/deformations.hpp"
#include "junior/sweep.hpp"

namespace junior {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "1";

/// {"schema","r","a","b","points","triangles"[,"strengths"]}, indices 1-based.
Json triangulation_to_json(const Simplex& simplex, const Triangulation& t);

struct LoadedTriangulation {
  Simplex simplex;
  Triangulation triangulation;
};

/// Inverse of triangulation_to_json. Throws InvalidInput on malformed input,
/// points that are not the lattice points of the junior triangle in order, or
/// an invalid triangulation.
LoadedTriangulation triangulation_from_json(const Json& j);
LoadedTriangulation read_triangulation(const std::string& path);

Json report_to_json(const DeformationReport& rep);
Json sweep_to_json(const MinimalityTable& table);
Json verify_to_json(const VerifyReport& rep);

/// One edge statement per arrow; a multiplicity-m arrow gives m parallel edges.
std::string quiver_to_dot(const Quiver& q, const std::string& name);

/// The junior triangle with its triangulation and nonzero edge strengths.
std::string tikz_figure(const Simplex& simplex, const Triangulation& t);

void write_info_text(std::ostream& os, const Simplex& simplex);
void write_sectors_text(std::ostream& os, const Simplex& simplex);
void write_report_text(std::ostream& os, const DeformationReport& rep);
void write_sweep_text(std::ostream& os, const MinimalityTable& table);
void write_verify_text(std::ostream& os, const VerifyReport& rep);

Json info_to_json(const Simplex& simplex);
Json sectors_to_json(const Simplex& simplex);

}  // namespace junior
