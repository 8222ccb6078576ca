#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "triplepoint/bounds.hpp"
#include "triplepoint/invariants.hpp"
#include "triplepoint/singular.hpp"
#include "triplepoint/surface.hpp"

namespace triplepoint {

using Json = nlohmann::json;

/// Version of every JSON document written here; readers reject other versions.
inline constexpr int kSchemaVersion = 1;

/// surface.json: {schema_version, field, degree, polynomial, points, metadata}.
Json surface_to_json(const Surface& surface);
Surface surface_from_json(const Json& doc);

/// points.json: {schema_version, field, points}; a bare list of 4-tuples is
/// also accepted on input (then `field` decides how to read it).
Json points_to_json(const Field& field, const std::vector<ProjPoint>& points);
std::vector<ProjPoint> points_from_json(const Json& doc, const Field& field);

Json report_to_json(const CertificationReport& report);
Json certificate_to_json(const TriplePointCertificate& cert);

Json spectrum_to_json(const SpectrumDivisor& s);
Json bounds_to_json(const BoundsRow& row);
Json invariants_to_json(const InvariantTable& t);
Json sextic_class_to_json(const SexticClass& c);

/// Rationals as "p/q" strings (integers without the denominator).
std::string rational_text(const mpq_class& q);

/// Stable pretty-printed form used for every file and stdout.
std::string dump(const Json& doc);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace triplepoint
