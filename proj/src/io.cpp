#include "triplepoint/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "triplepoint/error.hpp"

namespace triplepoint {

namespace {

void require_version(const Json& doc) {
  if (!doc.is_object()) throw Error("schema", "expected a JSON object");
  if (!doc.contains("schema_version")) throw Error("schema", "missing schema_version");
  if (doc.at("schema_version") != kSchemaVersion) {
    throw Error("schema", "unsupported schema_version " + doc.at("schema_version").dump());
  }
}

Json coords_json(const ProjPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coordinate_strings()) out.push_back(c);
  return out;
}

std::string element_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error("schema", "coordinates must be strings or integers");
}

ProjPoint point_from_json(const Json& v, const Field& field) {
  if (v.is_string()) return ProjPoint::parse(v.get<std::string>(), field);
  if (!v.is_array() || v.size() != kNumVars) throw Error("schema", "a point is a list of four coordinates");
  return ProjPoint({field.parse_element(element_text(v[0])), field.parse_element(element_text(v[1])),
                    field.parse_element(element_text(v[2])), field.parse_element(element_text(v[3]))});
}

}  // namespace

std::string rational_text(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Json surface_to_json(const Surface& surface) {
  Json meta = Json::object();
  meta["id"] = surface.id;
  meta["family"] = surface.family;
  Json params = Json::object();
  for (const auto& [k, v] : surface.params) params[k] = v;
  meta["params"] = params;
  if (surface.exc_degrees) {
    meta["exc_degrees"] = Json::array({(*surface.exc_degrees)[0], (*surface.exc_degrees)[1], (*surface.exc_degrees)[2]});
  } else {
    meta["exc_degrees"] = nullptr;
  }
  Json points = Json::array();
  for (const auto& p : surface.declared_points) points.push_back(coords_json(p));
  return Json{{"schema_version", kSchemaVersion},
              {"field", surface.field().tag()},
              {"degree", surface.d},
              {"polynomial", surface.f.to_string()},
              {"points", points},
              {"metadata", meta}};
}

Surface surface_from_json(const Json& doc) {
  require_version(doc);
  const Field field = Field::parse(doc.at("field").get<std::string>());
  Surface s(MultiPoly::parse(doc.at("polynomial").get<std::string>(), field));
  if (doc.contains("degree") && doc.at("degree").get<int>() != s.d) {
    throw Error("schema", "declared degree " + doc.at("degree").dump() + " does not match the polynomial");
  }
  if (doc.contains("points")) {
    for (const auto& p : doc.at("points")) s.declared_points.push_back(point_from_json(p, field));
  }
  if (doc.contains("metadata")) {
    const Json& meta = doc.at("metadata");
    if (meta.contains("id")) s.id = meta.at("id").get<std::string>();
    if (meta.contains("family")) s.family = meta.at("family").get<std::string>();
    if (meta.contains("params")) {
      for (const auto& [k, v] : meta.at("params").items()) s.params.emplace_back(k, v.get<std::string>());
    }
    if (meta.contains("exc_degrees") && !meta.at("exc_degrees").is_null()) {
      const auto e = meta.at("exc_degrees").get<std::vector<int>>();
      if (e.size() != 3) throw Error("schema", "exc_degrees needs three entries");
      s.exc_degrees = std::array<int, 3>{e[0], e[1], e[2]};
    }
  }
  return s;
}

Json points_to_json(const Field& field, const std::vector<ProjPoint>& points) {
  Json list = Json::array();
  for (const auto& p : points) list.push_back(coords_json(p));
  return Json{{"schema_version", kSchemaVersion}, {"field", field.tag()}, {"points", list}};
}

std::vector<ProjPoint> points_from_json(const Json& doc, const Field& field) {
  const Json* list = &doc;
  if (doc.is_object()) {
    require_version(doc);
    if (doc.contains("field") && Field::parse(doc.at("field").get<std::string>()) != field) {
      throw Error("descriptor-mismatch", "points are over " + doc.at("field").get<std::string>() + ", expected " +
                                             field.tag());
    }
    list = &doc.at("points");
  }
  if (!list->is_array()) throw Error("schema", "points must be a list");
  std::vector<ProjPoint> out;
  for (const auto& p : *list) out.push_back(point_from_json(p, field));
  return out;
}

Json certificate_to_json(const TriplePointCertificate& cert) {
  return Json{{"coords", coords_json(cert.point)},
              {"multiplicity", cert.multiplicity},
              {"tangent_cone", cert.tangent_cone.to_string()},
              {"smooth_rank", cert.smooth_rank}};
}

Json report_to_json(const CertificationReport& report) {
  Json points = Json::array();
  for (const auto& c : report.points) points.push_back(certificate_to_json(c));
  Json out{{"schema_version", kSchemaVersion},
           {"surface", report.surface},
           {"field", report.field},
           {"points", points},
           {"rejected", report.rejected},
           {"enumeration", {{"extension_degrees", report.extension_degrees}}},
           {"hilbert", report.hilbert},
           {"expected_degree", report.expected_degree},
           {"verdict", to_string(report.verdict)}};
  out["degree"] = report.scheme_degree ? Json(*report.scheme_degree) : Json(nullptr);
  out["hilbert_modulus"] = report.hilbert_modulus ? Json(report.hilbert_modulus) : Json(nullptr);
  return out;
}

Json spectrum_to_json(const SpectrumDivisor& s) {
  Json entries = Json::array();
  for (const auto& [v, m] : s.entries) entries.push_back(Json{{"value", rational_text(v)}, {"multiplicity", m}});
  return Json{{"schema_version", kSchemaVersion}, {"spectrum", entries}, {"total", s.total()}};
}

Json bounds_to_json(const BoundsRow& row) {
  auto opt = [](const std::optional<long long>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"schema_version", kSchemaVersion}, {"degree", row.d},       {"polar", opt(row.polar)},
              {"miyaoka", opt(row.miyaoka)},      {"spectrum", opt(row.spectrum)}, {"combined", row.combined}};
}

Json invariants_to_json(const InvariantTable& t) {
  return Json{{"schema_version", kSchemaVersion},
              {"d", t.d},
              {"nu", t.nu},
              {"alpha", t.alpha},
              {"c1sq", t.c1sq},
              {"c2", t.c2},
              {"chi", t.chi},
              {"pg", t.pg},
              {"q", t.q},
              {"b2", t.b2},
              {"h11", t.h11}};
}

Json sextic_class_to_json(const SexticClass& c) {
  return Json{{"schema_version", kSchemaVersion},
              {"nu", c.nu},
              {"c1sq", c.c1sq},
              {"c2", c.c2},
              {"chi", c.chi},
              {"pg", c.pg},
              {"q", c.q},
              {"b2", c.b2},
              {"h11", c.h11},
              {"minus_one_curves", c.minus_one_curves ? Json(*c.minus_one_curves) : Json(nullptr)},
              {"kodaira", c.kodaira},
              {"minimal_model", c.minimal_model}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot read " + path);
    buffer << in.rdbuf();
  }
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw Error("parse", std::string("invalid JSON in ") + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << text;
}

}  // namespace triplepoint
