// Command-line front end. Every command prints one JSON document; domain
// errors exit with 1 and an {"error": ...} document, usage errors with 2.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triplepoint/bounds.hpp"
#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/families.hpp"
#include "triplepoint/invariants.hpp"
#include "triplepoint/io.hpp"
#include "triplepoint/singular.hpp"

using namespace triplepoint;

namespace {

void emit(const Json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << dump(doc);
  } else {
    write_text_file(path, dump(doc));
  }
}

mpq_class parse_rational(const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("parse", "not a rational number: '" + text + "'");
  }
}

std::map<std::string, std::string> parse_params(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error("parse", "parameters are key=value pairs, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
    start = end + 1;
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int d = std::stoi(text);
      return {d, d};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error("parse", "expected a degree range like 3..12, got '" + text + "'");
  }
}

// A points file may name its field; --field wins when both are given.
std::vector<ProjPoint> load_points(const std::string& path, const std::string& field_tag) {
  const Json doc = read_json_file(path);
  std::string tag = field_tag;
  if (tag.empty() && doc.is_object() && doc.contains("field")) tag = doc.at("field").get<std::string>();
  if (tag.empty()) tag = "QQ";
  return points_from_json(doc, Field::parse(tag));
}

Field field_of(const std::string& tag) { return Field::parse(tag.empty() ? "QQ" : tag); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surfaces in P^3 with ordinary triple points: bounds, constructions and certification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "triplepoint 1.0");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Upper bounds for the number of triple points");
  int bounds_degree = 0;
  std::string bounds_table;
  auto* bd = bounds->add_option("--degree,-d", bounds_degree, "Surface degree (>= 3)");
  auto* bt = bounds->add_option("--table", bounds_table, "Degree range, e.g. 3..12");
  bd->excludes(bt);

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Brieskorn spectra, interval counts and the spectrum bound");
  std::vector<int> exponents;
  std::string interval;
  int spectrum_degree = 0;
  spectrum->add_option("--exponents,-e", exponents, "Brieskorn exponents, e.g. 3,3,3")->delimiter(',')->required();
  spectrum->add_option("--interval", interval, "Open interval a,b (rationals) to count spectral numbers in");
  spectrum->add_option("--degree,-d", spectrum_degree, "Compare against the degree-d surface spectrum");

  // invariants
  auto* invariants = app.add_subcommand("invariants", "Invariants of the resolution");
  int inv_degree = 0;
  long long inv_nu = 0, inv_alpha = 0, inv_pg = -1, inv_eps = 0;
  int inv_plurigenus = 0;
  invariants->add_option("--degree,-d", inv_degree, "Surface degree")->required();
  invariants->add_option("--nu", inv_nu, "Number of triple points");
  auto* ia = invariants->add_option("--alpha", inv_alpha, "Discrepancy (equals q)");
  auto* ip = invariants->add_option("--pg", inv_pg, "Geometric genus (determines alpha)");
  ia->excludes(ip);
  invariants->add_option("--plurigenus", inv_plurigenus, "Also report P_n for this n >= 2");
  invariants->add_option("--epsilon", inv_eps, "Number of contracted (-1)-curves for --plurigenus");

  // classify-sextic
  auto* classify = app.add_subcommand("classify-sextic", "Class of a sextic with triple points");
  int cls_nu = 0;
  long long cls_pg = 0, cls_q = 0;
  std::vector<int> cls_exc;
  classify->add_option("--nu", cls_nu, "Number of triple points")->required();
  classify->add_option("--pg", cls_pg, "Geometric genus")->required();
  classify->add_option("--q", cls_q, "Irregularity")->required();
  classify->add_option("--exc", cls_exc, "Degrees of the (-1)-curves, e.g. 2,2,2")->delimiter(',');

  // construct
  auto* construct = app.add_subcommand("construct", "Build a member of one of the explicit families");
  std::string family, params_text, construct_field, construct_out;
  bool unchecked = false;
  construct->add_option("--family", family, "Family id")->required();
  construct->add_option("--params", params_text, "Parameters as key=value,...");
  construct->add_option("--field", construct_field, "Field tag: QQ, GF:p or GF:p:2");
  construct->add_flag("--unchecked", unchecked, "Skip certification of the declared points");
  construct->add_option("--output,-o", construct_out, "Write surface.json here instead of stdout");

  // certify
  auto* certify = app.add_subcommand("certify", "Certify the singular locus of a surface");
  std::string certify_in = "-", certify_out;
  bool hilbert = false, declared = false;
  int extension = 1, k_max = -1;
  certify->add_option("input", certify_in, "surface.json (default stdin)");
  certify->add_flag("--hilbert", hilbert, "Add Jacobian Hilbert function evidence");
  certify->add_flag("--declared", declared, "Check the declared points instead of enumerating");
  certify->add_option("--extension", extension, "Enumerate over GF(p^e), e = 1 or 2")->check(CLI::IsMember({1, 2}));
  certify->add_option("--k-max", k_max, "Hilbert function cutoff (default 4d)");
  certify->add_option("--output,-o", certify_out, "Write report.json here instead of stdout");

  // cremona
  auto* cremona = app.add_subcommand("cremona", "Reciprocal transformation");
  std::string cremona_in = "-", cremona_out;
  std::vector<int> fundamental, cremona_exc;
  cremona->add_option("input", cremona_in, "surface.json (default stdin)");
  cremona->add_option("--fundamental", fundamental, "Four declared points (1-based) to move to the vertices")
      ->delimiter(',')
      ->expected(4);
  cremona->add_option("--exc", cremona_exc, "Exceptional degrees to record on the image")->delimiter(',')->expected(3);
  cremona->add_option("--output,-o", cremona_out, "Write surface.json here instead of stdout");

  // tangent-dim
  auto* tangent = app.add_subcommand("tangent-dim", "Dimension of the equisingular tangent space");
  std::string tangent_in = "-", tangent_points;
  tangent->add_option("input", tangent_in, "surface.json (default stdin)");
  tangent->add_option("--points", tangent_points, "points.json (default: declared points)");

  // dianode
  auto* dianode = app.add_subcommand("dianode", "Cayley dianode sextic");
  std::string dn_points, dn_field, dn_g;
  std::vector<std::string> dn_q;
  bool dn_certify = false;
  dianode->add_option("--points", dn_points, "points.json with seven points");
  dianode->add_option("--g", dn_g, "Quartic g");
  dianode->add_option("--q", dn_q, "Three quadrics (repeat --q)")->expected(3);
  dianode->add_option("--field", dn_field, "Field tag");
  dianode->add_flag("--certify", dn_certify, "Check that the seven points are ordinary triple points");

  // steiner
  auto* steiner = app.add_subcommand("steiner", "Steiner curve of a net of quadrics");
  std::string st_points, st_field;
  std::vector<std::string> st_q;
  steiner->add_option("--points", st_points, "points.json with seven points (uses their net)");
  steiner->add_option("--q", st_q, "Three quadrics (repeat --q)")->expected(3);
  steiner->add_option("--field", st_field, "Field tag");

  // linear-system
  auto* linear = app.add_subcommand("linear-system", "Forms with assigned multiplicities at points");
  std::string ls_points, ls_field;
  int ls_degree = 0, ls_mult = 1, ls_mixed = 0;
  linear->add_option("--points", ls_points, "points.json")->required();
  linear->add_option("--degree,-d", ls_degree, "Degree of the forms");
  linear->add_option("--multiplicity,-m", ls_mult, "Multiplicity at every point");
  linear->add_option("--mixed-power", ls_mixed, "Span of the k-th mixed powers of the quadrics through the points");
  linear->add_option("--field", ls_field, "Field tag");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) {
      if (!bounds_table.empty()) {
        const auto [lo, hi] = parse_range(bounds_table);
        if (lo < 3 || hi < lo) throw Error("domain", "degree range must satisfy 3 <= lo <= hi");
        Json rows = Json::array();
        for (int d = lo; d <= hi; ++d) {
          Json row = bounds_to_json(bounds_row(d));
          row.erase("schema_version");
          rows.push_back(row);
        }
        emit(Json{{"schema_version", kSchemaVersion}, {"rows", rows}}, "");
      } else {
        if (bounds_degree == 0) throw CLI::RequiredError("--degree or --table");
        emit(bounds_to_json(bounds_row(bounds_degree)), "");
      }
    } else if (spectrum->parsed()) {
      const SpectrumDivisor s = brieskorn_spectrum(exponents);
      Json out = spectrum_to_json(s);
      if (!interval.empty()) {
        const std::size_t comma = interval.find(',');
        if (comma == std::string::npos) throw Error("parse", "--interval expects a,b");
        const mpq_class a = parse_rational(interval.substr(0, comma)), b = parse_rational(interval.substr(comma + 1));
        out["interval"] = Json{{"a", rational_text(a)}, {"b", rational_text(b)}, {"count", interval_count(s, a, b)}};
      }
      if (spectrum_degree != 0) {
        const SpectrumWitness w = spectrum_bound_witness(spectrum_degree, s);
        out["bound"] = Json{{"degree", spectrum_degree},
                            {"value", w.bound},
                            {"interval", Json::array({rational_text(w.alpha), rational_text(w.alpha + 1)})},
                            {"ambient_count", w.ambient},
                            {"local_count", w.local}};
      }
      emit(out, "");
    } else if (invariants->parsed()) {
      const long long alpha = inv_pg >= 0 ? alpha_from_genus(inv_degree, inv_nu, inv_pg) : inv_alpha;
      const InvariantTable t = resolved_invariants(inv_degree, inv_nu, alpha);
      Json out = invariants_to_json(t);
      if (inv_plurigenus != 0) {
        out["plurigenus"] = Json{{"n", inv_plurigenus},
                                 {"epsilon", inv_eps},
                                 {"value", plurigenus(inv_plurigenus, t.c1sq, inv_eps, t.chi)}};
      }
      emit(out, "");
    } else if (classify->parsed()) {
      std::optional<std::vector<int>> exc;
      if (!cls_exc.empty()) exc = cls_exc;
      emit(sextic_class_to_json(sextic_classify(cls_nu, cls_pg, cls_q, exc)), "");
    } else if (construct->parsed()) {
      const Surface s = construct_family(family, construct_field, parse_params(params_text), !unchecked);
      emit(surface_to_json(s), construct_out);
    } else if (certify->parsed()) {
      const Surface s = surface_from_json(read_json_file(certify_in));
      CertifyOptions options;
      options.enumerate = !declared;
      options.extension_degree = extension;
      options.hilbert = hilbert;
      options.k_max = k_max;
      emit(report_to_json(certify_surface(s, options)), certify_out);
    } else if (cremona->parsed()) {
      const Surface s = surface_from_json(read_json_file(cremona_in));
      Surface image = s;
      if (!fundamental.empty()) {
        std::array<int, 3> exc{0, 0, 0};
        if (!cremona_exc.empty()) exc = {cremona_exc[0], cremona_exc[1], cremona_exc[2]};
        image = reciprocal_family(s, {fundamental[0] - 1, fundamental[1] - 1, fundamental[2] - 1, fundamental[3] - 1},
                                  exc, s.family.empty() ? "reciprocal" : s.family + "-reciprocal", false);
        if (cremona_exc.empty()) image.exc_degrees.reset();
      } else {
        const ReciprocalResult r = reciprocal_transform(s.f);
        image = Surface(r.f, s.id.empty() ? "" : s.id + "-reciprocal");
        image.family = s.family;
        image.params = s.params;
        for (const auto& p : s.declared_points) {
          bool on_face = false;
          for (const auto& c : p.coords()) on_face = on_face || c.is_zero();
          if (!on_face) image.declared_points.push_back(reciprocal_point(p));
        }
        if (!cremona_exc.empty()) image.exc_degrees = std::array<int, 3>{cremona_exc[0], cremona_exc[1], cremona_exc[2]};
      }
      emit(surface_to_json(image), cremona_out);
    } else if (tangent->parsed()) {
      const Surface s = surface_from_json(read_json_file(tangent_in));
      std::vector<ProjPoint> pts = s.declared_points;
      if (!tangent_points.empty()) pts = load_points(tangent_points, s.field().tag());
      if (pts.empty() && s.field().is_finite()) pts = enumerate_singular_points(s);
      emit(Json{{"schema_version", kSchemaVersion},
                {"surface", s.id.empty() ? s.family : s.id},
                {"points", pts.size()},
                {"dimension", equisingular_tangent_dimension(s, pts)}},
           "");
    } else if (dianode->parsed()) {
      Json out{{"schema_version", kSchemaVersion}};
      MultiPoly delta;
      std::vector<ProjPoint> pts;
      if (!dn_points.empty()) {
        pts = load_points(dn_points, dn_field);
        const DianodeSystem sys = dianode_from_points(pts);
        delta = sys.delta;
        out["g"] = sys.g.to_string();
        out["net"] = Json::array({sys.net[0].to_string(), sys.net[1].to_string(), sys.net[2].to_string()});
      } else {
        if (dn_g.empty() || dn_q.size() != 3) throw CLI::RequiredError("--points, or --g with three --q");
        const Field field = field_of(dn_field);
        delta = dianode_surface(MultiPoly::parse(dn_g, field), MultiPoly::parse(dn_q[0], field),
                                MultiPoly::parse(dn_q[1], field), MultiPoly::parse(dn_q[2], field));
      }
      out["field"] = delta.field().tag();
      out["polynomial"] = delta.to_string();
      out["degree"] = delta.is_zero() ? 0 : delta.degree();
      if (dn_certify) {
        if (pts.empty() || delta.is_zero()) throw Error("domain", "--certify needs --points and a nonzero dianode");
        const Surface s(delta, "dianode");
        Json certs = Json::array();
        bool all = true;
        for (const auto& p : pts) {
          const TriplePointCheck c = check_triple_point(s, p);
          all = all && c.ordinary;
          Json entry = certificate_to_json(c.certificate);
          entry["ordinary"] = c.ordinary;
          certs.push_back(entry);
        }
        out["certificates"] = certs;
        out["all_ordinary"] = all;
      }
      emit(out, "");
    } else if (steiner->parsed()) {
      std::array<MultiPoly, 3> q;
      if (!st_points.empty()) {
        const auto pts = load_points(st_points, st_field);
        const auto net = quadrics_through(pts.at(0).field(), pts);
        if (net.size() != 3) throw Error("degenerate-parameters", "the points do not span a net of quadrics");
        q = {net[0], net[1], net[2]};
      } else {
        if (st_q.size() != 3) throw CLI::RequiredError("--points or three --q");
        const Field field = field_of(st_field);
        q = {MultiPoly::parse(st_q[0], field), MultiPoly::parse(st_q[1], field), MultiPoly::parse(st_q[2], field)};
      }
      Json minors = Json::array();
      for (const auto& m : steiner_curve(q[0], q[1], q[2])) minors.push_back(m.to_string());
      emit(Json{{"schema_version", kSchemaVersion},
                {"field", q[0].field().tag()},
                {"net", Json::array({q[0].to_string(), q[1].to_string(), q[2].to_string()})},
                {"minors", minors}},
           "");
    } else if (linear->parsed()) {
      const auto pts = load_points(ls_points, ls_field);
      if (pts.empty()) throw Error("domain", "no points given");
      const Field field = pts[0].field();
      std::vector<MultiPoly> basis;
      Json out{{"schema_version", kSchemaVersion}, {"field", field.tag()}, {"points", pts.size()}};
      if (ls_mixed > 0) {
        basis = mixed_power_system(quadrics_through(field, pts), ls_mixed);
        out["mixed_power"] = ls_mixed;
      } else {
        if (ls_degree < 1) throw CLI::RequiredError("--degree (or --mixed-power)");
        std::vector<AssignedPoint> assigned;
        for (const auto& p : pts) assigned.push_back({p, ls_mult});
        basis = forms_with_multiplicity(field, ls_degree, assigned);
        out["degree"] = ls_degree;
        out["multiplicity"] = ls_mult;
      }
      Json list = Json::array();
      for (const auto& b : basis) list.push_back(b.to_string());
      out["dimension"] = basis.size();
      out["basis"] = list;
      emit(out, "");
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cout << dump(Json{{"schema_version", kSchemaVersion}, {"error", {{"kind", e.kind()}, {"message", e.what()}}}});
    return 1;
  } catch (const Json::exception& e) {
    std::cout << dump(Json{{"schema_version", kSchemaVersion}, {"error", {{"kind", "schema"}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}
