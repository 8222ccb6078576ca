#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triplepoint/bounds.hpp"
#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/families.hpp"
#include "triplepoint/invariants.hpp"
#include "triplepoint/io.hpp"
#include "triplepoint/singular.hpp"

namespace py = pybind11;
using namespace triplepoint;

namespace {

// Documents cross the boundary as JSON text so Python sees plain dicts.
py::object to_python(const Json& doc) { return py::module_::import("json").attr("loads")(dump(doc)); }

Json from_python(const py::object& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

Field field_of(const std::string& tag) { return Field::parse(tag.empty() ? "QQ" : tag); }

std::vector<ProjPoint> points_of(const py::object& points, const std::string& field) {
  return points_from_json(from_python(points), field_of(field));
}

std::vector<std::string> texts(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

mpq_class rational(const std::string& text) {
  try {
    mpq_class q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("parse", "not a rational number: '" + text + "'");
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Surfaces in P^3 with ordinary triple points";
  m.attr("schema_version") = kSchemaVersion;

  static py::exception<Error> error_type(m, "TriplePointError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::handle(error_type)(e.what());
      instance.attr("kind") = e.kind();
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  m.def("family_ids", &family_ids);

  m.def("parse_polynomial",
        [](const std::string& text, const std::string& field) { return MultiPoly::parse(text, field_of(field)).to_string(); },
        py::arg("text"), py::arg("field") = "QQ", "Canonical form of a polynomial in x, y, z, w");

  m.def("bounds", [](int d) { return to_python(bounds_to_json(bounds_row(d))); }, py::arg("degree"));
  m.def("polar_bound", &polar_bound, py::arg("degree"));
  m.def("miyaoka_bound", &miyaoka_bound, py::arg("degree"));
  m.def("combined_bound", &combined_bound, py::arg("degree"));

  m.def("spectrum", [](const std::vector<int>& exponents) { return to_python(spectrum_to_json(brieskorn_spectrum(exponents))); },
        py::arg("exponents"));
  m.def(
      "interval_count",
      [](const std::vector<int>& exponents, const std::string& a, const std::string& b) {
        return interval_count(brieskorn_spectrum(exponents), rational(a), rational(b));
      },
      py::arg("exponents"), py::arg("a"), py::arg("b"), "Spectrum numbers in the open interval (a, b)");
  m.def(
      "spectrum_bound",
      [](int d, const std::vector<int>& exponents) { return spectrum_bound(d, brieskorn_spectrum(exponents)); },
      py::arg("degree"), py::arg("exponents") = std::vector<int>{3, 3, 3});

  m.def(
      "invariants",
      [](int d, long long nu, std::optional<long long> alpha, std::optional<long long> pg) {
        const long long a = pg ? alpha_from_genus(d, nu, *pg) : alpha.value_or(0);
        return to_python(invariants_to_json(resolved_invariants(d, nu, a)));
      },
      py::arg("degree"), py::arg("nu"), py::arg("alpha") = py::none(), py::arg("pg") = py::none());
  m.def("plurigenus", &plurigenus, py::arg("n"), py::arg("ksq"), py::arg("eps"), py::arg("chi"));
  m.def(
      "classify_sextic",
      [](int nu, long long pg, long long q, std::optional<std::vector<int>> exc) {
        return to_python(sextic_class_to_json(sextic_classify(nu, pg, q, exc)));
      },
      py::arg("nu"), py::arg("pg"), py::arg("q"), py::arg("exc") = py::none());

  m.def(
      "construct",
      [](const std::string& family, const std::map<std::string, std::string>& params, const std::string& field,
         bool check) { return to_python(surface_to_json(construct_family(family, field, params, check))); },
      py::arg("family"), py::arg("params") = std::map<std::string, std::string>{}, py::arg("field") = "",
      py::arg("check") = true, "Surface document of a family member");

  m.def(
      "certify",
      [](const py::object& surface, bool hilbert, bool declared, int extension, int k_max) {
        const Surface s = surface_from_json(from_python(surface));
        CertifyOptions options;
        options.enumerate = !declared;
        options.extension_degree = extension;
        options.hilbert = hilbert;
        options.k_max = k_max;
        CertificationReport report;
        {
          py::gil_scoped_release release;
          report = certify_surface(s, options);
        }
        return to_python(report_to_json(report));
      },
      py::arg("surface"), py::arg("hilbert") = false, py::arg("declared") = false, py::arg("extension") = 1,
      py::arg("k_max") = -1, "Certification report of a surface document");

  m.def(
      "singular_points",
      [](const py::object& surface, int extension) {
        const Surface s = surface_from_json(from_python(surface));
        return to_python(points_to_json(s.field(), enumerate_singular_points(s, extension)));
      },
      py::arg("surface"), py::arg("extension") = 1);

  m.def(
      "jacobian_hilbert",
      [](const py::object& surface, int k_max) { return jacobian_hilbert(surface_from_json(from_python(surface)), k_max); },
      py::arg("surface"), py::arg("k_max") = -1);

  m.def(
      "tangent_dimension",
      [](const py::object& surface, const py::object& points) {
        const Surface s = surface_from_json(from_python(surface));
        std::vector<ProjPoint> pts = s.declared_points;
        if (!points.is_none()) pts = points_of(points, s.field().tag());
        return equisingular_tangent_dimension(s, pts);
      },
      py::arg("surface"), py::arg("points") = py::none(), "Equisingular tangent dimension (declared points by default)");

  m.def(
      "reciprocal",
      [](const std::string& f, const std::string& field) {
        const ReciprocalResult r = reciprocal_transform(MultiPoly::parse(f, field_of(field)));
        py::dict out;
        out["polynomial"] = r.f.to_string();
        out["multiplicities"] = std::vector<int>(r.multiplicities.begin(), r.multiplicities.end());
        return out;
      },
      py::arg("polynomial"), py::arg("field") = "QQ",
      "Image under (x:y:z:w) -> (yzw:xzw:xyw:xyz) with the exceptional planes removed");

  m.def(
      "forms_with_multiplicity",
      [](const py::object& points, int degree, int multiplicity, const std::string& field) {
        std::vector<AssignedPoint> assigned;
        const auto pts = points_of(points, field);
        if (pts.empty()) throw Error("domain", "no points given");
        for (const auto& p : pts) assigned.push_back({p, multiplicity});
        return texts(forms_with_multiplicity(pts[0].field(), degree, assigned));
      },
      py::arg("points"), py::arg("degree"), py::arg("multiplicity"), py::arg("field") = "QQ");

  m.def(
      "quadrics_through",
      [](const py::object& points, const std::string& field) {
        return texts(quadrics_through(field_of(field), points_of(points, field)));
      },
      py::arg("points"), py::arg("field") = "QQ");

  m.def(
      "dianode",
      [](const py::object& points, const std::string& field) {
        const DianodeSystem sys = dianode_from_points(points_of(points, field));
        py::dict out;
        out["g"] = sys.g.to_string();
        out["net"] = texts({sys.net[0], sys.net[1], sys.net[2]});
        out["polynomial"] = sys.delta.to_string();
        return out;
      },
      py::arg("points"), py::arg("field") = "QQ", "Dianode sextic of seven points");

  m.def(
      "steiner",
      [](const std::vector<std::string>& net, const std::string& field) {
        if (net.size() != 3) throw Error("domain", "a net needs three quadrics");
        const Field k = field_of(field);
        const auto minors =
            steiner_curve(MultiPoly::parse(net[0], k), MultiPoly::parse(net[1], k), MultiPoly::parse(net[2], k));
        return texts({minors.begin(), minors.end()});
      },
      py::arg("net"), py::arg("field") = "QQ", "Maximal minors cutting out the Steiner curve");
}
