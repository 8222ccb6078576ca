#include "triplepoint/surface.hpp"

#include "triplepoint/error.hpp"

namespace triplepoint {

ProjPoint::ProjPoint(std::array<FieldElement, kNumVars> coords) : coords_(std::move(coords)) {
  const Field field = coords_[0].field();
  int first = -1;
  for (int i = 0; i < kNumVars; ++i) {
    if (!(coords_[i].field() == field)) throw Error("descriptor-mismatch", "point coordinates over different fields");
    if (first < 0 && !coords_[i].is_zero()) first = i;
  }
  if (first < 0) throw Error("point", "(0:0:0:0) is not a projective point");
  FieldElement inv = coords_[first].inverse();
  for (auto& c : coords_) c *= inv;
}

ProjPoint ProjPoint::from_ints(const Field& field, std::array<long long, kNumVars> coords) {
  return ProjPoint({field.from_int(coords[0]), field.from_int(coords[1]), field.from_int(coords[2]),
                    field.from_int(coords[3])});
}

ProjPoint ProjPoint::parse(std::string_view text, const Field& field) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '(' || s.front() == '[')) s.erase(0, 1);
  while (!s.empty() && (s.back() == ' ' || s.back() == ')' || s.back() == ']')) s.pop_back();
  char sep = s.find(':') != std::string::npos ? ':' : ',';
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (parts.size() != kNumVars) throw Error("parse", "a point needs four coordinates: '" + std::string(text) + "'");
  return ProjPoint({field.parse_element(parts[0]), field.parse_element(parts[1]), field.parse_element(parts[2]),
                    field.parse_element(parts[3])});
}

int ProjPoint::chart() const {
  for (int i = 0; i < kNumVars; ++i) {
    if (!coords_[i].is_zero()) return i;
  }
  return 0;
}

ProjPoint ProjPoint::change_field(const Field& target) const {
  return ProjPoint({coords_[0].lift(target), coords_[1].lift(target), coords_[2].lift(target),
                    coords_[3].lift(target)});
}

ProjPoint ProjPoint::transform(const Matrix& m) const {
  Vector v(coords_.begin(), coords_.end());
  Vector image = m.apply(v);
  return ProjPoint({image[0], image[1], image[2], image[3]});
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (int i = 0; i < kNumVars; ++i) {
    if (i) out += ':';
    out += coords_[i].to_string();
  }
  return out + ")";
}

std::array<std::string, kNumVars> ProjPoint::coordinate_strings() const {
  return {coords_[0].to_string(), coords_[1].to_string(), coords_[2].to_string(), coords_[3].to_string()};
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  for (int i = 0; i < kNumVars; ++i) {
    const FieldElement& a = coords_[i];
    const FieldElement& b = o.coords_[i];
    if (a == b) continue;
    if (a.field().is_finite()) return a.index() < b.index();
    return a.rational() < b.rational();
  }
  return false;
}

std::size_t coordinate_rank(const std::vector<ProjPoint>& points) {
  if (points.empty()) return 0;
  std::vector<Vector> rows;
  for (const auto& p : points) rows.emplace_back(p.coords().begin(), p.coords().end());
  return rank(Matrix::from_rows(points[0].field(), rows, kNumVars));
}

Surface::Surface(MultiPoly poly, std::string surface_id) : f(std::move(poly)), id(std::move(surface_id)) {
  if (f.is_zero()) throw Error("surface", "the zero polynomial does not define a surface");
  d = f.homogeneous_degree();
  if (d < 1) throw Error("surface", "surface equation must be homogeneous of positive degree");
}

}  // namespace triplepoint
