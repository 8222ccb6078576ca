#include "triplepoint/constructions.hpp"

#include "triplepoint/error.hpp"
#include "triplepoint/singular.hpp"

namespace triplepoint {

Matrix multiplicity_conditions(const Field& field, int k, const std::vector<AssignedPoint>& points) {
  const auto cols = monomials_of_degree(k);
  std::vector<Vector> rows;
  for (const auto& [point, m] : points) {
    if (!(point.field() == field)) throw Error("descriptor-mismatch", "point over another field");
    if (m < 1) throw Error("domain", "multiplicities must be positive");
    if (m > k + 1) throw Error("domain", "multiplicity exceeds degree + 1");
    const Matrix jm = jet_matrix(k, point, m - 1);
    for (std::size_t r = 0; r < jm.rows(); ++r) rows.push_back(jm.row(r));
  }
  return Matrix::from_rows(field, rows, cols.size());
}

std::vector<MultiPoly> forms_with_multiplicity(const Field& field, int k, const std::vector<AssignedPoint>& points) {
  if (k < 1) throw Error("domain", "degree must be positive");
  const auto cols = monomials_of_degree(k);
  std::vector<MultiPoly> out;
  for (const auto& v : kernel_basis(multiplicity_conditions(field, k, points))) {
    out.push_back(MultiPoly::from_coefficients(field, cols, v));
  }
  return out;
}

std::vector<MultiPoly> quadrics_through(const Field& field, const std::vector<ProjPoint>& points) {
  std::vector<AssignedPoint> assigned;
  for (const auto& p : points) assigned.push_back({p, 1});
  return forms_with_multiplicity(field, 2, assigned);
}

std::vector<MultiPoly> span_basis(const Field& field, const std::vector<MultiPoly>& forms) {
  if (forms.empty()) return {};
  const int k = forms.front().homogeneous_degree();
  for (const auto& f : forms) {
    if (!(f.field() == field)) throw Error("descriptor-mismatch", "form over another field");
    if (!f.is_zero() && f.homogeneous_degree() != k) throw Error("degree", "span_basis needs forms of one degree");
  }
  if (k < 0) return {};
  const auto cols = monomials_of_degree(k);
  std::vector<Vector> rows;
  for (const auto& f : forms) rows.push_back(f.coefficients(cols));
  RowEchelonForm ref = row_echelon(Matrix::from_rows(field, rows, cols.size()));
  std::vector<MultiPoly> out;
  for (std::size_t r = 0; r < ref.rows.rows(); ++r) {
    out.push_back(MultiPoly::from_coefficients(field, cols, ref.rows.row(r)));
  }
  return out;
}

std::vector<MultiPoly> mixed_power_system(const std::vector<MultiPoly>& quadrics, int k) {
  if (quadrics.empty()) return {};
  const Field field = quadrics.front().field();
  // Exponent vectors (e_1..e_n) with sum k, built recursively.
  std::vector<MultiPoly> products;
  std::vector<int> e(quadrics.size(), 0);
  auto recurse = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == quadrics.size()) {
      e[i] = left;
      MultiPoly p = MultiPoly::constant(field, 1);
      for (std::size_t j = 0; j < quadrics.size(); ++j) {
        if (e[j]) p *= quadrics[j].pow(static_cast<unsigned>(e[j]));
      }
      products.push_back(std::move(p));
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      self(self, i + 1, left - a);
    }
  };
  recurse(recurse, 0, k);
  return span_basis(field, products);
}

ReciprocalResult reciprocal_transform(const MultiPoly& f) {
  const int d = f.homogeneous_degree();
  if (d < 1) throw Error("surface", "reciprocal transform needs a homogeneous form of positive degree");
  ReciprocalResult out;
  for (int i = 0; i < kNumVars; ++i) {
    if (f.var_valuation(i) > 0) {
      throw Error("coordinate-plane", std::string("the plane ") + kVarNames[i] + "=0 is a component");
    }
    // Multiplicity at the i-th vertex is d minus the largest power of x_i.
    int top = 0;
    for (const auto& [m, c] : f.terms()) top = std::max(top, m.exponent(i));
    out.multiplicities[i] = d - top;
  }
  // x_i -> prod_{j != i} x_j sends x^a to x^(d - a_i) componentwise.
  std::array<int, kNumVars> divisor_exps = out.multiplicities;
  MultiPoly g(f.field());
  for (const auto& [m, c] : f.terms()) {
    std::array<int, kNumVars> e{};
    for (int i = 0; i < kNumVars; ++i) e[i] = d - m.exponent(i) - divisor_exps[i];
    g.add_term(Monomial(e), c);
  }
  out.f = g;
  // Sanity: the image degree is 3d minus the vertex multiplicities.
  int sum = 0;
  for (int m : out.multiplicities) sum += m;
  if (g.homogeneous_degree() != 3 * d - sum) throw Error("inexact-division", "reciprocal image has wrong degree");
  return out;
}

ProjPoint reciprocal_point(const ProjPoint& p) {
  std::array<FieldElement, kNumVars> c;
  for (int i = 0; i < kNumVars; ++i) {
    if (p[i].is_zero()) throw Error("domain", "point lies on a coordinate plane: " + p.to_string());
    c[i] = p[i].inverse();
  }
  return ProjPoint(c);
}

MultiPoly linear_substitution(const MultiPoly& f, const Matrix& m) {
  if (m.rows() != kNumVars || m.cols() != kNumVars) throw Error("shape", "coordinate change must be 4x4");
  std::vector<MultiPoly> images;
  for (int i = 0; i < kNumVars; ++i) {
    MultiPoly row(f.field());
    for (int j = 0; j < kNumVars; ++j) {
      if (!m.at(i, j).is_zero()) row.add_term(Monomial::var(j), m.at(i, j));
    }
    images.push_back(std::move(row));
  }
  return f.substitute(images);
}

MultiPoly dianode_surface(const MultiPoly& g, const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3) {
  if (g.homogeneous_degree() != 4) throw Error("degree", "dianode needs a quartic g");
  for (const auto* q : {&q1, &q2, &q3}) {
    if (q->homogeneous_degree() != 2) throw Error("degree", "dianode needs three quadrics");
  }
  PolyMatrix m;
  for (const auto* p : {&g, &q1, &q2, &q3}) {
    std::vector<MultiPoly> row;
    for (int j = 0; j < kNumVars; ++j) row.push_back(p->derivative(j));
    m.push_back(std::move(row));
  }
  return determinant(m);
}

DianodeSystem dianode_from_points(const std::vector<ProjPoint>& seven) {
  if (seven.size() != 7) throw Error("domain", "the dianode construction needs seven points");
  const Field field = seven[0].field();
  const auto net = quadrics_through(field, seven);
  if (net.size() != 3) throw Error("degenerate-parameters", "the points do not impose independent conditions on quadrics");
  std::vector<MultiPoly> products;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i; j < 3; ++j) products.push_back(net[i] * net[j]);
  }
  const std::size_t base = span_basis(field, products).size();
  std::vector<AssignedPoint> nodes;
  for (const auto& p : seven) nodes.push_back({p, 2});
  DianodeSystem out;
  out.net = {net[0], net[1], net[2]};
  for (const auto& candidate : forms_with_multiplicity(field, 4, nodes)) {
    products.push_back(candidate);
    if (span_basis(field, products).size() > base) {
      out.g = candidate;
      out.delta = dianode_surface(out.g, net[0], net[1], net[2]);
      return out;
    }
    products.pop_back();
  }
  throw Error("degenerate-parameters", "every nodal quartic lies in the span of the products of the net");
}

std::array<MultiPoly, 4> steiner_curve(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3) {
  for (const auto* q : {&q1, &q2, &q3}) {
    if (q->homogeneous_degree() != 2 && !q->is_zero()) throw Error("degree", "Steiner curve needs three quadrics");
  }
  const std::array<std::array<int, 3>, 4> subsets{{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  std::array<MultiPoly, 4> out;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    PolyMatrix m;
    for (const auto* q : {&q1, &q2, &q3}) {
      std::vector<MultiPoly> row;
      for (int j : subsets[s]) row.push_back(q->derivative(j));
      m.push_back(std::move(row));
    }
    out[s] = determinant(m);
  }
  return out;
}

FieldElement SeededStream::element(const Field& field) {
  if (field.is_finite()) return field.from_index(below(field.order()));
  return field.from_int(static_cast<long long>(below(19)) - 9);
}

FieldElement SeededStream::nonzero(const Field& field) {
  while (true) {
    FieldElement e = element(field);
    if (!e.is_zero()) return e;
  }
}

ProjPoint SeededStream::point(const Field& field) {
  return ProjPoint({nonzero(field), nonzero(field), nonzero(field), nonzero(field)});
}

MultiPoly SeededStream::form(const Field& field, int degree) {
  MultiPoly f(field);
  for (Monomial m : monomials_of_degree(degree)) f.add_term(m, element(field));
  return f;
}

std::vector<ProjPoint> generic_points(const Field& field, int count, std::uint64_t seed) {
  SeededStream stream(seed);
  std::vector<ProjPoint> out;
  while (static_cast<int>(out.size()) < count) {
    ProjPoint candidate = stream.point(field);
    bool ok = true;
    // Reject if the candidate and any three chosen points are coplanar.
    for (std::size_t a = 0; ok && a < out.size(); ++a) {
      if (out[a] == candidate) ok = false;
      for (std::size_t b = a + 1; ok && b < out.size(); ++b) {
        if (coordinate_rank({out[a], out[b], candidate}) < 3) ok = false;
        for (std::size_t c = b + 1; ok && c < out.size(); ++c) {
          if (coordinate_rank({out[a], out[b], out[c], candidate}) < 4) ok = false;
        }
      }
    }
    if (ok) out.push_back(candidate);
  }
  return out;
}

bool no_three_collinear(const std::vector<ProjPoint>& points) {
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      if (coordinate_rank({points[a], points[b]}) < 2) return false;
      for (std::size_t c = b + 1; c < points.size(); ++c) {
        if (coordinate_rank({points[a], points[b], points[c]}) < 3) return false;
      }
    }
  }
  return true;
}

}  // namespace triplepoint
