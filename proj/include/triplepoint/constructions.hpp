#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "triplepoint/linalg.hpp"
#include "triplepoint/poly.hpp"
#include "triplepoint/surface.hpp"

namespace triplepoint {

/// A point with the multiplicity a form is required to have there.
struct AssignedPoint {
  ProjPoint point;
  int multiplicity = 1;
};

/// One row per local monomial of degree < m at each point; columns are the
/// degree-k monomials in descending order.
Matrix multiplicity_conditions(const Field& field, int k, const std::vector<AssignedPoint>& points);

/// Basis (reduced column echelon) of the degree-k forms with the assigned
/// multiplicities.
std::vector<MultiPoly> forms_with_multiplicity(const Field& field, int k, const std::vector<AssignedPoint>& points);

/// Quadrics through the points.
std::vector<MultiPoly> quadrics_through(const Field& field, const std::vector<ProjPoint>& points);

/// Reduced echelon basis of the span of the given forms of one degree.
std::vector<MultiPoly> span_basis(const Field& field, const std::vector<MultiPoly>& forms);

/// All degree-k monomials in the given quadrics, reduced to a basis.
std::vector<MultiPoly> mixed_power_system(const std::vector<MultiPoly>& quadrics, int k = 3);

struct ReciprocalResult {
  MultiPoly f;
  std::array<int, kNumVars> multiplicities{};  // at the coordinate vertices
};

/// (x:y:z:w) -> (yzw:xzw:xyw:xyz) followed by removing the exceptional planes.
ReciprocalResult reciprocal_transform(const MultiPoly& f);
/// Image of a point off the coordinate planes.
ProjPoint reciprocal_point(const ProjPoint& p);

/// f(M y): the equation of the surface in coordinates y with x = M y.
MultiPoly linear_substitution(const MultiPoly& f, const Matrix& m);

/// det of the 4x4 matrix of gradients of (g, q1, q2, q3).
MultiPoly dianode_surface(const MultiPoly& g, const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3);

/// The net of quadrics through seven points, a quartic with nodes there that
/// is not in the span of the products q_i q_j, and the resulting dianode
/// sextic. Adding a product q_i q_j to g only rescales the determinant.
struct DianodeSystem {
  std::array<MultiPoly, 3> net;
  MultiPoly g;
  MultiPoly delta;
};
DianodeSystem dianode_from_points(const std::vector<ProjPoint>& seven);

/// Maximal minors of the 3x4 Jacobian of (q1, q2, q3), omitting columns
/// w, z, y, x in that order (column subsets in lexicographic order).
std::array<MultiPoly, 4> steiner_curve(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3);

/// Deterministic pseudorandom stream for "generic" choices.
///
/// Seeds are fixed in the callers; genericity is always verified afterwards
/// by a rank or certification check.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  FieldElement element(const Field& field);
  /// Nonzero element; rationals are small integers.
  FieldElement nonzero(const Field& field);
  /// A point with all coordinates nonzero.
  ProjPoint point(const Field& field);
  MultiPoly form(const Field& field, int degree);
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }

 private:
  std::mt19937_64 engine_;
};

/// `count` points in general position: no 4 coplanar, hence no 3 collinear.
std::vector<ProjPoint> generic_points(const Field& field, int count, std::uint64_t seed);

/// True iff no three of the points are collinear.
bool no_three_collinear(const std::vector<ProjPoint>& points);

}  // namespace triplepoint
