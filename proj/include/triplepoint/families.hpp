#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "triplepoint/poly.hpp"
#include "triplepoint/surface.hpp"

namespace triplepoint {

/// Family identifiers accepted by construct_family.
const std::vector<std::string>& family_ids();

/// Builds a family member from textual parameters ("a1" -> "-1", ...).
/// Missing parameters take the documented defaults; `field_tag` empty means
/// the family's default field. With `check`, every declared point must
/// certify as an ordinary triple point.
Surface construct_family(const std::string& id, const std::string& field_tag,
                         const std::map<std::string, std::string>& params, bool check = true);

/// Throws Error("certification") unless all declared points are ordinary triple points.
void certify_declared_points(const Surface& surface);

/// Roots in the field of a t^2 + b t + c (a != 0), sorted canonically.
std::vector<FieldElement> quadratic_roots(const FieldElement& a, const FieldElement& b, const FieldElement& c);

// Quintics with nu <= 5 triple points: a seeded combination of the linear system.
Surface quintic_with_triple_points(const std::vector<ProjPoint>& points, std::uint64_t seed = 1, bool check = true);

// K3 families.
Surface sextic_k3_444(const Field& field, std::array<FieldElement, 3> a, std::array<FieldElement, 3> b,
                      const FieldElement& alpha, const FieldElement& beta, bool check = true);
/// b = 0, a = -1 over GF(29): nine points, P_{3+i} = (eta^{4i}:eta^{2i}:eta^i:1), eta = 16.
Surface sextic_k3_444_example();
Surface sextic_k3_228(const Field& field, const FieldElement& lambda, const FieldElement& alpha,
                      const FieldElement& beta, bool check = true);

// Properly elliptic families.
Surface sextic_elliptic_222(const Field& field, const FieldElement& lambda, const FieldElement& mu,
                            const FieldElement& nu, const std::array<FieldElement, 6>& b, const FieldElement& alpha,
                            const FieldElement& beta, const FieldElement& gamma, bool check = true);
/// lambda = mu = nu = 1, all b = 1, X = xyz g + q^3 over GF(13)
/// (GF(7) is a bad prime: three of the nine cones degenerate).
Surface sextic_elliptic_222_example();

/// The three generators q^3, xyz q w, xyz g of the elliptic (2,2,2) net.
std::array<MultiPoly, 3> elliptic_generators(const Field& field, const FieldElement& lambda, const FieldElement& mu,
                                             const FieldElement& nu, const std::array<FieldElement, 6>& b);

/// Reciprocal image of a family member with the chosen declared points
/// (0-based indices) as fundamental points. The image keeps nine declared
/// points: the four coordinate vertices and the images of the others.
Surface reciprocal_family(const Surface& base, const std::array<int, 4>& fundamental, std::array<int, 3> exc_degrees,
                          const std::string& family, bool check = true);
Surface sextic_k3_246(const Surface& base_444, const std::array<int, 4>& fundamental, bool check = true);
Surface sextic_elliptic_224(const Surface& base_222, const std::array<int, 4>& fundamental, bool check = true);
/// (2,4,6) image of the GF(29) example with fundamental points P1, P2 and the
/// conjugate pair (eta^4:eta^2:eta:1), (eta^-4:eta^-2:eta^-1:1).
Surface sextic_k3_246_example();
/// (2,2,4) image of the GF(13) member lambda = mu = 1, nu = 2,
/// b = (3, 1, 1, 1, 1, 1), centred in P6, ..., P9.
Surface sextic_elliptic_224_example();

// Ten triple points.
std::pair<FieldElement, FieldElement> ten_point_conditions(const FieldElement& lambda, const FieldElement& a,
                                                           const FieldElement& b);
struct TenPointConstruction {
  Surface surface;
  std::size_t kernel_dimension = 0;
};
/// lambda = mu = nu = 2, b1..b3 = -11, b4..b6 = 3 over GF(31); the unique
/// member of the net with a triple point at (1:1:1:1).
TenPointConstruction sextic_ten_gf31_construction(bool check = true);
Surface sextic_ten_gf31(bool check = true);

// Septics.
Surface septic_s4(const Field& field, const FieldElement& mu, const FieldElement& nu, bool check = true);
/// sigma_1..sigma_4 of x, y, z, w.
std::array<MultiPoly, 4> elementary_symmetric(const Field& field);

struct SepticFactorReport {
  MultiPoly determinant;  // in lambda = x, mu = y, nu = z
  MultiPoly product;
  FieldElement constant;  // determinant / product
  std::vector<std::pair<std::string, int>> expected;  // factor text, stated exponent
  std::vector<int> measured;                          // exact multiplicity found
  bool vanishes_at_lambda_minus_nu = false;
};
SepticFactorReport septic_determinant_factorization();

/// Coplanar 5-subsets of the points with the plane through them.
struct CoplanarFive {
  std::array<std::size_t, 5> indices{};
  MultiPoly plane;
};
std::vector<CoplanarFive> detect_minus_one_conics(const std::vector<ProjPoint>& points);

}  // namespace triplepoint
