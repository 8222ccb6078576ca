#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triplepoint/linalg.hpp"
#include "triplepoint/poly.hpp"
#include "triplepoint/surface.hpp"

namespace triplepoint {

/// Taylor expansion of a surface at a point, truncated at total degree `order`.
///
/// The point is moved to the origin of the affine chart {x_chart = 1}; the
/// jet is a polynomial in the three remaining variables (which keep their
/// global names).
struct LocalJet {
  int chart = 0;
  std::array<int, 3> local_vars{};
  int order = 0;
  MultiPoly poly;
};

std::array<int, 3> local_variables(int chart);

/// Column i holds the jet of the i-th degree-`degree` monomial at `point`,
/// on the basis monomials_up_to_degree(order, local_variables(chart)).
Matrix jet_matrix(int degree, const ProjPoint& point, int order);

LocalJet local_jet(const Surface& surface, const ProjPoint& point, int order);
LocalJet local_jet(const MultiPoly& f, const ProjPoint& point, int order);

/// 0 iff the point is not on the surface.
int multiplicity(const Surface& surface, const ProjPoint& point);

struct TriplePointCertificate {
  ProjPoint point;
  int multiplicity = 0;
  MultiPoly tangent_cone;  // degree-3 part of the local jet
  int smooth_rank = 0;     // rank of the 18 x 15 saturation matrix
};

/// Outcome of the ordinary-triple-point test; `certificate` is always filled
/// with what was measured, `ordinary` says whether it passed.
struct TriplePointCheck {
  bool ordinary = false;
  TriplePointCertificate certificate;
  std::string reason;
};

TriplePointCheck check_triple_point(const Surface& surface, const ProjPoint& point);
/// Throws Error("certification") describing the failure.
TriplePointCertificate certify_ordinary_triple_point(const Surface& surface, const ProjPoint& point);

/// Rank of the matrix of degree-2 multiples of the partials of a ternary
/// cubic in the given variables; 15 iff the plane cubic is smooth (char > 3).
int cubic_smoothness_rank(const MultiPoly& cubic, const std::array<int, 3>& vars);

/// Worker count for sharded loops: TRIPLEPOINT_THREADS, or the hardware
/// concurrency when unset or 0.
unsigned worker_threads();

/// Points of P^3(GF(p^e)) where f and all partials vanish, in canonical order.
std::vector<ProjPoint> enumerate_singular_points(const Surface& surface, int extension_degree = 1);

/// h(0..k_max) of R/J, J generated by the partials (k_max < 0 means 4d).
std::vector<long long> jacobian_hilbert(const Surface& surface, int k_max = -1);

/// Prime used for surfaces over QQ: the integer model of f is reduced mod
/// this prime. Ranks can only drop mod p, so the values are upper bounds for
/// the rational Hilbert function.
inline constexpr std::uint32_t kHilbertModulus = 2147483647u;

struct SingularSchemeDegree {
  bool positive_dimensional = false;
  long long degree = 0;
  std::vector<long long> hilbert;
  std::uint32_t modulus = 0;  // nonzero: computed mod this prime (upper bounds)
};
/// Over QQ the computation runs mod kHilbertModulus; a stable value is then
/// an upper bound for the degree and `positive_dimensional` is inconclusive.
SingularSchemeDegree singular_scheme_degree(const Surface& surface, int k_max = -1);

/// Projective dimension of the first-order equisingular deformations.
int equisingular_tangent_dimension(const Surface& surface, const std::vector<ProjPoint>& points);

enum class Verdict { certified_exact, certified_rational_only, positive_dimensional, failed };
std::string to_string(Verdict v);

struct CertificationReport {
  std::string surface;
  std::string field;
  std::vector<TriplePointCertificate> points;
  std::vector<std::string> rejected;  // points that are singular but not ordinary triple points
  std::vector<int> extension_degrees;  // enumeration scope; empty when declared points were used
  std::vector<long long> hilbert;
  std::uint32_t hilbert_modulus = 0;  // nonzero when the Hilbert function was computed mod p
  std::optional<long long> scheme_degree;
  long long expected_degree = 0;
  Verdict verdict = Verdict::failed;
};

struct CertifyOptions {
  bool enumerate = true;  // finite fields only; otherwise the declared points are checked
  int extension_degree = 1;
  bool hilbert = true;
  int k_max = -1;
};

CertificationReport certify_surface(const Surface& surface, const CertifyOptions& options = {});

}  // namespace triplepoint
