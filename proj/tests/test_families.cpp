#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"
#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/families.hpp"
#include "triplepoint/invariants.hpp"
#include "triplepoint/singular.hpp"

using namespace triplepoint;
using test::point;
using test::poly;

namespace {

std::size_t ordinary_count(const Surface& s) {
  std::size_t n = 0;
  for (const auto& p : s.declared_points) n += check_triple_point(s, p).ordinary;
  return n;
}

Matrix columns(const std::vector<ProjPoint>& pts) {
  Matrix m(pts.front().field(), 4, 4);
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < 4; ++i) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = pts[static_cast<std::size_t>(j)][i];
  }
  return m;
}

}  // namespace

TEST_CASE("family registry") {
  const auto& ids = family_ids();
  for (const char* id : {"quintic-nu", "k3-444", "k3-246", "k3-228", "ell-222", "ell-224", "sextic-ten-gf31", "septic-s4"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK_THROWS_AS(construct_family("k3-999", "", {}), Error);
  CHECK_THROWS_AS(construct_family("k3-228", "", {{"lamda", "3"}}), Error);
  const Surface s = construct_family("k3-228", "GF:31", {{"lambda", "3"}});
  CHECK(s.family == "k3-228");
  CHECK(s.declared_points.size() == 9);
}

TEST_CASE("quintics with assigned triple points") {
  const Field f = Field::prime(31);
  const Surface five = quintic_with_triple_points(generic_points(f, 5, 6));
  CHECK(ordinary_count(five) == 5);
  CHECK(geometric_genus(five, five.declared_points) == 0);
  const Surface three = quintic_with_triple_points(generic_points(f, 3, 6));
  CHECK(geometric_genus(three, three.declared_points) == 1);
  const Field q;
  const Surface one = quintic_with_triple_points({point(q, 0, 0, 0, 1)});
  CHECK(check_triple_point(one, point(q, 0, 0, 0, 1)).ordinary);
  CHECK(one.f.coefficient(Monomial({0, 0, 0, 5})).is_zero());
  CHECK_THROWS_AS(quintic_with_triple_points({point(f, 1, 0, 0, 0), point(f, 0, 1, 0, 0), point(f, 1, 1, 0, 0)}),
                  Error);
}

TEST_CASE("the (4,4,4) example over GF(29)") {
  const Surface s = sextic_k3_444_example();
  const Field& f = s.field();
  CHECK(f.from_int(16).pow(7) == f.one());
  CHECK_FALSE(f.from_int(16).is_one());
  CHECK(ordinary_count(s) == 9);
  // At a = -1, b = 0 the cones are z^2 - yw, x^2 - zw, y^2 - xw and
  // q = -((1+x)(1+y)(1+z) - xyz) homogenized.
  const MultiPoly cones = poly("z^2-y*w", f) * poly("x^2-z*w", f) * poly("y^2-x*w", f);
  const MultiPoly q = poly("-w^2-x*w-y*w-z*w-x*y-y*z-x*z", f);
  CHECK(s.f == cones + q.pow(3));
  CHECK(detect_minus_one_conics(s.declared_points).empty());
  CHECK(geometric_genus(s, s.declared_points) == 1);
  CHECK(enumerate_singular_points(s).size() == 9);
}

TEST_CASE("(4,4,4) guards") {
  const Field f = Field::prime(29);
  const FieldElement m1 = f.from_int(-1), z = f.zero(), one = f.one();
  CHECK_THROWS_AS(sextic_k3_444(f, {m1, m1, m1}, {z, z, z}, z, one), Error);
  CHECK_THROWS_AS(sextic_k3_444(f, {m1, m1, m1}, {z, z, z}, one, z), Error);
}

TEST_CASE("the (2,4,6) example and its inverse transformation") {
  const Surface base = sextic_k3_444_example();
  const Surface s = sextic_k3_246_example();
  CHECK(s.exc_degrees == std::array<int, 3>{2, 4, 6});
  CHECK(ordinary_count(s) == 9);
  CHECK(detect_minus_one_conics(s.declared_points).size() == 1);
  CHECK(geometric_genus(s, s.declared_points) == 1);
  // Transforming back with the coordinate vertices as fundamental points
  // recovers the base in the coordinates x = M y.
  const std::vector<ProjPoint> fundamental{base.declared_points[0], base.declared_points[1], base.declared_points[3],
                                           base.declared_points[8]};
  const MultiPoly expected = linear_substitution(base.f, columns(fundamental)).monic();
  CHECK(reciprocal_transform(s.f).f.monic() == expected);
  const Surface back = reciprocal_family(s, {0, 1, 2, 3}, {4, 4, 4}, "k3-444", true);
  CHECK(back.f == expected);
  CHECK(equisingular_tangent_dimension(back, back.declared_points) ==
        equisingular_tangent_dimension(base, base.declared_points));
}

TEST_CASE("fundamental points must be usable") {
  const Surface base = sextic_k3_444_example();
  CHECK_THROWS_AS(sextic_k3_246(base, {0, 1, 2, 12}), Error);
  Surface with_smooth = base;
  with_smooth.declared_points.push_back(point(base.field(), 1, 1, 1, 1));
  CHECK_THROWS_AS(sextic_k3_246(with_smooth, {0, 1, 3, 9}), Error);
}

TEST_CASE("the (2,2,8) family") {
  const Field f = Field::prime(31);
  const Surface s = sextic_k3_228(f, f.from_int(3), f.one(), f.one());
  CHECK(s.declared_points.size() == 9);
  CHECK(ordinary_count(s) == 9);
  CHECK(detect_minus_one_conics(s.declared_points).size() == 2);
  CHECK(geometric_genus(s, s.declared_points) == 1);
  CHECK(certify_surface(s).verdict == Verdict::certified_exact);
  // The quartic g4 has a triple point at (0:0:0:1): the sextic minus q^3 is w h2 g4.
  const MultiPoly e1 = poly("x+y+z", f), e2 = poly("x*y+x*z+y*z", f);
  const MultiPoly q = e2.scale(5) - (e1 * poly("w", f)).scale(7);
  const MultiPoly g4 = divide_exact(divide_exact(s.f - q.pow(3), poly("w", f)), e1 - poly("w", f).scale(5));
  CHECK(multiplicity(Surface(g4), point(f, 0, 0, 0, 1)) == 3);
  CHECK_THROWS_AS(sextic_k3_228(f, f.from_int(-2), f.one(), f.one()), Error);
  CHECK_THROWS_AS(sextic_k3_228(f, f.zero(), f.one(), f.one()), Error);
}

TEST_CASE("the elliptic (2,2,2) example") {
  const Surface s = sextic_elliptic_222_example();
  CHECK(s.field() == Field::prime(13));
  CHECK(ordinary_count(s) == 9);
  CHECK(detect_minus_one_conics(s.declared_points).size() == 3);
  CHECK(geometric_genus(s, s.declared_points) == 1);
  CHECK(equisingular_tangent_dimension(s, s.declared_points) == 23);
}

TEST_CASE("GF(7) is a bad prime for the symmetric (2,2,2) member") {
  const Field f = Field::prime(7);
  const FieldElement one = f.one();
  const std::array<FieldElement, 6> b{one, one, one, one, one, one};
  const Surface s = sextic_elliptic_222(f, one, one, one, b, one, f.zero(), one, false);
  REQUIRE(s.declared_points.size() == 9);
  CHECK(ordinary_count(s) == 6);
  CHECK_THROWS_AS(sextic_elliptic_222(f, one, one, one, b, one, f.zero(), one, true), Error);
}

TEST_CASE("(2,2,2) guards") {
  const Field f = Field::prime(13);
  const FieldElement one = f.one();
  const std::array<FieldElement, 6> b{one, one, one, one, one, one};
  CHECK_THROWS_AS(sextic_elliptic_222(f, f.zero(), one, one, b, one, f.zero(), one), Error);
  // 1 + lambda mu nu = 0 puts P7, P8, P9 on a line.
  CHECK_THROWS_AS(sextic_elliptic_222(f, one, one, f.from_int(-1), b, one, f.zero(), one), Error);
  CHECK_THROWS_AS(sextic_elliptic_222(f, one, one, one, b, f.zero(), f.zero(), f.zero()), Error);
}

TEST_CASE("the elliptic (2,2,4) example") {
  const Surface s = sextic_elliptic_224_example();
  CHECK(s.f.homogeneous_degree() == 6);
  CHECK(ordinary_count(s) == 9);
  CHECK(s.exc_degrees == std::array<int, 3>{2, 2, 4});
  CHECK(certify_surface(s).verdict == Verdict::certified_exact);
}

TEST_CASE("ten point conditions") {
  const Field g31 = Field::prime(31);
  const auto [r1, r2] = ten_point_conditions(g31.from_int(2), g31.from_int(9), g31.from_int(-11));
  CHECK(r1.is_zero());
  CHECK(r2.is_zero());
  const Field q;
  const auto [s1, s2] = ten_point_conditions(q.from_int(1), q.zero(), q.zero());
  CHECK(s1 == q.zero());
  // 3 (0)^2 (0 + 0 - 1 + 1 - 1)^2 + (2)^2 (0 + 0 + 1 - 1 + 1)^2 = 4.
  CHECK(s2 == q.from_int(4));
}

TEST_CASE("no rational grid point solves both ten point conditions") {
  const Field q;
  for (int l = -12; l <= 12; ++l) {
    for (int a = -12; a <= 12; ++a) {
      for (int b = -12; b <= 12; ++b) {
        const mpq_class lambda(l, 3), av(a, 2), bv(b, 2);
        const auto [r1, r2] = ten_point_conditions(q.from_rational(lambda), q.from_rational(av), q.from_rational(bv));
        REQUIRE(r2.rational() >= 0);  // a sum of squares with positive weights
        REQUIRE_FALSE((r1.is_zero() && r2.is_zero()));
      }
    }
  }
}

TEST_CASE("the ten-point sextic") {
  const TenPointConstruction c = sextic_ten_gf31_construction();
  CHECK(c.kernel_dimension == 1);
  const Surface& s = c.surface;
  CHECK(s.declared_points.size() == 10);
  CHECK(ordinary_count(s) == 10);
  CHECK(geometric_genus(s, s.declared_points) == 0);
}

TEST_CASE("dropping one point of the ten gives a nine-point pencil") {
  const Surface ten = sextic_ten_gf31();
  const Field& f = ten.field();
  const ProjPoint p7(std::array<FieldElement, 4>{f.zero(), f.one(), f.from_int(2), f.zero()});
  const auto it = std::find(ten.declared_points.begin(), ten.declared_points.end(), p7);
  REQUIRE(it != ten.declared_points.end());
  std::vector<ProjPoint> nine;
  for (const auto& p : ten.declared_points) {
    if (!(p == p7)) nine.push_back(p);
  }
  const auto quadric = quadrics_through(f, nine);
  REQUIRE(quadric.size() == 1);
  bool found = false;
  for (long long t = 1; t < 31 && !found; ++t) {
    Surface member(ten.f + quadric[0].pow(3).scale(t));
    member.declared_points = nine;
    if (ordinary_count(member) != 9) continue;
    const auto report = certify_surface(member);
    if (report.verdict != Verdict::certified_exact) continue;
    found = true;
    CHECK(report.points.size() == 9);
    CHECK(report.expected_degree == 72);
    CHECK(multiplicity(member, p7) < 3);
    CHECK(detect_minus_one_conics(nine).size() == 2);
  }
  CHECK(found);
}

TEST_CASE("the S4 septic") {
  const Field q;
  const Surface s = septic_s4(q, q.from_int(1), q.from_int(2));
  CHECK(s.declared_points.size() == 16);
  CHECK(std::find(s.declared_points.begin(), s.declared_points.end(), point(q, -2, 1, 2, 2)) != s.declared_points.end());
  CHECK(ordinary_count(s) == 16);
  std::array<int, 4> perm{0, 1, 2, 3};
  int count = 0;
  do {
    std::vector<MultiPoly> images;
    for (int i : perm) images.push_back(MultiPoly::var(q, i));
    CHECK(s.f.substitute(images) == s.f);
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(count == 24);
  CertifyOptions opts;
  opts.enumerate = false;
  const auto report = certify_surface(s, opts);
  CHECK(report.verdict == Verdict::certified_exact);
  CHECK(report.scheme_degree == 128);
  const InvariantTable t = resolved_invariants(7, 16, 0);
  CHECK(t.c1sq == 15);
  CHECK(t.c2 == 45);
  CHECK(t.chi == 5);
  CHECK(equisingular_tangent_dimension(s, s.declared_points) == 16);
  CHECK_THROWS_AS(septic_s4(q, q.one(), q.one()), Error);
  CHECK_THROWS_AS(septic_s4(q, q.one(), q.from_int(-1)), Error);
  CHECK_THROWS_AS(septic_s4(q, q.zero(), q.one()), Error);
}

TEST_CASE("septic determinant factorization") {
  const SepticFactorReport r = septic_determinant_factorization();
  CHECK_FALSE(r.constant.is_zero());
  CHECK(r.determinant == r.product.scale(r.constant));
  REQUIRE(r.measured.size() == r.expected.size());
  for (std::size_t i = 0; i < r.expected.size(); ++i) {
    CAPTURE(r.expected[i].first);
    CHECK(r.measured[i] == r.expected[i].second);
  }
  CHECK(r.vanishes_at_lambda_minus_nu);
}

TEST_CASE("coplanar five-subsets") {
  const Field f = Field::prime(31);
  CHECK(detect_minus_one_conics(generic_points(f, 9, 21)).empty());
  const std::vector<ProjPoint> plane{point(f, 1, 0, 0, 0), point(f, 0, 1, 0, 0), point(f, 0, 0, 1, 0),
                                     point(f, 1, 1, 1, 0), point(f, 1, 2, 3, 0), point(f, 0, 0, 0, 1)};
  const auto found = detect_minus_one_conics(plane);
  REQUIRE(found.size() == 1);
  CHECK(found[0].indices == std::array<std::size_t, 5>{0, 1, 2, 3, 4});
  CHECK(found[0].plane.monic() == poly("w", f));
}
