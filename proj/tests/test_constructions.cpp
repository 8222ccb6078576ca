#include <doctest.h>

#include "support.hpp"
#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/singular.hpp"

using namespace triplepoint;
using test::point;
using test::poly;

namespace {

std::vector<AssignedPoint> assigned(const std::vector<ProjPoint>& pts, int m) {
  std::vector<AssignedPoint> out;
  for (const auto& p : pts) out.push_back({p, m});
  return out;
}

std::vector<ProjPoint> vertices(const Field& f) {
  return {point(f, 1, 0, 0, 0), point(f, 0, 1, 0, 0), point(f, 0, 0, 1, 0), point(f, 0, 0, 0, 1)};
}

bool proportional(const MultiPoly& a, const MultiPoly& b) { return a.monic() == b.monic(); }

// Symmetric 4x4 matrix of a quadric: entry (i, j) = d^2 q / dx_i dx_j.
Matrix hessian(const MultiPoly& q) {
  Matrix m(q.field(), 4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m.at(i, j) = q.derivative(i).derivative(j).coefficient(Monomial());
  }
  return m;
}

}  // namespace

TEST_CASE("forms with assigned multiplicities") {
  const Field f = Field::rationals();
  CHECK(forms_with_multiplicity(f, 1, {{point(f, 1, 2, 3, 4), 1}}).size() == 3);
  for (int nu = 0; nu <= 5; ++nu) {
    const auto pts = generic_points(f, nu, 40 + static_cast<std::uint64_t>(nu));
    CHECK(multiplicity_conditions(f, 5, assigned(pts, 3)).rows() == static_cast<std::size_t>(10 * nu));
    CHECK(forms_with_multiplicity(f, 5, assigned(pts, 3)).size() == static_cast<std::size_t>(56 - 10 * nu));
  }
  CHECK(forms_with_multiplicity(f, 6, assigned(generic_points(f, 7, 9), 3)).size() == 14);
}

TEST_CASE("basis forms have vanishing jets at the assigned points") {
  for (const Field& f : {Field::rationals(), Field::prime(31)}) {
    const auto pts = generic_points(f, 4, 77);
    std::vector<AssignedPoint> a{{pts[0], 3}, {pts[1], 2}, {pts[2], 1}, {pts[3], 3}};
    const auto basis = forms_with_multiplicity(f, 5, a);
    REQUIRE(basis.size() == 56 - 10 - 4 - 1 - 10);
    for (const auto& g : basis) {
      for (const auto& ap : a) CHECK(local_jet(g, ap.point, ap.multiplicity - 1).poly.is_zero());
    }
  }
}

TEST_CASE("quadrics through points") {
  const Field f = Field::rationals();
  CHECK(quadrics_through(f, generic_points(f, 5, 1)).size() == 5);
  CHECK(quadrics_through(f, generic_points(f, 7, 1)).size() == 3);
  CHECK(quadrics_through(f, generic_points(f, 9, 1)).size() == 1);
  for (const auto& q : quadrics_through(f, generic_points(f, 7, 1))) {
    for (const auto& p : generic_points(f, 7, 1)) CHECK(q.evaluate(p.coords()).is_zero());
  }
}

TEST_CASE("mixed powers") {
  const Field f = Field::prime(31);
  SeededStream stream(8);
  CHECK(mixed_power_system({stream.form(f, 2), stream.form(f, 2)}).size() == 4);
  CHECK(mixed_power_system({stream.form(f, 2)}).size() == 1);
  const auto four = quadrics_through(f, generic_points(f, 6, 3));
  REQUIRE(four.size() == 4);
  CHECK(mixed_power_system(four).size() == 20);
}

TEST_CASE("reciprocal transformation examples") {
  const auto quadric = reciprocal_transform(poly("x*y+z*w"));
  CHECK(quadric.f == poly("x*y+z*w"));
  CHECK(quadric.multiplicities == std::array<int, 4>{1, 1, 1, 1});
  const auto plane = reciprocal_transform(poly("x+y+z+w"));
  CHECK(plane.f == poly("y*z*w+x*z*w+x*y*w+x*y*z"));
  CHECK(plane.multiplicities == std::array<int, 4>{0, 0, 0, 0});
  const Field f = Field::rationals();
  const auto quintics = forms_with_multiplicity(f, 5, assigned(vertices(f), 3));
  REQUIRE(quintics.size() == 16);
  MultiPoly quintic(f);
  for (std::size_t i = 0; i < quintics.size(); ++i) quintic += quintics[i].scale(static_cast<long long>(i + 1));
  const auto cubic = reciprocal_transform(quintic);
  CHECK(cubic.f.homogeneous_degree() == 3);
  CHECK(cubic.multiplicities == std::array<int, 4>{3, 3, 3, 3});
  CHECK_THROWS_AS(reciprocal_transform(poly("x*y")), Error);
  CHECK(reciprocal_point(point(f, 1, 2, 3, 4)) == ProjPoint::from_ints(f, {24, 12, 8, 6}));
}

TEST_CASE("reciprocal transformation is an involution up to scalars") {
  const Field f = Field::prime(31);
  SeededStream stream(50);
  for (int i = 0; i < 50; ++i) {
    MultiPoly g = stream.form(f, 6);
    if (g.var_valuation(0) + g.var_valuation(1) + g.var_valuation(2) + g.var_valuation(3) > 0) continue;
    const auto once = reciprocal_transform(g);
    int sum = 0;
    for (int m : once.multiplicities) sum += m;
    CHECK(once.f.homogeneous_degree() == 18 - sum);
    const auto twice = reciprocal_transform(once.f);
    CHECK(proportional(twice.f, g));
  }
}

TEST_CASE("linear substitution") {
  const Field f = Field::prime(31);
  const Matrix swap = Matrix::from_ints(f, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(linear_substitution(poly("x^2+z*w", f), swap) == poly("y^2+z*w", f));
  const Matrix m = Matrix::from_ints(f, {{1, 2, 0, 0}, {0, 1, 0, 3}, {4, 0, 1, 0}, {0, 0, 5, 1}});
  const MultiPoly g = poly("x^3+y*z*w-2*x*w^2", f);
  const ProjPoint p = point(f, 1, 7, 3, 9);
  // g(M y) at y = p equals g at M p.
  CHECK(linear_substitution(g, m).evaluate(p.coords()) == g.evaluate(m.apply({p.coords().begin(), p.coords().end()})));
}

TEST_CASE("dianode surface") {
  const Field f = Field::rationals();
  SeededStream stream(4);
  const MultiPoly q1 = stream.form(f, 2), q2 = stream.form(f, 2), q3 = stream.form(f, 2);
  CHECK(dianode_surface(q1 * q2, q1, q2, q3).is_zero());
  CHECK_THROWS_AS(dianode_surface(q1, q1, q2, q3), Error);

  const auto seven = generic_points(f, 7, 2);
  const DianodeSystem sys = dianode_from_points(seven);
  CHECK(sys.delta.homogeneous_degree() == 6);
  const Surface delta(sys.delta);
  for (const auto& p : seven) {
    CHECK(sys.delta.evaluate(p.coords()).is_zero());
    CHECK(check_triple_point(delta, p).ordinary);
  }
}

TEST_CASE("four coplanar base points split off their plane") {
  const Field f = Field::rationals();
  const std::vector<ProjPoint> seven{point(f, 1, 0, 0, 0), point(f, 0, 1, 0, 0), point(f, 0, 0, 1, 0),
                                     point(f, 1, 1, 1, 0), point(f, 1, 2, 3, 1), point(f, 2, -1, 5, 1),
                                     point(f, 3, 1, -2, 1)};
  const DianodeSystem sys = dianode_from_points(seven);
  REQUIRE_FALSE(sys.delta.is_zero());
  CHECK(multiplicity_of_factor(sys.delta, poly("w")) >= 1);
  CHECK_NOTHROW(divide_exact(sys.delta, poly("w")));
}

TEST_CASE("Steiner curve") {
  const auto diag = steiner_curve(poly("x^2"), poly("y^2"), poly("z^2"));
  CHECK(diag[0] == poly("8*x*y*z"));
  CHECK(diag[1].is_zero());
  CHECK(diag[2].is_zero());
  CHECK(diag[3].is_zero());
  for (const auto& m : steiner_curve(poly("x*y+z^2"), poly("x*y+z^2"), poly("w^2"))) CHECK(m.is_zero());
}

TEST_CASE("Steiner curve passes through the vertices of singular quadrics of the net") {
  const Field f = Field::prime(31);
  const auto net = quadrics_through(f, generic_points(f, 7, 12));
  REQUIRE(net.size() == 3);
  const auto minors = steiner_curve(net[0], net[1], net[2]);
  for (const auto& m : minors) CHECK(m.homogeneous_degree() == 3);
  std::vector<ProjPoint> all_points;
  for (int chart = 0; chart < 4; ++chart) {
    long long count = 1;
    for (int i = chart + 1; i < 4; ++i) count *= 31;
    for (long long code = 0; code < count; ++code) {
      std::array<long long, 4> v{};
      v[static_cast<std::size_t>(chart)] = 1;
      long long r = code;
      for (int i = chart + 1; i < 4; ++i, r /= 31) v[static_cast<std::size_t>(i)] = r % 31;
      all_points.push_back(ProjPoint::from_ints(f, v));
    }
  }
  int vertices_found = 0;
  for (long long a = 0; a < 31; ++a) {
    for (long long b = 0; b < 31; ++b) {
      for (long long c : {0LL, 1LL}) {
        if (c == 0 && !(b == 1 || (b == 0 && a == 1))) continue;  // projective representatives
        const MultiPoly q = net[0].scale(a) + net[1].scale(b) + net[2].scale(c);
        if (q.is_zero() || rank(hessian(q)) == 4) continue;
        // Brute-force search for the vertex: a point where every partial vanishes.
        for (const ProjPoint& p : all_points) {
          bool vertex = true;
          for (int i = 0; i < 4 && vertex; ++i) vertex = q.derivative(i).evaluate(p.coords()).is_zero();
          if (!vertex) continue;
          ++vertices_found;
          for (const auto& m : minors) CHECK(m.evaluate(p.coords()).is_zero());
        }
      }
    }
  }
  CHECK(vertices_found > 0);
}

TEST_CASE("generic points") {
  const Field f = Field::prime(31);
  const auto pts = generic_points(f, 9, 5);
  CHECK(pts.size() == 9);
  CHECK(no_three_collinear(pts));
  CHECK_FALSE(no_three_collinear({point(f, 1, 0, 0, 0), point(f, 0, 1, 0, 0), point(f, 1, 1, 0, 0)}));
  CHECK(generic_points(f, 9, 5) == pts);
}
