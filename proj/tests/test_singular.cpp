#include <doctest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/families.hpp"
#include "triplepoint/singular.hpp"

using namespace triplepoint;
using test::point;
using test::poly;

namespace {

// GF(31^2) = GF(31)[u]/(u^2 - 3) on plain integers.
struct Gf961 {
  int a = 0, b = 0;
};
Gf961 add(Gf961 x, Gf961 y) { return {(x.a + y.a) % 31, (x.b + y.b) % 31}; }
Gf961 mul(Gf961 x, Gf961 y) { return {(x.a * y.a + 3 * x.b * y.b) % 31, (x.a * y.b + x.b * y.a) % 31}; }
bool is_zero(Gf961 x) { return x.a == 0 && x.b == 0; }

// Common zero of the partials 3x^2 + l yz, 3y^2 + l xz, 3z^2 + l xy in P^2(GF(31^2)).
bool hesse_cubic_is_singular(int lambda) {
  std::vector<Gf961> all;
  for (int a = 0; a < 31; ++a) {
    for (int b = 0; b < 31; ++b) all.push_back({a, b});
  }
  const Gf961 three{3, 0}, l{lambda, 0};
  auto vanishes = [&](Gf961 x, Gf961 y, Gf961 z) {
    return is_zero(add(mul(three, mul(x, x)), mul(l, mul(y, z)))) &&
           is_zero(add(mul(three, mul(y, y)), mul(l, mul(x, z)))) &&
           is_zero(add(mul(three, mul(z, z)), mul(l, mul(x, y))));
  };
  const Gf961 one{1, 0}, zero{0, 0};
  if (vanishes(zero, zero, one)) return true;
  for (const auto& z : all) {
    if (vanishes(zero, one, z)) return true;
  }
  for (const auto& y : all) {
    for (const auto& z : all) {
      if (vanishes(one, y, z)) return true;
    }
  }
  return false;
}

// (number of degree-k monomials) - rank of the degree-k multiples of the generators.
long long direct_quotient_dimension(const std::vector<MultiPoly>& gens, int k, std::span<const int> vars) {
  const Field& field = gens.front().field();
  const int d = gens.front().homogeneous_degree();
  const auto cols = monomials_of_degree(k, vars);
  if (k < d) return static_cast<long long>(cols.size());
  std::vector<Vector> rows;
  for (const auto& m : monomials_of_degree(k - d, vars)) {
    for (const auto& g : gens) rows.push_back(g.times_monomial(m).coefficients(cols));
  }
  return static_cast<long long>(cols.size() - rank(Matrix::from_rows(field, rows, cols.size())));
}

std::vector<MultiPoly> partials(const MultiPoly& f) {
  std::vector<MultiPoly> out;
  for (int v = 0; v < kNumVars; ++v) out.push_back(f.derivative(v));
  return out;
}

Matrix random_invertible(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> dist(0, 30);
  while (true) {
    std::vector<std::vector<long long>> rows(4, std::vector<long long>(4));
    for (auto& r : rows) for (auto& x : r) x = dist(rng);
    Matrix m = Matrix::from_ints(f, rows);
    if (rank(m) == 4) return m;
  }
}

}  // namespace

TEST_CASE("local jets") {
  const Surface cone(poly("x^3+y^3+z^3"));
  const ProjPoint vertex = point(Field(), 0, 0, 0, 1);
  const LocalJet jet = local_jet(cone, vertex, 3);
  CHECK(jet.chart == 3);
  CHECK(jet.poly == poly("x^3+y^3+z^3"));
  CHECK(local_jet(Surface(poly("x*y-z*w")), point(Field(), 1, 0, 0, 0), 1).poly == poly("y"));
  CHECK(local_jet(cone, point(Field(), 1, 2, 0, 0), 0).poly == poly("9"));
  CHECK(local_variables(0) == std::array<int, 3>{1, 2, 3});
  CHECK(local_variables(2) == std::array<int, 3>{0, 1, 3});
}

TEST_CASE("jet re-expansion leaves only terms above the order") {
  std::mt19937_64 rng(5);
  const Field f = Field::prime(31);
  SeededStream stream(17);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiPoly g = stream.form(f, 6);
    const ProjPoint p = stream.point(f);
    REQUIRE(p.chart() == 0);
    std::vector<MultiPoly> images{MultiPoly::constant(f.one())};
    for (int v = 1; v < kNumVars; ++v) images.push_back(MultiPoly::var(f, v) + MultiPoly::constant(p[v]));
    const MultiPoly translate = g.substitute(images);
    for (int k = 0; k <= 6; ++k) {
      const MultiPoly rest = translate - local_jet(g, p, k).poly;
      REQUIRE((rest.is_zero() || rest.min_degree() > k));
    }
  }
}

TEST_CASE("multiplicity") {
  const Surface cone(poly("x^3+y^3+z^3"));
  CHECK(multiplicity(cone, point(Field(), 0, 0, 0, 1)) == 3);
  CHECK(multiplicity(cone, point(Field(), 1, 0, 0, 0)) == 0);
  CHECK(multiplicity(Surface(poly("x*y-z*w")), point(Field(), 1, 0, 0, 0)) == 1);
  CHECK(multiplicity(cone, point(Field(), 1, -1, 0, 5)) == 1);
}

TEST_CASE("multiplicity is positive exactly on the surface") {
  const Field f = Field::prime(7);
  const Surface s(poly("x^3+y^3+z^3+x*y*w+2*z*w^2", f));
  for (std::uint64_t code = 1; code < 7 * 7 * 7 * 7; ++code) {
    std::array<long long, 4> c{};
    std::uint64_t r = code;
    for (auto& x : c) {
      x = static_cast<long long>(r % 7);
      r /= 7;
    }
    const ProjPoint p = ProjPoint::from_ints(f, c);
    REQUIRE((multiplicity(s, p) >= 1) == s.f.evaluate(p.coords()).is_zero());
  }
}

TEST_CASE("ordinary triple point decision") {
  const ProjPoint vertex = point(Field(), 0, 0, 0, 1);
  const auto fermat = check_triple_point(Surface(poly("x^3+y^3+z^3")), vertex);
  CHECK(fermat.ordinary);
  CHECK(fermat.certificate.smooth_rank == 15);
  CHECK(fermat.certificate.tangent_cone == poly("x^3+y^3+z^3"));

  const auto hesse = check_triple_point(Surface(poly("x^3+y^3+z^3-3*x*y*z")), vertex);
  CHECK_FALSE(hesse.ordinary);
  CHECK(hesse.certificate.multiplicity == 3);
  CHECK(hesse.certificate.smooth_rank < 15);

  const auto node = check_triple_point(Surface(poly("x^2*w+y^3+z^3")), vertex);
  CHECK_FALSE(node.ordinary);
  CHECK(node.certificate.multiplicity == 2);
  try {
    certify_ordinary_triple_point(Surface(poly("x^2*w+y^3+z^3")), vertex);
    FAIL("expected a rejection");
  } catch (const Error& e) {
    CHECK(e.kind() == "certification");
    CHECK(std::string(e.what()).find("multiplicity 2") != std::string::npos);
  }
}

TEST_CASE("rank test agrees with a brute-force singularity search on the Hesse pencil") {
  const Field f = Field::prime(31);
  int singular = 0;
  for (int lambda = 0; lambda < 31; ++lambda) {
    CAPTURE(lambda);
    const MultiPoly c = poly("x^3+y^3+z^3", f) + poly("x*y*z", f).scale(lambda);
    const bool brute = hesse_cubic_is_singular(lambda);
    CHECK((cubic_smoothness_rank(c, {0, 1, 2}) < 15) == brute);
    CHECK(((lambda * lambda * lambda + 27) % 31 == 0) == brute);
    singular += brute;
  }
  CHECK(singular == 3);  // 31 = 1 mod 3: three cube roots of -27
}

TEST_CASE("enumeration of singular points") {
  const Field g7 = Field::prime(7);
  CHECK(enumerate_singular_points(Surface(poly("x^3+y^3+z^3", g7))) ==
        std::vector<ProjPoint>{point(g7, 0, 0, 0, 1)});
  CHECK(enumerate_singular_points(Surface(poly("x*y-z*w", Field::prime(5)))).empty());
  CHECK(enumerate_singular_points(Surface(poly("x*y-z*w", Field::prime(5))), 2).empty());
  CHECK_THROWS_AS(enumerate_singular_points(Surface(poly("x*y-z*w"))), Error);
}

TEST_CASE("enumeration does not depend on the worker count") {
  const Surface s = sextic_ten_gf31(false);
  setenv("TRIPLEPOINT_THREADS", "1", 1);
  const auto serial = enumerate_singular_points(s);
  setenv("TRIPLEPOINT_THREADS", "5", 1);
  const auto sharded = enumerate_singular_points(s);
  unsetenv("TRIPLEPOINT_THREADS");
  CHECK(serial == sharded);
  CHECK(std::is_sorted(serial.begin(), serial.end()));
}

TEST_CASE("the ten-point sextic: enumeration, certification, Hilbert function") {
  const Surface s = sextic_ten_gf31();
  const Field& f = s.field();
  const auto found = enumerate_singular_points(s);
  REQUIRE(found.size() == 10);
  for (const auto& p : {point(f, 1, 1, 1, 1), point(f, 0, 0, 1, 1), point(f, 0, 0, 20, 1)}) {
    CHECK(std::find(found.begin(), found.end(), p) != found.end());
  }
  // 2z^2 - 11z + 9 on x = y = 0 has the roots 1 and 20 mod 31.
  CHECK(f.from_int(2 * 20 * 20 - 11 * 20 + 9).is_zero());
  for (const auto& p : s.declared_points) {
    CHECK(check_triple_point(s, p).ordinary);
    CHECK(std::find(found.begin(), found.end(), p) != found.end());
  }
  const auto degree = singular_scheme_degree(s);
  CHECK_FALSE(degree.positive_dimensional);
  CHECK(degree.degree == 80);
  CHECK(degree.modulus == 0);
  const auto report = certify_surface(s);
  CHECK(report.verdict == Verdict::certified_exact);
  CHECK(report.expected_degree == 80);
  CHECK(report.points.size() == 10);
}

TEST_CASE("Hilbert recursion matches the direct Macaulay rank") {
  const std::array<int, 4> all{0, 1, 2, 3};
  SeededStream stream(3);
  const Field f = Field::prime(31);
  std::vector<Surface> surfaces{sextic_ten_gf31(false), Surface(stream.form(f, 4)),
                                Surface(poly("x^3+y^3+z^3", f)), sextic_k3_444_example()};
  for (const auto& s : surfaces) {
    const auto h = jacobian_hilbert(s, 10);
    for (int k = 0; k <= 10; ++k) {
      CAPTURE(k);
      CHECK(h[static_cast<std::size_t>(k)] == direct_quotient_dimension(partials(s.f), k, all));
    }
  }
}

TEST_CASE("Fermat sextic over GF(7) follows the complete-intersection series") {
  const Field f = Field::prime(7);
  const Surface s(poly("x^6+y^6+z^6+w^6", f));
  // Coefficients of (1 + t + ... + t^4)^4.
  std::vector<long long> series{1};
  for (int i = 0; i < 4; ++i) {
    std::vector<long long> next(series.size() + 4, 0);
    for (std::size_t j = 0; j < series.size(); ++j) {
      for (int e = 0; e <= 4; ++e) next[j + static_cast<std::size_t>(e)] += series[j];
    }
    series = next;
  }
  const auto h = jacobian_hilbert(s, 24);
  for (int k = 0; k <= 24; ++k) CHECK(h[static_cast<std::size_t>(k)] == (k <= 16 ? series[static_cast<std::size_t>(k)] : 0));
  const auto degree = singular_scheme_degree(s);
  CHECK(degree.degree == 0);
  CHECK(certify_surface(s).verdict == Verdict::certified_exact);
}

TEST_CASE("a cone over a smooth cubic has an isolated point of degree 8") {
  const std::array<int, 3> xyz{0, 1, 2};
  const Field f = Field::prime(31);
  for (int lambda : {0, 1, 5}) {
    const MultiPoly c = poly("x^3+y^3+z^3", f) + poly("x*y*z", f).scale(lambda);
    // Independent local count: the graded ternary Milnor algebra.
    std::vector<MultiPoly> cp{c.derivative(0), c.derivative(1), c.derivative(2)};
    long long milnor = 0;
    for (int k = 0; k <= 6; ++k) milnor += direct_quotient_dimension(cp, k, xyz);
    CHECK(milnor == 8);
    const auto degree = singular_scheme_degree(Surface(c));
    CHECK_FALSE(degree.positive_dimensional);
    CHECK(degree.degree == milnor);
  }
  const auto line = singular_scheme_degree(Surface(poly("x^3+y^3", f)));
  CHECK(line.positive_dimensional);
  CHECK(certify_surface(Surface(poly("x^3+y^3", f))).verdict == Verdict::positive_dimensional);
}

TEST_CASE("quintic with one triple point") {
  const Field f = Field::prime(31);
  const Surface s = quintic_with_triple_points(generic_points(f, 1, 4));
  CHECK(singular_scheme_degree(s).degree == 8);
  CHECK(certify_surface(s).verdict == Verdict::certified_exact);
}

TEST_CASE("rational surfaces use the modular Hilbert function") {
  const Surface s(poly("x^3+y^3+z^3"));
  const auto degree = singular_scheme_degree(s);
  CHECK(degree.modulus == kHilbertModulus);
  CHECK(degree.degree == 8);
  CertifyOptions opts;
  opts.enumerate = false;
  Surface declared = s;
  declared.declared_points.push_back(point(Field(), 0, 0, 0, 1));
  const auto report = certify_surface(declared, opts);
  CHECK(report.verdict == Verdict::certified_exact);
  CHECK(report.hilbert_modulus == kHilbertModulus);
}

TEST_CASE("equisingular tangent dimensions of the anchored examples") {
  const Surface ten = sextic_ten_gf31();
  CHECK(equisingular_tangent_dimension(ten, ten.declared_points) == 18);
  const Surface ell = sextic_elliptic_222_example();
  CHECK(equisingular_tangent_dimension(ell, ell.declared_points) == 23);
  const Surface k3 = sextic_k3_246_example();
  CHECK(equisingular_tangent_dimension(k3, k3.declared_points) == 22);
  CHECK_THROWS_AS(equisingular_tangent_dimension(ten, {point(ten.field(), 1, 0, 0, 0)}), Error);
}

TEST_CASE("tangent dimension is invariant under coordinate changes") {
  std::mt19937_64 rng(2024);
  const Surface ten = sextic_ten_gf31();
  const Field& f = ten.field();
  for (int trial = 0; trial < 3; ++trial) {
    const Matrix m = random_invertible(f, rng);
    Surface moved(linear_substitution(ten.f, m));
    std::vector<ProjPoint> pts;
    for (const auto& p : ten.declared_points) pts.push_back(p.transform(inverse(m)));
    for (const auto& p : pts) REQUIRE(check_triple_point(moved, p).ordinary);
    CHECK(equisingular_tangent_dimension(moved, pts) == 18);
  }
}
