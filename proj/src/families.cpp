#include "triplepoint/families.hpp"

#include <algorithm>
#include <numeric>

#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/linalg.hpp"
#include "triplepoint/singular.hpp"

namespace triplepoint {

namespace {

struct Vars {
  explicit Vars(const Field& f)
      : field(f),
        x(MultiPoly::var(f, 0)),
        y(MultiPoly::var(f, 1)),
        z(MultiPoly::var(f, 2)),
        w(MultiPoly::var(f, 3)) {}

  MultiPoly c(const FieldElement& e) const { return MultiPoly::constant(e); }
  MultiPoly c(long long v) const { return MultiPoly::constant(field, v); }

  Field field;
  MultiPoly x, y, z, w;
};

std::vector<ProjPoint> coordinate_vertices(const Field& field, int count = kNumVars) {
  std::vector<ProjPoint> out;
  for (int i = 0; i < count; ++i) {
    std::array<long long, kNumVars> e{};
    e[i] = 1;
    out.push_back(ProjPoint::from_ints(field, e));
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error("degenerate-parameters", message);
}

FieldElement sqrt_mod_prime(const FieldElement& v) {
  // Tonelli-Shanks on the residue; nullopt is signalled by a zero field.
  const std::uint64_t p = v.field().characteristic();
  const std::uint64_t a = v.residue().a;
  if (a == 0) return v;
  if (p == 2) return v;
  if (pow_mod(a, (p - 1) / 2, p) != 1) throw Error("no-root", "nonresidue");
  std::uint64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  const std::uint64_t z = smallest_nonresidue(static_cast<std::uint32_t>(p));
  std::uint64_t m = s, c = pow_mod(z, q, p), t = pow_mod(a, q, p), r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    std::uint64_t b = pow_mod(c, std::uint64_t{1} << (m - i - 1), p);
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return v.field().element(r);
}

std::optional<FieldElement> field_sqrt(const FieldElement& v) {
  const Field& field = v.field();
  if (v.is_zero()) return v;
  switch (field.kind()) {
    case FieldKind::rationals: {
      const mpq_class& q = v.rational();
      if (q < 0) return std::nullopt;
      if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) return std::nullopt;
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
      return field.from_rational(mpq_class(n, d));
    }
    case FieldKind::prime:
      try {
        return sqrt_mod_prime(v);
      } catch (const Error&) {
        return std::nullopt;
      }
    case FieldKind::quadratic: {
      if (field.order() > 4'000'000) throw Error("field", "square roots in GF(p^2) limited to small p");
      for (std::uint64_t i = 0; i < field.order(); ++i) {
        FieldElement r = field.from_index(i);
        if (r * r == v) return r;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string text(const FieldElement& e) { return e.to_string(); }

}  // namespace

std::vector<FieldElement> quadratic_roots(const FieldElement& a, const FieldElement& b, const FieldElement& c) {
  if (a.is_zero()) throw Error("domain", "leading coefficient is zero");
  const Field& field = a.field();
  std::vector<FieldElement> out;
  if (field.characteristic() == 2) {
    for (std::uint64_t i = 0; i < field.order(); ++i) {
      FieldElement t = field.from_index(i);
      if ((a * t * t + b * t + c).is_zero()) out.push_back(t);
    }
    return out;
  }
  FieldElement disc = b * b - a * c.times_int(4);
  auto r = field_sqrt(disc);
  if (!r) return out;
  FieldElement two_a = a.times_int(2);
  out.push_back((-b + *r) / two_a);
  if (!r->is_zero()) out.push_back((-b - *r) / two_a);
  std::sort(out.begin(), out.end(), [](const FieldElement& u, const FieldElement& v) {
    return u.field().is_finite() ? u.index() < v.index() : u.rational() < v.rational();
  });
  return out;
}

void certify_declared_points(const Surface& surface) {
  for (const auto& p : surface.declared_points) certify_ordinary_triple_point(surface, p);
}

// ------------------------------------------------------------- quintics

Surface quintic_with_triple_points(const std::vector<ProjPoint>& points, std::uint64_t seed, bool check) {
  if (points.empty() || points.size() > 5) throw Error("domain", "a quintic takes between 1 and 5 triple points");
  if (!no_three_collinear(points)) throw Error("degenerate-parameters", "three of the points are collinear");
  const Field field = points.front().field();
  std::vector<AssignedPoint> assigned;
  for (const auto& p : points) assigned.push_back({p, 3});
  const auto basis = forms_with_multiplicity(field, 5, assigned);
  if (basis.empty()) throw Error("empty-system", "no quintic has triple points at these points");
  SeededStream stream(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    MultiPoly f(field);
    for (const auto& b : basis) f += b.scale(stream.element(field));
    if (f.is_zero()) continue;
    Surface s(f);
    s.family = "quintic-nu";
    s.params = {{"nu", std::to_string(points.size())}, {"seed", std::to_string(seed)}};
    s.declared_points = points;
    if (!check) return s;
    bool ok = std::all_of(points.begin(), points.end(),
                          [&](const ProjPoint& p) { return check_triple_point(s, p).ordinary; });
    if (ok) return s;
  }
  throw Error("certification", "no combination of the linear system certified");
}

// ------------------------------------------------------------------- K3

Surface sextic_k3_444(const Field& field, std::array<FieldElement, 3> a, std::array<FieldElement, 3> b,
                      const FieldElement& alpha, const FieldElement& beta, bool check) {
  require(!alpha.is_zero(), "alpha = 0 leaves the cube of a quadric");
  require(!beta.is_zero(), "beta = 0 gives the reducible q1 q2 q3");
  const Vars v(field);
  const auto& [x, y, z, w] = std::tie(v.x, v.y, v.z, v.w);
  const FieldElement one = field.one();
  MultiPoly q1 = z * z + (y * w).scale(a[0]) + (z * w).scale(b[0]) - (y * z).scale(a[0] + b[0] + one);
  MultiPoly q2 = x * x + (z * w).scale(a[1]) + (x * w).scale(b[1]) - (x * z).scale(a[1] + b[1] + one);
  MultiPoly q3 = y * y + (x * w).scale(a[2]) + (y * w).scale(b[2]) - (y * x).scale(a[2] + b[2] + one);
  // (a1 - z)(a2 - x)(a3 - y) + (b1 + z)(b2 + x)(b3 + y) homogenized; xyz cancels, leaving w * q.
  MultiPoly cubic = (v.c(a[0]).homogenize(3, 1) - z) * (v.c(a[1]).homogenize(3, 1) - x) *
                        (v.c(a[2]).homogenize(3, 1) - y) +
                    (v.c(b[0]).homogenize(3, 1) + z) * (v.c(b[1]).homogenize(3, 1) + x) *
                        (v.c(b[2]).homogenize(3, 1) + y);
  const MultiPoly q = divide_exact(cubic, w);
  const std::array<long long, kNumVars> apex{0, 0, 0, 1}, diag{1, 1, 1, 1};
  require(!q.evaluate(ProjPoint::from_ints(field, apex).coords()).is_zero() &&
              !q.evaluate(ProjPoint::from_ints(field, diag).coords()).is_zero(),
          "q passes through (0:0:0:1) or (1:1:1:1)");

  Surface s((q1 * q2 * q3).scale(alpha) + q.pow(3).scale(beta));
  s.family = "k3-444";
  s.params = {{"a1", text(a[0])}, {"a2", text(a[1])}, {"a3", text(a[2])}, {"b1", text(b[0])},
              {"b2", text(b[1])}, {"b3", text(b[2])}, {"alpha", text(alpha)}, {"beta", text(beta)}};
  s.exc_degrees = std::array<int, 3>{4, 4, 4};
  s.declared_points = coordinate_vertices(field, 3);
  if (field.is_finite() && field.order() <= 200) {
    // Remaining base points of the net: common zeros of the cones off the vertices.
    std::vector<ProjPoint> extra;
    const std::uint64_t n = field.order();
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) {
        for (std::uint64_t k = 0; k < n; ++k) {
          std::array<FieldElement, kNumVars> c{field.from_index(i), field.from_index(j), field.from_index(k), one};
          if (!q1.evaluate(c).is_zero() || !q2.evaluate(c).is_zero() || !q3.evaluate(c).is_zero()) continue;
          if (!q.evaluate(c).is_zero()) continue;
          extra.emplace_back(c);
        }
      }
    }
    std::sort(extra.begin(), extra.end());
    s.declared_points.insert(s.declared_points.end(), extra.begin(), extra.end());
  }
  if (check) certify_declared_points(s);
  return s;
}

Surface sextic_k3_444_example() {
  const Field field = Field::prime(29);
  const FieldElement m1 = field.from_int(-1), zero = field.zero(), one = field.one();
  Surface s = sextic_k3_444(field, {m1, m1, m1}, {zero, zero, zero}, one, one, false);
  const FieldElement eta = field.from_int(16);
  s.declared_points = coordinate_vertices(field, 3);
  for (unsigned i = 1; i <= 6; ++i) {
    s.declared_points.push_back(ProjPoint({eta.pow(4 * i), eta.pow(2 * i), eta.pow(i), one}));
  }
  certify_declared_points(s);
  return s;
}

Surface sextic_k3_228(const Field& field, const FieldElement& lambda, const FieldElement& alpha,
                      const FieldElement& beta, bool check) {
  const FieldElement one = field.one(), two = field.from_int(2);
  require(!lambda.is_zero() && !(lambda + one).is_zero() && !(lambda + two).is_zero() &&
              !(lambda.times_int(2) + one).is_zero(),
          "lambda must avoid 0, -1, -2 and -1/2");
  require(!alpha.is_zero() && !beta.is_zero(), "alpha and beta must be nonzero");
  const Vars v(field);
  const MultiPoly e1 = v.x + v.y + v.z;
  const MultiPoly e2 = v.x * v.y + v.x * v.z + v.y * v.z;
  const MultiPoly e3 = v.x * v.y * v.z;
  const FieldElement l1 = lambda + one, l2 = lambda + two, m = lambda.times_int(2) + one;
  MultiPoly h1 = v.w;
  MultiPoly h2 = e1 - v.w.scale(l2);
  MultiPoly g4 = (e2 * e2).scale(lambda * l1 * l2) - (e3 * e1).scale(m * m * l1) - (e2 * e1 * v.w).scale(lambda * m) +
                 (e3 * v.w).scale(m * m * l2);
  MultiPoly q = e2.scale(l2) - (e1 * v.w).scale(m);
  Surface s(q.pow(3).scale(alpha) + (h1 * h2 * g4).scale(beta));
  s.family = "k3-228";
  s.params = {{"lambda", text(lambda)}, {"alpha", text(alpha)}, {"beta", text(beta)}};
  s.exc_degrees = std::array<int, 3>{2, 2, 8};
  s.declared_points = coordinate_vertices(field);
  s.declared_points.push_back(ProjPoint({lambda, one, one, one}));
  s.declared_points.push_back(ProjPoint({one, lambda, one, one}));
  s.declared_points.push_back(ProjPoint({one, one, lambda, one}));
  // Tangency points on w = 0 = x + y + z: (1 : omega : omega^2 : 0).
  for (const auto& omega : quadratic_roots(one, one, one)) {
    s.declared_points.push_back(ProjPoint({one, omega, omega * omega, field.zero()}));
  }
  if (check) certify_declared_points(s);
  return s;
}

// ------------------------------------------------------------- elliptic

std::array<MultiPoly, 3> elliptic_generators(const Field& field, const FieldElement& lambda, const FieldElement& mu,
                                             const FieldElement& nu, const std::array<FieldElement, 6>& b) {
  const Vars v(field);
  const auto& [x, y, z, w] = std::tie(v.x, v.y, v.z, v.w);
  const MultiPoly L1 = x.scale(nu) - y - z.scale(mu * nu);
  const MultiPoly L2 = y.scale(lambda) - x.scale(lambda * nu) - z;
  const MultiPoly L3 = z.scale(mu) - x - y.scale(mu * lambda);
  const MultiPoly g = (w * w) * (x.scale(lambda * nu * b[4] * b[5]) + y.scale(lambda * mu * b[3] * b[5]) +
                                 z.scale(mu * nu * b[3] * b[4])) +
                      w * ((x * L1).scale(lambda * b[0]) + (y * L2).scale(mu * b[1]) + (z * L3).scale(nu * b[2])) +
                      L1 * L2 * L3;
  const MultiPoly q = (w * w).scale(b[3] * b[4] * b[5]) +
                      w * (x.scale(b[0] * b[3]) + y.scale(b[1] * b[4]) + z.scale(b[2] * b[5])) +
                      (x * L1).scale(b[3]) + (y * L2).scale(b[4]) + (z * L3).scale(b[5]);
  const MultiPoly xyz = x * y * z;
  return {q.pow(3), xyz * q * w, xyz * g};
}

namespace {

std::vector<ProjPoint> elliptic_points(const Field& field, const FieldElement& lambda, const FieldElement& mu,
                                       const FieldElement& nu, const std::array<FieldElement, 6>& b) {
  const FieldElement zero = field.zero(), one = field.one();
  std::vector<ProjPoint> pts;
  auto add_sorted = [&](std::vector<ProjPoint> v) {
    std::sort(v.begin(), v.end());
    pts.insert(pts.end(), v.begin(), v.end());
  };
  std::vector<ProjPoint> line;
  // x = y = 0: mu z^2 + b3 z w + b4 b5 w^2.
  for (const auto& t : quadratic_roots(mu, b[2], b[3] * b[4])) line.push_back(ProjPoint({zero, zero, t, one}));
  add_sorted(std::move(line));
  line.clear();
  // x = z = 0: lambda y^2 + b2 y w + b4 b6 w^2.
  for (const auto& t : quadratic_roots(lambda, b[1], b[3] * b[5])) line.push_back(ProjPoint({zero, t, zero, one}));
  add_sorted(std::move(line));
  line.clear();
  // y = z = 0: nu x^2 + b1 x w + b5 b6 w^2.
  for (const auto& t : quadratic_roots(nu, b[0], b[4] * b[5])) line.push_back(ProjPoint({t, zero, zero, one}));
  add_sorted(std::move(line));
  pts.push_back(ProjPoint({zero, one, lambda, zero}));
  pts.push_back(ProjPoint({mu, zero, one, zero}));
  pts.push_back(ProjPoint({one, nu, zero, zero}));
  return pts;
}

}  // namespace

Surface sextic_elliptic_222(const Field& field, const FieldElement& lambda, const FieldElement& mu,
                            const FieldElement& nu, const std::array<FieldElement, 6>& b, const FieldElement& alpha,
                            const FieldElement& beta, const FieldElement& gamma, bool check) {
  require(!(lambda * mu * nu).is_zero(), "lambda mu nu must be nonzero");
  require(!(alpha.is_zero() && gamma.is_zero()), "alpha and gamma both zero");
  require(!(b[3] * b[4] * b[5]).is_zero(), "b4 b5 b6 must be nonzero");
  // det(P7, P8, P9) in the plane w = 0.
  require(!(field.one() + lambda * mu * nu).is_zero(), "P7, P8, P9 are collinear (lambda mu nu = -1)");
  const auto gens = elliptic_generators(field, lambda, mu, nu, b);
  Surface s(gens[0].scale(alpha) + gens[1].scale(beta) + gens[2].scale(gamma));
  s.family = "ell-222";
  s.params = {{"lambda", text(lambda)}, {"mu", text(mu)}, {"nu", text(nu)}};
  for (int i = 0; i < 6; ++i) s.params.emplace_back("b" + std::to_string(i + 1), text(b[i]));
  s.params.emplace_back("alpha", text(alpha));
  s.params.emplace_back("beta", text(beta));
  s.params.emplace_back("gamma", text(gamma));
  s.exc_degrees = std::array<int, 3>{2, 2, 2};
  s.declared_points = elliptic_points(field, lambda, mu, nu, b);
  if (check) certify_declared_points(s);
  return s;
}

Surface sextic_elliptic_222_example() {
  const Field field = Field::prime(13);
  const FieldElement one = field.one();
  return sextic_elliptic_222(field, one, one, one, {one, one, one, one, one, one}, one, field.zero(), one);
}

// ----------------------------------------------------------- reciprocal

Surface reciprocal_family(const Surface& base, const std::array<int, 4>& fundamental, std::array<int, 3> exc_degrees,
                          const std::string& family, bool check) {
  const Field field = base.field();
  const auto& pts = base.declared_points;
  std::vector<ProjPoint> chosen;
  for (int i : fundamental) {
    if (i < 0 || static_cast<std::size_t>(i) >= pts.size()) throw Error("domain", "fundamental point index out of range");
    chosen.push_back(pts[static_cast<std::size_t>(i)]);
  }
  if (!no_three_collinear(chosen) || coordinate_rank(chosen) < 4) {
    throw Error("degenerate-parameters", "fundamental points must span P^3");
  }
  for (const auto& p : chosen) {
    if (!check_triple_point(base, p).ordinary) throw Error("certification", "fundamental point " + p.to_string() + " is not a triple point");
  }
  // Columns of M are the fundamental points, so M e_i = P_i.
  Matrix m(field, kNumVars, kNumVars);
  for (int j = 0; j < kNumVars; ++j) {
    for (int i = 0; i < kNumVars; ++i) m.at(i, j) = chosen[j][i];
  }
  const Matrix m_inv = inverse(m);
  const ReciprocalResult r = reciprocal_transform(linear_substitution(base.f, m));
  Surface s(r.f.monic());
  s.family = family;
  s.params = base.params;
  std::string fund;
  for (int i : fundamental) fund += (fund.empty() ? "" : ":") + std::to_string(i + 1);
  s.params.emplace_back("fundamental", fund);
  s.exc_degrees = exc_degrees;
  s.declared_points = coordinate_vertices(field);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (std::find(fundamental.begin(), fundamental.end(), static_cast<int>(i)) != fundamental.end()) continue;
    s.declared_points.push_back(reciprocal_point(pts[i].transform(m_inv)));
  }
  if (check) certify_declared_points(s);
  return s;
}

Surface sextic_k3_246(const Surface& base_444, const std::array<int, 4>& fundamental, bool check) {
  return reciprocal_family(base_444, fundamental, {2, 4, 6}, "k3-246", check);
}

Surface sextic_elliptic_224(const Surface& base_222, const std::array<int, 4>& fundamental, bool check) {
  return reciprocal_family(base_222, fundamental, {2, 2, 4}, "ell-224", check);
}

Surface sextic_k3_246_example() { return sextic_k3_246(sextic_k3_444_example(), {0, 1, 3, 8}); }

// The symmetric member puts P3 on the face through P1, P8, P9 (and so on), so
// the (2,2,4) example starts from an asymmetric member.
Surface sextic_elliptic_224_example() {
  const Field field = Field::prime(13);
  const FieldElement one = field.one();
  const Surface base = sextic_elliptic_222(field, one, one, field.from_int(2),
                                           {field.from_int(3), one, one, one, one, one}, one, field.zero(), one);
  return sextic_elliptic_224(base, {5, 6, 7, 8});
}

// ------------------------------------------------------------ ten points

std::pair<FieldElement, FieldElement> ten_point_conditions(const FieldElement& lambda, const FieldElement& a,
                                                           const FieldElement& b) {
  const Field& f = lambda.field();
  const FieldElement one = f.one();
  FieldElement first = a * a + (a * b).times_int(3) + (b * b).times_int(3) - (a * lambda).times_int(3);
  const FieldElement l2 = lambda * lambda;
  const FieldElement u = b + a / f.from_int(3) - l2 + lambda - one;
  const FieldElement v = b + a + l2 - lambda + one;
  const FieldElement lm = lambda - one, lp = lambda + one;
  FieldElement second = (lm * lm * u * u).times_int(3) + lp * lp * v * v;
  return {first, second};
}

TenPointConstruction sextic_ten_gf31_construction(bool check) {
  const Field field = Field::prime(31);
  const FieldElement two = field.from_int(2), b = field.from_int(-11), r = field.from_int(3);
  const std::array<FieldElement, 6> bs{b, b, b, r, r, r};
  const auto gens = elliptic_generators(field, two, two, two, bs);
  const ProjPoint tenth = ProjPoint::from_ints(field, {1, 1, 1, 1});
  // Order-2 jets of the generators at (1:1:1:1): ten conditions on (alpha, beta, gamma).
  const Matrix jm = jet_matrix(6, tenth, 2);
  const auto cols = monomials_of_degree(6);
  std::vector<Vector> jets;
  for (const auto& g : gens) jets.push_back(jm.apply(g.coefficients(cols)));
  Matrix conditions(field, jm.rows(), gens.size());
  for (std::size_t r2 = 0; r2 < jm.rows(); ++r2) {
    for (std::size_t c = 0; c < gens.size(); ++c) conditions.at(r2, c) = jets[c][r2];
  }
  const auto kernel = kernel_basis(conditions);
  TenPointConstruction out{Surface(gens[0]), kernel.size()};
  if (kernel.size() != 1) throw Error("kernel-dimension", "expected a unique sextic, kernel has dimension " + std::to_string(kernel.size()));
  MultiPoly f(field);
  for (std::size_t c = 0; c < gens.size(); ++c) f += gens[c].scale(kernel[0][c]);
  out.surface = Surface(f.monic());
  out.surface.family = "sextic-ten-gf31";
  out.surface.params = {{"lambda", "2"}, {"mu", "2"}, {"nu", "2"}, {"a", "9"}, {"b", "-11"}};
  out.surface.declared_points = elliptic_points(field, two, two, two, bs);
  out.surface.declared_points.push_back(tenth);
  if (check) certify_declared_points(out.surface);
  return out;
}

Surface sextic_ten_gf31(bool check) { return sextic_ten_gf31_construction(check).surface; }

// ---------------------------------------------------------------- septic

std::array<MultiPoly, 4> elementary_symmetric(const Field& field) {
  const Vars v(field);
  const std::array<MultiPoly, 4> xs{v.x, v.y, v.z, v.w};
  std::array<MultiPoly, 4> s{MultiPoly(field), MultiPoly(field), MultiPoly(field), MultiPoly(field)};
  for (int i = 0; i < 4; ++i) {
    s[0] += xs[i];
    for (int j = i + 1; j < 4; ++j) {
      s[1] += xs[i] * xs[j];
      for (int k = j + 1; k < 4; ++k) s[2] += xs[i] * xs[j] * xs[k];
    }
  }
  s[3] = v.x * v.y * v.z * v.w;
  return s;
}

namespace {

// The seven S4-invariant septics that can carry triple points at the vertices.
std::array<MultiPoly, 7> septic_basis(const Field& field) {
  const auto s = elementary_symmetric(field);
  return {s[0].pow(3) * s[3],      s[0].pow(2) * s[1] * s[2], s[0] * s[1].pow(3), s[0] * s[1] * s[3],
          s[0] * s[2].pow(2),      s[1].pow(2) * s[2],        s[2] * s[3]};
}

}  // namespace

Surface septic_s4(const Field& field, const FieldElement& mu, const FieldElement& nu, bool check) {
  require(!mu.is_zero() && !nu.is_zero(), "mu and nu must be nonzero");
  require(!(mu - nu).is_zero() && !(mu + nu).is_zero(), "mu must differ from nu and -nu");
  const auto basis = septic_basis(field);
  const FieldElement d = mu - nu, sum = mu + nu;
  const FieldElement d3 = d * d * d;
  // Coefficients on sigma1^3 sigma4, sigma1^2 sigma2 sigma3, sigma1 sigma2^3,
  // sigma1 sigma2 sigma4, sigma1 sigma3^2, sigma2^2 sigma3, sigma3 sigma4.
  const std::array<FieldElement, 7> coeffs{
      -(d3 * nu),
      d3 * nu,
      -(sum * nu * nu * nu),
      sum * d * d * (mu + nu.times_int(2)),
      -(d3 * nu),
      -(sum * (mu * mu * mu - nu * nu * nu)),
      sum * d3,
  };
  MultiPoly f(field);
  for (int i = 0; i < 7; ++i) f += basis[i].scale(coeffs[i]);
  Surface s(f);
  s.family = "septic-s4";
  s.params = {{"mu", text(mu)}, {"nu", text(nu)}};
  s.declared_points = coordinate_vertices(field);
  std::array<FieldElement, 4> seed{-nu, mu, nu, nu};
  std::array<int, 4> perm{0, 1, 2, 3};
  std::vector<ProjPoint> orbit;
  do {
    orbit.push_back(ProjPoint({seed[perm[0]], seed[perm[1]], seed[perm[2]], seed[perm[3]]}));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  if (orbit.size() != 12) throw Error("degenerate-parameters", "the orbit of (-nu:mu:nu:nu) is not of length 12");
  s.declared_points.insert(s.declared_points.end(), orbit.begin(), orbit.end());
  if (check) certify_declared_points(s);
  return s;
}

SepticFactorReport septic_determinant_factorization() {
  const Field qq = Field::rationals();
  const auto basis = septic_basis(qq);
  const Vars v(qq);
  // lambda, mu, nu live in x, y, z; R1 = (lambda : mu : nu : nu).
  const std::vector<MultiPoly> at_r1{v.x, v.y, v.z, v.z};
  const std::array<std::pair<int, int>, 7> rows{{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}, {2, 3}}};
  PolyMatrix m;
  for (const auto& [i, j] : rows) {
    std::vector<MultiPoly> row;
    for (const auto& b : basis) row.push_back(b.derivative(i).derivative(j).substitute(at_r1));
    m.push_back(std::move(row));
  }
  SepticFactorReport out;
  out.determinant = determinant(m);

  const MultiPoly& l = v.x;
  const MultiPoly& mu = v.y;
  const MultiPoly& nu = v.z;
  const std::vector<std::pair<std::string, MultiPoly>> factors{
      {"nu", nu},
      {"lambda-mu", l - mu},
      {"lambda-nu", l - nu},
      {"mu-nu", mu - nu},
      {"lambda+nu", l + nu},
      {"mu+nu", mu + nu},
      {"lambda+mu+2*nu", l + mu + nu.scale(2)},
      {"lambda*mu-nu^2", l * mu - nu * nu},
      {"2*lambda*mu+lambda*nu+mu*nu", (l * mu).scale(2) + l * nu + mu * nu},
      {"lambda*mu+2*lambda*nu+2*mu*nu+nu^2", l * mu + (l * nu).scale(2) + (mu * nu).scale(2) + nu * nu},
  };
  const std::vector<int> exponents{5, 4, 5, 5, 1, 1, 4, 1, 1, 3};
  out.product = MultiPoly::constant(qq, 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    out.expected.emplace_back(factors[i].first, exponents[i]);
    out.product *= factors[i].second.pow(static_cast<unsigned>(exponents[i]));
    out.measured.push_back(out.determinant.is_zero() ? -1 : multiplicity_of_factor(out.determinant, factors[i].second));
  }
  const MultiPoly quotient = divide_exact(out.determinant, out.product);
  if (quotient.degree() != 0) throw Error("factorization", "quotient is not a constant: " + quotient.to_string());
  out.constant = quotient.coefficient(Monomial());
  const std::vector<MultiPoly> minus{-nu, mu, nu, nu};
  out.vanishes_at_lambda_minus_nu = out.determinant.substitute(minus).is_zero();
  return out;
}

// ----------------------------------------------------------- (-1)-conics

std::vector<CoplanarFive> detect_minus_one_conics(const std::vector<ProjPoint>& points) {
  if (points.size() < 5) throw Error("domain", "need at least five points");
  const Field field = points.front().field();
  std::vector<CoplanarFive> out;
  const std::size_t n = points.size();
  std::array<std::size_t, 5> idx{};
  auto visit = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == 5) {
      std::vector<Vector> rows;
      for (std::size_t i : idx) rows.emplace_back(points[i].coords().begin(), points[i].coords().end());
      const Matrix mat = Matrix::from_rows(field, rows, kNumVars);
      if (rank(mat) > 3) return;
      const auto ker = kernel_basis(mat);
      MultiPoly plane(field);
      for (int j = 0; j < kNumVars; ++j) {
        if (!ker[0][j].is_zero()) plane.add_term(Monomial::var(j), ker[0][j]);
      }
      out.push_back({idx, plane.monic()});
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  visit(visit, 0, 0);
  return out;
}

// ------------------------------------------------------------- registry

const std::vector<std::string>& family_ids() {
  static const std::vector<std::string> ids{"quintic-nu", "k3-444",          "k3-246",    "k3-228",
                                            "ell-222",    "ell-224",         "sextic-ten-gf31", "septic-s4"};
  return ids;
}

namespace {

class ParamReader {
 public:
  ParamReader(const Field& field, const std::map<std::string, std::string>& params) : field_(field), params_(params) {}

  FieldElement get(const std::string& key, long long fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    return it == params_.end() ? field_.from_int(fallback) : field_.parse_element(it->second);
  }
  long long integer(const std::string& key, long long fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      std::size_t pos = 0;
      long long v = std::stoll(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw Error("parse", "parameter " + key + " must be an integer");
    }
  }
  void finish() const {
    for (const auto& [k, unused] : params_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) throw Error("unknown-parameter", "unknown parameter '" + k + "'");
    }
  }

 private:
  Field field_;
  const std::map<std::string, std::string>& params_;
  std::vector<std::string> used_;
};

std::array<int, 4> fundamental_indices(ParamReader& r, std::array<int, 4> fallback) {
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = static_cast<int>(r.integer("f" + std::to_string(i + 1), fallback[i] + 1)) - 1;
  return out;
}

Surface build_444(ParamReader& r, const Field& field, bool check) {
  std::array<FieldElement, 3> a{r.get("a1", -1), r.get("a2", -1), r.get("a3", -1)};
  std::array<FieldElement, 3> b{r.get("b1", 0), r.get("b2", 0), r.get("b3", 0)};
  return sextic_k3_444(field, a, b, r.get("alpha", 1), r.get("beta", 1), check);
}

// The ell-224 defaults are asymmetric: the symmetric member has points on the
// faces of the fundamental tetrahedron.
Surface build_222(ParamReader& r, const Field& field, bool check, bool symmetric) {
  std::array<FieldElement, 6> b{r.get("b1", symmetric ? 1 : 3), r.get("b2", 1), r.get("b3", 1),
                                r.get("b4", 1), r.get("b5", 1), r.get("b6", 1)};
  return sextic_elliptic_222(field, r.get("lambda", 1), r.get("mu", 1), r.get("nu", symmetric ? 1 : 2), b, r.get("alpha", 1),
                             r.get("beta", 0), r.get("gamma", 1), check);
}

}  // namespace

Surface construct_family(const std::string& id, const std::string& field_tag,
                         const std::map<std::string, std::string>& params, bool check) {
  auto field_or = [&](const char* fallback) { return Field::parse(field_tag.empty() ? fallback : field_tag); };
  Surface out = [&]() -> Surface {
    if (id == "quintic-nu") {
      const Field field = field_or("GF:31");
      ParamReader r(field, params);
      const long long nu = r.integer("nu", 5);
      const long long seed = r.integer("seed", 1);
      r.finish();
      if (nu < 1 || nu > 5) throw Error("domain", "nu must be between 1 and 5");
      return quintic_with_triple_points(generic_points(field, static_cast<int>(nu), static_cast<std::uint64_t>(seed)),
                                        static_cast<std::uint64_t>(seed), check);
    }
    if (id == "k3-444") {
      if (params.empty() && field_tag.empty()) return sextic_k3_444_example();
      const Field field = field_or("GF:29");
      ParamReader r(field, params);
      Surface s = build_444(r, field, check);
      r.finish();
      return s;
    }
    if (id == "k3-246") {
      if (params.empty() && field_tag.empty()) return sextic_k3_246_example();
      const Field field = field_or("GF:29");
      ParamReader r(field, params);
      Surface base = build_444(r, field, check);
      auto f = fundamental_indices(r, {0, 1, 3, 8});
      r.finish();
      return sextic_k3_246(base, f, check);
    }
    if (id == "k3-228") {
      const Field field = field_or("GF:31");
      ParamReader r(field, params);
      Surface s = sextic_k3_228(field, r.get("lambda", 3), r.get("alpha", 1), r.get("beta", 1), check);
      r.finish();
      return s;
    }
    if (id == "ell-222") {
      const Field field = field_or("GF:13");
      ParamReader r(field, params);
      Surface s = build_222(r, field, check, true);
      r.finish();
      return s;
    }
    if (id == "ell-224") {
      const Field field = field_or("GF:13");
      ParamReader r(field, params);
      Surface base = build_222(r, field, check, false);
      auto f = fundamental_indices(r, {5, 6, 7, 8});
      r.finish();
      return sextic_elliptic_224(base, f, check);
    }
    if (id == "sextic-ten-gf31") {
      if (!params.empty()) throw Error("unknown-parameter", "sextic-ten-gf31 takes no parameters");
      if (!field_tag.empty() && Field::parse(field_tag) != Field::prime(31)) {
        throw Error("field", "sextic-ten-gf31 exists over GF:31 only");
      }
      return sextic_ten_gf31(check);
    }
    if (id == "septic-s4") {
      const Field field = field_or("QQ");
      ParamReader r(field, params);
      Surface s = septic_s4(field, r.get("mu", 1), r.get("nu", 2), check);
      r.finish();
      return s;
    }
    throw Error("unknown-family", "unknown family '" + id + "'");
  }();
  if (out.id.empty()) out.id = out.family;
  return out;
}

}  // namespace triplepoint
