#include "triplepoint/singular.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "triplepoint/error.hpp"

namespace triplepoint {

std::array<int, 3> local_variables(int chart) {
  std::array<int, 3> out{};
  int k = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (i != chart) out[k++] = i;
  }
  return out;
}

Matrix jet_matrix(int degree, const ProjPoint& point, int order) {
  const Field field = point.field();
  const int chart = point.chart();
  const auto vars = local_variables(chart);
  const auto cols = monomials_of_degree(degree);
  const auto rows = monomials_up_to_degree(order, vars);
  std::map<Monomial, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

  std::array<std::vector<FieldElement>, 3> powers;
  for (int j = 0; j < 3; ++j) {
    powers[j].push_back(field.one());
    for (int e = 1; e <= degree; ++e) powers[j].push_back(powers[j].back() * point[vars[j]]);
  }

  Matrix out(field, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto e = cols[c].exponents();
    const int e0 = e[vars[0]], e1 = e[vars[1]], e2 = e[vars[2]];
    for (int a0 = 0; a0 <= std::min(e0, order); ++a0) {
      for (int a1 = 0; a1 <= std::min(e1, order - a0); ++a1) {
        for (int a2 = 0; a2 <= std::min(e2, order - a0 - a1); ++a2) {
          long long binom = binomial(e0, a0) * binomial(e1, a1) * binomial(e2, a2);
          FieldElement v = field.from_int(binom) * powers[0][e0 - a0] * powers[1][e1 - a1] * powers[2][e2 - a2];
          if (v.is_zero()) continue;
          std::array<int, kNumVars> local{};
          local[vars[0]] = a0;
          local[vars[1]] = a1;
          local[vars[2]] = a2;
          out.at(row_index.at(Monomial(local)), c) += v;
        }
      }
    }
  }
  return out;
}

LocalJet local_jet(const MultiPoly& f, const ProjPoint& point, int order) {
  const int d = f.homogeneous_degree();
  if (d < 0) throw Error("surface", "local jets need a nonzero homogeneous polynomial");
  if (!(f.field() == point.field())) throw Error("descriptor-mismatch", "point and surface fields differ");
  order = std::clamp(order, 0, d);
  LocalJet jet;
  jet.chart = point.chart();
  jet.local_vars = local_variables(jet.chart);
  jet.order = order;
  const Matrix jm = jet_matrix(d, point, order);
  const auto cols = monomials_of_degree(d);
  const auto rows = monomials_up_to_degree(order, jet.local_vars);
  const Vector coeffs = f.coefficients(cols);
  const Vector values = jm.apply(coeffs);
  jet.poly = MultiPoly::from_coefficients(f.field(), rows, values);
  return jet;
}

LocalJet local_jet(const Surface& surface, const ProjPoint& point, int order) {
  return local_jet(surface.f, point, order);
}

int multiplicity(const Surface& surface, const ProjPoint& point) {
  // Increase the truncation order until a nonzero term shows up.
  for (int k = 0; k <= surface.d; ++k) {
    LocalJet jet = local_jet(surface, point, k);
    if (!jet.poly.is_zero()) return jet.poly.min_degree();
  }
  return surface.d;
}

int cubic_smoothness_rank(const MultiPoly& cubic, const std::array<int, 3>& vars) {
  const Field field = cubic.field();
  const auto quadrics = monomials_of_degree(2, vars);
  const auto quartics = monomials_of_degree(4, vars);
  std::vector<Vector> rows;
  for (int j = 0; j < 3; ++j) {
    MultiPoly partial = cubic.derivative(vars[j]);
    for (Monomial q : quadrics) rows.push_back(partial.times_monomial(q).coefficients(quartics));
  }
  return static_cast<int>(rank(Matrix::from_rows(field, rows, quartics.size())));
}

TriplePointCheck check_triple_point(const Surface& surface, const ProjPoint& point) {
  const std::uint32_t p = surface.field().characteristic();
  if (p == 2 || p == 3) {
    throw Error("unsupported-characteristic", "triple point certification needs characteristic 0 or > 3");
  }
  TriplePointCheck out{false, {point, 0, MultiPoly(surface.field()), 0}, {}};
  out.certificate.multiplicity = multiplicity(surface, point);
  if (out.certificate.multiplicity != 3) {
    out.reason = "multiplicity " + std::to_string(out.certificate.multiplicity) + " at " + point.to_string();
    return out;
  }
  LocalJet jet = local_jet(surface, point, 3);
  out.certificate.tangent_cone = jet.poly.homogeneous_part(3);
  out.certificate.smooth_rank = cubic_smoothness_rank(out.certificate.tangent_cone, jet.local_vars);
  if (out.certificate.smooth_rank != 15) {
    out.reason = "tangent cone at " + point.to_string() + " is singular (rank " +
                 std::to_string(out.certificate.smooth_rank) + " < 15)";
    return out;
  }
  out.ordinary = true;
  return out;
}

TriplePointCertificate certify_ordinary_triple_point(const Surface& surface, const ProjPoint& point) {
  TriplePointCheck check = check_triple_point(surface, point);
  if (!check.ordinary) throw Error("certification", check.reason);
  return check.certificate;
}

// ------------------------------------------------------------ enumeration

namespace {

/// Raw GF(p) / GF(p^2) arithmetic on residue pairs.
struct FiniteArith {
  std::uint64_t p;
  std::uint64_t n;
  bool quadratic;

  struct E {
    std::uint32_t a = 0, b = 0;
    bool zero() const { return a == 0 && b == 0; }
  };

  E add(E x, E y) const {
    return {static_cast<std::uint32_t>((x.a + y.a) % p), static_cast<std::uint32_t>((x.b + y.b) % p)};
  }
  E sub(E x, E y) const {
    return {static_cast<std::uint32_t>((x.a + p - y.a) % p), static_cast<std::uint32_t>((x.b + p - y.b) % p)};
  }
  E mul(E x, E y) const {
    if (!quadratic) return {static_cast<std::uint32_t>(std::uint64_t{x.a} * y.a % p), 0};
    std::uint64_t ac = std::uint64_t{x.a} * y.a % p, bd = std::uint64_t{x.b} * y.b % p;
    std::uint64_t ad = std::uint64_t{x.a} * y.b % p, bc = std::uint64_t{x.b} * y.a % p;
    return {static_cast<std::uint32_t>((ac + bd * n) % p), static_cast<std::uint32_t>((ad + bc) % p)};
  }
  E inv(E x) const {
    if (!quadratic) return {inverse_mod(x.a, static_cast<std::uint32_t>(p)), 0};
    std::uint64_t norm = (std::uint64_t{x.a} * x.a % p + (p - std::uint64_t{x.b} * x.b % p * n % p)) % p;
    std::uint64_t ni = inverse_mod(static_cast<std::uint32_t>(norm), static_cast<std::uint32_t>(p));
    return {static_cast<std::uint32_t>(x.a * ni % p), static_cast<std::uint32_t>((p - x.b) % p * ni % p)};
  }
  std::uint64_t order() const { return quadratic ? p * p : p; }
  E element(std::uint64_t i) const { return {static_cast<std::uint32_t>(i % p), static_cast<std::uint32_t>(i / p)}; }
};

using Univariate = std::vector<FiniteArith::E>;

void trim(Univariate& u) {
  while (!u.empty() && u.back().zero()) u.pop_back();
}

Univariate poly_mod(const FiniteArith& F, Univariate a, const Univariate& b) {
  const auto lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    auto factor = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

Univariate poly_gcd(const FiniteArith& F, Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FiniteArith::E poly_eval(const FiniteArith& F, const Univariate& u, FiniteArith::E x) {
  FiniteArith::E acc{};
  for (std::size_t i = u.size(); i-- > 0;) acc = F.add(F.mul(acc, x), u[i]);
  return acc;
}

struct RawTerm {
  std::array<int, kNumVars> e;
  FiniteArith::E c;
};

}  // namespace

unsigned worker_threads() {
  unsigned n = 0;
  if (const char* env = std::getenv("TRIPLEPOINT_THREADS")) n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

std::vector<ProjPoint> enumerate_singular_points(const Surface& surface, int extension_degree) {
  const Field base = surface.field();
  if (!base.is_finite()) throw Error("field", "enumeration needs a finite field");
  if (extension_degree != 1 && extension_degree != 2) throw Error("field", "extension degree must be 1 or 2");
  const Field field = extension_degree == 2 ? base.quadratic_extension() : base;
  const FiniteArith F{field.characteristic(), field.nonresidue(), field.kind() == FieldKind::quadratic};

  std::vector<MultiPoly> polys{surface.f.change_field(field)};
  for (int i = 0; i < kNumVars; ++i) polys.push_back(polys[0].derivative(i));
  std::vector<std::vector<RawTerm>> raw(polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k) {
    for (const auto& [m, c] : polys[k].terms()) {
      auto r = c.residue();
      raw[k].push_back({m.exponents(), {r.a, r.b}});
    }
  }
  const int d = surface.d;
  const std::uint64_t q = F.order();
  std::vector<ProjPoint> found;

  auto to_point = [&](FiniteArith::E a, FiniteArith::E b, FiniteArith::E c, FiniteArith::E w) {
    return ProjPoint({field.element(a.a, a.b), field.element(b.a, b.b), field.element(c.a, c.b),
                      field.element(w.a, w.b)});
  };

  // Fibres over P^2: for fixed (a:b:c) canonical, the common roots in w.
  auto scan = [&](FiniteArith::E a, FiniteArith::E b, FiniteArith::E c, std::vector<ProjPoint>& out) {
    const std::array<FiniteArith::E, 3> base_pt{a, b, c};
    std::array<std::vector<FiniteArith::E>, 3> pw;
    for (int j = 0; j < 3; ++j) {
      pw[j].assign(static_cast<std::size_t>(d) + 1, {});
      pw[j][0] = {1, 0};
      for (int e = 1; e <= d; ++e) pw[j][e] = F.mul(pw[j][e - 1], base_pt[j]);
    }
    Univariate g;
    bool all_zero = true;
    for (const auto& terms : raw) {
      Univariate u(static_cast<std::size_t>(d) + 1);
      for (const auto& t : terms) {
        auto v = F.mul(F.mul(t.c, pw[0][t.e[0]]), F.mul(pw[1][t.e[1]], pw[2][t.e[2]]));
        u[t.e[3]] = F.add(u[t.e[3]], v);
      }
      trim(u);
      if (u.empty()) continue;
      all_zero = false;
      g = g.empty() ? u : poly_gcd(F, g, u);
      if (g.size() == 1) return;  // nonzero constant: no common root
    }
    for (std::uint64_t i = 0; i < q; ++i) {
      auto w = F.element(i);
      if (all_zero || poly_eval(F, g, w).zero()) out.push_back(to_point(a, b, c, w));
    }
  };

  const FiniteArith::E zero{}, one{1, 0};
  // The chart a = 1 is sharded by b; each worker keeps its own list.
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(worker_threads(), q));
  std::vector<std::vector<ProjPoint>> partial(workers);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      for (std::uint64_t i = t; i < q; i += workers) {
        for (std::uint64_t j = 0; j < q; ++j) scan(one, F.element(i), F.element(j), partial[t]);
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& part : partial) found.insert(found.end(), part.begin(), part.end());
  for (std::uint64_t j = 0; j < q; ++j) scan(zero, one, F.element(j), found);
  scan(zero, zero, one, found);
  // The point (0:0:0:1).
  const std::array<FieldElement, kNumVars> apex{field.zero(), field.zero(), field.zero(), field.one()};
  bool vertex = std::all_of(polys.begin(), polys.end(), [&](const MultiPoly& g) { return g.evaluate(apex).is_zero(); });
  if (vertex) found.push_back(to_point(zero, zero, zero, one));
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------- equisingular space

int equisingular_tangent_dimension(const Surface& surface, const std::vector<ProjPoint>& points) {
  const Field field = surface.field();
  const int d = surface.d;
  const auto degree_d = monomials_of_degree(d);
  const auto degree_d1 = monomials_of_degree(d - 1);
  std::vector<Vector> conditions;
  for (const auto& point : points) {
    certify_ordinary_triple_point(surface, point);
    const Matrix jets_g = jet_matrix(d, point, 2);
    const Matrix jets_partial = jet_matrix(d - 1, point, 2);
    std::vector<Vector> partial_jets;
    for (int i = 0; i < kNumVars; ++i) {
      partial_jets.push_back(jets_partial.apply(surface.f.derivative(i).coefficients(degree_d1)));
    }
    // Functionals on 2-jets that kill the span of the partials' 2-jets.
    const auto annihilator = kernel_basis(Matrix::from_rows(field, partial_jets, jets_g.rows()));
    for (const auto& a : annihilator) {
      Vector row(degree_d.size(), field.zero());
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r].is_zero()) continue;
        for (std::size_t c = 0; c < degree_d.size(); ++c) row[c] += a[r] * jets_g.at(r, c);
      }
      conditions.push_back(std::move(row));
    }
  }
  const std::size_t r = conditions.empty() ? 0 : rank(Matrix::from_rows(field, conditions, degree_d.size()));
  return static_cast<int>(degree_d.size() - r) - 1;
}

// ------------------------------------------------------------- reports

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_exact: return "certified-exact";
    case Verdict::certified_rational_only: return "certified-rational-only";
    case Verdict::positive_dimensional: return "positive-dimensional-singular-locus";
    case Verdict::failed: return "failed";
  }
  return "failed";
}

CertificationReport certify_surface(const Surface& surface, const CertifyOptions& options) {
  CertificationReport report;
  report.surface = surface.id.empty() ? surface.family : surface.id;
  report.field = surface.field().tag();

  std::vector<ProjPoint> candidates;
  Surface working = surface;
  if (options.enumerate && surface.field().is_finite()) {
    candidates = enumerate_singular_points(surface, options.extension_degree);
    report.extension_degrees.push_back(1);
    if (options.extension_degree == 2) {
      report.extension_degrees.push_back(2);
      working.f = surface.f.change_field(surface.field().quadratic_extension());
    }
  } else {
    candidates = surface.declared_points;
  }

  bool all_ok = true;
  for (const auto& point : candidates) {
    TriplePointCheck check = check_triple_point(working, point);
    if (check.ordinary) {
      report.points.push_back(std::move(check.certificate));
    } else {
      all_ok = false;
      report.rejected.push_back(check.reason);
    }
  }
  report.expected_degree = 8 * static_cast<long long>(report.points.size());

  if (options.hilbert) {
    SingularSchemeDegree sd = singular_scheme_degree(surface, options.k_max);
    report.hilbert = sd.hilbert;
    report.hilbert_modulus = sd.modulus;
    if (sd.positive_dimensional) {
      // Mod p growth says nothing about the rational surface.
      if (!sd.modulus) report.verdict = Verdict::positive_dimensional;
      else report.verdict = all_ok ? Verdict::certified_rational_only : Verdict::failed;
    } else {
      // Over QQ the value is an upper bound; the certified points give 8 each
      // from below, so equality still pins the degree down.
      report.scheme_degree = sd.degree;
      if (!all_ok) report.verdict = Verdict::failed;
      else report.verdict =
          sd.degree == report.expected_degree ? Verdict::certified_exact : Verdict::certified_rational_only;
    }
  } else {
    report.verdict = all_ok ? Verdict::certified_rational_only : Verdict::failed;
  }
  return report;
}

}  // namespace triplepoint
