// Hilbert function of R/J, J = (df/dx, df/dy, df/dz, df/dw).
//
// Degree by degree we keep the standard monomials N_k (a basis of (R/J)_k)
// and normal forms of the degree-k monomials we will need. For k >= d-1 the
// ideal has no new generators, so (R/J)_{k+1} is spanned by x_i * N_k modulo
// the Koszul relations x_i NF(x_j m) - x_j NF(x_i m), m in N_{k-1}. That keeps
// every elimination at the size of the quotient instead of the full
// Macaulay matrix.

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "triplepoint/echelon.hpp"
#include "triplepoint/error.hpp"
#include "triplepoint/singular.hpp"

namespace triplepoint {

namespace {

template <class Ops>
struct Graded {
  using T = typename Ops::value_type;
  using Sparse = std::vector<std::pair<std::uint32_t, T>>;  // index into `standard`

  std::vector<Monomial> standard;                 // N_k, descending
  std::unordered_map<std::uint64_t, Sparse> nf;   // normal forms of needed degree-k monomials
};

template <class Ops>
Graded<Ops> base_degree(const Ops& ops, const Surface& surface) {
  using T = typename Ops::value_type;
  const int k = surface.d - 1;
  const auto cols = monomials_of_degree(k);
  Echelon<Ops> ech(ops, cols.size());
  for (int i = 0; i < kNumVars; ++i) {
    const auto coeffs = surface.f.derivative(i).coefficients(cols);
    std::vector<T> row;
    row.reserve(cols.size());
    for (const auto& c : coeffs) row.push_back(ops.from(c));
    ech.insert(std::move(row));
  }
  Graded<Ops> g;
  std::vector<std::int64_t> position(cols.size(), -1);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (!ech.is_pivot(c)) {
      position[c] = static_cast<std::int64_t>(g.standard.size());
      g.standard.push_back(cols[c]);
      g.nf[cols[c].key()] = {{static_cast<std::uint32_t>(position[c]), ops.one()}};
    }
  }
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const auto& row = ech.rows()[r];
    typename Graded<Ops>::Sparse v;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (position[c] >= 0 && !ops.is_zero(row[c])) v.emplace_back(position[c], ops.neg(row[c]));
    }
    g.nf[cols[ech.pivot(r)].key()] = std::move(v);
  }
  return g;
}

template <class Ops>
Graded<Ops> next_degree(const Ops& ops, const Graded<Ops>& prev_prev, const Graded<Ops>& prev) {
  using T = typename Ops::value_type;
  // Spanning set x_i * N_k, descending so pivots land on the largest monomials.
  std::vector<Monomial> span;
  for (Monomial n : prev.standard) {
    for (int i = 0; i < kNumVars; ++i) span.push_back(n * Monomial::var(i));
  }
  std::sort(span.begin(), span.end(), std::greater<>());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  std::unordered_map<std::uint64_t, std::uint32_t> column;
  for (std::uint32_t c = 0; c < span.size(); ++c) column.emplace(span[c].key(), c);

  Echelon<Ops> ech(ops, span.size());
  auto shifted = [&](std::vector<T>& row, int var, const typename Graded<Ops>::Sparse& v, bool negate) {
    for (const auto& [idx, c] : v) {
      std::uint32_t col = column.at((prev.standard[idx] * Monomial::var(var)).key());
      row[col] = negate ? ops.sub(row[col], c) : ops.add(row[col], c);
    }
  };
  for (Monomial m : prev_prev.standard) {
    if (ech.rank() == span.size()) break;
    for (int i = 0; i < kNumVars; ++i) {
      for (int j = i + 1; j < kNumVars; ++j) {
        std::vector<T> row(span.size(), ops.zero());
        shifted(row, i, prev.nf.at((m * Monomial::var(j)).key()), false);
        shifted(row, j, prev.nf.at((m * Monomial::var(i)).key()), true);
        ech.insert(std::move(row));
      }
    }
  }

  Graded<Ops> g;
  std::vector<std::int64_t> position(span.size(), -1);
  for (std::size_t c = 0; c < span.size(); ++c) {
    if (!ech.is_pivot(c)) {
      position[c] = static_cast<std::int64_t>(g.standard.size());
      g.standard.push_back(span[c]);
      g.nf[span[c].key()] = {{static_cast<std::uint32_t>(position[c]), ops.one()}};
    }
  }
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const auto& row = ech.rows()[r];
    typename Graded<Ops>::Sparse v;
    for (std::size_t c = 0; c < span.size(); ++c) {
      if (position[c] >= 0 && !ops.is_zero(row[c])) v.emplace_back(position[c], ops.neg(row[c]));
    }
    g.nf[span[ech.pivot(r)].key()] = std::move(v);
  }
  return g;
}

// Degree d-2 as a graded piece: every monomial is standard (J starts in degree d-1).
template <class Ops>
Graded<Ops> free_degree(const Ops& ops, int k) {
  Graded<Ops> g;
  g.standard = monomials_of_degree(k);
  for (std::uint32_t i = 0; i < g.standard.size(); ++i) g.nf[g.standard[i].key()] = {{i, ops.one()}};
  return g;
}

// Integer model of f (denominators cleared) reduced mod p.
MultiPoly modular_image(const MultiPoly& f, std::uint32_t p) {
  mpz_class lcm = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  const Field target = Field::prime(p);
  MultiPoly out(target);
  for (const auto& [m, c] : f.terms()) {
    mpz_class n = c.rational().get_num() * (lcm / c.rational().get_den());
    out.add_term(m, target.from_int(static_cast<long long>(mpz_fdiv_ui(n.get_mpz_t(), p))));
  }
  return out;
}

}  // namespace

std::vector<long long> jacobian_hilbert(const Surface& surface, int k_max) {
  const int d = surface.d;
  if (k_max < 0) k_max = 4 * d;
  std::vector<long long> h;
  for (int k = 0; k <= std::min(k_max, d - 2); ++k) h.push_back(binomial(k + 3, 3));
  if (k_max < d - 1) return h;

  with_field_ops(surface.field(), [&](const auto& ops) {
    using Ops = std::decay_t<decltype(ops)>;
    Graded<Ops> prev_prev = free_degree(ops, std::max(d - 2, 0));
    Graded<Ops> prev = base_degree(ops, surface);
    h.push_back(static_cast<long long>(prev.standard.size()));
    for (int k = d; k <= k_max; ++k) {
      Graded<Ops> next = next_degree(ops, prev_prev, prev);
      h.push_back(static_cast<long long>(next.standard.size()));
      prev_prev = std::move(prev);
      prev = std::move(next);
    }
  });
  return h;
}

SingularSchemeDegree singular_scheme_degree(const Surface& surface, int k_max) {
  if (k_max < 0) k_max = 4 * surface.d;
  k_max = std::max(k_max, surface.d + 2);
  std::uint32_t modulus = 0;
  std::optional<Surface> reduced;
  if (surface.field().is_rational()) {
    modulus = kHilbertModulus;
    MultiPoly image = modular_image(surface.f, modulus);
    if (image.homogeneous_degree() != surface.d) throw Error("inconclusive", "the surface degenerates modulo the Hilbert prime");
    reduced.emplace(std::move(image));
  }
  const Surface& target = reduced ? *reduced : surface;
  for (int attempt = 0; attempt < 2; ++attempt) {
    SingularSchemeDegree out;
    out.modulus = modulus;
    out.hilbert = jacobian_hilbert(target, k_max);
    const auto n = out.hilbert.size();
    const long long a = out.hilbert[n - 3], b = out.hilbert[n - 2], c = out.hilbert[n - 1];
    if (a == b && b == c) {
      out.degree = c;
      return out;
    }
    if (a < b && b < c) {
      out.positive_dimensional = true;
      return out;
    }
    k_max *= 2;
  }
  throw Error("inconclusive", "Hilbert function of the Jacobian ideal did not settle");
}

}  // namespace triplepoint
