#include "triplepoint/invariants.hpp"

#include <numeric>

#include "triplepoint/constructions.hpp"
#include "triplepoint/error.hpp"

namespace triplepoint {

InvariantTable smooth_invariants(int d) {
  if (d < 1) throw Error("domain", "degree must be positive");
  const long long n = d;
  InvariantTable t;
  t.d = d;
  t.c1sq = n * (n - 4) * (n - 4);
  t.c2 = n * (n * n - 4 * n + 6);
  t.chi = n * (n * n - 6 * n + 11) / 6;
  t.pg = binomial(d - 1, 3);
  t.q = 0;
  t.b2 = n * n * n - 4 * n * n + 6 * n - 2;
  t.h11 = n * (2 * n * n - 6 * n + 7) / 3;
  return t;
}

InvariantTable resolved_invariants(int d, long long nu, long long alpha) {
  if (nu < 0 || alpha < 0) throw Error("domain", "nu and alpha must be nonnegative");
  InvariantTable t = smooth_invariants(d);
  t.nu = nu;
  t.alpha = alpha;
  t.c1sq -= 3 * nu;
  t.c2 -= 9 * nu;
  t.chi -= nu;
  t.pg = t.pg - nu + alpha;
  t.q = alpha;
  t.b2 += -9 * nu + 4 * alpha;
  t.h11 += -7 * nu + 2 * alpha;
  if (t.pg < 0) throw Error("domain", "parameters force a negative geometric genus");
  return t;
}

long long alpha_from_genus(int d, long long nu, long long pg) {
  long long alpha = pg - binomial(d - 1, 3) + nu;
  if (alpha < 0) throw Error("domain", "geometric genus too small for this number of triple points");
  return alpha;
}

long long geometric_genus(const Surface& surface, const std::vector<ProjPoint>& points) {
  if (surface.d <= 4) return 0;
  std::vector<AssignedPoint> assigned;
  for (const auto& p : points) assigned.push_back({p, 1});
  return static_cast<long long>(forms_with_multiplicity(surface.field(), surface.d - 4, assigned).size());
}

long long plurigenus(int n, long long ksq, long long eps, long long chi) {
  if (n < 2) throw Error("domain", "the plurigenus formula holds for n >= 2 only");
  const long long m = n;
  return m * (m - 1) / 2 * (ksq + eps) + chi;
}

long long minus_one_multiplicity(int d, long long c) {
  if (d < 5 || c < 1) throw Error("domain", "needs d >= 5 and c >= 1");
  return c * (d - 4) + 1;
}

const std::vector<SexticClass>& sextic_table() {
  static const std::vector<SexticClass> table = {
      {0, 24, 108, 11, 10, 0, 106, 86, 0, "2", "general type"},
      {1, 21, 99, 10, 9, 0, 97, 79, 0, "2", "general type"},
      {2, 18, 90, 9, 8, 0, 88, 72, 0, "2", "general type"},
      {3, 15, 81, 8, 7, 0, 79, 65, 0, "2", "general type"},
      {4, 12, 72, 7, 6, 0, 70, 58, 0, "2", "general type"},
      {5, 9, 63, 6, 5, 0, 61, 51, 1, "2", "general type"},
      {5, 9, 63, 6, 5, 0, 61, 51, 0, "2", "general type"},
      {6, 6, 54, 5, 4, 0, 52, 44, 1, "2", "general type"},
      {6, 6, 54, 5, 4, 0, 52, 44, 0, "2", "general type"},
      {7, 3, 45, 4, 3, 0, 43, 37, 1, "2", "general type"},
      {7, 3, 45, 4, 3, 0, 43, 37, 0, "2", "general type"},
      {8, 0, 36, 3, 2, 0, 34, 30, 1, "2", "general type"},
      {8, 0, 36, 3, 2, 0, 34, 30, 2, "2", "general type"},
      {8, 0, 36, 3, 2, 0, 34, 30, 0, "1", "elliptic"},
      // b2 is 38 here: 106 - 72 + 4, i.e. h11 + 2 pg.
      {8, 0, 36, 3, 3, 1, 38, 32, 0, "1", "elliptic"},
      {9, -3, 27, 2, 1, 0, 25, 23, 3, "1", "elliptic"},
      {9, -3, 27, 2, 1, 0, 25, 23, 3, "0", "K3"},
      {10, -6, 18, 1, 0, 0, 16, 16, std::nullopt, "-inf", "rational"},
  };
  return table;
}

const SexticClass& sextic_classify(int nu, long long pg, long long q, const std::optional<std::vector<int>>& exc) {
  if (nu < 0 || nu > 10) throw Error("domain", "a sextic has at most 10 triple points");
  std::vector<const SexticClass*> matches;
  for (const auto& row : sextic_table()) {
    if (row.nu == nu && row.pg == pg && row.q == q) matches.push_back(&row);
  }
  if (matches.empty()) throw Error("no-matching-class", "no class with these invariants");
  if (matches.size() == 1) return *matches.front();
  if (!exc) throw Error("ambiguous", "several classes match; pass the (-1)-curve degrees");
  std::vector<const SexticClass*> refined;
  for (const auto* row : matches) {
    if (row->minus_one_curves == static_cast<int>(exc->size())) refined.push_back(row);
  }
  if (refined.size() == 2 && nu == 9) {
    const int sum = std::accumulate(exc->begin(), exc->end(), 0);
    return *refined[sum == 12 ? 1 : 0];
  }
  if (refined.size() != 1) throw Error("no-matching-class", "the (-1)-curve data matches no class");
  return *refined.front();
}

}  // namespace triplepoint
