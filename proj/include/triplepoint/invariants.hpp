#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triplepoint/surface.hpp"

namespace triplepoint {

/// Numerical invariants of the minimal resolution of a degree-d surface
/// with nu ordinary triple points; alpha is the discrepancy (equal to q).
struct InvariantTable {
  int d = 0;
  long long nu = 0;
  long long alpha = 0;
  long long c1sq = 0;
  long long c2 = 0;
  long long chi = 0;
  long long pg = 0;
  long long q = 0;
  long long b2 = 0;
  long long h11 = 0;

  bool operator==(const InvariantTable&) const = default;
};

InvariantTable smooth_invariants(int d);
InvariantTable resolved_invariants(int d, long long nu, long long alpha);
long long alpha_from_genus(int d, long long nu, long long pg);

/// Dimension of the degree-(d-4) forms through all points (0 for d <= 4).
long long geometric_genus(const Surface& surface, const std::vector<ProjPoint>& points);

/// P_n = n(n-1)/2 (K^2 + eps) + chi, valid for n >= 2 only.
long long plurigenus(int n, long long ksq, long long eps, long long chi);

/// Multiplicity of a degree-c (-1)-curve at the triple points: c(d-4)+1.
long long minus_one_multiplicity(int d, long long c);

/// One row of the classification of sextics with triple points.
struct SexticClass {
  int nu = 0;
  long long c1sq = 0, c2 = 0, chi = 0, pg = 0, q = 0, b2 = 0, h11 = 0;
  std::optional<int> minus_one_curves;  // empty for the rational row
  std::string kodaira;                  // "2", "1", "0" or "-inf"
  std::string minimal_model;
};

const std::vector<SexticClass>& sextic_table();

/// Looks up the row; `exc_degrees` lists the degrees of the (-1)-curves and
/// breaks ties (its length is their number, and for nu = 9 a sum of 12 means K3).
const SexticClass& sextic_classify(int nu, long long pg, long long q,
                                   const std::optional<std::vector<int>>& exc_degrees = std::nullopt);

}  // namespace triplepoint
