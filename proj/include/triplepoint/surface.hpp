#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triplepoint/field.hpp"
#include "triplepoint/linalg.hpp"
#include "triplepoint/poly.hpp"

namespace triplepoint {

/// Point of P^3 in canonical form: the first nonzero coordinate is 1.
class ProjPoint {
 public:
  explicit ProjPoint(std::array<FieldElement, kNumVars> coords);
  static ProjPoint from_ints(const Field& field, std::array<long long, kNumVars> coords);
  /// Parses "(a:b:c:d)", "a:b:c:d" or four comma separated coordinates.
  static ProjPoint parse(std::string_view text, const Field& field);

  const Field& field() const { return coords_[0].field(); }
  const std::array<FieldElement, kNumVars>& coords() const { return coords_; }
  const FieldElement& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  /// Index of the first nonzero coordinate (the jet chart).
  int chart() const;

  ProjPoint change_field(const Field& target) const;
  /// Image under the linear map x -> M x.
  ProjPoint transform(const Matrix& m) const;

  std::string to_string() const;  // "(a:b:c:d)"
  std::array<std::string, kNumVars> coordinate_strings() const;

  bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
  /// Lexicographic on canonical coordinates (finite fields by element index).
  bool operator<(const ProjPoint& o) const;

 private:
  std::array<FieldElement, kNumVars> coords_;
};

/// Rank of the matrix whose rows are the point coordinates.
std::size_t coordinate_rank(const std::vector<ProjPoint>& points);

/// Degree-d surface {f = 0} in P^3 with optional construction metadata.
struct Surface {
  Surface(MultiPoly f, std::string id = {});

  const Field& field() const { return f.field(); }
  int degree() const { return d; }

  MultiPoly f;
  int d = 0;
  std::string id;
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ProjPoint> declared_points;
  std::optional<std::array<int, 3>> exc_degrees;
};

}  // namespace triplepoint
