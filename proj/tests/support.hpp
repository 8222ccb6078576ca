#pragma once

#include <string>

#include "triplepoint/field.hpp"
#include "triplepoint/poly.hpp"
#include "triplepoint/surface.hpp"

namespace test {

inline triplepoint::MultiPoly poly(const std::string& text, const triplepoint::Field& field = {}) {
  return triplepoint::MultiPoly::parse(text, field);
}

inline triplepoint::ProjPoint point(const triplepoint::Field& field, long long a, long long b, long long c, long long d) {
  return triplepoint::ProjPoint::from_ints(field, {a, b, c, d});
}

}  // namespace test
