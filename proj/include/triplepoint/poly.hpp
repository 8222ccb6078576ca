#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triplepoint/field.hpp"

namespace triplepoint {

inline constexpr int kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames = {'x', 'y', 'z', 'w'};

/// Monomial in x, y, z, w packed into one word so that integer order is
/// graded lexicographic order with x > y > z > w, and multiplication is
/// addition of keys. Exponents are limited to 4095.
class Monomial {
 public:
  constexpr Monomial() = default;
  Monomial(std::array<int, kNumVars> exps);
  static Monomial var(int i, int power = 1);

  int exponent(int i) const noexcept {
    return static_cast<int>((key_ >> (12 * (kNumVars - 1 - i))) & 0xfff);
  }
  std::array<int, kNumVars> exponents() const;
  int degree() const noexcept { return static_cast<int>(key_ >> 48); }
  std::uint64_t key() const noexcept { return key_; }

  bool divides(Monomial other) const noexcept;
  Monomial operator*(Monomial o) const noexcept { return from_key(key_ + o.key_); }
  /// Requires divides(*this, other).
  Monomial operator/(Monomial o) const noexcept { return from_key(key_ - o.key_); }

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  static constexpr Monomial from_key(std::uint64_t k) {
    Monomial m;
    m.key_ = k;
    return m;
  }
  std::uint64_t key_ = 0;
};

/// All monomials of the given degree, in descending grlex order.
std::vector<Monomial> monomials_of_degree(int degree);
/// Monomials of degree exactly `degree` in the variables listed in `vars`.
std::vector<Monomial> monomials_of_degree(int degree, std::span<const int> vars);
/// Monomials of degree <= `max_degree` in `vars`, ascending degree, descending grlex inside a degree.
std::vector<Monomial> monomials_up_to_degree(int max_degree, std::span<const int> vars);

long long binomial(int n, int k);

/// Sparse polynomial in x, y, z, w over an exact field.
///
/// Terms are kept in descending grlex order with no zero coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, FieldElement, std::greater<>>;

  MultiPoly() = default;  // zero over QQ
  explicit MultiPoly(Field field) : field_(field) {}

  static MultiPoly constant(const FieldElement& c);
  static MultiPoly constant(const Field& field, long long c) { return constant(field.from_int(c)); }
  static MultiPoly var(const Field& field, int i) { return monomial(field.one(), Monomial::var(i)); }
  static MultiPoly monomial(const FieldElement& c, Monomial m);

  const Field& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  FieldElement coefficient(Monomial m) const;
  /// Adds c*m in place (drops the term if it cancels).
  void add_term(Monomial m, const FieldElement& c);

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  /// Homogeneous degree, or -1 if inhomogeneous or zero.
  int homogeneous_degree() const;
  /// Degree-k part.
  MultiPoly homogeneous_part(int k) const;
  /// Terms of total degree <= k.
  MultiPoly truncate(int k) const;
  /// Degree-d homogenization with respect to variable `var`.
  MultiPoly homogenize(int var, int degree) const;
  /// Highest exponent of variable `var` dividing every term.
  int var_valuation(int var) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scale(const FieldElement& c) const;
  MultiPoly scale(long long c) const { return scale(field_.from_int(c)); }
  MultiPoly pow(unsigned e) const;
  MultiPoly times_monomial(Monomial m) const;

  MultiPoly derivative(int var) const;
  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Replaces variable i by images[i] and expands.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Maps coefficients into another field (GF(p) -> GF(p^2), QQ -> GF(p)).
  MultiPoly change_field(const Field& target) const;

  /// Scales so that the leading (grlex-largest) coefficient is 1.
  MultiPoly monic() const;

  /// Coefficients on the given monomial list (zero for absent monomials).
  std::vector<FieldElement> coefficients(std::span<const Monomial> basis) const;
  static MultiPoly from_coefficients(const Field& field, std::span<const Monomial> basis,
                                     std::span<const FieldElement> coeffs);

  /// Canonical text form; parse(to_string()) round-trips exactly.
  std::string to_string() const;
  static MultiPoly parse(std::string_view text, const Field& field);

  bool operator==(const MultiPoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

 private:
  void require_same(const MultiPoly& o) const;

  Field field_;
  TermMap terms_;
};

/// Exact quotient f / g; throws Error("inexact-division") carrying the
/// nonzero remainder when g does not divide f.
MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g);

struct DivisionResult {
  MultiPoly quotient;
  MultiPoly remainder;
};
/// Multivariate division by a single divisor using grlex leading terms.
DivisionResult divide(const MultiPoly& f, const MultiPoly& g);

/// Largest e with g^e | f (g must be nonconstant).
int multiplicity_of_factor(const MultiPoly& f, const MultiPoly& g);

/// Square polynomial matrix, row-major.
using PolyMatrix = std::vector<std::vector<MultiPoly>>;
/// Exact determinant by Laplace expansion with memoized minors (n <= 8).
MultiPoly determinant(const PolyMatrix& m);

}  // namespace triplepoint
