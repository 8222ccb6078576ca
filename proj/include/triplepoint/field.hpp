#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace triplepoint {

enum class FieldKind { rationals, prime, quadratic };

class FieldElement;

/// Exact coefficient domain: QQ, GF(p) or GF(p^2) = GF(p)[u]/(u^2 - n).
///
/// p is prime and below 2^31, so products of two residues fit in 64 bits.
/// For GF(p^2) the default n is the smallest quadratic nonresidue mod p.
/// Descriptors are small values; two fields are the same iff they compare equal.
class Field {
 public:
  Field() = default;  // QQ

  static Field rationals() { return Field(); }
  static Field prime(std::uint64_t p);
  static Field quadratic(std::uint64_t p);
  static Field quadratic(std::uint64_t p, std::uint64_t nonresidue);

  /// Parses "QQ", "GF:p" or "GF:p:2".
  static Field parse(std::string_view tag);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::rationals; }
  bool is_finite() const noexcept { return kind_ != FieldKind::rationals; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t nonresidue() const noexcept { return n_; }
  /// Number of elements; 0 for QQ.
  std::uint64_t order() const noexcept;
  std::string tag() const;

  Field prime_subfield() const;
  Field quadratic_extension() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_rational(const mpq_class& q) const;
  /// a + b*u; b must be 0 outside GF(p^2).
  FieldElement element(std::uint64_t a, std::uint64_t b = 0) const;
  /// The i-th element in the canonical enumeration (a + b*p ordering).
  FieldElement from_index(std::uint64_t i) const;
  /// Accepts "a", "-a", "p/q" and, for GF(p^2), "a+b*u" with optional parens.
  FieldElement parse_element(std::string_view text) const;

  bool operator==(const Field&) const = default;

 private:
  Field(FieldKind kind, std::uint32_t p, std::uint32_t n) : kind_(kind), p_(p), n_(n) {}

  FieldKind kind_ = FieldKind::rationals;
  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
};

bool is_prime(std::uint64_t n);
std::uint32_t smallest_nonresidue(std::uint32_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Element of a Field in canonical form (equality is representational).
class FieldElement {
 public:
  struct Residue {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    bool operator==(const Residue&) const = default;
  };

  FieldElement() = default;  // rational zero
  FieldElement(const Field& field, Residue r);
  FieldElement(const Field& field, mpq_class q);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Rational value; only valid over QQ.
  const mpq_class& rational() const;
  /// Residue pair (a, b) meaning a + b*u; only valid over finite fields.
  Residue residue() const;
  /// Index in the canonical enumeration of a finite field.
  std::uint64_t index() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement times_int(long long k) const;

  /// Embeds a GF(p) element into GF(p^2) (identity otherwise).
  FieldElement lift(const Field& target) const;
  /// Reduces a rational into GF(p); throws if p divides the denominator.
  FieldElement reduce(const Field& target) const;

  /// "p/q" (QQ), "a" (GF(p)), "a+b*u" (GF(p^2), "a" when b = 0).
  std::string to_string() const;

  bool operator==(const FieldElement& o) const;

 private:
  void require_same(const FieldElement& o) const;

  Field field_;
  std::variant<Residue, mpq_class> value_ = mpq_class(0);
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace triplepoint
