#include "triplepoint/field.hpp"

#include <charconv>
#include <ostream>

#include "triplepoint/error.hpp"

namespace triplepoint {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("parse", "invalid " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

mpq_class parse_rational(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw Error("parse", "empty number");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (!((c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0))) {
      throw Error("parse", "invalid number: '" + std::string(s) + "'");
    }
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error("parse", "invalid number: '" + std::string(s) + "'");
  if (q.get_den() == 0) throw Error("division-by-zero", "zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::uint32_t residue_of(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw Error("division-by-zero", "division by zero in GF(" + std::to_string(p) + ")");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  if (p == 2) throw Error("field", "GF(2) has no quadratic nonresidue");
  for (std::uint32_t n = 2; n < p; ++n) {
    if (pow_mod(n, (p - 1) / 2, p) == p - 1) return n;
  }
  throw Error("field", "no quadratic nonresidue mod " + std::to_string(p));
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error("field", "GF(p) requires a prime p < 2^31, got " + std::to_string(p));
  }
  return Field(FieldKind::prime, static_cast<std::uint32_t>(p), 0);
}

Field Field::quadratic(std::uint64_t p) {
  Field base = prime(p);
  return Field(FieldKind::quadratic, base.p_, smallest_nonresidue(base.p_));
}

Field Field::quadratic(std::uint64_t p, std::uint64_t nonresidue) {
  Field base = prime(p);
  if (p == 2 || nonresidue % p == 0 || pow_mod(nonresidue % p, (p - 1) / 2, p) != p - 1) {
    throw Error("field", std::to_string(nonresidue) + " is not a quadratic nonresidue mod " +
                             std::to_string(p));
  }
  return Field(FieldKind::quadratic, base.p_, static_cast<std::uint32_t>(nonresidue % p));
}

Field Field::parse(std::string_view tag) {
  tag = trim(tag);
  if (tag == "QQ") return rationals();
  if (tag.substr(0, 3) != "GF:") throw Error("field", "unknown field tag '" + std::string(tag) + "'");
  std::string_view rest = tag.substr(3);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) return prime(parse_uint(rest, "characteristic"));
  std::uint64_t p = parse_uint(rest.substr(0, colon), "characteristic");
  std::uint64_t e = parse_uint(rest.substr(colon + 1), "extension degree");
  if (e == 1) return prime(p);
  if (e == 2) return quadratic(p);
  throw Error("field", "only extension degrees 1 and 2 are supported");
}

std::uint64_t Field::order() const noexcept {
  switch (kind_) {
    case FieldKind::rationals: return 0;
    case FieldKind::prime: return p_;
    case FieldKind::quadratic: return std::uint64_t{p_} * p_;
  }
  return 0;
}

std::string Field::tag() const {
  switch (kind_) {
    case FieldKind::rationals: return "QQ";
    case FieldKind::prime: return "GF:" + std::to_string(p_);
    case FieldKind::quadratic: return "GF:" + std::to_string(p_) + ":2";
  }
  return {};
}

Field Field::prime_subfield() const {
  if (kind_ == FieldKind::quadratic) return Field(FieldKind::prime, p_, 0);
  return *this;
}

Field Field::quadratic_extension() const {
  if (kind_ == FieldKind::rationals) throw Error("field", "QQ has no canonical quadratic extension here");
  if (kind_ == FieldKind::quadratic) return *this;
  return quadratic(p_);
}

FieldElement Field::zero() const { return from_int(0); }
FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long long v) const {
  if (kind_ == FieldKind::rationals) return FieldElement(*this, mpq_class(mpz_class(static_cast<long>(v))));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElement(*this, FieldElement::Residue{static_cast<std::uint32_t>(r), 0});
}

FieldElement Field::from_rational(const mpq_class& q) const {
  if (kind_ == FieldKind::rationals) return FieldElement(*this, q);
  std::uint32_t num = residue_of(q.get_num(), p_);
  std::uint32_t den = residue_of(q.get_den(), p_);
  if (den == 0) {
    throw Error("division-by-zero", "denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
  }
  auto v = static_cast<std::uint32_t>(std::uint64_t{num} * inverse_mod(den, p_) % p_);
  return FieldElement(*this, FieldElement::Residue{v, 0});
}

FieldElement Field::element(std::uint64_t a, std::uint64_t b) const {
  if (kind_ == FieldKind::rationals) {
    if (b != 0) throw Error("field", "QQ elements have no u-part");
    return FieldElement(*this, mpq_class(mpz_class(static_cast<unsigned long>(a))));
  }
  if (kind_ == FieldKind::prime && b % p_ != 0) throw Error("field", "GF(p) elements have no u-part");
  return FieldElement(*this, FieldElement::Residue{static_cast<std::uint32_t>(a % p_),
                                                   static_cast<std::uint32_t>(b % p_)});
}

FieldElement Field::from_index(std::uint64_t i) const {
  if (!is_finite() || i >= order()) throw Error("field", "element index out of range");
  return element(i % p_, i / p_);
}

FieldElement Field::parse_element(std::string_view text) const {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = trim(s.substr(1, s.size() - 2));
  auto upos = s.find('u');
  if (upos == std::string_view::npos) return from_rational(parse_rational(s));
  if (kind_ != FieldKind::quadratic) throw Error("parse", "'u' is only meaningful over GF(p^2)");
  // a+b*u, a-b*u, b*u, u
  std::string_view body = s.substr(0, upos);
  if (upos + 1 != s.size()) throw Error("parse", "trailing text after 'u' in '" + std::string(text) + "'");
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  std::string_view a_text = split == std::string_view::npos ? std::string_view("0") : body.substr(0, split);
  std::string_view b_text = split == std::string_view::npos ? body : body.substr(split);
  if (b_text.empty() || b_text == "+") b_text = "1";
  if (b_text == "-") b_text = "-1";
  FieldElement a = from_rational(parse_rational(a_text));
  FieldElement b = from_rational(parse_rational(b_text));
  return a + b * element(0, 1);
}

// --------------------------------------------------------- FieldElement

FieldElement::FieldElement(const Field& field, Residue r) : field_(field), value_(r) {
  if (!field.is_finite()) throw Error("field", "residue given for QQ element");
}

FieldElement::FieldElement(const Field& field, mpq_class q) : field_(field), value_(std::move(q)) {
  if (field.is_finite()) throw Error("field", "rational given for finite field element");
  std::get<mpq_class>(value_).canonicalize();
}

bool FieldElement::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->a == 0 && r->b == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->a == 1 && r->b == 0;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error("field", "element of " + field_.tag() + " has no rational value");
}

FieldElement::Residue FieldElement::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return *r;
  throw Error("field", "rational element has no residue");
}

std::uint64_t FieldElement::index() const {
  Residue r = residue();
  return std::uint64_t{r.a} + std::uint64_t{r.b} * field_.characteristic();
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw Error("descriptor-mismatch", "field mismatch: " + field_.tag() + " vs " + o.field_.tag());
  }
}

FieldElement FieldElement::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint32_t p = field_.characteristic();
    return FieldElement(field_, Residue{r->a == 0 ? 0 : p - r->a, r->b == 0 ? 0 : p - r->b});
  }
  return FieldElement(field_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const Residue& s = std::get<Residue>(o.value_);
    std::uint32_t p = field_.characteristic();
    r->a = static_cast<std::uint32_t>((std::uint64_t{r->a} + s.a) % p);
    r->b = static_cast<std::uint32_t>((std::uint64_t{r->b} + s.b) % p);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  require_same(o);
  if (auto* r = std::get_if<Residue>(&value_)) {
    const Residue& s = std::get<Residue>(o.value_);
    const std::uint64_t p = field_.characteristic();
    if (field_.kind() == FieldKind::prime) {
      r->a = static_cast<std::uint32_t>(std::uint64_t{r->a} * s.a % p);
    } else {
      // (a + b u)(c + d u) = ac + n bd + (ad + bc) u
      std::uint64_t ac = std::uint64_t{r->a} * s.a % p;
      std::uint64_t bd = std::uint64_t{r->b} * s.b % p;
      std::uint64_t ad = std::uint64_t{r->a} * s.b % p;
      std::uint64_t bc = std::uint64_t{r->b} * s.a % p;
      r->a = static_cast<std::uint32_t>((ac + bd * field_.nonresidue()) % p);
      r->b = static_cast<std::uint32_t>((ad + bc) % p);
    }
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  require_same(o);
  return *this *= o.inverse();
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error("division-by-zero", "division by zero in " + field_.tag());
  if (auto* r = std::get_if<Residue>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    if (field_.kind() == FieldKind::prime) return FieldElement(field_, Residue{inverse_mod(r->a, p), 0});
    // (a + b u)^-1 = (a - b u) / (a^2 - n b^2)
    std::uint64_t norm = (std::uint64_t{r->a} * r->a % p +
                          (p - std::uint64_t{r->b} * r->b % p * field_.nonresidue() % p)) % p;
    std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(norm), p);
    return FieldElement(field_, Residue{static_cast<std::uint32_t>(r->a * inv % p),
                                        static_cast<std::uint32_t>((p - r->b) % p * inv % p)});
  }
  return FieldElement(field_, mpq_class(1 / std::get<mpq_class>(value_)));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::times_int(long long k) const { return *this * field_.from_int(k); }

FieldElement FieldElement::lift(const Field& target) const {
  if (field_ == target) return *this;
  if (field_.kind() == FieldKind::prime && target.kind() == FieldKind::quadratic &&
      field_.characteristic() == target.characteristic()) {
    return FieldElement(target, Residue{std::get<Residue>(value_).a, 0});
  }
  if (field_.is_rational() && target.is_finite()) return reduce(target);
  throw Error("descriptor-mismatch", "cannot map " + field_.tag() + " into " + target.tag());
}

FieldElement FieldElement::reduce(const Field& target) const {
  if (field_ == target) return *this;
  if (!field_.is_rational()) return lift(target);
  return target.from_rational(std::get<mpq_class>(value_));
}

std::string FieldElement::to_string() const {
  if (auto* r = std::get_if<Residue>(&value_)) {
    if (r->b == 0) return std::to_string(r->a);
    return std::to_string(r->a) + "+" + std::to_string(r->b) + "*u";
  }
  return std::get<mpq_class>(value_).get_str();
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && value_ == o.value_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

}  // namespace triplepoint
