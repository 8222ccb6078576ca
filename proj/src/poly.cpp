#include "triplepoint/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "triplepoint/error.hpp"

namespace triplepoint {

// ------------------------------------------------------------- Monomial

Monomial::Monomial(std::array<int, kNumVars> exps) {
  std::uint64_t deg = 0;
  std::uint64_t key = 0;
  for (int i = 0; i < kNumVars; ++i) {
    if (exps[i] < 0 || exps[i] > 0xfff) throw Error("monomial", "exponent out of range");
    deg += static_cast<std::uint64_t>(exps[i]);
    key = (key << 12) | static_cast<std::uint64_t>(exps[i]);
  }
  key_ = (deg << 48) | key;
}

Monomial Monomial::var(int i, int power) {
  std::array<int, kNumVars> e{};
  e[i] = power;
  return Monomial(e);
}

std::array<int, kNumVars> Monomial::exponents() const {
  std::array<int, kNumVars> e{};
  for (int i = 0; i < kNumVars; ++i) e[i] = exponent(i);
  return e;
}

bool Monomial::divides(Monomial other) const noexcept {
  for (int i = 0; i < kNumVars; ++i) {
    if (exponent(i) > other.exponent(i)) return false;
  }
  return true;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    int e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += kVarNames[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

namespace {

void collect(int degree, std::span<const int> vars, std::size_t pos, std::array<int, kNumVars>& exps,
             std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    exps[vars[pos]] = degree;
    out.emplace_back(exps);
    exps[vars[pos]] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    exps[vars[pos]] = e;
    collect(degree - e, vars, pos + 1, exps, out);
  }
  exps[vars[pos]] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int degree, std::span<const int> vars) {
  std::vector<Monomial> out;
  if (degree < 0 || vars.empty()) return out;
  std::array<int, kNumVars> exps{};
  collect(degree, vars, 0, exps, out);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Monomial> monomials_of_degree(int degree) {
  static constexpr std::array<int, kNumVars> all = {0, 1, 2, 3};
  return monomials_of_degree(degree, all);
}

std::vector<Monomial> monomials_up_to_degree(int max_degree, std::span<const int> vars) {
  std::vector<Monomial> out;
  for (int k = 0; k <= max_degree; ++k) {
    auto part = monomials_of_degree(k, vars);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ------------------------------------------------------------ MultiPoly

MultiPoly MultiPoly::constant(const FieldElement& c) {
  MultiPoly p(c.field());
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::monomial(const FieldElement& c, Monomial m) {
  MultiPoly p(c.field());
  p.add_term(m, c);
  return p;
}

FieldElement MultiPoly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::add_term(Monomial m, const FieldElement& c) {
  if (!(c.field() == field_)) {
    throw Error("descriptor-mismatch", "coefficient over " + c.field().tag() + " added to polynomial over " +
                                           field_.tag());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int MultiPoly::min_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool MultiPoly::is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

int MultiPoly::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return -1;
  return degree();
}

MultiPoly MultiPoly::homogeneous_part(int k) const {
  MultiPoly out(field_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

MultiPoly MultiPoly::truncate(int k) const {
  MultiPoly out(field_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() <= k) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

MultiPoly MultiPoly::homogenize(int var, int degree) const {
  MultiPoly out(field_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > degree) throw Error("degree", "cannot homogenize to a lower degree");
    out.add_term(m * Monomial::var(var, degree - m.degree()), c);
  }
  return out;
}

int MultiPoly::var_valuation(int var) const {
  if (terms_.empty()) return 0;
  int v = 0xfff;
  for (const auto& [m, c] : terms_) v = std::min(v, m.exponent(var));
  return v;
}

void MultiPoly::require_same(const MultiPoly& o) const {
  if (!(field_ == o.field_)) {
    throw Error("descriptor-mismatch", "polynomials over " + field_.tag() + " and " + o.field_.tag());
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same(b);
  MultiPoly out(a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::scale(const FieldElement& c) const {
  MultiPoly out(field_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(field_.one());
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::times_monomial(Monomial m) const {
  MultiPoly out(field_);
  for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, c);
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  if (var < 0 || var >= kNumVars) throw Error("variable", "variable index out of range");
  MultiPoly out(field_);
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    out.add_term(m / Monomial::var(var), c.times_int(e));
  }
  return out;
}

FieldElement MultiPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != kNumVars) throw Error("arity", "evaluation point needs 4 coordinates");
  std::array<std::vector<FieldElement>, kNumVars> powers;
  for (int i = 0; i < kNumVars; ++i) {
    if (!(point[i].field() == field_)) throw Error("descriptor-mismatch", "point and polynomial fields differ");
    powers[i].push_back(field_.one());
  }
  FieldElement sum = field_.zero();
  for (const auto& [m, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.exponent(i);
      while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * point[i]);
      t *= powers[i][e];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != kNumVars) throw Error("arity", "substitution needs 4 images");
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  for (int i = 0; i < kNumVars; ++i) {
    require_same(images[i]);
    powers[i].push_back(constant(field_.one()));
  }
  MultiPoly out(field_);
  for (const auto& [m, c] : terms_) {
    MultiPoly t = constant(c);
    for (int i = 0; i < kNumVars; ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * images[i]);
      t = t * powers[i][e];
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::change_field(const Field& target) const {
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) out.add_term(m, c.lift(target));
  return out;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scale(terms_.begin()->second.inverse());
}

std::vector<FieldElement> MultiPoly::coefficients(std::span<const Monomial> basis) const {
  std::vector<FieldElement> out;
  out.reserve(basis.size());
  std::size_t found = 0;
  for (Monomial m : basis) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      out.push_back(field_.zero());
    } else {
      out.push_back(it->second);
      ++found;
    }
  }
  if (found != terms_.size()) throw Error("basis", "polynomial has terms outside the requested basis");
  return out;
}

MultiPoly MultiPoly::from_coefficients(const Field& field, std::span<const Monomial> basis,
                                       std::span<const FieldElement> coeffs) {
  if (basis.size() != coeffs.size()) throw Error("arity", "basis and coefficient lengths differ");
  MultiPoly out(field);
  for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], coeffs[i]);
  return out;
}

// ---------------------------------------------------------- text format

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    std::string coeff;
    if (field_.is_rational()) {
      mpq_class q = c.rational();
      negative = q < 0;
      if (negative) q = -q;
      coeff = q.get_str();
    } else if (c.residue().b != 0) {
      coeff = "(" + c.to_string() + ")";
    } else {
      coeff = c.to_string();
    }
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    bool constant_term = m.degree() == 0;
    if (constant_term) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += m.to_string();
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field) : text_(text), field_(field) {}

  MultiPoly parse() {
    MultiPoly result(field_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [c, m] = term();
      result.add_term(m, negative ? -c : c);
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("parse", what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }
  static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w' || c == 't'; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<FieldElement, Monomial> term() {
    FieldElement c = field_.one();
    Monomial m;
    bool have_coeff = false;
    if (is_digit(peek()) || peek() == '(') {
      c = coefficient();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!is_var(peek())) fail("expected variable after '*'");
      }
    }
    if (is_var(peek())) {
      m = monomial();
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    return {c, m};
  }

  FieldElement coefficient() {
    if (peek() == '(') {
      std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced '('");
      FieldElement c = field_.parse_element(text_.substr(pos_, close - pos_ + 1));
      pos_ = close + 1;
      return c;
    }
    std::string num = digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      num += "/" + digits();
    }
    return field_.parse_element(num);
  }

  Monomial monomial() {
    std::array<int, kNumVars> exps{};
    while (true) {
      skip_ws();
      char v = peek();
      if (!is_var(v)) fail("expected variable");
      ++pos_;
      int idx = v == 'x' ? 0 : v == 'y' ? 1 : v == 'z' ? 2 : 3;
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = std::stoi(digits());
      }
      exps[idx] += e;
      skip_ws();
      std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (is_var(peek())) continue;
        pos_ = save;
        break;
      }
      if (is_var(peek())) continue;
      break;
    }
    return Monomial(exps);
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const Field& field) { return PolyParser(text, field).parse(); }

// ------------------------------------------------------------- division

DivisionResult divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error("division-by-zero", "division by the zero polynomial");
  if (!(f.field() == g.field())) throw Error("descriptor-mismatch", "division across fields");
  const auto& [lead_m, lead_c] = *g.terms().begin();
  FieldElement lead_inv = lead_c.inverse();
  MultiPoly rest = f;
  DivisionResult out{MultiPoly(f.field()), MultiPoly(f.field())};
  while (!rest.is_zero()) {
    auto [m, c] = *rest.terms().begin();
    if (lead_m.divides(m)) {
      Monomial q = m / lead_m;
      FieldElement coeff = c * lead_inv;
      out.quotient.add_term(q, coeff);
      rest -= g.times_monomial(q).scale(coeff);
    } else {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return out;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  DivisionResult r = divide(f, g);
  if (!r.remainder.is_zero()) {
    throw Error("inexact-division", "division is not exact; remainder " + r.remainder.to_string());
  }
  return r.quotient;
}

int multiplicity_of_factor(const MultiPoly& f, const MultiPoly& g) {
  if (g.degree() < 1) throw Error("degree", "factor must be nonconstant");
  if (f.is_zero()) throw Error("degree", "every polynomial divides zero");
  int count = 0;
  MultiPoly rest = f;
  while (true) {
    DivisionResult r = divide(rest, g);
    if (!r.remainder.is_zero()) return count;
    rest = std::move(r.quotient);
    ++count;
  }
}

// ---------------------------------------------------------- determinant

MultiPoly determinant(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) throw Error("shape", "empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw Error("shape", "determinant of a non-square matrix");
  }
  if (n > 16) throw Error("shape", "determinant limited to small matrices");
  const Field field = m[0][0].field();
  // minors[mask] = determinant of rows (n - popcount(mask))..n-1 restricted to columns in mask.
  std::unordered_map<std::uint32_t, MultiPoly> minors;
  minors.emplace(0U, MultiPoly::constant(field.one()));
  for (std::size_t size = 1; size <= n; ++size) {
    std::size_t row = n - size;
    std::unordered_map<std::uint32_t, MultiPoly> next;
    for (const auto& [mask, unused] : minors) {
      (void)unused;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t bigger = mask | (1U << j);
        if (bigger == mask || next.count(bigger)) continue;
        MultiPoly sum(field);
        int sign_pos = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (!(bigger & (1U << c))) continue;
          const MultiPoly& entry = m[row][c];
          if (!entry.is_zero()) {
            const MultiPoly& sub = minors.at(bigger & ~(1U << c));
            if (!sub.is_zero()) {
              MultiPoly t = entry * sub;
              if (sign_pos % 2) {
                sum -= t;
              } else {
                sum += t;
              }
            }
          }
          ++sign_pos;
        }
        next.emplace(bigger, std::move(sum));
      }
    }
    minors = std::move(next);
  }
  return minors.at((n >= 32 ? 0U : (1U << n) - 1U));
}

}  // namespace triplepoint
