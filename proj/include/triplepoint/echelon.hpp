#pragma once

// Incremental reduced row echelon forms over a field, specialised for
// GF(p) (raw residues) and generic FieldElement arithmetic.

#include <cstdint>
#include <utility>
#include <vector>

#include "triplepoint/field.hpp"

namespace triplepoint {

struct PrimeOps {
  using value_type = std::uint32_t;
  std::uint32_t p;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  value_type inv(value_type a) const { return inverse_mod(a, p); }
  value_type from(const FieldElement& e) const { return e.residue().a; }
  FieldElement to(const Field& f, value_type a) const { return f.element(a); }

  /// v[j] -= factor * row[j] for j in [begin, end).
  void axpy(std::vector<value_type>& v, value_type factor, const std::vector<value_type>& row,
            std::size_t begin) const {
    const std::uint64_t f = p - factor;
    const std::size_t n = v.size();
    for (std::size_t j = begin; j < n; ++j) {
      if (row[j] != 0) v[j] = static_cast<value_type>((v[j] + f * row[j]) % p);
    }
  }
};

struct GenericOps {
  using value_type = FieldElement;
  Field field;

  value_type zero() const { return field.zero(); }
  value_type one() const { return field.one(); }
  bool is_zero(const value_type& a) const { return a.is_zero(); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const { return a.inverse(); }
  value_type from(const FieldElement& e) const { return e; }
  FieldElement to(const Field&, const value_type& a) const { return a; }

  void axpy(std::vector<value_type>& v, const value_type& factor, const std::vector<value_type>& row,
            std::size_t begin) const {
    for (std::size_t j = begin; j < v.size(); ++j) {
      if (!row[j].is_zero()) v[j] -= factor * row[j];
    }
  }
};

/// Runs `fn(ops)` with the fastest arithmetic for `field`.
template <class Fn>
decltype(auto) with_field_ops(const Field& field, Fn&& fn) {
  if (field.kind() == FieldKind::prime) return fn(PrimeOps{field.characteristic()});
  return fn(GenericOps{field});
}

/// Row space kept in reduced row echelon form; the pivot of a row is its
/// leftmost nonzero column.
template <class Ops>
class Echelon {
 public:
  using T = typename Ops::value_type;

  Echelon(Ops ops, std::size_t cols) : ops_(std::move(ops)), cols_(cols), row_of_col_(cols, -1) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<T>>& rows() const { return rows_; }
  std::size_t pivot(std::size_t row) const { return pivots_[row]; }
  bool is_pivot(std::size_t col) const { return row_of_col_[col] >= 0; }
  const Ops& ops() const { return ops_; }

  /// Clears every pivot column of v.
  void reduce(std::vector<T>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      std::size_t c = pivots_[i];
      if (!ops_.is_zero(v[c])) {
        T factor = v[c];
        ops_.axpy(v, factor, rows_[i], c);
      }
    }
  }

  /// Adds v to the row space; returns true if the rank grew.
  bool insert(std::vector<T> v) {
    reduce(v);
    std::size_t c = 0;
    while (c < cols_ && ops_.is_zero(v[c])) ++c;
    if (c == cols_) return false;
    T inv = ops_.inv(v[c]);
    for (std::size_t j = c; j < cols_; ++j) v[j] = ops_.mul(v[j], inv);
    for (auto& row : rows_) {
      if (!ops_.is_zero(row[c])) {
        T factor = row[c];
        ops_.axpy(row, factor, v, c);
      }
    }
    row_of_col_[c] = static_cast<long>(rows_.size());
    pivots_.push_back(c);
    rows_.push_back(std::move(v));
    return true;
  }

  /// Right null space basis: one vector per non-pivot column f, with a 1 in
  /// position f and zeros in the other free positions.
  std::vector<std::vector<T>> kernel() const {
    std::vector<std::vector<T>> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot(f)) continue;
      std::vector<T> v(cols_, ops_.zero());
      v[f] = ops_.one();
      for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = ops_.neg(rows_[i][f]);
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  Ops ops_;
  std::size_t cols_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_col_;
};

}  // namespace triplepoint
