#pragma once

#include <cstddef>
#include <vector>

#include "triplepoint/field.hpp"

namespace triplepoint {

using Vector = std::vector<FieldElement>;

/// Dense rectangular matrix over one field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows);
  static Matrix identity(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;

  Vector apply(const Vector& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix transpose() const;

  bool operator==(const Matrix&) const = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

std::size_t rank(const Matrix& m);

/// Right null space in pivot-normalised form: the i-th vector has a 1 at the
/// i-th free column and 0 at the other free columns (columns in order).
std::vector<Vector> kernel_basis(const Matrix& m);

/// Reduced row echelon form (nonzero rows only) and the pivot columns.
struct RowEchelonForm {
  Matrix rows;
  std::vector<std::size_t> pivots;
};
RowEchelonForm row_echelon(const Matrix& m);

/// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& m);

}  // namespace triplepoint
