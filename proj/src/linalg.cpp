#include "triplepoint/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "triplepoint/echelon.hpp"
#include "triplepoint/error.hpp"

namespace triplepoint {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("shape", "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!(rows[r][c].field() == field)) throw Error("descriptor-mismatch", "matrix entry over another field");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("shape", "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error("shape", "matrix-vector size mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("shape", "matrix product size mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, c) += at(r, k) * o.at(k, c);
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

namespace {

template <class Ops>
Echelon<Ops> eliminate(const Ops& ops, const Matrix& m) {
  Echelon<Ops> ech(ops, m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<typename Ops::value_type> row;
    row.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(ops.from(m.at(r, c)));
    ech.insert(std::move(row));
    if (ech.rank() == m.cols()) break;
  }
  return ech;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  return with_field_ops(m.field(), [&](const auto& ops) { return eliminate(ops, m).rank(); });
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  return with_field_ops(m.field(), [&](const auto& ops) {
    auto ech = eliminate(ops, m);
    std::vector<Vector> out;
    for (const auto& v : ech.kernel()) {
      Vector e;
      e.reserve(v.size());
      for (const auto& x : v) e.push_back(ops.to(m.field(), x));
      out.push_back(std::move(e));
    }
    return out;
  });
}

RowEchelonForm row_echelon(const Matrix& m) {
  return with_field_ops(m.field(), [&](const auto& ops) {
    auto ech = eliminate(ops, m);
    std::vector<std::size_t> order(ech.rank());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return ech.pivot(a) < ech.pivot(b); });
    RowEchelonForm out{Matrix(m.field(), ech.rank(), m.cols()), {}};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& row = ech.rows()[order[i]];
      for (std::size_t c = 0; c < m.cols(); ++c) out.rows.at(i, c) = ops.to(m.field(), row[c]);
      out.pivots.push_back(ech.pivot(order[i]));
    }
    return out;
  });
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("shape", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = m.field().one();
  }
  RowEchelonForm ref = row_echelon(aug);
  if (ref.pivots.size() < n || ref.pivots[n - 1] != n - 1) throw Error("singular", "matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.at(r, c) = ref.rows.at(r, n + c);
  }
  return out;
}

}  // namespace triplepoint
