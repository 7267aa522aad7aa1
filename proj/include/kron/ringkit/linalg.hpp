#pragma once

#include <optional>
#include <vector>

#include "kron/ringkit/domain.hpp"

namespace kron {

using Vec = std::vector<Scalar>;

/// Dense matrix over a field (ℚ or 𝔽_q), row-major.
class FieldMatrix {
 public:
  FieldMatrix(Domain field, std::size_t rows, std::size_t cols);
  /// Matrix whose columns are the given vectors.
  static FieldMatrix from_columns(const Domain& field, const std::vector<Vec>& cols, std::size_t rows);
  static FieldMatrix identity(const Domain& field, std::size_t n);

  const Domain& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vec column(std::size_t j) const;

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  Vec apply(const Vec& v) const;

  /// Reduced row echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of the right kernel {v : M v = 0}, one vector per free column.
  std::vector<Vec> kernel() const;
  /// Some solution of M x = b, if one exists.
  std::optional<Vec> solve(const Vec& b) const;
  std::optional<FieldMatrix> inverse() const;
  Scalar det() const;

 private:
  Domain field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

/// Basis (as rows in echelon form) of the span of the given vectors.
std::vector<Vec> span_basis(const Domain& field, const std::vector<Vec>& vectors, std::size_t dim);

}  // namespace kron
