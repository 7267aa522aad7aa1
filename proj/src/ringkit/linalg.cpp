#include "kron/ringkit/linalg.hpp"

#include "kron/errors.hpp"

namespace kron {

FieldMatrix::FieldMatrix(Domain field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_.zero()) {
  if (!field_.is_field()) throw InvalidInput("FieldMatrix requires a field");
}

FieldMatrix FieldMatrix::from_columns(const Domain& field, const std::vector<Vec>& cols, std::size_t rows) {
  FieldMatrix m(field, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

FieldMatrix FieldMatrix::identity(const Domain& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Vec FieldMatrix::column(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("FieldMatrix *: shape mismatch");
  const Domain& f = a.field_;
  FieldMatrix r(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (f.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) f.add_mul(r.at(i, j), a.at(i, k), b.at(k, j));
    }
  return r;
}

Vec FieldMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InvalidInput("FieldMatrix::apply: length mismatch");
  Vec r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) field_.add_mul(r[i], at(i, j), v[j]);
  return r;
}

std::vector<std::size_t> FieldMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pr = row;
    while (pr < rows_ && field_.is_zero(at(pr, col))) ++pr;
    if (pr == rows_) continue;
    if (pr != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(pr, j), at(row, j));
    const Scalar inv = field_.inv(at(row, col));
    for (std::size_t j = col; j < cols_; ++j) at(row, j) = field_.mul(at(row, j), inv);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || field_.is_zero(at(i, col))) continue;
      const Scalar factor = field_.neg(at(i, col));
      for (std::size_t j = col; j < cols_; ++j) field_.add_mul(at(i, j), factor, at(row, j));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t FieldMatrix::rank() const {
  FieldMatrix m = *this;
  return m.rref().size();
}

std::vector<Vec> FieldMatrix::kernel() const {
  FieldMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> FieldMatrix::solve(const Vec& b) const {
  if (b.size() != rows_) throw InvalidInput("solve: length mismatch");
  FieldMatrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  const auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vec x(cols_, field_.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::optional<FieldMatrix> FieldMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse: matrix is not square");
  const std::size_t n = rows_;
  FieldMatrix aug(field_, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = field_.one();
  }
  const auto pivots = aug.rref();
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  FieldMatrix inv(field_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

Scalar FieldMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("det: matrix is not square");
  FieldMatrix m = *this;
  const std::size_t n = rows_;
  Scalar d = field_.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pr = col;
    while (pr < n && field_.is_zero(m.at(pr, col))) ++pr;
    if (pr == n) return field_.zero();
    if (pr != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(col, j));
      d = field_.neg(d);
    }
    d = field_.mul(d, m.at(col, col));
    const Scalar inv = field_.inv(m.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (field_.is_zero(m.at(i, col))) continue;
      const Scalar factor = field_.neg(field_.mul(m.at(i, col), inv));
      for (std::size_t j = col; j < n; ++j) field_.add_mul(m.at(i, j), factor, m.at(col, j));
    }
  }
  return d;
}

std::vector<Vec> span_basis(const Domain& field, const std::vector<Vec>& vectors, std::size_t dim) {
  FieldMatrix m(field, vectors.size(), dim);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
  const auto pivots = m.rref();
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Vec row;
    for (std::size_t j = 0; j < dim; ++j) row.push_back(m.at(r, j));
    basis.push_back(std::move(row));
  }
  return basis;
}

}  // namespace kron
