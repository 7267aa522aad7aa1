#include "kron/ringkit/polymatrix.hpp"

#include "kron/errors.hpp"

namespace kron {

PolyMatrix::PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, MultiPoly(ring_)) {}

PolyMatrix PolyMatrix::identity(const PolyRing& ring, std::size_t n) {
  PolyMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = MultiPoly::from_int(ring, 1);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("PolyMatrix *: shape mismatch");
  if (a.ring_ != b.ring_) throw InvalidInput("PolyMatrix *: ring mismatch");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

PolyMatrix PolyMatrix::change_domain(const Domain& target) const {
  PolyMatrix r(ring_.with_domain(target), rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].change_domain(target);
  return r;
}

PolyMatrix PolyMatrix::substitute(const PolyRing& target, const std::vector<MultiPoly>& images) const {
  PolyMatrix r(target, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].substitute(target, images);
  return r;
}

MultiPoly PolyMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("det: matrix is not square");
  const std::size_t n = rows_;
  if (n == 0) return MultiPoly::from_int(ring_, 1);
  std::vector<MultiPoly> a = entries_;
  auto A = [&](std::size_t i, std::size_t j) -> MultiPoly& { return a[i * n + j]; };
  MultiPoly prev = MultiPoly::from_int(ring_, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && A(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return MultiPoly(ring_);
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = A(k, k) * A(i, j) - A(i, k) * A(k, j);
        auto q = num.divide_exact(prev);
        if (!q) throw DomainError("det: Bareiss division was not exact");
        A(i, j) = std::move(*q);
      }
      A(i, k) = MultiPoly(ring_);
    }
    prev = A(k, k);
  }
  MultiPoly d = A(n - 1, n - 1);
  return negate ? -d : d;
}

UPoly PolyMatrix::charpoly(const std::string& var) const {
  if (rows_ != cols_) throw InvalidInput("charpoly: matrix is not square");
  const std::size_t n = rows_;
  const MultiPoly one = MultiPoly::from_int(ring_, 1);
  if (n == 0) return UPoly(ring_, {one}, var);
  // vect holds the characteristic polynomial of the leading r×r block,
  // highest coefficient first.
  std::vector<MultiPoly> vect = {one, -at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R·C, -R·A·C, ..., -R·A^{r-1}·C where R is
    // row r and C column r restricted to the leading block A.
    std::vector<MultiPoly> t;
    t.reserve(r + 2);
    t.push_back(one);
    t.push_back(-at(r, r));
    std::vector<MultiPoly> col(r, MultiPoly(ring_));
    for (std::size_t i = 0; i < r; ++i) col[i] = at(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      MultiPoly s(ring_);
      for (std::size_t j = 0; j < r; ++j) {
        if (!col[j].is_zero() && !at(r, j).is_zero()) s += at(r, j) * col[j];
      }
      t.push_back(-s);
      if (k + 1 == r) break;
      std::vector<MultiPoly> next(r, MultiPoly(ring_));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          if (!col[j].is_zero() && !at(i, j).is_zero()) next[i] += at(i, j) * col[j];
        }
      col = std::move(next);
    }
    std::vector<MultiPoly> nv(r + 2, MultiPoly(ring_));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) {
        if (!t[i - j].is_zero() && !vect[j].is_zero()) nv[i] += t[i - j] * vect[j];
      }
    }
    vect = std::move(nv);
  }
  std::vector<MultiPoly> coeffs(vect.rbegin(), vect.rend());
  return UPoly(ring_, std::move(coeffs), var);
}

}  // namespace kron
