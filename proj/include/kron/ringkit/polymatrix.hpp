#pragma once

#include <vector>

#include "kron/ringkit/upoly.hpp"

namespace kron {

/// Dense matrix with MultiPoly entries over a common ring, row-major.
class PolyMatrix {
 public:
  PolyMatrix(PolyRing ring, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(const PolyRing& ring, std::size_t n);

  const PolyRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MultiPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  bool operator==(const PolyMatrix& other) const;
  PolyMatrix transpose() const;
  PolyMatrix change_domain(const Domain& target) const;
  PolyMatrix substitute(const PolyRing& target, const std::vector<MultiPoly>& images) const;

  /// Fraction-free (Bareiss) determinant with exact divisions; valid over
  /// ℤ, ℚ, finite fields and polynomial rings over them.
  MultiPoly det() const;
  /// det(X·I - M) by Berkowitz's division-free recurrence; monic of degree n.
  UPoly charpoly(const std::string& var = "X") const;

 private:
  PolyRing ring_;
  std::size_t rows_, cols_;
  std::vector<MultiPoly> entries_;
};

}  // namespace kron
