#pragma once

#include <cstdint>
#include <vector>

#include "kron/algebra/algebra.hpp"
#include "kron/ringkit/linalg.hpp"

namespace kron {

/// A finite free algebra over a field with constant structure constants,
/// stored densely as field elements.
class DenseAlgebra {
 public:
  /// The algebra's base must be a field without base variables.
  explicit DenseAlgebra(const FiniteFreeAlgebra& b);

  const Domain& field() const { return field_; }
  std::size_t rank() const { return n_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * n_ + j) * n_ + k]; }

  Vec zero() const { return Vec(n_, field_.zero()); }
  const Vec& one() const { return unit_; }
  Vec basis(std::size_t i) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, const Scalar& s) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec pow(Vec a, std::uint64_t e) const;
  bool is_zero(const Vec& a) const;

  /// Matrix of y ↦ a·y.
  FieldMatrix mul_matrix(const Vec& a) const;
  /// Columns 1, a, ..., a^{n-1}.
  FieldMatrix power_matrix(const Vec& a) const;
  /// Whether 1, a, ..., a^{n-1} is a basis.
  bool generates(const Vec& a) const;
  /// Matrix of a 𝔽_q-linear map given by its values on the basis.
  template <class F>
  FieldMatrix linear_map(F&& f) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < n_; ++j) cols.push_back(f(basis(j)));
    return FieldMatrix::from_columns(field_, cols, n_);
  }

 private:
  Domain field_;
  std::size_t n_;
  std::vector<Scalar> table_;
  Vec unit_;
};

/// Text form of a coordinate vector, e.g. "(1, 0, w+1)".
std::string vec_to_string(const Domain& field, const Vec& v);

}  // namespace kron
