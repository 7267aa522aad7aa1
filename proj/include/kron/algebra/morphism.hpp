#pragma once

#include <vector>

#include "kron/algebra/algebra.hpp"

namespace kron {

/// A-algebra morphism u : B → C. Column j of the matrix holds the
/// C-coordinates of u(e_j). Validated: u(1) = 1 and u(e_i e_j) = u(e_i)u(e_j).
class AlgebraMorphism {
 public:
  AlgebraMorphism(FiniteFreeAlgebra source, FiniteFreeAlgebra target, PolyMatrix matrix);

  static AlgebraMorphism identity(const FiniteFreeAlgebra& b);
  /// Projection of a product algebra onto its k-th factor.
  static AlgebraMorphism projection(const FiniteFreeAlgebra& product, std::size_t k);
  /// The diagonal map B → B × B.
  static AlgebraMorphism diagonal_embedding(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& bxb);
  /// B → B ⊗ C, x ↦ x ⊗ 1.
  static AlgebraMorphism tensor_inclusion(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& c,
                                          const FiniteFreeAlgebra& bc);

  const FiniteFreeAlgebra& source() const { return source_; }
  const FiniteFreeAlgebra& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }

  /// Image of an element given on the source basis (coordinates in any ring S).
  AlgebraElement apply(const AlgebraElement& x) const;
  /// this ∘ first.
  AlgebraMorphism after(const AlgebraMorphism& first) const;

 private:
  FiniteFreeAlgebra source_;
  FiniteFreeAlgebra target_;
  PolyMatrix matrix_;
};

}  // namespace kron
