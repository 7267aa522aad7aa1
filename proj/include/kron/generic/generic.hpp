#pragma once

#include <string>
#include <vector>

#include "kron/algebra/algebra.hpp"
#include "kron/algebra/morphism.hpp"

namespace kron {

/// S = A[T1..Tn]: the base ring's variables followed by one parameter
/// variable per basis vector (T_i dual to e_i, 1-based names).
class ParameterRing {
 public:
  explicit ParameterRing(const FiniteFreeAlgebra& b);

  const FiniteFreeAlgebra& algebra() const { return algebra_; }
  const PolyRing& ring() const { return ring_; }
  std::size_t rank() const { return algebra_.rank(); }
  /// Registry index of T_{i+1}.
  std::size_t t_index(std::size_t i) const { return offset_ + i; }
  MultiPoly t(std::size_t i) const { return MultiPoly::variable(ring_, offset_ + i); }
  /// "X", or "Z" when the base ring already uses X.
  const std::string& outer_var() const { return outer_; }
  /// S with the outer variable placed first, for whole-polynomial views.
  PolyRing ring_with_outer() const;

 private:
  FiniteFreeAlgebra algebra_;
  PolyRing ring_;
  std::size_t offset_;
  std::string outer_;
};

/// ξ = Σ T_i e_i in S ⊗ B.
AlgebraElement generic_element(const ParameterRing& s);

struct GenericCharPoly {
  ParameterRing params;
  UPoly poly;
};

/// F_{B/A}(X) = det(X - ξ) over S.
GenericCharPoly gcp(const FiniteFreeAlgebra& b);

/// γ_x: substitutes T_i ↦ x_i (x given on the base ring) in a polynomial of S.
MultiPoly specialize(const ParameterRing& s, const MultiPoly& f, const std::vector<MultiPoly>& x);
UPoly specialize(const ParameterRing& s, const UPoly& f, const std::vector<MultiPoly>& x);
AlgebraElement specialize(const ParameterRing& s, const AlgebraElement& xi, const std::vector<MultiPoly>& x);

/// v = Sym(u^∨) : S_C → S_B for u : B → C, T^C_k ↦ Σ_j u_kj T^B_j; base
/// variables map to themselves.
class ParameterMap {
 public:
  explicit ParameterMap(const AlgebraMorphism& u);

  const ParameterRing& source() const { return from_; }
  const ParameterRing& target() const { return to_; }
  const std::vector<MultiPoly>& images() const { return images_; }

  MultiPoly apply(const MultiPoly& f) const;
  UPoly apply(const UPoly& f) const;
  /// Rank of the linear substitution (= rank C when v is injective), computed
  /// over the fraction field of a constant base.
  std::size_t linear_rank() const;
  bool is_injective() const { return linear_rank() == from_.rank(); }

 private:
  ParameterRing from_;
  ParameterRing to_;
  AlgebraMorphism u_;
  std::vector<MultiPoly> images_;
};

}  // namespace kron
