#pragma once

#include <string>
#include <vector>

#include "kron/algebra/algebra.hpp"

namespace kron::testing {

struct CatalogEntry {
  std::string name;
  FiniteFreeAlgebra algebra;
  /// Expected: locally simple over its base.
  bool locally_simple;
};

PolyRing integers();
FiniteFreeAlgebra gaussian();
FiniteFreeAlgebra sqrt2();
FiniteFreeAlgebra cbrt2();
FiniteFreeAlgebra dual_numbers();
FiniteFreeAlgebra dedekind_order();
FiniteFreeAlgebra radicial();

/// The desk-scale catalog shared by the property and acceptance checks.
std::vector<CatalogEntry> catalog();

/// Y^3 + a2 Y^2 + a1 Y + a0 over ℤ[a0,a1,a2].
FiniteFreeAlgebra symbolic_cubic();

/// F(X) of the symbolic cubic, written in (X - T1)-adic form with the
/// parameters T1, T2, T3 dual to 1, y, y^2.
extern const char* const kCubicGcp;
/// det U of the symbolic cubic.
extern const char* const kCubicDetU;
/// Norm form of the radicial biquadratic over F_2[X,Y].
extern const char* const kRadicialNorm;

}  // namespace kron::testing
