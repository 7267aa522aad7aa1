#pragma once

#include <gmpxx.h>

#include <vector>

#include "kron/algebra/algebra.hpp"

namespace kron {

/// A[Y]/(g) on the basis 1, y, ..., y^{n-1}; g is a monic UPoly over the base
/// ring (its variable name is irrelevant).
FiniteFreeAlgebra from_monogenic(const UPoly& g, std::string label = {});
/// Same, from the low coefficients c_0..c_{n-1} of g = Y^n + Σ c_i Y^i.
FiniteFreeAlgebra from_monogenic(const PolyRing& base, const std::vector<MultiPoly>& low_coeffs,
                                 std::string label = {});
FiniteFreeAlgebra from_monogenic(const PolyRing& base, const std::vector<long>& low_coeffs, std::string label = {});

/// A^n with componentwise multiplication.
FiniteFreeAlgebra diagonal(const PolyRing& base, std::size_t n);

/// B × C with block structure constants; the factors are recorded.
FiniteFreeAlgebra product(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& c);
FiniteFreeAlgebra product(const std::vector<FiniteFreeAlgebra>& factors);

/// A[u,v]/(u², v²) on the basis 1, u, v, uv.
FiniteFreeAlgebra biquadratic_nilpotent(const PolyRing& base);
/// A[u,v]/(u² - X, v² - Y) for a base of characteristic 2 with variables X, Y.
FiniteFreeAlgebra biquadratic_radicial(const PolyRing& base);

/// B ⊗_A C on the basis e_i ⊗ f_j (index i*rank(C) + j).
FiniteFreeAlgebra tensor(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& c);

/// The algebra on the new basis f_j = Σ_i P[i][j] e_i. The base must have no
/// variables; the new constants are computed over ℚ and mapped back into the
/// base domain (DomainError when they are not integral over ℤ).
FiniteFreeAlgebra change_basis(const FiniteFreeAlgebra& b, const std::vector<std::vector<mpq_class>>& p,
                               std::string label = {});

/// The ℤ-order of ℚ[Y]/(g) spanned by the given vectors (coordinates on the
/// power basis). Throws DomainError if the span is not closed under products.
FiniteFreeAlgebra order_from_basis(const std::vector<long>& g_low_coeffs,
                                   const std::vector<std::vector<mpq_class>>& basis, std::string label = {});

/// Reduction/extension of scalars along the canonical map into `target`.
FiniteFreeAlgebra base_change(const FiniteFreeAlgebra& b, const Domain& target);
/// Substitutes values for the base variables, producing an algebra over the
/// bare coefficient domain.
FiniteFreeAlgebra specialize_base(const FiniteFreeAlgebra& b, const std::vector<Scalar>& values);

}  // namespace kron
