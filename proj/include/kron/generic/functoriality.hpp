#pragma once

#include "kron/generic/generic.hpp"
#include "kron/report.hpp"

namespace kron {

/// σ an automorphism of B: v(F_B) = F_B.
VerificationReport check_automorphism_invariance(const AlgebraMorphism& sigma);

/// u : B → C with C free of rank d over B: v(F_C) = F_B^d.
VerificationReport check_free_extension(const AlgebraMorphism& u, unsigned d);

/// u : B → C = B/I with I nilpotent and e the summed ranks of the I-adic
/// graded pieces: F_B = v(F_C^e).
VerificationReport check_nilpotent_quotient(const AlgebraMorphism& u, unsigned e);

/// B = ∏ B_i (recorded factors): F_B = ∏ q_i(F_{B_i}) with q_i dual to the
/// projections.
VerificationReport check_product_decomposition(const FiniteFreeAlgebra& b);

}  // namespace kron
