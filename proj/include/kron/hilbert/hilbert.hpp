#pragma once

#include <cstdint>
#include <vector>

#include "kron/generic/generic.hpp"
#include "kron/report.hpp"
#include "kron/ringkit/gfpoly.hpp"

namespace kron {

/// B/pB ≅ ∏ 𝔽_p[Y]/(ḡ_i^{e_i}) for a monogenic order B = ℤ[Y]/(g).
struct SplittingData {
  std::uint64_t prime = 0;
  GfPoly g_mod_p;
  std::vector<GfFactor> factors;
  /// CRT idempotents as polynomials in y reduced mod ḡ.
  std::vector<GfPoly> idempotents;
  /// B/pB itself and the residue algebras 𝔽_p[Y]/(ḡ_i).
  FiniteFreeAlgebra reduction;
  std::vector<FiniteFreeAlgebra> quotients;
  /// v_i : S_{C_i} → S_{B/pB} induced by y ↦ y mod ḡ_i.
  std::vector<ParameterMap> maps;
};

SplittingData splitting_data(const FiniteFreeAlgebra& b, std::uint64_t p, std::uint64_t seed = 0);

/// F mod p = ∏ v_i(G_i)^{e_i}, with CRT and injectivity checks.
VerificationReport theorem33_check(const FiniteFreeAlgebra& b, std::uint64_t p);

/// F mod p annihilates ξ mod p and det U mod p ≠ 0.
VerificationReport theorem34_check(const FiniteFreeAlgebra& b, std::uint64_t p);

/// content(disc_X F) = |trace_form_disc|. Limited to rank <= 4.
VerificationReport theorem35_check(const FiniteFreeAlgebra& b);

/// Theorems 33 and 34 for each prime in ascending order, then theorem 35.
/// Exceptions become error reports.
std::vector<VerificationReport> zahlbericht_suite(const FiniteFreeAlgebra& b, std::vector<std::uint64_t> primes);

}  // namespace kron
