#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kron/generic/generic.hpp"
#include "kron/report.hpp"

namespace kron {

/// U with column j = coordinates of ξ^j, j = 0..n-1, and det U.
struct PowerMatrix {
  ParameterRing params;
  PolyMatrix u;
  MultiPoly det;
};

PowerMatrix power_matrix(const FiniteFreeAlgebra& b);

enum class CertificateKind { monic_in_variable, nonzero_mod_primes, failed };

std::string to_string(CertificateKind k);

struct InjectivityCertificate {
  CertificateKind kind = CertificateKind::failed;
  Grade grade = Grade::evidence;
  /// Basis index of the variable in which det U is monic (monic_in_variable).
  std::optional<std::size_t> variable;
  std::string variable_name;
  unsigned degree = 0;
  /// Primes at which det U was found nonzero (nonzero_mod_primes).
  std::vector<std::uint64_t> primes;
  /// For failed certificates: a prime where det U vanishes, or the flag.
  std::optional<std::uint64_t> witness_prime;
  bool identically_zero = false;
  MultiPoly det = MultiPoly(PolyRing(Domain::integers(), {}));

  nlohmann::ordered_json to_json() const;
};

/// Monogenic inputs: det U monic of degree n(n-1)/2 in the variable dual to y
/// (proof grade). Otherwise det U is tested for a unit leading coefficient in
/// each variable and for non-vanishing over the fraction field and modulo each
/// supplied prime (evidence grade).
InjectivityCertificate injectivity_certificate(const FiniteFreeAlgebra& b, const std::vector<std::uint64_t>& primes);

/// Whether det U (over ℤ) reduces to zero modulo p.
bool vanishes_mod(const MultiPoly& f, std::uint64_t p);

/// N(ξ) = (-1)^n F_{B/A}(0), a polynomial in S.
MultiPoly norm_form(const FiniteFreeAlgebra& b);

/// Applies T_i ↦ 1_i·X - T_i (1_i the unit coordinates) to N(ξ) and compares
/// with F_{B/A}(X).
VerificationReport norm_gcp_relation(const FiniteFreeAlgebra& b);

}  // namespace kron
