#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kron/ringkit/gfpoly.hpp"
#include "kron/ringkit/upoly.hpp"

namespace kron {

struct ComaximalResult {
  Domain base;
  /// R(X) = res_T(P(T+X), Q(T)) over the base.
  UPoly resultant;
  /// Field the shift and the certificate live in (the base field, ℚ for a
  /// base ℤ, or 𝔽_{p^r} when no shift exists over 𝔽_p).
  Domain field;
  std::optional<Scalar> shift;
  /// Smallest r such that 𝔽_{q^r} contains a shift, when 𝔽_q does not.
  std::optional<unsigned> extension_degree;
  /// U·P(T+x) + V·Q(T) = 1 over `field`.
  std::optional<GfPoly> u, v;
  /// Over ℤ: R(x). The certificate is integral exactly when this is ±1,
  /// otherwise it lives in ℤ[1/R(x)].
  std::optional<mpz_class> denominator;
  bool verified = false;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

/// P and Q: monic of degree >= 1 in "T" over 𝔽_q, ℚ or ℤ (rings without
/// variables). Over ℚ and ℤ candidate shifts are 0, 1, -1, 2, -2, ...; over ℤ
/// up to |x| <= bound.
ComaximalResult comaximal_shift(const UPoly& p, const UPoly& q, long bound = 16);

}  // namespace kron
