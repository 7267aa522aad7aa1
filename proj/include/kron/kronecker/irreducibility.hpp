#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kron/ringkit/multipoly.hpp"

namespace kron {

struct SmokeResult {
  /// A nontrivial factorization left·right = f, when one was found.
  std::optional<MultiPoly> left, right;
  /// "variable", "power" or "divisor" when found.
  std::string method;
  /// Number of candidate divisors tried by the exhaustive stage.
  std::uint64_t candidates = 0;
  /// True when the search covered every possible factor degree, so that
  /// "none found" means irreducible over the coefficient field.
  bool complete = false;

  bool found() const { return left.has_value(); }
};

/// Desk-scale reducibility search for a polynomial over 𝔽_p: a common
/// variable factor, a p-th power, then every monic-normalized candidate
/// divisor of total degree <= max_degree. The exhaustive stage is limited to
/// max_degree <= 2, at most 3 variables and p <= 3 (BudgetExceeded otherwise).
SmokeResult irreducibility_smoke(const MultiPoly& f, unsigned max_degree = 2);

}  // namespace kron
