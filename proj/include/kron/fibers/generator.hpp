#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kron/fibers/dense_algebra.hpp"

namespace kron {

struct SearchOptions {
  /// Largest q^n enumerated exhaustively; also caps grid sizes.
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
  /// Random probes tried after the grid stage.
  std::uint64_t random_trials = 4096;
};

struct GeneratorSearch {
  Domain field;
  std::optional<Vec> generator;
  /// "exhaustive", "grid", "random", "identically-zero" or "function-zero".
  std::string method;
  /// Elements examined (exhaustive/grid/random) before the verdict.
  std::uint64_t examined = 0;
  /// True when absence is proven (exhaustion or vanishing of det U as a function on 𝔽_q^n).
  bool absence_proven = false;

  bool found() const { return generator.has_value(); }
  std::string describe() const;
};

/// Searches for x with 1, x, ..., x^{n-1} a basis of an algebra over 𝔽_q.
/// q^n <= budget: lexicographic enumeration of all coordinate vectors
/// (coordinate 0 most significant). Otherwise det U over 𝔽_q is reduced
/// modulo T_i^q - T_i; zero proves absence, else a grid of size
/// ∏ (deg_i + 1) must contain a point where it is nonzero.
GeneratorSearch find_generator(const FiniteFreeAlgebra& bq, const SearchOptions& opts = {});

/// Result of looking for a generator over 𝔽_{p^r} for r = 1, ..., max_r.
struct ExtensionSearch {
  std::vector<GeneratorSearch> attempts;
  /// Smallest r with a generator, if any.
  std::optional<unsigned> degree;
};

/// bq must be over a prime field 𝔽_p; stops at the first r that succeeds
/// unless exhaustive_all is set.
ExtensionSearch generator_over_extensions(const FiniteFreeAlgebra& bq, unsigned max_r, const SearchOptions& opts = {},
                                          bool exhaustive_all = false);

struct VandermondeResult {
  Scalar value;
  bool unit = false;
};

/// ∏_{i<j} (x_j - x_i) for x in the diagonal algebra A^n.
VandermondeResult vandermonde_check(const FiniteFreeAlgebra& b, const std::vector<Scalar>& x);

}  // namespace kron
