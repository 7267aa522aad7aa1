#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "kron/fibers/generator.hpp"

namespace kron {

/// Basis of the nilradical of an algebra over 𝔽_q: the kernel of the
/// 𝔽_q-linear map x ↦ x^{q^m} with q^m >= rank.
std::vector<Vec> radical(const FiniteFreeAlgebra& bq);

struct LocalFactorReport {
  std::size_t dimension = 0;
  /// Residue field is 𝔽_{q^f}.
  std::size_t residue_degree = 0;
  /// dim over the residue field of m/m².
  std::size_t cotangent_dimension = 0;
  Vec idempotent;
};

/// Decomposition into local factors. The primitive idempotents are those of
/// the subalgebra {x : x^q = x} ≅ 𝔽_q^s, split by the roots of the minimal
/// polynomials of its basis vectors.
std::vector<LocalFactorReport> local_factors(const FiniteFreeAlgebra& bq, std::uint64_t seed = 0);

enum class FiberVerdict { simple, locally_simple_not_simple, not_locally_simple };
std::string to_string(FiberVerdict v);

struct FiberReport {
  /// e.g. "p=5", "GF(2)" or "X=0,Y=0 over GF(2)".
  std::string fiber;
  std::optional<std::uint64_t> prime;
  Domain field;
  FiberVerdict verdict = FiberVerdict::not_locally_simple;
  std::vector<LocalFactorReport> factors;
  /// Generator search over the fiber's own field (absent if skipped).
  std::optional<GeneratorSearch> generator;
  /// Smallest r <= rank with a generator over 𝔽_{q^r}, when not simple.
  std::optional<unsigned> extension_degree;
  std::string witness;
  std::vector<std::string> notes;

  bool locally_simple() const { return verdict != FiberVerdict::not_locally_simple; }
  nlohmann::ordered_json to_json() const;
};

/// Cotangent test on one fiber algebra over 𝔽_q, then the generator search
/// (over 𝔽_q, and over extensions up to the rank when 𝔽_q fails).
FiberReport analyze_fiber(const FiniteFreeAlgebra& bq, const std::string& label, const SearchOptions& opts = {});

/// The fiber B ⊗ 𝔽_p of an algebra over ℤ.
FiberReport locally_simple_at(const FiniteFreeAlgebra& b, std::uint64_t p, const SearchOptions& opts = {});

struct SimplicityReport {
  /// "global": every prime is covered; "inconclusive": disc = 0 and all
  /// sampled fibers passed; "fiber": a single fiber over a field.
  std::string scope;
  bool locally_simple = false;
  std::string discriminant;
  std::vector<FiberReport> fibers;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

/// Over ℤ: the fibers at the primes dividing trace_form_disc plus
/// extra_primes (primes not dividing disc are étale). Over 𝔽_q: the single
/// fiber. Over 𝔽_p[vars]: fibers at the origin and at the all-ones point.
SimplicityReport locally_simple(const FiniteFreeAlgebra& b, const std::vector<std::uint64_t>& extra_primes,
                                const SearchOptions& opts = {});

}  // namespace kron
