#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kron/ringkit/domain.hpp"

namespace kron {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector over a ring's variable registry. Exponents are bounded
/// by 255 per variable; overflow raises InvalidInput.
class Monomial {
 public:
  Monomial() = default;

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned total_degree() const { return total_; }
  bool is_one() const { return total_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(); returns this / other.
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  /// Graded lexicographic comparison, variable 0 most significant.
  static int compare(const Monomial& a, const Monomial& b);
  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t total_ = 0;
};

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Polynomial ring D[v_1, ..., v_k] with an ordered registry of variable names.
class PolyRing {
 public:
  PolyRing(Domain domain, std::vector<std::string> variables);

  const Domain& domain() const { return domain_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<std::string>& variables() const { return *vars_; }
  const std::string& variable(std::size_t i) const { return (*vars_)[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  PolyRing with_domain(Domain domain) const;
  /// Appends variables; throws InvalidInput on a name clash.
  PolyRing extended(const std::vector<std::string>& more) const;

  bool operator==(const PolyRing& other) const;
  bool operator!=(const PolyRing& other) const { return !(*this == other); }

 private:
  Domain domain_;
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Sparse polynomial in canonical form: terms sorted by descending grlex
/// order, no zero coefficients. Equality is term-wise.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Scalar>;

  explicit MultiPoly(PolyRing ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const PolyRing& ring, const Scalar& c);
  static MultiPoly from_int(const PolyRing& ring, long c);
  static MultiPoly variable(const PolyRing& ring, std::size_t index);
  static MultiPoly variable(const PolyRing& ring, std::string_view name);
  static MultiPoly monomial(const PolyRing& ring, const Monomial& m, const Scalar& c);
  /// Terms need not be sorted or combined.
  static MultiPoly from_terms(const PolyRing& ring, std::vector<Term> terms);
  /// Parses the canonical text form (and ordinary infix input with
  /// parentheses). Identifiers must be ring variables; in an extension
  /// field the identifier `w` denotes the field generator.
  static MultiPoly parse(const PolyRing& ring, std::string_view text);

  const PolyRing& ring() const { return ring_; }
  const Domain& domain() const { return ring_.domain(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  bool is_one() const;
  /// Coefficient of the monomial 1.
  Scalar constant_term() const;
  Scalar coefficient(const Monomial& m) const;
  const Term& leading_term() const;

  /// -1 for the zero polynomial.
  int total_degree() const;
  /// -1 for the zero polynomial.
  int degree_in(std::size_t var) const;
  /// Coefficient of var^k, as a polynomial in the same ring not involving var.
  MultiPoly coefficient_in(std::size_t var, unsigned k) const;
  /// Whether every term has the same total degree in the listed variables;
  /// the zero polynomial counts as homogeneous.
  bool is_homogeneous_in(const std::vector<std::size_t>& vars, int* degree = nullptr) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const Scalar& c) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  /// Quotient when `divisor` divides this polynomial exactly, otherwise
  /// nullopt. Over ℤ coefficient divisibility is part of exactness.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const;

  /// Ring homomorphism sending variable i to images[i] (all in `target`);
  /// coefficients are mapped along target.domain().convert.
  MultiPoly substitute(const PolyRing& target, const std::vector<MultiPoly>& images) const;
  /// Re-expresses the polynomial in `target`, matching variables by name.
  MultiPoly remap(const PolyRing& target) const;
  /// Maps coefficients into another domain (e.g. reduction modulo p).
  MultiPoly change_domain(const Domain& target) const;
  /// Evaluates at a point given in the ring's domain.
  Scalar evaluate(const std::vector<Scalar>& values) const;

  std::string to_string() const;

 private:
  void check_same_ring(const MultiPoly& other, const char* op) const;

  PolyRing ring_;
  std::vector<Term> terms_;
};

/// Text for a single term (coefficient then monomial), with an optional
/// extra trailing factor such as "X^2". `first` controls the sign style.
std::string format_term(const PolyRing& ring, const Monomial& m, const Scalar& c, bool first,
                        const std::string& extra_factor = {});

/// Greatest common divisor of the coefficients of a polynomial over ℤ
/// (0 for the zero polynomial). Throws InvalidInput for other domains.
mpz_class content(const MultiPoly& p);

}  // namespace kron
