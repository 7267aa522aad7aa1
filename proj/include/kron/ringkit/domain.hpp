#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace kron {

enum class DomainKind { integers, rationals, prime_field, extension_field };

/// An element of some coefficient domain. Integers hold an mpz, rationals a
/// normalized mpq, and finite-field elements the base-p digit encoding of
/// their coordinate vector on the power basis 1, w, ..., w^{r-1}.
/// A Scalar carries no reference to its domain; all arithmetic goes through
/// the owning Domain.
class Scalar {
 public:
  Scalar() = default;

  bool operator==(const Scalar& other) const = default;

 private:
  friend class Domain;
  explicit Scalar(std::uint64_t r) : v_(r) {}
  explicit Scalar(mpz_class z) : v_(std::move(z)) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  std::variant<std::uint64_t, mpz_class, mpq_class> v_;
};

/// Coefficient domain: ℤ, ℚ, 𝔽_p or 𝔽_{p^r} = 𝔽_p[w]/(m(w)).
/// Cheap to copy; instances are immutable.
class Domain {
 public:
  static Domain integers();
  static Domain rationals();
  static Domain prime_field(std::uint64_t p);
  /// modulus holds c_0..c_{r-1} of the monic m(w) = w^r + Σ c_i w^i; it is
  /// checked for irreducibility over 𝔽_p.
  static Domain extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// 𝔽_{p^r} built on the lexicographically first monic irreducible of degree r.
  /// r = 1 yields the prime field.
  static Domain galois_field(std::uint64_t p, unsigned r);

  DomainKind kind() const;
  bool is_field() const { return kind() != DomainKind::integers; }
  bool is_finite() const;
  /// 0 for ℤ and ℚ.
  std::uint64_t characteristic() const;
  /// Extension degree r over the prime field (1 for 𝔽_p, 0 for ℤ/ℚ).
  unsigned degree() const;
  /// Field order q = p^r; 0 for ℤ and ℚ.
  std::uint64_t order() const;
  const std::vector<std::uint64_t>& modulus() const;

  bool operator==(const Domain& other) const;
  bool operator!=(const Domain& other) const { return !(*this == other); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Throws DomainError when the denominator is not invertible (or when
  /// the domain is ℤ and v is not integral).
  Scalar from_mpq(const mpq_class& v) const;
  /// Finite fields only: the element with the given enumeration index,
  /// 0 <= index < q.
  Scalar element(std::uint64_t index) const;
  /// Finite fields only: inverse of element().
  std::uint64_t index(const Scalar& a) const;
  /// Generator w of an extension field.
  Scalar generator() const;

  /// Maps `a`, an element of `from`, into this domain along the canonical
  /// morphism (ℤ→ℚ, ℤ→𝔽_q, ℚ→𝔽_q, 𝔽_p→𝔽_{p^r}, ℚ→ℤ for integral values).
  Scalar convert(const Scalar& a, const Domain& from) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool is_unit(const Scalar& a) const;
  /// True for negative integers and rationals; always false in finite fields.
  bool is_negative(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, const mpz_class& e) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;
  /// Multiplicative inverse; throws DomainError for non-units.
  Scalar inv(const Scalar& a) const;
  /// Exact division: a / b. In ℤ throws DomainError when b does not divide a.
  Scalar div(const Scalar& a, const Scalar& b) const;
  /// ℤ only: whether b divides a (b ≠ 0).
  bool divides(const Scalar& b, const Scalar& a) const;

  void add_to(Scalar& acc, const Scalar& b) const;
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;

  /// Integer/rational value; throws for finite fields.
  const mpz_class& as_mpz(const Scalar& a) const;
  mpq_class as_mpq(const Scalar& a) const;

  /// Canonical text: decimal integers, "a/b" rationals, residues in [0, p),
  /// extension elements as polynomials in w (parenthesized when compound).
  std::string to_string(const Scalar& a) const;
  /// Whether to_string(a) needs parentheses when used as a factor.
  bool is_compound(const Scalar& a) const;
  /// "int", "rat", "GF(p)" or "GF(p^r)[m]".
  std::string name() const;

  /// Total order on elements used for deterministic output (finite fields:
  /// by index; ℤ/ℚ: numeric).
  bool less(const Scalar& a, const Scalar& b) const;

 private:
  struct Impl;
  explicit Domain(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Deterministic primality test for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Rabin irreducibility test for a monic polynomial over 𝔽_p given by its
/// low coefficients c_0..c_{r-1}.
bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& low_coeffs);

}  // namespace kron
