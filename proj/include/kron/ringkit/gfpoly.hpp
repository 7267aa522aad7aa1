#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kron/ringkit/domain.hpp"

namespace kron {

class UPoly;
class PolyRing;

/// Dense univariate polynomial over a field (finite, or ℚ for the Euclidean
/// operations), c[0] + c[1]·Y + ...
class GfPoly {
 public:
  explicit GfPoly(Domain field) : field_(std::move(field)) {}
  GfPoly(Domain field, std::vector<Scalar> coeffs);

  static GfPoly one(const Domain& field) { return GfPoly(field, {field.one()}); }
  static GfPoly x(const Domain& field) { return GfPoly(field, {field.zero(), field.one()}); }
  static GfPoly from_ints(const Domain& field, const std::vector<long>& coeffs);
  /// Reads a UPoly whose coefficients are constants in the given field.
  static GfPoly from_upoly(const UPoly& p);

  const Domain& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && field_.is_one(c_[0]); }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  const Scalar& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && field_.is_one(c_.back()); }

  friend GfPoly operator+(const GfPoly& a, const GfPoly& b);
  friend GfPoly operator-(const GfPoly& a, const GfPoly& b);
  friend GfPoly operator*(const GfPoly& a, const GfPoly& b);
  bool operator==(const GfPoly& other) const { return c_ == other.c_; }
  bool operator!=(const GfPoly& other) const { return !(*this == other); }

  GfPoly scaled(const Scalar& s) const;
  GfPoly monic() const;
  GfPoly derivative() const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<GfPoly, GfPoly> divmod(const GfPoly& d) const;
  GfPoly operator%(const GfPoly& d) const { return divmod(d).second; }
  GfPoly operator/(const GfPoly& d) const { return divmod(d).first; }
  Scalar evaluate(const Scalar& x) const;
  /// Lexicographic order on (degree, coefficients from the top down, by index).
  bool less(const GfPoly& other) const;

  std::string to_string(const std::string& var = "Y") const;

 private:
  void trim();

  Domain field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (0 if both are zero).
GfPoly gcd(const GfPoly& a, const GfPoly& b);
/// Extended Euclid: returns (g, s, t) with s·a + t·b = g monic.
struct GfBezout {
  GfPoly g, s, t;
};
GfBezout xgcd(const GfPoly& a, const GfPoly& b);
GfPoly powmod(const GfPoly& base, const mpz_class& e, const GfPoly& modulus);
GfPoly powmod(const GfPoly& base, std::uint64_t e, const GfPoly& modulus);

/// Whether g (degree >= 1) is irreducible over its field (Rabin's test).
bool is_irreducible(const GfPoly& g);

struct GfFactor {
  GfPoly factor;
  unsigned multiplicity;
};

/// Factorization of a monic polynomial over 𝔽_q into distinct monic
/// irreducibles with multiplicities. Squarefree decomposition, distinct-degree
/// splitting, then Cantor–Zassenhaus equal-degree splitting driven by a
/// seeded generator. Output sorted by degree, then coefficients top-down.
std::vector<GfFactor> factor_gf(const GfPoly& g, std::uint64_t seed = 0);

/// Roots of g in its field, ascending by element index, without multiplicity.
std::vector<Scalar> roots_gf(const GfPoly& g, std::uint64_t seed = 0);

}  // namespace kron
