#pragma once

#include <string>
#include <vector>

#include "kron/ringkit/multipoly.hpp"

namespace kron {

/// Univariate polynomial in an outer variable (default "X") with MultiPoly
/// coefficients; coeffs[k] multiplies X^k. Trailing zeros are trimmed.
class UPoly {
 public:
  explicit UPoly(PolyRing ring, std::string var = "X") : ring_(std::move(ring)), var_(std::move(var)) {}
  UPoly(PolyRing ring, std::vector<MultiPoly> coeffs, std::string var = "X");

  /// X - c, or more generally the monic linear polynomial with root c.
  static UPoly linear(const MultiPoly& root, std::string var = "X");
  /// Constant coefficients given as scalars, c_0 first.
  static UPoly from_scalars(const PolyRing& ring, const std::vector<Scalar>& coeffs, std::string var = "X");
  /// Splits a MultiPoly that involves variable `var` of its ring into powers
  /// of that variable; coefficients are remapped into `coeff_ring`.
  static UPoly from_multipoly(const MultiPoly& p, const std::string& var, const PolyRing& coeff_ring);

  const PolyRing& ring() const { return ring_; }
  const std::string& var() const { return var_; }
  const std::vector<MultiPoly>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  MultiPoly coeff(int k) const;
  const MultiPoly& leading_coeff() const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const MultiPoly& c) const;
  UPoly pow(unsigned e) const;
  bool operator==(const UPoly& other) const;
  bool operator!=(const UPoly& other) const { return !(*this == other); }

  UPoly derivative() const;
  /// Horner evaluation at a coefficient-ring value.
  MultiPoly evaluate(const MultiPoly& x) const;
  /// this(inner), with inner a UPoly over the same ring.
  UPoly compose(const UPoly& inner) const;
  /// Applies a coefficient-level substitution to every coefficient.
  UPoly substitute(const PolyRing& target, const std::vector<MultiPoly>& images) const;
  UPoly change_domain(const Domain& target) const;
  UPoly remap(const PolyRing& target) const;

  /// Embeds into a ring that contains var() and all coefficient variables.
  MultiPoly to_multipoly(const PolyRing& with_var) const;
  /// Descending powers of the outer variable; within each coefficient the
  /// terms follow grlex order, e.g. "X^2 - 2*T1*X + T1^2 + T2^2".
  std::string to_string() const;

 private:
  void trim();

  PolyRing ring_;
  std::string var_;
  std::vector<MultiPoly> coeffs_;
};

/// Sylvester-matrix resultant res_V(p, q) = lc(p)^{deg q} ∏ q(roots of p).
/// Both polynomials must be nonzero.
MultiPoly resultant(const UPoly& p, const UPoly& q);

/// Sylvester determinant with declared formal degrees (leading coefficients
/// may vanish). Coefficients are listed lowest first.
MultiPoly sylvester_resultant(const PolyRing& ring, const std::vector<MultiPoly>& p, int deg_p,
                              const std::vector<MultiPoly>& q, int deg_q);

/// (-1)^{n(n-1)/2} res(f, f') for monic f of degree n >= 1, with f' taken at
/// formal degree n-1.
MultiPoly discriminant_in_x(const UPoly& f);

}  // namespace kron
