#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kron/ringkit/polymatrix.hpp"
#include "kron/ringkit/upoly.hpp"

namespace kron {

/// Commutative algebra B, free of rank n over a base ring A (a PolyRing:
/// a coefficient domain plus optional base variables), given by structure
/// constants e_i·e_j = Σ_k c_ij^k e_k and the coordinates of its unit.
/// Immutable; validated at construction.
class FiniteFreeAlgebra {
 public:
  struct Options {
    std::vector<std::string> basis_names;
    /// Monic g in the variable "Y" when B = A[Y]/(g) on the basis 1, y, ..., y^{n-1}.
    std::optional<UPoly> monogenic;
    /// Factors of a product algebra, in block order.
    std::vector<FiniteFreeAlgebra> factors;
    std::string label;
  };

  /// table[(i*n + j)*n + k] = c_ij^k. Throws InvalidInput when commutativity,
  /// associativity or the unit law fails.
  FiniteFreeAlgebra(PolyRing base, std::size_t rank, std::vector<MultiPoly> table, std::vector<MultiPoly> unit,
                    Options options = {});

  const PolyRing& base() const;
  const Domain& domain() const { return base().domain(); }
  std::size_t rank() const;
  const MultiPoly& c(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<MultiPoly>& table() const;
  const std::vector<MultiPoly>& unit() const;
  const std::vector<std::string>& basis_names() const;
  const std::optional<UPoly>& monogenic() const;
  const std::vector<FiniteFreeAlgebra>& factors() const;
  const std::string& label() const;
  /// Offsets of the product blocks (empty when not a product).
  std::vector<std::size_t> block_offsets() const;

  /// Trace of each basis vector, tr(e_k) = Σ_m c_km^m.
  std::vector<MultiPoly> basis_traces() const;

  /// Deterministic text describing base, table and unit.
  std::string canonical() const;
  /// Digest of canonical().
  std::string hash() const;

  bool same_table(const FiniteFreeAlgebra& other) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// An element given by coordinates on the algebra basis. Coordinates live in
/// a ring S that extends the base (for ξ, S is the parameter ring).
struct AlgebraElement {
  std::vector<MultiPoly> coords;
  bool operator==(const AlgebraElement& other) const { return coords == other.coords; }
  bool is_zero() const;
};

/// Arithmetic in S ⊗_A B for a coefficient ring S containing the base
/// variables. Structure constants are remapped into S once.
class ScalarExtension {
 public:
  ScalarExtension(FiniteFreeAlgebra algebra, PolyRing ring);
  explicit ScalarExtension(const FiniteFreeAlgebra& algebra) : ScalarExtension(algebra, algebra.base()) {}

  const FiniteFreeAlgebra& algebra() const { return algebra_; }
  const PolyRing& ring() const { return ring_; }
  std::size_t rank() const { return n_; }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(std::size_t i) const;
  /// Coordinates given in any ring whose variables map into ring() by name.
  AlgebraElement element(const std::vector<MultiPoly>& coords) const;
  AlgebraElement from_ints(const std::vector<long>& coords) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement scale(const AlgebraElement& a, const MultiPoly& s) const;
  AlgebraElement pow(const AlgebraElement& a, unsigned e) const;
  /// Value of a univariate polynomial with coefficients in ring() at a.
  AlgebraElement evaluate(const UPoly& f, const AlgebraElement& a) const;

  /// Matrix of multiplication by x: column j holds the coordinates of x·e_j.
  PolyMatrix mul_matrix(const AlgebraElement& x) const;
  MultiPoly trace(const AlgebraElement& x) const;
  MultiPoly norm(const AlgebraElement& x) const;
  UPoly charpoly(const AlgebraElement& x, const std::string& var = "X") const;

 private:
  void check(const AlgebraElement& a) const;

  FiniteFreeAlgebra algebra_;
  PolyRing ring_;
  std::size_t n_;
  std::vector<MultiPoly> table_;
};

/// det [Tr(e_i e_j)] in the base ring.
MultiPoly trace_form_disc(const FiniteFreeAlgebra& b);

/// Human-readable element, e.g. "3 + 2*i".
std::string element_to_string(const FiniteFreeAlgebra& b, const AlgebraElement& x);

}  // namespace kron
