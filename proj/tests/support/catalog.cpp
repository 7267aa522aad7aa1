#include "support/catalog.hpp"

#include "kron/algebra/constructors.hpp"

namespace kron::testing {

PolyRing integers() { return PolyRing(Domain::integers(), {}); }

FiniteFreeAlgebra gaussian() { return from_monogenic(integers(), std::vector<long>{1, 0}, "Z[i]"); }
FiniteFreeAlgebra sqrt2() { return from_monogenic(integers(), std::vector<long>{-2, 0}, "Z[sqrt2]"); }
FiniteFreeAlgebra cbrt2() { return from_monogenic(integers(), std::vector<long>{-2, 0, 0}, "Z[cbrt2]"); }
FiniteFreeAlgebra dual_numbers() { return from_monogenic(integers(), std::vector<long>{0, 0}, "Z[Y]/(Y^2)"); }

FiniteFreeAlgebra dedekind_order() {
  const mpq_class half(1, 2);
  return order_from_basis({-8, -2, -1}, {{1, 0, 0}, {0, 1, 0}, {0, half, half}}, "dedekind");
}

FiniteFreeAlgebra radicial() { return biquadratic_radicial(PolyRing(Domain::prime_field(2), {"X", "Y"})); }

std::vector<CatalogEntry> catalog() {
  const PolyRing z = integers();
  return {
      {"Z[i]", gaussian(), true},
      {"Z[sqrt2]", sqrt2(), true},
      {"Z[cbrt2]", cbrt2(), true},
      {"Z^1", diagonal(z, 1), true},
      {"Z^2", diagonal(z, 2), true},
      {"Z^3", diagonal(z, 3), true},
      {"Z^4", diagonal(z, 4), true},
      {"Z[i] x Z[i]", product(gaussian(), gaussian()), true},
      {"Z[i] x Z", product(gaussian(), diagonal(z, 1)), true},
      {"Z[Y]/(Y^2)", dual_numbers(), true},
      {"dedekind", dedekind_order(), true},
      {"nilpotent biquadratic", biquadratic_nilpotent(z), false},
      {"radicial biquadratic", radicial(), false},
  };
}

FiniteFreeAlgebra symbolic_cubic() {
  const PolyRing a(Domain::integers(), {"a0", "a1", "a2"});
  std::vector<MultiPoly> low;
  for (std::size_t i = 0; i < 3; ++i) low.push_back(MultiPoly::variable(a, i));
  return from_monogenic(a, low, "cubic");
}

const char* const kCubicGcp =
    "(X - T1)^3 + (X - T1)^2*(a2*T2 + (2*a1 - a2^2)*T3)"
    " + (X - T1)*(a1*T2^2 + (3*a0 - a1*a2)*T2*T3 + (a1^2 - 2*a0*a2)*T3^2)"
    " + (a0*T2^3 - a0*a2*T2^2*T3 + a0*a1*T2*T3^2 - a0^2*T3^3)";

const char* const kCubicDetU = "T2^3 - 2*a2*T2^2*T3 + (a1 + a2^2)*T2*T3^2 + (a0 - a1*a2)*T3^3";

const char* const kRadicialNorm = "(T1^2 + T2^2*X + T3^2*Y + T4^2*X*Y)^2";

}  // namespace kron::testing
