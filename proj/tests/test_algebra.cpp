#include "doctest.h"
#include "kron/algebra/constructors.hpp"
#include "kron/algebra/morphism.hpp"
#include "kron/errors.hpp"
#include "support/catalog.hpp"

using namespace kron;
using kron::testing::gaussian;
using kron::testing::integers;

namespace {

MultiPoly C(const PolyRing& r, long v) { return MultiPoly::from_int(r, v); }

}  // namespace

TEST_CASE("monogenic construction") {
  const auto zi = gaussian();
  CHECK(zi.rank() == 2);
  CHECK(zi.c(1, 1, 0) == C(zi.base(), -1));
  CHECK(zi.c(1, 1, 1).is_zero());
  CHECK(zi.monogenic());

  const auto line = from_monogenic(integers(), std::vector<long>{-7});
  CHECK(line.rank() == 1);
  CHECK(line.c(0, 0, 0).is_one());

  const auto cubic = kron::testing::symbolic_cubic();
  CHECK(cubic.rank() == 3);
  CHECK(cubic.c(2, 2, 0) == MultiPoly::parse(cubic.base(), "a0*a2"));

  const PolyRing z = integers();
  CHECK_THROWS_AS(from_monogenic(UPoly(z, {C(z, 1), C(z, 2)}, "Y")), InvalidInput);
}

TEST_CASE("structure constants are validated") {
  const PolyRing z = integers();
  auto table = diagonal(z, 2).table();
  table[(1 * 2 + 1) * 2 + 0] = C(z, 1);  // e2*e2 = e1 + e2 breaks associativity
  CHECK_THROWS_AS(FiniteFreeAlgebra(z, 2, table, diagonal(z, 2).unit()), InvalidInput);

  auto noncomm = diagonal(z, 2).table();
  noncomm[(0 * 2 + 1) * 2 + 0] = C(z, 1);
  CHECK_THROWS_AS(FiniteFreeAlgebra(z, 2, noncomm, diagonal(z, 2).unit()), InvalidInput);

  CHECK_THROWS_AS(FiniteFreeAlgebra(z, 2, diagonal(z, 2).table(), {C(z, 1), C(z, 0)}), InvalidInput);
}

TEST_CASE("diagonal and products") {
  const PolyRing z = integers();
  const auto d2 = diagonal(z, 2);
  CHECK(d2.c(0, 0, 0).is_one());
  CHECK(d2.c(0, 1, 0).is_zero());
  CHECK(d2.c(0, 1, 1).is_zero());
  CHECK(product(diagonal(z, 1), diagonal(z, 1)).same_table(d2));

  const auto zz = product(gaussian(), gaussian());
  CHECK(zz.rank() == 4);
  CHECK(zz.factors().size() == 2);
  CHECK(zz.block_offsets() == std::vector<std::size_t>{0, 2});

  const PolyRing f2(Domain::prime_field(2), {});
  const auto mixed = product(from_monogenic(f2, std::vector<long>{0, 0}), diagonal(f2, 1));
  CHECK(mixed.rank() == 3);

  CHECK_THROWS_AS(product(gaussian(), diagonal(f2, 1)), InvalidInput);
}

TEST_CASE("biquadratic algebras") {
  const PolyRing z = integers();
  const auto nil = biquadratic_nilpotent(z);
  CHECK(nil.c(3, 3, 0).is_zero());
  CHECK(nil.c(1, 3, 2).is_zero());

  const PolyRing xy(Domain::prime_field(2), {"X", "Y"});
  const auto rad = biquadratic_radicial(xy);
  CHECK(rad.c(1, 1, 0) == MultiPoly::parse(xy, "X"));
  CHECK(rad.c(2, 2, 0) == MultiPoly::parse(xy, "Y"));
  CHECK(rad.c(3, 3, 0) == MultiPoly::parse(xy, "X*Y"));
  CHECK_THROWS_AS(biquadratic_radicial(z), InvalidInput);
}

TEST_CASE("element arithmetic, trace, norm, charpoly") {
  const auto zi = gaussian();
  const PolyRing ab(Domain::integers(), {"a", "b"});
  const ScalarExtension ext(zi, ab);
  const AlgebraElement i = ext.basis(1);
  CHECK(ext.mul(i, i) == ext.from_ints({-1, 0}));
  CHECK(ext.mul_matrix(ext.one()) == PolyMatrix::identity(ab, 2));

  const AlgebraElement x = ext.element({MultiPoly::parse(ab, "a"), MultiPoly::parse(ab, "b")});
  CHECK(ext.norm(x) == MultiPoly::parse(ab, "a^2 + b^2"));
  CHECK(ext.trace(x) == MultiPoly::parse(ab, "2*a"));
  const PolyMatrix mi = ext.mul_matrix(i);
  CHECK(mi.at(0, 1) == C(ab, -1));
  CHECK(mi.at(1, 0) == C(ab, 1));

  const ScalarExtension d(diagonal(integers(), 2), ab);
  const AlgebraElement y = d.element({MultiPoly::parse(ab, "a"), MultiPoly::parse(ab, "b")});
  CHECK(d.charpoly(y).to_string() == "X^2 - a*X - b*X + a*b");

  const ScalarExtension nil(biquadratic_nilpotent(integers()));
  CHECK(nil.charpoly(nil.basis(1)).to_string() == "X^4");
}

TEST_CASE("trace-form discriminants") {
  CHECK(trace_form_disc(gaussian()).to_string() == "-4");
  CHECK(trace_form_disc(kron::testing::sqrt2()).to_string() == "8");
  CHECK(trace_form_disc(kron::testing::cbrt2()).to_string() == "-108");
  CHECK(trace_form_disc(diagonal(integers(), 2)).to_string() == "1");
  CHECK(trace_form_disc(kron::testing::dedekind_order()).to_string() == "-503");
  CHECK(trace_form_disc(biquadratic_nilpotent(integers())).is_zero());
}

TEST_CASE("orders and change of basis") {
  const auto ded = kron::testing::dedekind_order();
  CHECK(ded.rank() == 3);
  CHECK_FALSE(ded.monogenic());
  const mpq_class half(1, 2);
  CHECK_THROWS_AS(order_from_basis({1, 0}, {{1, 0}, {0, half}}), DomainError);

  // Shear basis 1, 1 + i of ℤ[i].
  const auto sheared = change_basis(gaussian(), {{1, 1}, {0, 1}});
  CHECK(trace_form_disc(sheared).to_string() == "-4");
}

TEST_CASE("base change") {
  const auto f5 = base_change(gaussian(), Domain::prime_field(5));
  CHECK(f5.domain() == Domain::prime_field(5));
  CHECK(f5.c(1, 1, 0).to_string() == "4");
  CHECK(f5.monogenic());

  const auto q = base_change(gaussian(), Domain::rationals());
  CHECK(q.domain().kind() == DomainKind::rationals);

  CHECK(base_change(diagonal(integers(), 2), Domain::prime_field(2))
            .same_table(diagonal(PolyRing(Domain::prime_field(2), {}), 2)));

  const auto ded = kron::testing::dedekind_order();
  CHECK_NOTHROW(base_change(ded, Domain::prime_field(2)));
}

TEST_CASE("morphisms are validated") {
  const PolyRing z = integers();
  const auto dual = kron::testing::dual_numbers();
  const auto a = diagonal(z, 1);
  PolyMatrix kill(z, 1, 2);
  kill.at(0, 0) = C(z, 1);
  const AlgebraMorphism q(dual, a, kill);
  CHECK(q.apply(ScalarExtension(dual).from_ints({3, 4})).coords[0] == C(z, 3));

  PolyMatrix bad(z, 1, 2);
  bad.at(0, 0) = C(z, 1);
  bad.at(0, 1) = C(z, 1);  // y ↦ 1 but y² = 0
  CHECK_THROWS_AS(AlgebraMorphism(dual, a, bad), InvalidInput);

  const auto zz = product(gaussian(), gaussian());
  const auto p1 = AlgebraMorphism::projection(zz, 0);
  CHECK(p1.target().same_table(gaussian()));
  const auto diag = AlgebraMorphism::diagonal_embedding(gaussian(), zz);
  CHECK(p1.after(diag).matrix() == AlgebraMorphism::identity(gaussian()).matrix());
}

TEST_CASE("tensor products") {
  const auto t = tensor(gaussian(), gaussian());
  CHECK(t.rank() == 4);
  CHECK_NOTHROW(AlgebraMorphism::tensor_inclusion(gaussian(), gaussian(), t));
}
