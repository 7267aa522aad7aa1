#include <random>

#include "doctest.h"
#include "kron/errors.hpp"
#include "kron/ringkit/gfpoly.hpp"
#include "kron/ringkit/integers.hpp"
#include "kron/ringkit/linalg.hpp"
#include "kron/ringkit/polymatrix.hpp"
#include "kron/ringkit/upoly.hpp"

using namespace kron;

namespace {

MultiPoly P(const PolyRing& r, std::string_view s) { return MultiPoly::parse(r, s); }

UPoly U(const PolyRing& coeff_ring, const char* var, const char* s) {
  const PolyRing wide = coeff_ring.extended({var});
  return UPoly::from_multipoly(MultiPoly::parse(wide, s), var, coeff_ring);
}

}  // namespace

TEST_CASE("scalar arithmetic in the supported domains") {
  const Domain z = Domain::integers();
  CHECK(z.to_string(z.mul(z.from_int(-6), z.from_int(7))) == "-42");
  CHECK(z.is_unit(z.from_int(-1)));
  CHECK_FALSE(z.is_unit(z.from_int(2)));

  const Domain q = Domain::rationals();
  CHECK(q.to_string(q.div(q.from_int(3), q.from_int(-6))) == "-1/2");

  const Domain f7 = Domain::prime_field(7);
  CHECK(f7.to_string(f7.inv(f7.from_int(3))) == "5");
  CHECK(f7.to_string(f7.from_int(-1)) == "6");

  const Domain f8 = Domain::galois_field(2, 3);
  CHECK(f8.order() == 8);
  for (std::uint64_t i = 1; i < 8; ++i) {
    const Scalar a = f8.element(i);
    CHECK(f8.is_one(f8.mul(a, f8.inv(a))));
    CHECK(f8.is_one(f8.pow(a, std::uint64_t{7})));
  }
  CHECK_THROWS_AS(f7.inv(f7.zero()), DomainError);
}

TEST_CASE("mod p reduction rejects denominators divisible by p") {
  const Domain q = Domain::rationals();
  const Domain f3 = Domain::prime_field(3);
  CHECK(f3.to_string(f3.convert(q.from_mpq(mpq_class(1, 2)), q)) == "2");
  CHECK_THROWS_AS(f3.convert(q.from_mpq(mpq_class(1, 3)), q), DomainError);
}

TEST_CASE("multipoly canonical text and arithmetic") {
  const PolyRing r(Domain::integers(), {"T1", "T2"});
  const MultiPoly a = P(r, "(T1 - T2)^2");
  CHECK(a.to_string() == "T1^2 - 2*T1*T2 + T2^2");
  CHECK(P(r, a.to_string()) == a);
  CHECK((a - a).is_zero());
  CHECK((P(r, "T1 + T2") * P(r, "T1 - T2")).to_string() == "T1^2 - T2^2");
  CHECK(P(r, "3*T2 - 1 + T1^3").to_string() == "T1^3 + 3*T2 - 1");
  const auto q = P(r, "T1^2 - T2^2").divide_exact(P(r, "T1 - T2"));
  REQUIRE(q);
  CHECK(*q == P(r, "T1 + T2"));
  CHECK_FALSE(P(r, "T1^2 + 1").divide_exact(P(r, "T1 - T2")));
  CHECK_FALSE(P(r, "3*T1").divide_exact(P(r, "2")));
}

TEST_CASE("content") {
  const PolyRing r(Domain::integers(), {"T1", "T2"});
  CHECK(content(P(r, "6*T1 + 9*T2")) == 3);
  CHECK(content(MultiPoly(r)) == 0);
  CHECK(content(P(r, "-4*T1^2")) == 4);
  CHECK_THROWS_AS(content(MultiPoly::from_int(PolyRing(Domain::prime_field(5), {}), 1)), InvalidInput);
}

TEST_CASE("resultants") {
  const PolyRing ab(Domain::integers(), {"a", "b"});
  CHECK(resultant(U(ab, "T", "T - a"), U(ab, "T", "T - b")) == P(ab, "a - b"));

  const PolyRing abx(Domain::integers(), {"X", "a", "b"});
  CHECK(resultant(U(abx, "T", "T + X - a"), U(abx, "T", "T - b")) == P(abx, "a - b - X"));

  const PolyRing z(Domain::integers(), {});
  CHECK(resultant(U(z, "T", "T^2 + 1"), U(z, "T", "T - 2")).to_string() == "5");
  CHECK_THROWS_AS(resultant(UPoly(z, "T"), U(z, "T", "T - 2")), InvalidInput);
}

TEST_CASE("discriminants") {
  const PolyRing bc(Domain::integers(), {"b", "c"});
  CHECK(discriminant_in_x(U(bc, "X", "X^2 + b*X + c")) == P(bc, "b^2 - 4*c"));

  const PolyRing pq(Domain::integers(), {"p", "q"});
  CHECK(discriminant_in_x(U(pq, "X", "X^3 + p*X + q")) == P(pq, "-4*p^3 - 27*q^2"));

  const PolyRing t(Domain::integers(), {"T1", "T2"});
  CHECK(discriminant_in_x(U(t, "X", "(X - T1)^2 + T2^2")) == P(t, "-4*T2^2"));
  CHECK_THROWS_AS(discriminant_in_x(U(t, "X", "2*X^2 + 1")), InvalidInput);
}

TEST_CASE("division-free characteristic polynomial") {
  const PolyRing z(Domain::integers(), {});
  PolyMatrix jordan(z, 2, 2);
  jordan.at(0, 1) = MultiPoly::from_int(z, 1);
  CHECK(jordan.charpoly().to_string() == "X^2");

  const PolyRing t(Domain::integers(), {"T1", "T2"});
  PolyMatrix d(t, 2, 2);
  d.at(0, 0) = P(t, "T1");
  d.at(1, 1) = P(t, "T2");
  CHECK(d.charpoly() == U(t, "X", "(X - T1)*(X - T2)"));

  const PolyRing a(Domain::integers(), {"a0", "a1", "a2"});
  PolyMatrix comp(a, 3, 3);
  comp.at(1, 0) = MultiPoly::from_int(a, 1);
  comp.at(2, 1) = MultiPoly::from_int(a, 1);
  comp.at(0, 2) = P(a, "-a0");
  comp.at(1, 2) = P(a, "-a1");
  comp.at(2, 2) = P(a, "-a2");
  CHECK(comp.charpoly() == U(a, "X", "X^3 + a2*X^2 + a1*X + a0"));
  CHECK(comp.det() == P(a, "-a0"));

  CHECK_THROWS_AS(PolyMatrix(z, 2, 3).charpoly(), InvalidInput);
}

TEST_CASE("factorization over finite fields") {
  const Domain f5 = Domain::prime_field(5);
  auto fs = factor_gf(GfPoly::from_ints(f5, {1, 0, 1}));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor == GfPoly::from_ints(f5, {-3, 1}));
  CHECK(fs[1].factor == GfPoly::from_ints(f5, {-2, 1}));
  CHECK(fs[0].multiplicity == 1);

  const Domain f2 = Domain::prime_field(2);
  fs = factor_gf(GfPoly::from_ints(f2, {1, 0, 1}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].factor == GfPoly::from_ints(f2, {1, 1}));
  CHECK(fs[0].multiplicity == 2);

  fs = factor_gf(GfPoly::from_ints(f2, {1, 1, 1}));
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].factor == GfPoly::from_ints(f2, {1, 1, 1}));

  const Domain f3 = Domain::prime_field(3);
  CHECK_THROWS_AS(factor_gf(GfPoly::from_ints(f3, {1, 2})), InvalidInput);
  CHECK_THROWS_AS(factor_gf(GfPoly(f3)), InvalidInput);
}

TEST_CASE("factorization of p-th powers and over extension fields") {
  const Domain f3 = Domain::prime_field(3);
  // (Y^2 + 1)^3 (Y + 1)
  const GfPoly base = GfPoly::from_ints(f3, {1, 0, 1});
  const GfPoly g = base * base * base * GfPoly::from_ints(f3, {1, 1});
  const auto fs = factor_gf(g);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].factor == GfPoly::from_ints(f3, {1, 1}));
  CHECK(fs[1].factor == base);
  CHECK(fs[1].multiplicity == 3);

  const Domain f4 = Domain::galois_field(2, 2);
  const auto roots = roots_gf(GfPoly::from_ints(f4, {1, 1, 1}));
  CHECK(roots.size() == 2);
  for (const auto& r : roots) CHECK(f4.is_zero(GfPoly::from_ints(f4, {1, 1, 1}).evaluate(r)));
}

TEST_CASE("factor_gf is deterministic and re-expands") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const Domain f = Domain::prime_field(p);
    for (int trial = 0; trial < 20; ++trial) {
      const int deg = 1 + static_cast<int>(rng() % 8);
      std::vector<Scalar> c;
      for (int i = 0; i < deg; ++i) c.push_back(f.element(rng() % p));
      c.push_back(f.one());
      const GfPoly g(f, c);
      const auto fs = factor_gf(g, 1);
      GfPoly prod = GfPoly::one(f);
      for (const auto& x : fs) {
        CHECK(is_irreducible(x.factor));
        for (unsigned k = 0; k < x.multiplicity; ++k) prod = prod * x.factor;
      }
      CHECK(prod == g);
      const auto again = factor_gf(g, 99);
      REQUIRE(again.size() == fs.size());
      for (std::size_t i = 0; i < fs.size(); ++i) CHECK(again[i].factor == fs[i].factor);
    }
  }
}

TEST_CASE("linear algebra over fields") {
  const Domain f5 = Domain::prime_field(5);
  FieldMatrix m(f5, 2, 3);
  m.at(0, 0) = f5.from_int(1);
  m.at(0, 1) = f5.from_int(2);
  m.at(1, 0) = f5.from_int(2);
  m.at(1, 1) = f5.from_int(4);
  m.at(1, 2) = f5.from_int(1);
  CHECK(m.rank() == 2);
  const auto k = m.kernel();
  REQUIRE(k.size() == 1);
  for (const auto& x : m.apply(k[0])) CHECK(f5.is_zero(x));

  const Domain q = Domain::rationals();
  FieldMatrix a = FieldMatrix::identity(q, 3);
  a.at(0, 2) = q.from_int(4);
  CHECK(q.is_one(a.det()));
  REQUIRE(a.inverse());
}

TEST_CASE("integer helpers") {
  CHECK(prime_divisors(mpz_class(-108)) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_divisors(mpz_class(1)).empty());
  CHECK(primes_between(2, 20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
}
