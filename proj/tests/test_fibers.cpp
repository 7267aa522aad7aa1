#include "doctest.h"
#include "kron/algebra/constructors.hpp"
#include "kron/errors.hpp"
#include "kron/fibers/comaximal.hpp"
#include "kron/fibers/fibers.hpp"
#include "kron/kronecker/kronecker.hpp"
#include "kron/ringkit/integers.hpp"
#include "support/catalog.hpp"

using namespace kron;
using kron::testing::gaussian;
using kron::testing::integers;

namespace {

FiniteFreeAlgebra over(const FiniteFreeAlgebra& b, std::uint64_t p) { return base_change(b, Domain::prime_field(p)); }

UPoly T(const PolyRing& ring, const char* text) {
  return UPoly::from_multipoly(MultiPoly::parse(ring.extended({"T"}), text), "T", ring);
}

bool nilpotent(const DenseAlgebra& a, const Vec& x) {
  Vec y = x;
  for (std::size_t k = 0; k < a.rank(); ++k) y = a.mul(y, x);
  return a.is_zero(y);
}

}  // namespace

TEST_CASE("radical") {
  const PolyRing f2(Domain::prime_field(2), {});
  const auto nil = biquadratic_nilpotent(f2);
  const auto j = radical(nil);
  CHECK(j.size() == 3);
  const DenseAlgebra dn(nil);
  for (const auto& v : j) {
    CHECK(nilpotent(dn, v));
    CHECK(f2.domain().is_zero(v[0]));
  }

  CHECK(radical(over(gaussian(), 5)).empty());

  const auto dual = over(kron::testing::dual_numbers(), 2);
  const auto jd = radical(dual);
  REQUIRE(jd.size() == 1);
  CHECK(vec_to_string(Domain::prime_field(2), jd[0]) == "(0, 1)");

  // Every element of F_2[u,v]/(u^2,v^2) outside the radical is a unit plus a nilpotent.
  std::size_t nilpotents = 0;
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    Vec x;
    for (std::size_t i = 0; i < 4; ++i) x.push_back(f2.domain().element((bits >> i) & 1));
    if (nilpotent(dn, x)) ++nilpotents;
  }
  CHECK(nilpotents == 8);

  CHECK_THROWS_AS(radical(gaussian()), InvalidInput);
}

TEST_CASE("local factors") {
  const auto split = local_factors(over(gaussian(), 5));
  REQUIRE(split.size() == 2);
  for (const auto& f : split) {
    CHECK(f.dimension == 1);
    CHECK(f.residue_degree == 1);
    CHECK(f.cotangent_dimension == 0);
  }

  const auto ramified = local_factors(over(gaussian(), 2));
  REQUIRE(ramified.size() == 1);
  CHECK(ramified[0].dimension == 2);
  CHECK(ramified[0].residue_degree == 1);
  CHECK(ramified[0].cotangent_dimension == 1);

  const auto inert = local_factors(over(gaussian(), 3));
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].residue_degree == 2);
  CHECK(inert[0].cotangent_dimension == 0);

  const auto nil = local_factors(biquadratic_nilpotent(PolyRing(Domain::prime_field(2), {})));
  REQUIRE(nil.size() == 1);
  CHECK(nil[0].dimension == 4);
  CHECK(nil[0].residue_degree == 1);
  CHECK(nil[0].cotangent_dimension == 2);

  const auto cbrt = local_factors(over(kron::testing::cbrt2(), 5));
  REQUIRE(cbrt.size() == 2);
  CHECK(cbrt[0].dimension + cbrt[1].dimension == 3);
}

TEST_CASE("local factor idempotents are complete, orthogonal and primitive") {
  for (const auto& entry : kron::testing::catalog()) {
    if (entry.algebra.base().nvars() != 0) continue;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CAPTURE(entry.name);
      CAPTURE(p);
      const auto bq = over(entry.algebra, p);
      const DenseAlgebra a(bq);
      const auto fs = local_factors(bq);
      Vec sum = a.zero();
      std::size_t dims = 0;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        sum = a.add(sum, fs[i].idempotent);
        dims += fs[i].dimension;
        CHECK(a.mul(fs[i].idempotent, fs[i].idempotent) == fs[i].idempotent);
        for (std::size_t j = i + 1; j < fs.size(); ++j) CHECK(a.is_zero(a.mul(fs[i].idempotent, fs[j].idempotent)));
        CHECK(a.mul_matrix(fs[i].idempotent).rank() == fs[i].dimension);
      }
      CHECK(sum == a.one());
      CHECK(dims == entry.algebra.rank());
    }
  }
}

TEST_CASE("locally_simple_at") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto r = locally_simple_at(biquadratic_nilpotent(integers()), p);
    CHECK(r.verdict == FiberVerdict::not_locally_simple);
    CHECK_FALSE(r.witness.empty());
  }

  const auto zi2 = locally_simple_at(gaussian(), 2);
  CHECK(zi2.verdict == FiberVerdict::simple);
  CHECK(zi2.factors.size() == 1);

  const auto z3 = locally_simple_at(diagonal(integers(), 3), 2);
  CHECK(z3.verdict == FiberVerdict::locally_simple_not_simple);
  CHECK(z3.factors.size() == 3);
  REQUIRE(z3.generator);
  CHECK(z3.generator->absence_proven);
  CHECK(z3.generator->examined == 8);
  REQUIRE(z3.extension_degree);
  CHECK(*z3.extension_degree == 2);

  const auto ded = locally_simple_at(kron::testing::dedekind_order(), 2);
  CHECK(ded.verdict == FiberVerdict::locally_simple_not_simple);
  CHECK(ded.factors.size() == 3);
  for (const auto& f : ded.factors) CHECK(f.dimension == 1);
  REQUIRE(ded.generator);
  CHECK(ded.generator->absence_proven);
  REQUIRE(ded.extension_degree);
  CHECK(*ded.extension_degree == 2);

  const auto json = ded.to_json();
  CHECK(json.at("verdict") == "locally-simple-not-simple");
}

TEST_CASE("locally_simple over the integers") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto r = locally_simple(diagonal(integers(), n), {});
    CHECK(r.locally_simple);
    CHECK(r.scope == "global");
    CHECK(r.discriminant == "1");
    CHECK(r.fibers.empty());
  }

  const auto nil = locally_simple(biquadratic_nilpotent(integers()), {2, 3});
  CHECK_FALSE(nil.locally_simple);
  CHECK(nil.scope == "global");
  REQUIRE_FALSE(nil.fibers.empty());
  CHECK(nil.fibers[0].prime == std::optional<std::uint64_t>(2));
  CHECK_THROWS_AS(locally_simple(biquadratic_nilpotent(integers()), {}), InvalidInput);

  const auto dual = locally_simple(kron::testing::dual_numbers(), {2, 3});
  CHECK(dual.locally_simple);
  CHECK(dual.scope == "global");

  const auto ded = locally_simple(kron::testing::dedekind_order(), {2});
  CHECK(ded.locally_simple);
  CHECK(ded.discriminant == "-503");
  REQUIRE(ded.fibers.size() == 2);
  CHECK(ded.fibers[0].prime == std::optional<std::uint64_t>(2));
  CHECK(ded.fibers[1].prime == std::optional<std::uint64_t>(503));

  const auto cbrt = locally_simple(kron::testing::cbrt2(), {});
  CHECK(cbrt.locally_simple);
  CHECK(cbrt.discriminant == "-108");
  CHECK(cbrt.fibers.size() == 2);
}

TEST_CASE("locally_simple over fields and polynomial bases") {
  const auto f8 = locally_simple(diagonal(PolyRing(Domain::prime_field(2), {}), 3), {});
  CHECK(f8.locally_simple);
  CHECK(f8.scope == "fiber");
  REQUIRE(f8.fibers.size() == 1);
  CHECK(f8.fibers[0].verdict == FiberVerdict::locally_simple_not_simple);

  const auto rad = locally_simple(kron::testing::radicial(), {});
  CHECK_FALSE(rad.locally_simple);
  CHECK(rad.scope == "global");
  REQUIRE_FALSE(rad.fibers.empty());
  CHECK(rad.fibers[0].verdict == FiberVerdict::not_locally_simple);
}

TEST_CASE("find_generator") {
  const PolyRing f2(Domain::prime_field(2), {});
  const auto absent = find_generator(diagonal(f2, 3));
  CHECK_FALSE(absent.found());
  CHECK(absent.absence_proven);
  CHECK(absent.examined == 8);
  CHECK(absent.method == "exhaustive");
  CHECK(absent.describe() == "no generator over GF(2) (exhaustive, 8 examined)");

  const PolyRing f4(Domain::galois_field(2, 2), {});
  const auto found = find_generator(diagonal(f4, 3));
  REQUIRE(found.found());
  CHECK(DenseAlgebra(diagonal(f4, 3)).generates(*found.generator));

  const auto zi5 = over(gaussian(), 5);
  const auto g = find_generator(zi5);
  REQUIRE(g.found());
  CHECK(DenseAlgebra(zi5).generates(DenseAlgebra(zi5).basis(1)));

  // Too large to enumerate: det U decides.
  const PolyRing f2big(Domain::prime_field(2), {});
  SearchOptions small;
  small.budget = 8;
  const auto nil = find_generator(biquadratic_nilpotent(f2big), small);
  CHECK_FALSE(nil.found());
  CHECK(nil.absence_proven);
  CHECK(nil.method == "identically-zero");

  const auto d5 = find_generator(diagonal(f2, 5), small);
  CHECK_FALSE(d5.found());
  CHECK(d5.absence_proven);
  CHECK(d5.method == "function-zero");

  const PolyRing f7(Domain::prime_field(7), {});
  SearchOptions medium;
  medium.budget = 64;
  const auto d3 = find_generator(diagonal(f7, 3), medium);
  REQUIRE(d3.found());
  CHECK(d3.method == "grid");
  const auto d3r = find_generator(diagonal(f7, 3), small);
  REQUIRE(d3r.found());
  CHECK(d3r.method == "random");
}

TEST_CASE("generators over extensions") {
  const auto ded2 = over(kron::testing::dedekind_order(), 2);
  const auto all = generator_over_extensions(ded2, 3, {}, true);
  REQUIRE(all.attempts.size() == 3);
  CHECK_FALSE(all.attempts[0].found());
  CHECK(all.attempts[1].found());
  CHECK(all.attempts[2].found());
  CHECK(all.attempts[2].field == Domain::galois_field(2, 3));
  REQUIRE(all.degree);
  CHECK(*all.degree == 2);

  const auto first = generator_over_extensions(ded2, 3);
  CHECK(first.attempts.size() == 2);

  const auto nil = generator_over_extensions(biquadratic_nilpotent(PolyRing(Domain::prime_field(2), {})), 2);
  CHECK_FALSE(nil.degree);
}

TEST_CASE("cotangent test agrees with generator search") {
  for (const auto& entry : kron::testing::catalog()) {
    if (entry.algebra.base().nvars() != 0) continue;
    for (std::uint64_t p : {2, 3, 5}) {
      CAPTURE(entry.name);
      CAPTURE(p);
      const auto report = locally_simple_at(entry.algebra, p);
      const auto search = generator_over_extensions(over(entry.algebra, p), static_cast<unsigned>(entry.algebra.rank()));
      CHECK(report.locally_simple() == search.degree.has_value());
    }
  }
}

TEST_CASE("vandermonde") {
  const Domain z = Domain::integers();
  const auto v3 = vandermonde_check(diagonal(integers(), 3), {z.from_int(0), z.from_int(1), z.from_int(2)});
  CHECK(z.to_string(v3.value) == "2");
  CHECK_FALSE(v3.unit);

  const auto v2 = vandermonde_check(diagonal(integers(), 2), {z.from_int(0), z.from_int(1)});
  CHECK(z.to_string(v2.value) == "1");
  CHECK(v2.unit);

  const Domain f5 = Domain::prime_field(5);
  const auto v5 = vandermonde_check(diagonal(PolyRing(f5, {}), 3), {f5.from_int(0), f5.from_int(1), f5.from_int(2)});
  CHECK(f5.to_string(v5.value) == "2");
  CHECK(v5.unit);

  CHECK_THROWS_AS(vandermonde_check(gaussian(), {z.from_int(0), z.from_int(1)}), InvalidInput);
  CHECK_THROWS_AS(vandermonde_check(diagonal(integers(), 2), {z.from_int(0)}), InvalidInput);
}

TEST_CASE("comaximal shifts") {
  const PolyRing q(Domain::rationals(), {});
  const auto lin = comaximal_shift(T(q, "T - 3"), T(q, "T - 1"));
  CHECK(lin.resultant.to_string() == "-X + 2");
  REQUIRE(lin.shift);
  CHECK(q.domain().to_string(*lin.shift) == "0");
  CHECK(lin.verified);

  const auto same = comaximal_shift(T(q, "T - 5"), T(q, "T - 5"));
  REQUIRE(same.shift);
  CHECK(q.domain().to_string(*same.shift) == "1");
  CHECK(same.verified);

  const PolyRing f2(Domain::prime_field(2), {});
  const auto c2 = comaximal_shift(T(f2, "T^2 + T + 1"), T(f2, "T^2 + T + 1"));
  CHECK(c2.resultant.to_string() == "X^4 + X^2");
  REQUIRE(c2.extension_degree);
  CHECK(*c2.extension_degree == 2);
  CHECK(c2.field == Domain::galois_field(2, 2));
  REQUIRE(c2.shift);
  CHECK(c2.verified);

  const PolyRing f3(Domain::prime_field(3), {});
  const auto c3 = comaximal_shift(T(f3, "T^2 + 1"), T(f3, "T^2 + T + 1"));
  REQUIRE(c3.shift);
  CHECK(f3.domain().to_string(*c3.shift) == "0");
  CHECK_FALSE(c3.extension_degree);
  REQUIRE(c3.u);
  REQUIRE(c3.v);
  CHECK(c3.verified);

  const PolyRing z = integers();
  const auto unit = comaximal_shift(T(z, "T"), T(z, "T - 1"));
  REQUIRE(unit.denominator);
  CHECK(abs(*unit.denominator) == 1);
  CHECK(unit.verified);

  const auto loc = comaximal_shift(T(z, "T^2 + 1"), T(z, "T^2 - 2"), 8);
  REQUIRE(loc.denominator);
  CHECK(*loc.denominator == 9);
  CHECK(loc.verified);

  CHECK_THROWS_AS(comaximal_shift(T(z, "2*T + 1"), T(z, "T")), InvalidInput);
}
