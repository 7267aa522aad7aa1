#include <random>

#include "doctest.h"
#include "kron/algebra/constructors.hpp"
#include "kron/errors.hpp"
#include "kron/generic/functoriality.hpp"
#include "support/catalog.hpp"

using namespace kron;
using kron::testing::gaussian;
using kron::testing::integers;

namespace {

MultiPoly whole(const GenericCharPoly& f) { return f.poly.to_multipoly(f.params.ring_with_outer()); }

MultiPoly parse_in(const GenericCharPoly& f, const char* text) {
  return MultiPoly::parse(f.params.ring_with_outer(), text);
}

PolyMatrix permutation(const PolyRing& r, const std::vector<std::size_t>& images) {
  PolyMatrix m(r, images.size(), images.size());
  for (std::size_t j = 0; j < images.size(); ++j) m.at(images[j], j) = MultiPoly::from_int(r, 1);
  return m;
}

}  // namespace

TEST_CASE("generic element") {
  const ParameterRing s(gaussian());
  CHECK(s.ring().variables() == std::vector<std::string>{"T1", "T2"});
  const auto xi = generic_element(s);
  CHECK(xi.coords[0] == s.t(0));
  CHECK(xi.coords[1] == s.t(1));

  const ParameterRing line(diagonal(integers(), 1));
  CHECK(generic_element(line).coords == std::vector<MultiPoly>{line.t(0)});

  const ParameterRing cubic(kron::testing::symbolic_cubic());
  CHECK(cubic.ring().variables() == std::vector<std::string>{"a0", "a1", "a2", "T1", "T2", "T3"});

  const ParameterRing rad(kron::testing::radicial());
  CHECK(rad.outer_var() == "Z");
}

TEST_CASE("gcp golden values") {
  const auto zi = gcp(gaussian());
  CHECK(zi.poly.to_string() == "X^2 - 2*T1*X + T1^2 + T2^2");

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto f = gcp(diagonal(integers(), n));
    std::string expected = "1";
    for (std::size_t i = 1; i <= n; ++i) expected += "*(X - T" + std::to_string(i) + ")";
    CHECK(whole(f) == parse_in(f, expected.c_str()));
  }

  const auto cubic = gcp(kron::testing::symbolic_cubic());
  CHECK(whole(cubic) == parse_in(cubic, kron::testing::kCubicGcp));

  const auto nil = gcp(biquadratic_nilpotent(integers()));
  CHECK(whole(nil) == parse_in(nil, "(X - T1)^4"));
}

TEST_CASE("gcp over finite fields and base variables") {
  const PolyRing f2(Domain::prime_field(2), {});
  const auto f = gcp(from_monogenic(f2, std::vector<long>{1, 1}));
  CHECK(f.poly.to_string() == "X^2 + T2*X + T1^2 + T1*T2 + T2^2");

  const auto rad = gcp(kron::testing::radicial());
  CHECK(rad.poly.var() == "Z");
  CHECK(rad.poly.degree() == 4);
}

TEST_CASE("Hamilton-Cayley and coefficient identities") {
  for (const auto& entry : kron::testing::catalog()) {
    CAPTURE(entry.name);
    const auto f = gcp(entry.algebra);
    const ScalarExtension ext(entry.algebra, f.params.ring());
    const auto xi = generic_element(f.params);
    CHECK(ext.evaluate(f.poly, xi).is_zero());
    const int n = static_cast<int>(entry.algebra.rank());
    CHECK(f.poly.coeff(n - 1) == -ext.trace(xi));
    const MultiPoly sign = MultiPoly::from_int(f.params.ring(), n % 2 == 0 ? 1 : -1);
    CHECK(f.poly.coeff(0) * sign == ext.norm(xi));
  }
}

TEST_CASE("specialization recovers element characteristic polynomials") {
  const PolyRing z = integers();
  const auto f = gcp(gaussian());
  CHECK(specialize(f.params, f.poly, {MultiPoly::from_int(z, 0), MultiPoly::from_int(z, 1)}).to_string() ==
        "X^2 + 1");

  const auto d = gcp(diagonal(z, 2));
  CHECK(specialize(d.params, d.poly, {MultiPoly::from_int(z, 3), MultiPoly::from_int(z, 5)}).to_string() ==
        "X^2 - 8*X + 15");

  const std::vector<MultiPoly> x{MultiPoly::from_int(z, 4), MultiPoly::from_int(z, -7)};
  CHECK(specialize(f.params, generic_element(f.params), x).coords == x);
  CHECK_THROWS_AS(specialize(f.params, f.poly, {MultiPoly::from_int(z, 1)}), InvalidInput);

  std::mt19937_64 rng(11);
  for (const auto& entry : kron::testing::catalog()) {
    if (entry.algebra.base().nvars() != 0) continue;
    CAPTURE(entry.name);
    const auto g = gcp(entry.algebra);
    const ScalarExtension ext(entry.algebra);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<MultiPoly> coords;
      for (std::size_t i = 0; i < entry.algebra.rank(); ++i)
        coords.push_back(MultiPoly::from_int(entry.algebra.base(), static_cast<long>(rng() % 11) - 5));
      CHECK(specialize(g.params, g.poly, coords) == ext.charpoly(ext.element(coords)));
    }
  }
}

TEST_CASE("parameter maps") {
  const auto zi = gaussian();
  const ParameterMap id(AlgebraMorphism::identity(zi));
  CHECK(id.images() == std::vector<MultiPoly>{id.target().t(0), id.target().t(1)});
  CHECK(id.is_injective());

  const auto zz = product(gaussian(), gaussian());
  const ParameterMap q1(AlgebraMorphism::projection(zz, 0));
  CHECK(q1.images()[0].to_string() == "T1");
  CHECK(q1.images()[1].to_string() == "T2");
  const ParameterMap q2(AlgebraMorphism::projection(zz, 1));
  CHECK(q2.images()[0].to_string() == "T3");
  CHECK(q2.images()[1].to_string() == "T4");

  const PolyRing z = integers();
  PolyMatrix kill(z, 1, 2);
  kill.at(0, 0) = MultiPoly::from_int(z, 1);
  const ParameterMap v(AlgebraMorphism(kron::testing::dual_numbers(), diagonal(z, 1), kill));
  CHECK(v.images()[0].to_string() == "T1");
  CHECK(v.linear_rank() == 1);
}

TEST_CASE("automorphism_invariance") {
  const PolyRing z = integers();
  const auto d3 = diagonal(z, 3);
  const std::vector<std::vector<std::size_t>> perms{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : perms) {
    const auto r = check_automorphism_invariance(AlgebraMorphism(d3, d3, permutation(z, p)));
    CHECK(r.passed());
    CHECK(r.check == "automorphism_invariance");
  }

  // Complex conjugation on Z[i].
  PolyMatrix conj(z, 2, 2);
  conj.at(0, 0) = MultiPoly::from_int(z, 1);
  conj.at(1, 1) = MultiPoly::from_int(z, -1);
  CHECK(check_automorphism_invariance(AlgebraMorphism(gaussian(), gaussian(), conj)).passed());

  const auto zz = product(gaussian(), diagonal(z, 1));
  CHECK_THROWS_AS(check_automorphism_invariance(AlgebraMorphism::projection(zz, 0)), InvalidInput);
}

TEST_CASE("free_extension") {
  const auto zi = gaussian();
  const auto zz = product(zi, zi);
  const auto r = check_free_extension(AlgebraMorphism::diagonal_embedding(zi, zz), 2);
  CHECK(r.passed());
  CHECK(r.find("d") == "2");

  const PolyRing z = integers();
  const auto d1 = diagonal(z, 1);
  const auto d2 = diagonal(z, 2);
  CHECK(check_free_extension(AlgebraMorphism::diagonal_embedding(d1, d2), 2).passed());

  // C = B[Z]/(Z^2 - 1).
  const auto c = tensor(zi, from_monogenic(z, std::vector<long>{-1, 0}));
  CHECK(check_free_extension(AlgebraMorphism::tensor_inclusion(zi, from_monogenic(z, std::vector<long>{-1, 0}), c), 2)
            .passed());

  CHECK_THROWS_AS(check_free_extension(AlgebraMorphism::identity(zi), 2), InvalidInput);
}

TEST_CASE("nilpotent_quotient") {
  const PolyRing z = integers();
  PolyMatrix kill(z, 1, 2);
  kill.at(0, 0) = MultiPoly::from_int(z, 1);
  const AlgebraMorphism u(kron::testing::dual_numbers(), diagonal(z, 1), kill);
  const auto r = check_nilpotent_quotient(u, 2);
  CHECK(r.passed());
  CHECK(r.find("lhs") == "X^2 - 2*T1*X + T1^2");

  const auto wrong = check_nilpotent_quotient(u, 1);
  CHECK(wrong.verdict == Verdict::fail);
  CHECK_FALSE(wrong.find("difference").empty());

  PolyMatrix to_residue(z, 1, 4);
  to_residue.at(0, 0) = MultiPoly::from_int(z, 1);
  CHECK(check_nilpotent_quotient(AlgebraMorphism(biquadratic_nilpotent(z), diagonal(z, 1), to_residue), 4).passed());
}

TEST_CASE("product_decomposition") {
  const PolyRing z = integers();
  CHECK(check_product_decomposition(product(gaussian(), gaussian())).passed());
  CHECK(check_product_decomposition(product(gaussian(), diagonal(z, 1))).passed());
  CHECK(check_product_decomposition(product({kron::testing::sqrt2(), kron::testing::dual_numbers(), diagonal(z, 1)}))
            .passed());
  CHECK_THROWS_AS(check_product_decomposition(gaussian()), InvalidInput);

  const auto catalog = kron::testing::catalog();
  for (std::size_t i = 0; i < catalog.size(); ++i)
    for (std::size_t j = i; j < catalog.size(); ++j) {
      const auto& a = catalog[i].algebra;
      const auto& b = catalog[j].algebra;
      if (!(a.base() == b.base()) || a.rank() + b.rank() > 6) continue;
      CAPTURE(catalog[i].name);
      CAPTURE(catalog[j].name);
      CHECK(check_product_decomposition(product(a, b)).passed());
    }
}

TEST_CASE("gcp under unimodular change of basis") {
  const auto zi = gaussian();
  const mpq_class one(1), zero(0);
  const auto sheared = change_basis(zi, {{one, one}, {zero, one}});
  // The identity map on elements, written from the sheared basis to the old one.
  const PolyRing z = integers();
  PolyMatrix m(z, 2, 2);
  m.at(0, 0) = MultiPoly::from_int(z, 1);
  m.at(0, 1) = MultiPoly::from_int(z, 1);
  m.at(1, 1) = MultiPoly::from_int(z, 1);
  const ParameterMap v(AlgebraMorphism(sheared, zi, m));
  CHECK(v.apply(gcp(zi).poly) == gcp(sheared).poly);
}
