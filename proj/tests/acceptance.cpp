// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "kron/algebra/constructors.hpp"
#include "kron/errors.hpp"
#include "kron/fibers/fibers.hpp"
#include "kron/hilbert/hilbert.hpp"
#include "kron/kronecker/irreducibility.hpp"
#include "kron/kronecker/kronecker.hpp"
#include "kron/ringkit/gfpoly.hpp"
#include "kron/ringkit/integers.hpp"
#include "support/catalog.hpp"

using namespace kron;
using kron::testing::integers;

namespace {

// Collects mismatches; a criterion passes when none were recorded.
struct Log {
  std::ostringstream detail;
  int failures = 0;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures < 5) detail << "\n      mismatch: " << what;
    ++failures;
  }
};

MultiPoly whole(const GenericCharPoly& f) { return f.poly.to_multipoly(f.params.ring_with_outer()); }

void golden_diagonal(Log& log) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = gcp(diagonal(integers(), n));
    UPoly expected(f.params.ring(), {MultiPoly::from_int(f.params.ring(), 1)}, "X");
    for (std::size_t i = 0; i < n; ++i) expected = expected * UPoly::linear(f.params.t(i), "X");
    log.expect(f.poly == expected, "diagonal n=" + std::to_string(n));
    log.expect(f.poly.to_string() == expected.to_string(), "diagonal text n=" + std::to_string(n));
  }
}

void golden_cubic(Log& log) {
  const auto f = gcp(kron::testing::symbolic_cubic());
  const MultiPoly golden = MultiPoly::parse(f.params.ring_with_outer(), kron::testing::kCubicGcp);
  log.expect(whole(f) == golden, "cubic gcp vs displayed formula (T0,T1,T2 -> T1,T2,T3)");
  log.expect(whole(f).to_string() == golden.to_string(), "cubic canonical text");
}

void golden_radicial(Log& log) {
  const auto nil = gcp(biquadratic_nilpotent(integers()));
  log.expect(whole(nil) == MultiPoly::parse(nil.params.ring_with_outer(), "(X - T1)^4"), "nilpotent gcp");

  const MultiPoly norm = norm_form(kron::testing::radicial());
  const MultiPoly golden = MultiPoly::parse(norm.ring(), kron::testing::kRadicialNorm);
  log.expect(norm == golden, "radicial norm form");
  const auto smoke = irreducibility_smoke(norm);
  log.expect(smoke.found() && smoke.method == "power", "smoke finds a power");
  log.expect(smoke.found() && *smoke.left == *smoke.right && *smoke.left * *smoke.right == norm,
             "smoke witness is a square");
}

void det_u_certificate(Log& log) {
  const auto cubic = power_matrix(kron::testing::symbolic_cubic());
  log.expect(cubic.det == MultiPoly::parse(cubic.params.ring(), kron::testing::kCubicDetU), "cubic det U");
  const auto cert = injectivity_certificate(kron::testing::symbolic_cubic(), {});
  log.expect(cert.kind == CertificateKind::monic_in_variable && cert.variable_name == "T2" && cert.degree == 3,
             "cubic certificate");

  std::vector<FiniteFreeAlgebra> algebras;
  for (const auto& e : kron::testing::catalog())
    if (e.algebra.monogenic() && e.algebra.rank() <= 5) algebras.push_back(e.algebra);
  const PolyRing z = integers();
  algebras.push_back(from_monogenic(z, std::vector<long>{1, 0, 0, 0}, "Y^4+1"));
  algebras.push_back(from_monogenic(z, std::vector<long>{-1, -1, 0, 0, 0}, "Y^5-Y-1"));
  algebras.push_back(from_monogenic(z, std::vector<long>{0, 0, 0, 0, 0}, "Y^5"));
  algebras.push_back(from_monogenic(PolyRing(Domain::prime_field(3), {}), std::vector<long>{1, 2, 0, 0}, "GF(3) quartic"));
  for (const auto& b : algebras) {
    const auto pm = power_matrix(b);
    const std::size_t n = b.rank();
    const int expected = static_cast<int>(n * (n - 1) / 2);
    std::vector<std::size_t> ts;
    for (std::size_t i = 0; i < n; ++i) ts.push_back(pm.params.t_index(i));
    int deg = -1;
    log.expect(pm.det.is_homogeneous_in(ts, &deg) && deg == expected, b.label() + " homogeneous degree");
    if (n >= 2)
      log.expect(pm.det.degree_in(ts[1]) == expected && pm.det.coefficient_in(ts[1], expected).is_one(),
                 b.label() + " monic in T2");
  }
}

void catalog_equivalence(Log& log) {
  const auto primes = primes_between(2, 50);
  for (const auto& e : kron::testing::catalog()) {
    const auto& b = e.algebra;
    const bool over_z = b.domain().kind() == DomainKind::integers;
    const auto report = locally_simple(b, over_z ? primes : std::vector<std::uint64_t>{});
    const MultiPoly det = power_matrix(b).det;
    bool det_ok = !det.is_zero();
    if (over_z)
      for (auto p : primes) det_ok = det_ok && !vanishes_mod(det, p);
    log.expect(report.locally_simple == det_ok, e.name + ": verdict vs det U");
    log.expect(report.locally_simple == e.locally_simple, e.name + ": expected verdict");
  }
}

void cotangent_vs_generator(Log& log) {
  for (const auto& e : kron::testing::catalog()) {
    const auto& b = e.algebra;
    const unsigned n = static_cast<unsigned>(b.rank());
    std::vector<std::pair<std::string, FiniteFreeAlgebra>> fibers;
    if (b.domain().kind() == DomainKind::integers) {
      for (std::uint64_t p : {2, 3, 5}) fibers.emplace_back("p=" + std::to_string(p), base_change(b, Domain::prime_field(p)));
    } else {
      const Domain& f = b.domain();
      fibers.emplace_back("origin", specialize_base(b, std::vector<Scalar>(b.base().nvars(), f.zero())));
      fibers.emplace_back("ones", specialize_base(b, std::vector<Scalar>(b.base().nvars(), f.one())));
    }
    for (const auto& [label, bq] : fibers) {
      const auto fiber = analyze_fiber(bq, label);
      const auto search = generator_over_extensions(bq, n);
      log.expect(fiber.locally_simple() == search.degree.has_value(), e.name + " " + label);
    }
  }

  const auto f2 = find_generator(diagonal(PolyRing(Domain::prime_field(2), {}), 3));
  log.expect(!f2.found() && f2.absence_proven && f2.examined == 8 && f2.method == "exhaustive", "GF(2)^3 exhaustion");

  const auto ded = locally_simple_at(kron::testing::dedekind_order(), 2);
  log.expect(ded.verdict == FiberVerdict::locally_simple_not_simple, "dedekind verdict at 2");
  log.expect(ded.generator && !ded.generator->found() && ded.generator->absence_proven, "dedekind: none over GF(2)");
  const auto ext = generator_over_extensions(base_change(kron::testing::dedekind_order(), Domain::prime_field(2)), 3, {},
                                             true);
  log.expect(ext.attempts.size() == 3 && ext.attempts[2].found(), "dedekind: generator over GF(8)");
}

void theorem33(Log& log) {
  const PolyRing z = integers();
  const std::vector<std::pair<std::vector<long>, std::vector<std::uint64_t>>> cases{
      {{1, 0}, {2, 3, 5}},
      {{-2, 0, 0}, {2, 3, 5, 7, 31}},
  };
  for (const auto& [low, primes] : cases) {
    const auto b = from_monogenic(z, low);
    for (auto p : primes) {
      const std::string tag = b.label() + " p=" + std::to_string(p);
      const auto r = theorem33_check(b, p);
      log.expect(r.passed(), tag + " identity");

      // Independent factorization of g mod p.
      std::vector<long> coeffs = low;
      coeffs.push_back(1);
      const auto expected = factor_gf(GfPoly::from_ints(Domain::prime_field(p), coeffs), 12345);
      std::size_t k = 0;
      while (!r.find("Pi_" + std::to_string(k + 1)).empty()) ++k;
      log.expect(k == expected.size(), tag + " number of factors");
      if (k != expected.size()) continue;

      std::vector<std::string> vars{"X"};
      for (std::size_t i = 1; i <= b.rank(); ++i) vars.push_back("T" + std::to_string(i));
      const PolyRing ring(Domain::prime_field(p), vars);
      std::vector<std::pair<int, unsigned>> got, want;
      for (std::size_t i = 0; i < k; ++i) {
        const std::string idx = std::to_string(i + 1);
        got.emplace_back(MultiPoly::parse(ring, r.find("Pi_" + idx)).degree_in(0),
                         static_cast<unsigned>(std::stoul(r.find("e_" + idx))));
        want.emplace_back(expected[i].factor.degree(), expected[i].multiplicity);
      }
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      log.expect(got == want, tag + " degree/exponent pattern");
    }
  }
  const auto zi2 = theorem33_check(kron::testing::gaussian(), 2);
  log.expect(zi2.find("e_1") == "2" && zi2.find("Pi_2").empty(), "Z[i] p=2 has the Pi^2 shape");
  const auto c3 = theorem33_check(kron::testing::cbrt2(), 3);
  log.expect(c3.find("e_1") == "3" && c3.find("Pi_2").empty(), "Y^3-2 p=3 has the Pi^3 shape");
}

void theorem35(Log& log) {
  const std::vector<std::pair<FiniteFreeAlgebra, std::string>> cases{
      {kron::testing::gaussian(), "4"}, {kron::testing::sqrt2(), "8"}, {kron::testing::cbrt2(), "108"}};
  for (const auto& [b, value] : cases) {
    const auto r = theorem35_check(b);
    log.expect(r.passed() && r.find("content") == value, b.label() + " content " + value);
  }
  const auto sym = theorem35_check(diagonal(integers(), 4));
  log.expect(sym.passed() && sym.find("content") == "1", "Z^4 content 1");
}

// det by cofactor expansion along the first row.
MultiPoly cofactor_det(const std::vector<std::vector<MultiPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  MultiPoly acc(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<MultiPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const MultiPoly term = m[0][j] * cofactor_det(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

void kernel_oracles(Log& log) {
  std::mt19937_64 rng(2024);
  const PolyRing z = integers();
  const PolyRing zx(Domain::integers(), {"X"});
  const MultiPoly x = MultiPoly::variable(zx, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    PolyMatrix m(z, n, n);
    std::vector<std::vector<MultiPoly>> xi_minus_m(n, std::vector<MultiPoly>(n, MultiPoly(zx)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = static_cast<long>(rng() % 19) - 9;
        m.at(i, j) = MultiPoly::from_int(z, v);
        xi_minus_m[i][j] = (i == j ? x : MultiPoly(zx)) - MultiPoly::from_int(zx, v);
      }
    log.expect(m.charpoly().to_multipoly(zx) == cofactor_det(xi_minus_m), "charpoly trial " + std::to_string(trial));
  }

  for (const Domain& f : {Domain::prime_field(2), Domain::prime_field(3), Domain::prime_field(5), Domain::prime_field(7),
                          Domain::galois_field(2, 2), Domain::galois_field(3, 2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int deg = 1 + static_cast<int>(rng() % 9);
      std::vector<Scalar> c;
      for (int i = 0; i < deg; ++i) c.push_back(f.element(rng() % f.order()));
      c.push_back(f.one());
      const GfPoly g(f, c);
      GfPoly prod = GfPoly::one(f);
      bool irreducible = true;
      for (const auto& fac : factor_gf(g, trial)) {
        irreducible = irreducible && is_irreducible(fac.factor);
        for (unsigned k = 0; k < fac.multiplicity; ++k) prod = prod * fac.factor;
      }
      log.expect(prod == g && irreducible, "factor_gf over " + f.name());
    }
  }

  const Domain f5 = Domain::prime_field(5);
  const PolyRing r5(f5, {});
  auto random_poly = [&](int deg) {
    std::vector<Scalar> c;
    for (int i = 0; i < deg; ++i) c.push_back(f5.element(rng() % 5));
    c.push_back(f5.element(1 + rng() % 4));
    return GfPoly(f5, c);
  };
  auto as_upoly = [&](const GfPoly& g) { return UPoly::from_scalars(r5, g.coeffs(), "T"); };
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 5);
    GfPoly f = random_poly(m), g = random_poly(n);
    if (trial % 4 == 0) {  // force a common factor
      const GfPoly h = random_poly(1);
      f = f * h;
      g = g * h;
    }
    const MultiPoly fg = resultant(as_upoly(f), as_upoly(g));
    const MultiPoly gf = resultant(as_upoly(g), as_upoly(f));
    const bool odd = (f.degree() * g.degree()) % 2 == 1;
    log.expect(fg == (odd ? -gf : gf), "resultant antisymmetry");
    log.expect(fg.is_zero() == (gcd(f, g).degree() > 0), "resultant vanishing");
    if (trial % 5 == 0) {
      const GfPoly h = random_poly(1 + static_cast<int>(rng() % 3));
      log.expect(resultant(as_upoly(f * h), as_upoly(g)) == fg * resultant(as_upoly(h), as_upoly(g)),
                 "resultant multiplicativity");
    }
  }
}

std::string run_kron(const std::string& args, int& exit_code) {
  const std::string cmd = std::string(KRON_BINARY) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

void determinism(Log& log) {
  const std::string data = KRON_DATA_DIR;
  const std::vector<std::string> runs{
      "hilbert --json --no-timing --seed 3 --primes 2,3,5,7 " + data + "/cbrt2.json",
      "hilbert --json --no-timing --seed 3 --primes 2,3,5 " + data + "/gaussian.json",
      "check --json --no-timing --seed 3 --primes 2,3 " + data + "/dedekind.json",
      "check --json --no-timing --seed 3 " + data + "/diagonal3_gf2.json",
      "check --json --no-timing --seed 3 --primes 2 " + data + "/nilpotent.json",
  };
  for (const auto& args : runs) {
    int a_code = 0, b_code = 0;
    const std::string a = run_kron(args, a_code);
    const std::string b = run_kron(args, b_code);
    log.expect(!a.empty() && a == b && a_code == b_code, args);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"gcp of the diagonal algebra is the expanded product, n <= 6", golden_diagonal},
      {"gcp of the symbolic cubic matches the displayed formula", golden_cubic},
      {"nilpotent gcp and radicial norm form, smoke finds the square", golden_radicial},
      {"det U of the cubic; homogeneous and monic for monogenic algebras", det_u_certificate},
      {"catalog: local simplicity iff det U nonzero over Q and mod p <= 50", catalog_equivalence},
      {"cotangent test agrees with generator search over extensions", cotangent_vs_generator},
      {"theorem 33 splitting identity and shapes", theorem33},
      {"theorem 35 content equals the discriminant", theorem35},
      {"kernel oracles: charpoly, factor_gf, resultant laws", kernel_oracles},
      {"byte-identical JSON across runs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(log);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && log.failures == 0;
    if (!ok) ++failed;
    std::printf("%s  %2zu  %-66s (%zu checks, %.2fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                log.checks, secs);
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (log.failures) std::printf("%s\n", log.detail.str().c_str() + 1);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
