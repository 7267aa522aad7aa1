#include "kron/fibers/fibers.hpp"

#include <algorithm>

#include "kron/algebra/constructors.hpp"
#include "kron/errors.hpp"
#include "kron/ringkit/gfpoly.hpp"
#include "kron/ringkit/integers.hpp"

namespace kron {

std::vector<Vec> radical(const FiniteFreeAlgebra& bq) {
  if (!bq.domain().is_finite()) throw InvalidInput("radical: base must be a finite field");
  const DenseAlgebra a(bq);
  const std::uint64_t q = a.field().order();
  unsigned m = 1;
  for (std::uint64_t qm = q; qm < a.rank(); qm *= q) ++m;
  const FieldMatrix frob = a.linear_map([&](Vec x) {
    for (unsigned i = 0; i < m; ++i) x = a.pow(x, q);
    return x;
  });
  return frob.kernel();
}

namespace {

// Monic minimal polynomial of x over the field.
GfPoly minimal_polynomial(const DenseAlgebra& a, const Vec& x) {
  const Domain& f = a.field();
  std::vector<Vec> powers = {a.one()};
  while (true) {
    const Vec next = a.mul(powers.back(), x);
    const FieldMatrix m = FieldMatrix::from_columns(f, powers, a.rank());
    if (auto c = m.solve(next)) {
      std::vector<Scalar> coeffs;
      for (const auto& ci : *c) coeffs.push_back(f.neg(ci));
      coeffs.push_back(f.one());
      return GfPoly(f, std::move(coeffs));
    }
    powers.push_back(next);
  }
}

Vec lagrange_idempotent(const DenseAlgebra& a, const Vec& k, const Scalar& lambda, const std::vector<Scalar>& roots) {
  const Domain& f = a.field();
  Vec e = a.one();
  for (const auto& mu : roots) {
    if (mu == lambda) continue;
    const Vec factor = a.scale(a.sub(k, a.scale(a.one(), mu)), f.inv(f.sub(lambda, mu)));
    e = a.mul(e, factor);
  }
  return e;
}

std::size_t span_dim(const Domain& f, const std::vector<Vec>& vs, std::size_t n) {
  return vs.empty() ? 0 : span_basis(f, vs, n).size();
}

}  // namespace

std::vector<LocalFactorReport> local_factors(const FiniteFreeAlgebra& bq, std::uint64_t seed) {
  if (!bq.domain().is_finite()) throw InvalidInput("local_factors: base must be a finite field");
  const DenseAlgebra a(bq);
  const Domain& f = a.field();
  const std::size_t n = a.rank();
  const std::uint64_t q = f.order();

  const FieldMatrix fixed = a.linear_map([&](const Vec& x) { return a.sub(a.pow(x, q), x); });
  const std::vector<Vec> k_basis = fixed.kernel();

  std::vector<Vec> idempotents = {a.one()};
  for (const auto& k : k_basis) {
    if (idempotents.size() == k_basis.size()) break;
    const GfPoly mp = minimal_polynomial(a, k);
    const std::vector<Scalar> roots = roots_gf(mp, seed);
    if (static_cast<int>(roots.size()) != mp.degree())
      throw InvalidInput("local_factors: Frobenius-fixed element with non-split minimal polynomial");
    std::vector<Vec> refined;
    for (const auto& e : idempotents) {
      for (const auto& lambda : roots) {
        Vec piece = a.mul(e, lagrange_idempotent(a, k, lambda, roots));
        if (!a.is_zero(piece)) refined.push_back(std::move(piece));
      }
    }
    idempotents = std::move(refined);
  }

  const std::vector<Vec> rad = radical(bq);
  std::vector<LocalFactorReport> out;
  for (const auto& e : idempotents) {
    LocalFactorReport r;
    r.idempotent = e;
    r.dimension = a.mul_matrix(e).rank();
    std::vector<Vec> m;
    for (const auto& x : rad) m.push_back(a.mul(x, e));
    const std::vector<Vec> m_basis = m.empty() ? m : span_basis(f, m, n);
    std::vector<Vec> m2;
    for (std::size_t i = 0; i < m_basis.size(); ++i)
      for (std::size_t j = i; j < m_basis.size(); ++j) m2.push_back(a.mul(m_basis[i], m_basis[j]));
    const std::size_t dim_m = m_basis.size();
    const std::size_t dim_m2 = span_dim(f, m2, n);
    r.residue_degree = r.dimension - dim_m;
    if (r.residue_degree == 0 || (dim_m - dim_m2) % r.residue_degree)
      throw InvalidInput("local_factors: inconsistent residue degree");
    r.cotangent_dimension = (dim_m - dim_m2) / r.residue_degree;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const LocalFactorReport& x, const LocalFactorReport& y) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto xi = f.index(x.idempotent[i]);
      const auto yi = f.index(y.idempotent[i]);
      if (xi != yi) return xi > yi;
    }
    return false;
  });
  return out;
}

std::string to_string(FiberVerdict v) {
  switch (v) {
    case FiberVerdict::simple:
      return "simple";
    case FiberVerdict::locally_simple_not_simple:
      return "locally-simple-not-simple";
    case FiberVerdict::not_locally_simple:
      return "not-locally-simple";
  }
  return {};
}

nlohmann::ordered_json FiberReport::to_json() const {
  nlohmann::ordered_json j;
  j["fiber"] = fiber;
  j["prime"] = prime ? nlohmann::ordered_json(*prime) : nlohmann::ordered_json(nullptr);
  j["field"] = field.name();
  j["verdict"] = to_string(verdict);
  auto fs = nlohmann::ordered_json::array();
  for (const auto& lf : factors) {
    nlohmann::ordered_json x;
    x["dimension"] = lf.dimension;
    x["residue_degree"] = lf.residue_degree;
    x["cotangent_dimension"] = lf.cotangent_dimension;
    x["idempotent"] = vec_to_string(field, lf.idempotent);
    fs.push_back(std::move(x));
  }
  j["local_factors"] = std::move(fs);
  if (generator) {
    nlohmann::ordered_json g;
    g["found"] = generator->found();
    g["method"] = generator->method;
    g["examined"] = generator->examined;
    g["absence_proven"] = generator->absence_proven;
    if (generator->generator) g["element"] = vec_to_string(generator->field, *generator->generator);
    j["generator"] = std::move(g);
  }
  j["extension_degree"] = extension_degree ? nlohmann::ordered_json(*extension_degree) : nlohmann::ordered_json(nullptr);
  j["witness"] = witness;
  j["notes"] = notes;
  return j;
}

FiberReport analyze_fiber(const FiniteFreeAlgebra& bq, const std::string& label, const SearchOptions& opts) {
  FiberReport r{label, std::nullopt, bq.domain(), FiberVerdict::not_locally_simple, {}, std::nullopt, std::nullopt, {}, {}};
  r.factors = local_factors(bq, opts.seed);
  r.notes.push_back(
      "residue field extensions of a finite field are separable, so the cotangent test over the fiber's own field "
      "decides the geometric-fiber condition");
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& lf = r.factors[i];
    if (lf.cotangent_dimension > 1) {
      r.witness = "local factor " + std::to_string(i + 1) + " has dimension " + std::to_string(lf.dimension) +
                  ", residue degree " + std::to_string(lf.residue_degree) + " and cotangent dimension " +
                  std::to_string(lf.cotangent_dimension);
      return r;
    }
  }
  r.generator = find_generator(bq, opts);
  if (r.generator->found()) {
    r.verdict = FiberVerdict::simple;
    r.witness = r.generator->describe();
    return r;
  }
  r.verdict = FiberVerdict::locally_simple_not_simple;
  r.witness = r.generator->describe();
  if (bq.domain().kind() == DomainKind::prime_field) {
    for (unsigned e = 2; e <= bq.rank(); ++e) {
      const Domain field = Domain::galois_field(bq.domain().characteristic(), e);
      const GeneratorSearch g = find_generator(base_change(bq, field), opts);
      if (g.found()) {
        r.extension_degree = e;
        r.witness += "; " + g.describe();
        break;
      }
    }
    if (!r.extension_degree)
      r.notes.push_back("no generator over GF(p^r) for r <= rank; larger extensions were not searched");
  }
  return r;
}

FiberReport locally_simple_at(const FiniteFreeAlgebra& b, std::uint64_t p, const SearchOptions& opts) {
  if (b.domain().kind() != DomainKind::integers || b.base().nvars() != 0)
    throw InvalidInput("locally_simple_at: algebra must be over the integers");
  if (!is_prime(p)) throw InvalidInput("locally_simple_at: " + std::to_string(p) + " is not prime");
  FiberReport r = analyze_fiber(base_change(b, Domain::prime_field(p)), "p=" + std::to_string(p), opts);
  r.prime = p;
  return r;
}

nlohmann::ordered_json SimplicityReport::to_json() const {
  nlohmann::ordered_json j;
  j["scope"] = scope;
  j["locally_simple"] = locally_simple;
  j["discriminant"] = discriminant;
  auto fs = nlohmann::ordered_json::array();
  for (const auto& f : fibers) fs.push_back(f.to_json());
  j["fibers"] = std::move(fs);
  j["notes"] = notes;
  return j;
}

SimplicityReport locally_simple(const FiniteFreeAlgebra& b, const std::vector<std::uint64_t>& extra_primes,
                                const SearchOptions& opts) {
  SimplicityReport rep;
  const Domain& dom = b.domain();
  const MultiPoly disc = trace_form_disc(b);
  rep.discriminant = disc.to_string();
  auto finish = [&] {
    rep.locally_simple = std::all_of(rep.fibers.begin(), rep.fibers.end(), [](const FiberReport& f) { return f.locally_simple(); });
    return rep;
  };

  if (dom.kind() == DomainKind::integers && b.base().nvars() == 0) {
    std::vector<std::uint64_t> primes = extra_primes;
    const mpz_class d = dom.as_mpz(disc.constant_term());
    if (d != 0) {
      for (auto p : prime_divisors(d)) primes.push_back(p);
      rep.scope = "global";
      rep.notes.push_back(
          "primes not dividing the trace-form discriminant have etale fibers (standard fact, not re-proved here)");
    } else {
      if (extra_primes.empty())
        throw InvalidInput("locally_simple: trace-form discriminant is 0; supply primes explicitly");
      rep.scope = "inconclusive";
      rep.notes.push_back("trace-form discriminant is 0: only the supplied primes were examined");
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (auto p : primes) rep.fibers.push_back(locally_simple_at(b, p, opts));
    finish();
    if (!rep.locally_simple) {
      rep.scope = "global";
    } else if (rep.scope == "inconclusive" && b.monogenic()) {
      rep.scope = "global";
      rep.notes.push_back("monogenic presentation: the algebra is simple over the integers");
    }
    return rep;
  }
  if (dom.is_finite() && b.base().nvars() == 0) {
    rep.scope = "fiber";
    rep.fibers.push_back(analyze_fiber(b, dom.name(), opts));
    return finish();
  }
  if (dom.is_finite()) {
    rep.scope = "inconclusive";
    const std::size_t nv = b.base().nvars();
    for (long value : {0L, 1L}) {
      std::vector<Scalar> point(nv, dom.from_int(value));
      std::string label;
      for (std::size_t i = 0; i < nv; ++i)
        label += (i ? "," : "") + b.base().variable(i) + "=" + std::to_string(value);
      rep.fibers.push_back(analyze_fiber(specialize_base(b, point), label + " over " + dom.name(), opts));
    }
    rep.notes.push_back("base has variables: fibers sampled at rational points; a failing fiber is a sound witness");
    finish();
    if (!rep.locally_simple) rep.scope = "global";
    return rep;
  }
  throw InvalidInput("locally_simple: base " + dom.name() + " is not supported");
}

}  // namespace kron
