#include "kron/fibers/generator.hpp"

#include <random>

#include "kron/algebra/constructors.hpp"
#include "kron/errors.hpp"
#include "kron/kronecker/kronecker.hpp"

namespace kron {

std::string GeneratorSearch::describe() const {
  if (generator) return "generator " + vec_to_string(field, *generator) + " over " + field.name() + " (" + method + ")";
  if (absence_proven)
    return "no generator over " + field.name() + " (" + method + ", " + std::to_string(examined) + " examined)";
  return "no generator found over " + field.name();
}

namespace {

// q^n, or nullopt when it exceeds limit.
std::optional<std::uint64_t> bounded_power(std::uint64_t q, std::size_t n, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (r > limit / q) return std::nullopt;
    r *= q;
  }
  return r;
}

// Replaces T^e (e >= q) by T^{((e-1) mod (q-1)) + 1}: same function on 𝔽_q.
MultiPoly reduce_as_function(const MultiPoly& f, std::uint64_t q) {
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial r;
    for (std::size_t v = 0; v < f.ring().nvars(); ++v) {
      std::uint64_t e = m[v];
      if (e >= q) e = (e - 1) % (q - 1) + 1;
      r.set(v, static_cast<unsigned>(e));
    }
    terms.emplace_back(r, c);
  }
  return MultiPoly::from_terms(f.ring(), std::move(terms));
}

}  // namespace

GeneratorSearch find_generator(const FiniteFreeAlgebra& bq, const SearchOptions& opts) {
  const Domain& field = bq.domain();
  if (!field.is_finite()) throw InvalidInput("find_generator: base must be a finite field");
  const DenseAlgebra a(bq);
  const std::size_t n = a.rank();
  const std::uint64_t q = field.order();
  GeneratorSearch out{field, std::nullopt, "", 0, false};

  if (auto total = bounded_power(q, n, opts.budget)) {
    out.method = "exhaustive";
    Vec x(n, field.zero());
    for (std::uint64_t idx = 0; idx < *total; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = n; k-- > 0;) {
        x[k] = field.element(rest % q);
        rest /= q;
      }
      ++out.examined;
      if (a.generates(x)) {
        out.generator = x;
        return out;
      }
    }
    out.absence_proven = true;
    return out;
  }

  const PowerMatrix pm = power_matrix(bq);
  if (pm.det.is_zero()) {
    out.method = "identically-zero";
    out.absence_proven = true;
    return out;
  }
  const MultiPoly f = reduce_as_function(pm.det, q);
  if (f.is_zero()) {
    out.method = "function-zero";
    out.absence_proven = true;
    return out;
  }
  const std::size_t nv = f.ring().nvars();
  auto point_of = [&](const std::vector<std::uint64_t>& idx) {
    std::vector<Scalar> pt;
    for (auto i : idx) pt.push_back(field.element(i));
    return pt;
  };
  std::vector<std::uint64_t> sizes(nv);
  std::uint64_t grid = 1;
  bool grid_ok = true;
  for (std::size_t v = 0; v < nv; ++v) {
    sizes[v] = static_cast<std::uint64_t>(std::max(f.degree_in(v), 0)) + 1;
    if (grid > opts.budget / sizes[v]) grid_ok = false;
    else grid *= sizes[v];
  }
  if (grid_ok) {
    out.method = "grid";
    std::vector<std::uint64_t> idx(nv, 0);
    for (std::uint64_t g = 0; g < grid; ++g) {
      std::uint64_t rest = g;
      for (std::size_t v = nv; v-- > 0;) {
        idx[v] = rest % sizes[v];
        rest /= sizes[v];
      }
      ++out.examined;
      const auto pt = point_of(idx);
      if (!field.is_zero(f.evaluate(pt)) && a.generates(pt)) {
        out.generator = pt;
        return out;
      }
    }
    throw InvalidInput("find_generator: grid search missed a nonvanishing point");
  }
  out.method = "random";
  std::mt19937_64 rng(opts.seed);
  for (std::uint64_t t = 0; t < opts.random_trials; ++t) {
    std::vector<std::uint64_t> idx(nv);
    for (auto& i : idx) i = rng() % q;
    ++out.examined;
    const auto pt = point_of(idx);
    if (!field.is_zero(f.evaluate(pt)) && a.generates(pt)) {
      out.generator = pt;
      return out;
    }
  }
  throw BudgetExceeded("find_generator: search budget exhausted over " + field.name());
}

ExtensionSearch generator_over_extensions(const FiniteFreeAlgebra& bq, unsigned max_r, const SearchOptions& opts,
                                          bool exhaustive_all) {
  if (bq.domain().kind() != DomainKind::prime_field)
    throw InvalidInput("generator_over_extensions: base must be a prime field");
  ExtensionSearch out;
  for (unsigned r = 1; r <= max_r; ++r) {
    const Domain field = Domain::galois_field(bq.domain().characteristic(), r);
    auto attempt = find_generator(base_change(bq, field), opts);
    const bool found = attempt.found();
    out.attempts.push_back(std::move(attempt));
    if (found && !out.degree) out.degree = r;
    if (found && !exhaustive_all) break;
  }
  return out;
}

VandermondeResult vandermonde_check(const FiniteFreeAlgebra& b, const std::vector<Scalar>& x) {
  if (!diagonal(b.base(), b.rank()).same_table(b)) throw InvalidInput("vandermonde_check: algebra is not diagonal");
  if (x.size() != b.rank()) throw InvalidInput("vandermonde_check: wrong number of coordinates");
  const Domain& dom = b.domain();
  Scalar v = dom.one();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v = dom.mul(v, dom.sub(x[j], x[i]));
  const bool unit = dom.is_unit(v);
  return {std::move(v), unit};
}

}  // namespace kron
