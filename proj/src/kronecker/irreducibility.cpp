#include "kron/kronecker/irreducibility.hpp"

#include <algorithm>

#include "kron/errors.hpp"

namespace kron {

namespace {

std::optional<std::pair<MultiPoly, MultiPoly>> variable_factor(const MultiPoly& f) {
  if (f.size() == 1 && f.total_degree() <= 1) return std::nullopt;
  for (std::size_t v = 0; v < f.ring().nvars(); ++v) {
    bool all = true;
    for (const auto& [m, c] : f.terms()) all = all && m[v] > 0;
    if (!all) continue;
    const MultiPoly x = MultiPoly::variable(f.ring(), v);
    return std::make_pair(x, *f.divide_exact(x));
  }
  return std::nullopt;
}

std::optional<MultiPoly> pth_root(const MultiPoly& f) {
  const Domain& dom = f.domain();
  const std::uint64_t p = dom.characteristic();
  if (p == 0 || f.is_constant()) return std::nullopt;
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    Monomial r;
    for (std::size_t v = 0; v < f.ring().nvars(); ++v) {
      if (m[v] % p) return std::nullopt;
      r.set(v, static_cast<unsigned>(m[v] / p));
    }
    terms.emplace_back(r, dom.pow(c, dom.order() / p));
  }
  MultiPoly g = MultiPoly::from_terms(f.ring(), std::move(terms));
  if (g.pow(static_cast<unsigned>(p)) != f) return std::nullopt;
  return g;
}

void monomials_up_to(const std::vector<std::size_t>& vars, unsigned deg, std::size_t at, Monomial cur,
                     std::vector<Monomial>& out) {
  if (at == vars.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; cur.total_degree() + e <= deg; ++e) {
    Monomial next = cur;
    next.set(vars[at], e);
    monomials_up_to(vars, deg, at + 1, next, out);
  }
}

}  // namespace

SmokeResult irreducibility_smoke(const MultiPoly& f, unsigned max_degree) {
  const Domain& dom = f.domain();
  if (!dom.is_finite()) throw InvalidInput("irreducibility_smoke: coefficients must lie in a finite field");
  SmokeResult result;
  if (f.is_zero() || f.is_constant()) throw InvalidInput("irreducibility_smoke: polynomial must be non-constant");

  if (auto vf = variable_factor(f)) {
    result.left = vf->first;
    result.right = vf->second;
    result.method = "variable";
    return result;
  }
  if (auto g = pth_root(f)) {
    result.left = *g;
    result.right = g->pow(static_cast<unsigned>(dom.characteristic() - 1));
    result.method = "power";
    return result;
  }

  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < f.ring().nvars(); ++v)
    if (f.degree_in(v) > 0) vars.push_back(v);
  const auto total = static_cast<unsigned>(f.total_degree());
  const unsigned reach = std::min(max_degree, total / 2);
  if (max_degree > 2 || vars.size() > 3 || dom.order() > 3)
    throw BudgetExceeded("irreducibility_smoke: exhaustive search limited to degree <= 2, 3 variables, p <= 3");
  result.complete = max_degree >= total / 2;

  std::vector<Monomial> monos;
  monomials_up_to(vars, reach, 0, Monomial{}, monos);
  std::sort(monos.begin(), monos.end(), GrlexGreater{});
  const std::uint64_t q = dom.order();
  for (std::size_t lead = 0; lead < monos.size(); ++lead) {
    if (monos[lead].is_one()) continue;
    const std::size_t tail = monos.size() - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= q;
    for (std::uint64_t code = 0; code < combos; ++code) {
      std::vector<MultiPoly::Term> terms = {{monos[lead], dom.one()}};
      std::uint64_t rest = code;
      for (std::size_t i = 0; i < tail; ++i) {
        const std::uint64_t digit = rest % q;
        rest /= q;
        if (digit) terms.emplace_back(monos[lead + 1 + i], dom.element(digit));
      }
      const MultiPoly g = MultiPoly::from_terms(f.ring(), std::move(terms));
      ++result.candidates;
      if (auto quotient = f.divide_exact(g); quotient && !quotient->is_constant()) {
        result.left = g;
        result.right = *quotient;
        result.method = "divisor";
        return result;
      }
    }
  }
  return result;
}

}  // namespace kron
