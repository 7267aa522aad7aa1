#include <algorithm>
#include <random>

#include "kron/errors.hpp"
#include "kron/ringkit/gfpoly.hpp"

namespace kron {

namespace {

// f with f' = 0 is a p-th power; returns its p-th root.
GfPoly pth_root(const GfPoly& f) {
  const Domain& field = f.field();
  const std::uint64_t p = field.characteristic();
  const std::uint64_t root_exp = field.order() / p;  // a^{q/p} is the p-th root of a
  std::vector<Scalar> r;
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) r.push_back(field.pow(f.coeffs()[k], root_exp));
  return GfPoly(field, std::move(r));
}

void squarefree(const GfPoly& f, unsigned mult, std::vector<GfFactor>& out) {
  if (f.degree() < 1) return;
  GfPoly c = gcd(f, f.derivative());
  GfPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    GfPoly y = gcd(w, c);
    GfPoly z = w / y;
    if (z.degree() > 0) out.push_back({z, i * mult});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<unsigned>(f.field().characteristic()), out);
}

// Splits squarefree f into (product of all irreducible factors of degree d).
std::vector<std::pair<GfPoly, int>> distinct_degree(GfPoly f) {
  std::vector<std::pair<GfPoly, int>> out;
  const GfPoly x = GfPoly::x(f.field());
  const std::uint64_t q = f.field().order();
  GfPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, q, f);
    GfPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

GfPoly random_poly(const Domain& field, int below_degree, std::mt19937_64& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i < below_degree; ++i) c.push_back(field.element(rng() % field.order()));
  return GfPoly(field, std::move(c));
}

void equal_degree(const GfPoly& f, int d, std::mt19937_64& rng, std::vector<GfPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const Domain& field = f.field();
  const std::uint64_t q = field.order();
  mpz_class half;
  if (q % 2) {
    mpz_class qd;
    mpz_ui_pow_ui(qd.get_mpz_t(), q, static_cast<unsigned long>(d));
    half = (qd - 1) / 2;
  }
  const unsigned trace_terms = field.degree() * static_cast<unsigned>(d);
  while (true) {
    GfPoly a = random_poly(field, f.degree(), rng);
    if (a.degree() < 1) continue;
    GfPoly g = gcd(a, f);
    if (g.degree() < 1 || g.degree() == f.degree()) {
      GfPoly b(field);
      if (q % 2) {
        b = powmod(a, half, f) - GfPoly::one(field);
      } else {
        GfPoly t = a % f;
        b = t;
        for (unsigned i = 1; i < trace_terms; ++i) {
          t = (t * t) % f;
          b = b + t;
        }
      }
      g = gcd(b, f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<GfFactor> factor_gf(const GfPoly& g, std::uint64_t seed) {
  if (g.is_zero() || !g.is_monic()) throw InvalidInput("factor_gf: polynomial must be monic and nonzero");
  if (g.degree() < 1) throw InvalidInput("factor_gf: polynomial must have degree >= 1");
  std::mt19937_64 rng(seed);
  std::vector<GfFactor> parts;
  squarefree(g, 1, parts);
  std::vector<GfFactor> result;
  for (const auto& part : parts) {
    for (const auto& [block, d] : distinct_degree(part.factor)) {
      std::vector<GfPoly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& f : irreducibles) {
        auto it = std::find_if(result.begin(), result.end(), [&](const GfFactor& x) { return x.factor == f; });
        if (it != result.end()) it->multiplicity += part.multiplicity;
        else result.push_back({std::move(f), part.multiplicity});
      }
    }
  }
  std::sort(result.begin(), result.end(), [](const GfFactor& a, const GfFactor& b) { return a.factor.less(b.factor); });
  return result;
}

std::vector<Scalar> roots_gf(const GfPoly& g, std::uint64_t seed) {
  std::vector<Scalar> roots;
  if (g.degree() < 1) return roots;
  for (const auto& f : factor_gf(g.monic(), seed)) {
    if (f.factor.degree() == 1) roots.push_back(g.field().neg(f.factor.coeff(0)));
  }
  const Domain& field = g.field();
  std::sort(roots.begin(), roots.end(),
            [&](const Scalar& a, const Scalar& b) { return field.index(a) < field.index(b); });
  return roots;
}

}  // namespace kron
