#include "kron/algebra/constructors.hpp"

#include "kron/errors.hpp"
#include "kron/ringkit/linalg.hpp"

namespace kron {

namespace {

std::vector<MultiPoly> zeros(const PolyRing& ring, std::size_t count) { return std::vector<MultiPoly>(count, MultiPoly(ring)); }

}  // namespace

FiniteFreeAlgebra from_monogenic(const UPoly& g, std::string label) {
  if (g.degree() < 1 || !g.is_monic()) throw InvalidInput("from_monogenic: g must be monic of degree >= 1");
  const PolyRing& base = g.ring();
  const auto n = static_cast<std::size_t>(g.degree());
  // powers[m] = coordinates of y^m on 1, y, ..., y^{n-1}
  std::vector<std::vector<MultiPoly>> powers;
  for (std::size_t m = 0; m < n; ++m) {
    auto v = zeros(base, n);
    v[m] = MultiPoly::from_int(base, 1);
    powers.push_back(std::move(v));
  }
  for (std::size_t m = n; m + 1 < 2 * n; ++m) {
    const auto& prev = powers.back();
    auto v = zeros(base, n);
    for (std::size_t k = 1; k < n; ++k) v[k] = prev[k - 1];
    // prev[n-1]·y^n = -prev[n-1]·Σ c_k y^k
    const MultiPoly& top = prev[n - 1];
    if (!top.is_zero()) {
      for (std::size_t k = 0; k < n; ++k) v[k] -= top * g.coeff(static_cast<int>(k));
    }
    powers.push_back(std::move(v));
  }
  std::vector<MultiPoly> table;
  table.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) table.push_back(powers[i + j][k]);
  auto unit = zeros(base, n);
  unit[0] = MultiPoly::from_int(base, 1);
  FiniteFreeAlgebra::Options opts;
  for (std::size_t m = 0; m < n; ++m) opts.basis_names.push_back(m == 0 ? "1" : m == 1 ? "y" : "y^" + std::to_string(m));
  opts.monogenic = UPoly(base, g.coeffs(), "Y");
  opts.label = label.empty() ? base.domain().name() + "[Y]/(" + opts.monogenic->to_string() + ")" : std::move(label);
  return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
}

FiniteFreeAlgebra from_monogenic(const PolyRing& base, const std::vector<MultiPoly>& low_coeffs, std::string label) {
  std::vector<MultiPoly> cs = low_coeffs;
  cs.push_back(MultiPoly::from_int(base, 1));
  return from_monogenic(UPoly(base, std::move(cs), "Y"), std::move(label));
}

FiniteFreeAlgebra from_monogenic(const PolyRing& base, const std::vector<long>& low_coeffs, std::string label) {
  std::vector<MultiPoly> cs;
  for (long c : low_coeffs) cs.push_back(MultiPoly::from_int(base, c));
  return from_monogenic(base, cs, std::move(label));
}

FiniteFreeAlgebra diagonal(const PolyRing& base, std::size_t n) {
  if (n < 1) throw InvalidInput("diagonal: n must be at least 1");
  auto table = zeros(base, n * n * n);
  for (std::size_t i = 0; i < n; ++i) table[(i * n + i) * n + i] = MultiPoly::from_int(base, 1);
  std::vector<MultiPoly> unit(n, MultiPoly::from_int(base, 1));
  FiniteFreeAlgebra::Options opts;
  opts.label = "diagonal(" + std::to_string(n) + ")";
  return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
}

FiniteFreeAlgebra product(const std::vector<FiniteFreeAlgebra>& factors) {
  if (factors.empty()) throw InvalidInput("product: no factors");
  const PolyRing& base = factors[0].base();
  std::size_t n = 0;
  for (const auto& f : factors) {
    if (f.base() != base) throw InvalidInput("product: factors have different base rings");
    n += f.rank();
  }
  auto table = zeros(base, n * n * n);
  std::vector<MultiPoly> unit;
  FiniteFreeAlgebra::Options opts;
  std::size_t off = 0;
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const auto& b = factors[f];
    const std::size_t r = b.rank();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) table[((off + i) * n + off + j) * n + off + k] = b.c(i, j, k);
    for (const auto& u : b.unit()) unit.push_back(u);
    for (const auto& name : b.basis_names()) opts.basis_names.push_back(name + "_" + std::to_string(f + 1));
    if (!opts.label.empty()) opts.label += " x ";
    opts.label += b.label().empty() ? "?" : b.label();
    off += r;
  }
  opts.factors = factors;
  return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
}

FiniteFreeAlgebra product(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& c) { return product(std::vector{b, c}); }

namespace {

// Basis 1, u, v, uv with u² = a, v² = b (a, b in the base ring).
FiniteFreeAlgebra biquadratic(const PolyRing& base, const MultiPoly& a, const MultiPoly& b, std::string label) {
  const std::size_t n = 4;
  auto table = zeros(base, n * n * n);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const MultiPoly& v) {
    table[(i * n + j) * n + k] = v;
    table[(j * n + i) * n + k] = v;
  };
  const MultiPoly one = MultiPoly::from_int(base, 1);
  for (std::size_t i = 0; i < n; ++i) set(0, i, i, one);
  set(1, 1, 0, a);        // u·u = a
  set(2, 2, 0, b);        // v·v = b
  set(1, 2, 3, one);      // u·v = uv
  set(1, 3, 2, a);        // u·uv = a v
  set(2, 3, 1, b);        // v·uv = b u
  set(3, 3, 0, a * b);    // uv·uv = ab
  auto unit = zeros(base, n);
  unit[0] = one;
  FiniteFreeAlgebra::Options opts;
  opts.basis_names = {"1", "u", "v", "uv"};
  opts.label = std::move(label);
  return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
}

}  // namespace

FiniteFreeAlgebra biquadratic_nilpotent(const PolyRing& base) {
  return biquadratic(base, MultiPoly(base), MultiPoly(base), "biquadratic-nilpotent");
}

FiniteFreeAlgebra biquadratic_radicial(const PolyRing& base) {
  auto x = base.index_of("X");
  auto y = base.index_of("Y");
  if (!x || !y || base.domain().characteristic() != 2)
    throw InvalidInput("radicial biquadratic needs a characteristic-2 base with variables X, Y");
  return biquadratic(base, MultiPoly::variable(base, *x), MultiPoly::variable(base, *y), "biquadratic-radicial");
}

FiniteFreeAlgebra tensor(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& c) {
  if (b.base() != c.base()) throw InvalidInput("tensor: base rings differ");
  const PolyRing& base = b.base();
  const std::size_t nb = b.rank(), nc = c.rank(), n = nb * nc;
  auto table = zeros(base, n * n * n);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nc; ++l)
          for (std::size_t m = 0; m < nb; ++m) {
            if (b.c(i, k, m).is_zero()) continue;
            for (std::size_t o = 0; o < nc; ++o) {
              if (c.c(j, l, o).is_zero()) continue;
              table[((i * nc + j) * n + k * nc + l) * n + m * nc + o] = b.c(i, k, m) * c.c(j, l, o);
            }
          }
  std::vector<MultiPoly> unit;
  FiniteFreeAlgebra::Options opts;
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      unit.push_back(b.unit()[i] * c.unit()[j]);
      opts.basis_names.push_back(b.basis_names()[i] + "." + c.basis_names()[j]);
    }
  opts.label = (b.label().empty() ? "?" : b.label()) + " (x) " + (c.label().empty() ? "?" : c.label());
  return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
}

FiniteFreeAlgebra change_basis(const FiniteFreeAlgebra& b, const std::vector<std::vector<mpq_class>>& p,
                               std::string label) {
  const PolyRing& base = b.base();
  const Domain& dom = base.domain();
  const std::size_t n = b.rank();
  if (base.nvars() != 0) throw InvalidInput("change_basis: base ring must have no variables");
  if (dom.kind() != DomainKind::integers && dom.kind() != DomainKind::rationals)
    throw InvalidInput("change_basis: base must be the integers or the rationals");
  if (p.size() != n) throw InvalidInput("change_basis: matrix has the wrong shape");
  const Domain q = Domain::rationals();
  FieldMatrix pm(q, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i].size() != n) throw InvalidInput("change_basis: matrix has the wrong shape");
    for (std::size_t j = 0; j < n; ++j) pm.at(i, j) = q.from_mpq(p[i][j]);
  }
  auto inv = pm.inverse();
  if (!inv) throw InvalidInput("change_basis: matrix is singular");
  auto cq = [&](std::size_t i, std::size_t j, std::size_t k) { return q.from_mpq(dom.as_mpq(b.c(i, j, k).constant_term())); };

  auto to_base = [&](const Scalar& s) { return MultiPoly::constant(base, dom.from_mpq(q.as_mpq(s))); };
  std::vector<MultiPoly> table;
  table.reserve(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bb = 0; bb < n; ++bb) {
      Vec v(n, q.zero());
      for (std::size_t i = 0; i < n; ++i) {
        if (q.is_zero(pm.at(i, a))) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (q.is_zero(pm.at(j, bb))) continue;
          const Scalar w = q.mul(pm.at(i, a), pm.at(j, bb));
          for (std::size_t k = 0; k < n; ++k) q.add_mul(v[k], w, cq(i, j, k));
        }
      }
      const Vec coords = inv->apply(v);
      for (const auto& s : coords) table.push_back(to_base(s));
    }
  Vec u;
  for (const auto& x : b.unit()) u.push_back(q.from_mpq(dom.as_mpq(x.constant_term())));
  std::vector<MultiPoly> unit;
  for (const auto& s : inv->apply(u)) unit.push_back(to_base(s));
  FiniteFreeAlgebra::Options opts;
  opts.label = label.empty() ? b.label() : std::move(label);
  for (std::size_t j = 0; j < n; ++j) opts.basis_names.push_back("f" + std::to_string(j + 1));
  return FiniteFreeAlgebra(base, n, std::move(table), std::move(unit), std::move(opts));
}

FiniteFreeAlgebra order_from_basis(const std::vector<long>& g_low_coeffs,
                                   const std::vector<std::vector<mpq_class>>& basis, std::string label) {
  const PolyRing zring(Domain::integers(), {});
  const FiniteFreeAlgebra power = from_monogenic(zring, g_low_coeffs);
  const std::size_t n = power.rank();
  if (basis.size() != n) throw InvalidInput("order_from_basis: need one vector per basis element");
  // P has the basis vectors as columns.
  std::vector<std::vector<mpq_class>> p(n, std::vector<mpq_class>(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (basis[j].size() != n) throw InvalidInput("order_from_basis: vector has the wrong length");
    for (std::size_t i = 0; i < n; ++i) p[i][j] = basis[j][i];
  }
  return change_basis(power, p, std::move(label));
}

FiniteFreeAlgebra base_change(const FiniteFreeAlgebra& b, const Domain& target) {
  const PolyRing ring = b.base().with_domain(target);
  std::vector<MultiPoly> table, unit;
  table.reserve(b.table().size());
  for (const auto& x : b.table()) table.push_back(x.change_domain(target));
  for (const auto& x : b.unit()) unit.push_back(x.change_domain(target));
  FiniteFreeAlgebra::Options opts;
  opts.basis_names = b.basis_names();
  if (b.monogenic()) opts.monogenic = b.monogenic()->change_domain(target);
  for (const auto& f : b.factors()) opts.factors.push_back(base_change(f, target));
  opts.label = b.label();
  return FiniteFreeAlgebra(ring, b.rank(), std::move(table), std::move(unit), std::move(opts));
}

FiniteFreeAlgebra specialize_base(const FiniteFreeAlgebra& b, const std::vector<Scalar>& values) {
  const PolyRing target(b.domain(), {});
  if (values.size() != b.base().nvars()) throw InvalidInput("specialize_base: wrong number of values");
  std::vector<MultiPoly> images;
  for (const auto& v : values) images.push_back(MultiPoly::constant(target, v));
  std::vector<MultiPoly> table, unit;
  for (const auto& x : b.table()) table.push_back(x.substitute(target, images));
  for (const auto& x : b.unit()) unit.push_back(x.substitute(target, images));
  FiniteFreeAlgebra::Options opts;
  opts.basis_names = b.basis_names();
  if (b.monogenic()) opts.monogenic = b.monogenic()->substitute(target, images);
  for (const auto& f : b.factors()) opts.factors.push_back(specialize_base(f, values));
  opts.label = b.label();
  return FiniteFreeAlgebra(target, b.rank(), std::move(table), std::move(unit), std::move(opts));
}

}  // namespace kron
