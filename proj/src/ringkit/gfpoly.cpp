#include "kron/ringkit/gfpoly.hpp"

#include <algorithm>

#include "kron/errors.hpp"
#include "kron/ringkit/upoly.hpp"

namespace kron {

GfPoly::GfPoly(Domain field, std::vector<Scalar> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_.is_field()) throw InvalidInput("GfPoly requires a field");
  trim();
}

GfPoly GfPoly::from_ints(const Domain& field, const std::vector<long>& coeffs) {
  std::vector<Scalar> cs;
  for (long c : coeffs) cs.push_back(field.from_int(c));
  return GfPoly(field, std::move(cs));
}

GfPoly GfPoly::from_upoly(const UPoly& p) {
  const Domain& field = p.ring().domain();
  std::vector<Scalar> cs;
  for (const auto& c : p.coeffs()) {
    if (!c.is_constant()) throw InvalidInput("GfPoly::from_upoly: non-constant coefficient");
    cs.push_back(c.constant_term());
  }
  return GfPoly(field, std::move(cs));
}

void GfPoly::trim() {
  while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
}

GfPoly operator+(const GfPoly& a, const GfPoly& b) {
  const Domain& f = a.field_;
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), f.zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(i), b.coeff(i));
  return GfPoly(f, std::move(r));
}

GfPoly operator-(const GfPoly& a, const GfPoly& b) {
  const Domain& f = a.field_;
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()), f.zero());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(i), b.coeff(i));
  return GfPoly(f, std::move(r));
}

GfPoly operator*(const GfPoly& a, const GfPoly& b) {
  const Domain& f = a.field_;
  if (a.is_zero() || b.is_zero()) return GfPoly(f);
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (f.is_zero(a.c_[i])) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) f.add_mul(r[i + j], a.c_[i], b.c_[j]);
  }
  return GfPoly(f, std::move(r));
}

GfPoly GfPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(field_.mul(c, s));
  return GfPoly(field_, std::move(r));
}

GfPoly GfPoly::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

GfPoly GfPoly::derivative() const {
  std::vector<Scalar> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(field_.mul(c_[k], field_.from_int(static_cast<long>(k))));
  return GfPoly(field_, std::move(r));
}

std::pair<GfPoly, GfPoly> GfPoly::divmod(const GfPoly& d) const {
  if (d.is_zero()) throw InvalidInput("GfPoly division by zero");
  if (degree() < d.degree()) return {GfPoly(field_), *this};
  std::vector<Scalar> rem = c_;
  const std::size_t dd = d.c_.size() - 1;
  std::vector<Scalar> quot(c_.size() - dd, field_.zero());
  const Scalar lead_inv = field_.inv(d.c_.back());
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (field_.is_zero(rem[k])) continue;
    const Scalar q = field_.mul(rem[k], lead_inv);
    quot[k - dd] = q;
    const Scalar nq = field_.neg(q);
    for (std::size_t j = 0; j <= dd; ++j) field_.add_mul(rem[k - dd + j], nq, d.c_[j]);
  }
  rem.resize(dd);
  return {GfPoly(field_, std::move(quot)), GfPoly(field_, std::move(rem))};
}

Scalar GfPoly::evaluate(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (std::size_t k = c_.size(); k-- > 0;) acc = field_.add(field_.mul(acc, x), c_[k]);
  return acc;
}

bool GfPoly::less(const GfPoly& other) const {
  if (degree() != other.degree()) return degree() < other.degree();
  for (std::size_t k = c_.size(); k-- > 0;) {
    const auto a = field_.index(c_[k]);
    const auto b = field_.index(other.c_[k]);
    if (a != b) return a < b;
  }
  return false;
}

std::string GfPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (field_.is_zero(c_[k])) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (k == 1) mono = var;
    else if (k > 1) mono = var + "^" + std::to_string(k);
    if (mono.empty()) {
      out += field_.to_string(c_[k]);
    } else if (field_.is_one(c_[k])) {
      out += mono;
    } else {
      const std::string s = field_.to_string(c_[k]);
      out += (field_.is_compound(c_[k]) ? "(" + s + ")" : s) + "*" + mono;
    }
  }
  return out;
}

GfPoly gcd(const GfPoly& a, const GfPoly& b) {
  GfPoly x = a, y = b;
  while (!y.is_zero()) {
    GfPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

GfBezout xgcd(const GfPoly& a, const GfPoly& b) {
  const Domain& f = a.field();
  GfPoly r0 = a, r1 = b;
  GfPoly s0 = GfPoly::one(f), s1(f);
  GfPoly t0(f), t1 = GfPoly::one(f);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    GfPoly s2 = s0 - q * s1;
    GfPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Scalar inv = f.inv(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

GfPoly powmod(const GfPoly& base, const mpz_class& e, const GfPoly& modulus) {
  GfPoly result = GfPoly::one(base.field()) % modulus;
  GfPoly b = base % modulus;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

GfPoly powmod(const GfPoly& base, std::uint64_t e, const GfPoly& modulus) {
  mpz_class ez;
  mpz_import(ez.get_mpz_t(), 1, 1, sizeof(e), 0, 0, &e);
  return powmod(base, ez, modulus);
}

bool is_irreducible(const GfPoly& g) {
  const int n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const GfPoly f = g.monic();
  const std::uint64_t q = f.field().order();
  // frob[k] = Y^{q^k} mod f
  std::vector<GfPoly> frob = {GfPoly::x(f.field()) % f};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, f));
  const GfPoly x = GfPoly::x(f.field());
  if (!((frob[static_cast<std::size_t>(n)] - x) % f).is_zero()) return false;
  for (int s = 2; s <= n; ++s) {
    if (n % s) continue;
    bool prime = true;
    for (int d = 2; d * d <= s; ++d) prime = prime && (s % d != 0);
    if (!prime) continue;
    if (!gcd(frob[static_cast<std::size_t>(n / s)] - x, f).is_one()) return false;
  }
  return true;
}

}  // namespace kron
