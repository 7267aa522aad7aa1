#include "kron/ringkit/domain.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "kron/errors.hpp"

namespace kron {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Dense polynomials over 𝔽_p, low degree first, used only by the
// irreducibility test below.
using SmallPoly = std::vector<u64>;

void trim(SmallPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 inv_lead = invmod(m.back(), p);
  while (a.size() > dm) {
    const u64 c = mulmod(a.back(), inv_lead, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    trim(a);
  }
  return a;
}

SmallPoly poly_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  SmallPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

SmallPoly poly_powmod(SmallPoly base, u64 e, const SmallPoly& m, u64 p) {
  SmallPoly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

SmallPoly poly_gcd(SmallPoly a, SmallPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod m by k successive p-th powers.
SmallPoly frobenius_power(unsigned k, const SmallPoly& m, u64 p) {
  SmallPoly x = poly_mod(SmallPoly{0, 1}, m, p);
  for (unsigned i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
  return x;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::uint64_t p, const std::vector<std::uint64_t>& low_coeffs) {
  const unsigned r = static_cast<unsigned>(low_coeffs.size());
  if (r == 0) return false;
  SmallPoly m(low_coeffs.begin(), low_coeffs.end());
  for (auto& c : m) c %= p;
  m.push_back(1);
  if (r == 1) return true;
  // Rabin: x^(p^r) ≡ x and gcd(x^(p^(r/s)) - x, m) = 1 for primes s | r.
  SmallPoly x_mod = poly_mod(SmallPoly{0, 1}, m, p);
  SmallPoly top = frobenius_power(r, m, p);
  trim(top);
  trim(x_mod);
  if (top != x_mod) return false;
  for (unsigned s : prime_divisors(r)) {
    SmallPoly h = frobenius_power(r / s, m, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    SmallPoly g = poly_gcd(h, m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct Domain::Impl {
  DomainKind kind = DomainKind::integers;
  u64 p = 0;
  unsigned r = 0;
  u64 q = 0;
  std::vector<u64> modulus;  // low coefficients of the monic modulus
  // Zech-free log tables for extension fields with q <= 2^20.
  std::vector<std::uint32_t> exp_table;
  std::vector<std::uint32_t> log_table;

  bool has_tables() const { return !exp_table.empty(); }

  void decode(u64 idx, u64* digits) const {
    for (unsigned i = 0; i < r; ++i) {
      digits[i] = idx % p;
      idx /= p;
    }
  }
  u64 encode(const u64* digits) const {
    u64 idx = 0;
    for (unsigned i = r; i-- > 0;) idx = idx * p + digits[i];
    return idx;
  }

  u64 ext_add(u64 a, u64 b) const {
    if (p == 2) return a ^ b;
    std::array<u64, 64> da{}, db{};
    decode(a, da.data());
    decode(b, db.data());
    for (unsigned i = 0; i < r; ++i) da[i] = (da[i] + db[i]) % p;
    return encode(da.data());
  }
  u64 ext_neg(u64 a) const {
    if (p == 2) return a;
    std::array<u64, 64> da{};
    decode(a, da.data());
    for (unsigned i = 0; i < r; ++i) da[i] = (p - da[i]) % p;
    return encode(da.data());
  }
  u64 ext_mul_slow(u64 a, u64 b) const {
    std::array<u64, 64> da{}, db{};
    std::array<u64, 128> prod{};
    decode(a, da.data());
    decode(b, db.data());
    for (unsigned i = 0; i < r; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p)) % p;
    }
    for (unsigned k = 2 * r - 1; k-- > r;) {
      const u64 c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      // w^r = -Σ m_i w^i
      for (unsigned i = 0; i < r; ++i)
        prod[k - r + i] = (prod[k - r + i] + p - mulmod(c, modulus[i], p)) % p;
    }
    return encode(prod.data());
  }
  u64 ext_mul(u64 a, u64 b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables()) {
      const u64 order = q - 1;
      return exp_table[(static_cast<u64>(log_table[a]) + log_table[b]) % order];
    }
    return ext_mul_slow(a, b);
  }

  void build_tables() {
    const u64 order = q - 1;
    std::vector<std::uint32_t> expt(order);
    for (u64 cand = 2; cand < q; ++cand) {
      u64 x = 1;
      u64 k = 0;
      bool primitive = true;
      for (; k < order; ++k) {
        expt[k] = static_cast<std::uint32_t>(x);
        x = ext_mul_slow(x, cand);
        if (x == 1 && k + 1 < order) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      exp_table = std::move(expt);
      log_table.assign(q, 0);
      for (u64 i = 0; i < order; ++i) log_table[exp_table[i]] = static_cast<std::uint32_t>(i);
      return;
    }
  }
};

Domain Domain::integers() {
  static const auto impl = std::make_shared<const Impl>();
  return Domain(impl);
}

Domain Domain::rationals() {
  static const auto impl = [] {
    auto i = std::make_shared<Impl>();
    i->kind = DomainKind::rationals;
    return std::shared_ptr<const Impl>(i);
  }();
  return Domain(impl);
}

Domain Domain::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidInput("prime_field: " + std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw InvalidInput("prime_field: characteristic too large");
  auto impl = std::make_shared<Impl>();
  impl->kind = DomainKind::prime_field;
  impl->p = p;
  impl->r = 1;
  impl->q = p;
  return Domain(std::move(impl));
}

Domain Domain::extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (!is_prime(p)) throw InvalidInput("extension_field: " + std::to_string(p) + " is not prime");
  if (modulus.empty()) throw InvalidInput("extension_field: modulus must have degree >= 1");
  for (auto& c : modulus) {
    if (c >= p) throw InvalidInput("extension_field: modulus coefficient out of range");
  }
  const unsigned r = static_cast<unsigned>(modulus.size());
  if (r == 1) return prime_field(p);
  u128 q = 1;
  for (unsigned i = 0; i < r; ++i) {
    q *= p;
    if (q >= (static_cast<u128>(1) << 62)) throw InvalidInput("extension_field: field order too large");
  }
  if (!is_irreducible_mod_p(p, modulus))
    throw InvalidInput("extension_field: modulus is reducible over GF(" + std::to_string(p) + ")");
  auto impl = std::make_shared<Impl>();
  impl->kind = DomainKind::extension_field;
  impl->p = p;
  impl->r = r;
  impl->q = static_cast<u64>(q);
  impl->modulus = std::move(modulus);
  if (impl->q <= (1ULL << 20)) impl->build_tables();
  return Domain(std::move(impl));
}

Domain Domain::galois_field(std::uint64_t p, unsigned r) {
  if (r == 0) throw InvalidInput("galois_field: degree must be >= 1");
  if (r == 1) return prime_field(p);
  if (!is_prime(p)) throw InvalidInput("galois_field: " + std::to_string(p) + " is not prime");
  std::vector<u64> low(r, 0);
  while (true) {
    if (is_irreducible_mod_p(p, low)) return extension_field(p, low);
    unsigned i = 0;
    while (i < r && ++low[i] == p) low[i++] = 0;
    if (i == r) throw InvalidInput("galois_field: no irreducible polynomial found");
  }
}

DomainKind Domain::kind() const { return impl_->kind; }
bool Domain::is_finite() const {
  return impl_->kind == DomainKind::prime_field || impl_->kind == DomainKind::extension_field;
}
std::uint64_t Domain::characteristic() const { return impl_->p; }
unsigned Domain::degree() const { return impl_->r; }
std::uint64_t Domain::order() const { return impl_->q; }
const std::vector<std::uint64_t>& Domain::modulus() const { return impl_->modulus; }

bool Domain::operator==(const Domain& other) const {
  if (impl_ == other.impl_) return true;
  return impl_->kind == other.impl_->kind && impl_->p == other.impl_->p &&
         impl_->modulus == other.impl_->modulus;
}

Scalar Domain::zero() const { return from_int(0); }
Scalar Domain::one() const { return from_int(1); }

Scalar Domain::from_int(long v) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return Scalar(mpz_class(v));
    case DomainKind::rationals:
      return Scalar(mpq_class(v));
    default: {
      const auto p = static_cast<long long>(impl_->p);
      long long m = static_cast<long long>(v) % p;
      if (m < 0) m += p;
      return Scalar(static_cast<u64>(m));
    }
  }
}

Scalar Domain::from_mpz(const mpz_class& v) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return Scalar(v);
    case DomainKind::rationals:
      return Scalar(mpq_class(v));
    default: {
      mpz_class m;
      mpz_fdiv_r_ui(m.get_mpz_t(), v.get_mpz_t(), impl_->p);
      return Scalar(static_cast<u64>(m.get_ui()));
    }
  }
}

Scalar Domain::from_mpq(const mpq_class& v) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      if (v.get_den() != 1) throw DomainError("value " + v.get_str() + " is not an integer");
      return Scalar(v.get_num());
    case DomainKind::rationals: {
      mpq_class c = v;
      c.canonicalize();
      return Scalar(std::move(c));
    }
    default: {
      Scalar den = from_mpz(v.get_den());
      if (is_zero(den))
        throw DomainError("denominator of " + v.get_str() + " vanishes modulo " + std::to_string(impl_->p));
      return div(from_mpz(v.get_num()), den);
    }
  }
}

Scalar Domain::element(std::uint64_t index) const {
  if (!is_finite()) throw InvalidInput("element(): domain is not finite");
  if (index >= impl_->q) throw InvalidInput("element(): index out of range");
  return Scalar(index);
}

std::uint64_t Domain::index(const Scalar& a) const {
  if (!is_finite()) throw InvalidInput("index(): domain is not finite");
  return std::get<u64>(a.v_);
}

Scalar Domain::generator() const {
  if (impl_->kind != DomainKind::extension_field) throw InvalidInput("generator(): not an extension field");
  return Scalar(impl_->p);  // digit 1 at position 1
}

Scalar Domain::convert(const Scalar& a, const Domain& from) const {
  if (from == *this) return a;
  switch (from.kind()) {
    case DomainKind::integers:
      return from_mpz(std::get<mpz_class>(a.v_));
    case DomainKind::rationals:
      return from_mpq(std::get<mpq_class>(a.v_));
    case DomainKind::prime_field:
      if (is_finite() && characteristic() == from.characteristic()) return Scalar(std::get<u64>(a.v_));
      break;
    case DomainKind::extension_field: {
      const u64 idx = std::get<u64>(a.v_);
      if (is_finite() && characteristic() == from.characteristic() && idx < from.characteristic())
        return Scalar(idx);
      break;
    }
  }
  throw DomainError("no canonical map from " + from.name() + " to " + name());
}

bool Domain::is_zero(const Scalar& a) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return sgn(std::get<mpz_class>(a.v_)) == 0;
    case DomainKind::rationals:
      return sgn(std::get<mpq_class>(a.v_)) == 0;
    default:
      return std::get<u64>(a.v_) == 0;
  }
}

bool Domain::is_one(const Scalar& a) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return std::get<mpz_class>(a.v_) == 1;
    case DomainKind::rationals:
      return std::get<mpq_class>(a.v_) == 1;
    default:
      return std::get<u64>(a.v_) == 1;
  }
}

bool Domain::is_unit(const Scalar& a) const {
  if (impl_->kind == DomainKind::integers) {
    const auto& z = std::get<mpz_class>(a.v_);
    return z == 1 || z == -1;
  }
  return !is_zero(a);
}

bool Domain::is_negative(const Scalar& a) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return sgn(std::get<mpz_class>(a.v_)) < 0;
    case DomainKind::rationals:
      return sgn(std::get<mpq_class>(a.v_)) < 0;
    default:
      return false;
  }
}

Scalar Domain::add(const Scalar& a, const Scalar& b) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return Scalar(mpz_class(std::get<mpz_class>(a.v_) + std::get<mpz_class>(b.v_)));
    case DomainKind::rationals:
      return Scalar(mpq_class(std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_)));
    case DomainKind::prime_field: {
      u64 s = std::get<u64>(a.v_) + std::get<u64>(b.v_);
      if (s >= impl_->p) s -= impl_->p;
      return Scalar(s);
    }
    case DomainKind::extension_field:
      return Scalar(impl_->ext_add(std::get<u64>(a.v_), std::get<u64>(b.v_)));
  }
  return {};
}

Scalar Domain::neg(const Scalar& a) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return Scalar(mpz_class(-std::get<mpz_class>(a.v_)));
    case DomainKind::rationals:
      return Scalar(mpq_class(-std::get<mpq_class>(a.v_)));
    case DomainKind::prime_field: {
      const u64 v = std::get<u64>(a.v_);
      return Scalar(v == 0 ? 0 : impl_->p - v);
    }
    case DomainKind::extension_field:
      return Scalar(impl_->ext_neg(std::get<u64>(a.v_)));
  }
  return {};
}

Scalar Domain::sub(const Scalar& a, const Scalar& b) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return Scalar(mpz_class(std::get<mpz_class>(a.v_) - std::get<mpz_class>(b.v_)));
    case DomainKind::rationals:
      return Scalar(mpq_class(std::get<mpq_class>(a.v_) - std::get<mpq_class>(b.v_)));
    default:
      return add(a, neg(b));
  }
}

Scalar Domain::mul(const Scalar& a, const Scalar& b) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return Scalar(mpz_class(std::get<mpz_class>(a.v_) * std::get<mpz_class>(b.v_)));
    case DomainKind::rationals:
      return Scalar(mpq_class(std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_)));
    case DomainKind::prime_field:
      return Scalar(mulmod(std::get<u64>(a.v_), std::get<u64>(b.v_), impl_->p));
    case DomainKind::extension_field:
      return Scalar(impl_->ext_mul(std::get<u64>(a.v_), std::get<u64>(b.v_)));
  }
  return {};
}

void Domain::add_to(Scalar& acc, const Scalar& b) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      std::get<mpz_class>(acc.v_) += std::get<mpz_class>(b.v_);
      return;
    case DomainKind::rationals:
      std::get<mpq_class>(acc.v_) += std::get<mpq_class>(b.v_);
      return;
    default:
      acc = add(acc, b);
  }
}

void Domain::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const {
  if (impl_->kind == DomainKind::integers) {
    mpz_addmul(std::get<mpz_class>(acc.v_).get_mpz_t(), std::get<mpz_class>(a.v_).get_mpz_t(),
               std::get<mpz_class>(b.v_).get_mpz_t());
    return;
  }
  add_to(acc, mul(a, b));
}

Scalar Domain::pow(const Scalar& a, const mpz_class& e) const {
  if (sgn(e) < 0) return pow(inv(a), mpz_class(-e));
  if (e.fits_ulong_p()) return pow(a, static_cast<std::uint64_t>(e.get_ui()));
  Scalar result = one();
  Scalar base = a;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

Scalar Domain::pow(const Scalar& a, std::uint64_t e) const {
  if (impl_->kind == DomainKind::integers) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), std::get<mpz_class>(a.v_).get_mpz_t(), e);
    return Scalar(std::move(r));
  }
  if (impl_->kind == DomainKind::prime_field) return Scalar(powmod(std::get<u64>(a.v_), e, impl_->p));
  if (impl_->kind == DomainKind::extension_field && impl_->has_tables()) {
    const u64 x = std::get<u64>(a.v_);
    if (x == 0) return Scalar(u64{e == 0 ? 1u : 0u});
    const u64 order = impl_->q - 1;
    const u64 l = static_cast<u64>((static_cast<u128>(impl_->log_table[x]) * (e % order)) % order);
    return Scalar(static_cast<u64>(impl_->exp_table[l]));
  }
  Scalar result = one();
  Scalar base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar Domain::inv(const Scalar& a) const {
  if (!is_unit(a)) throw DomainError("inverse of non-unit " + to_string(a) + " in " + name());
  switch (impl_->kind) {
    case DomainKind::integers:
      return a;
    case DomainKind::rationals:
      return Scalar(mpq_class(1 / std::get<mpq_class>(a.v_)));
    case DomainKind::prime_field:
      return Scalar(invmod(std::get<u64>(a.v_), impl_->p));
    case DomainKind::extension_field: {
      const u64 x = std::get<u64>(a.v_);
      if (impl_->has_tables()) {
        const u64 order = impl_->q - 1;
        return Scalar(static_cast<u64>(impl_->exp_table[(order - impl_->log_table[x]) % order]));
      }
      return pow(a, impl_->q - 2);
    }
  }
  return {};
}

bool Domain::divides(const Scalar& b, const Scalar& a) const {
  if (impl_->kind != DomainKind::integers) return !is_zero(b);
  const auto& zb = std::get<mpz_class>(b.v_);
  if (sgn(zb) == 0) return false;
  return mpz_divisible_p(std::get<mpz_class>(a.v_).get_mpz_t(), zb.get_mpz_t()) != 0;
}

Scalar Domain::div(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) throw DomainError("division by zero in " + name());
  if (impl_->kind == DomainKind::integers) {
    if (!divides(b, a)) throw DomainError("inexact integer division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), std::get<mpz_class>(a.v_).get_mpz_t(), std::get<mpz_class>(b.v_).get_mpz_t());
    return Scalar(std::move(q));
  }
  if (impl_->kind == DomainKind::rationals)
    return Scalar(mpq_class(std::get<mpq_class>(a.v_) / std::get<mpq_class>(b.v_)));
  return mul(a, inv(b));
}

const mpz_class& Domain::as_mpz(const Scalar& a) const {
  if (impl_->kind != DomainKind::integers) throw InvalidInput("as_mpz: domain is not the integers");
  return std::get<mpz_class>(a.v_);
}

mpq_class Domain::as_mpq(const Scalar& a) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return mpq_class(std::get<mpz_class>(a.v_));
    case DomainKind::rationals:
      return std::get<mpq_class>(a.v_);
    default:
      throw InvalidInput("as_mpq: finite field element");
  }
}

bool Domain::is_compound(const Scalar& a) const {
  if (impl_->kind != DomainKind::extension_field) return false;
  u64 idx = std::get<u64>(a.v_);
  int nonzero = 0;
  for (unsigned i = 0; i < impl_->r; ++i) {
    if (idx % impl_->p) ++nonzero;
    idx /= impl_->p;
  }
  return nonzero > 1;
}

std::string Domain::to_string(const Scalar& a) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return std::get<mpz_class>(a.v_).get_str();
    case DomainKind::rationals:
      return std::get<mpq_class>(a.v_).get_str();
    case DomainKind::prime_field:
      return std::to_string(std::get<u64>(a.v_));
    case DomainKind::extension_field: {
      std::array<u64, 64> d{};
      impl_->decode(std::get<u64>(a.v_), d.data());
      std::string out;
      for (unsigned i = impl_->r; i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
          out += std::to_string(d[i]);
          continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += "w";
        if (i > 1) out += "^" + std::to_string(i);
      }
      return out.empty() ? "0" : out;
    }
  }
  return {};
}

std::string Domain::name() const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return "int";
    case DomainKind::rationals:
      return "rat";
    case DomainKind::prime_field:
      return "GF(" + std::to_string(impl_->p) + ")";
    case DomainKind::extension_field: {
      std::ostringstream os;
      os << "GF(" << impl_->p << "^" << impl_->r << ")[";
      for (std::size_t i = 0; i < impl_->modulus.size(); ++i) os << (i ? "," : "") << impl_->modulus[i];
      os << "]";
      return os.str();
    }
  }
  return {};
}

bool Domain::less(const Scalar& a, const Scalar& b) const {
  switch (impl_->kind) {
    case DomainKind::integers:
      return std::get<mpz_class>(a.v_) < std::get<mpz_class>(b.v_);
    case DomainKind::rationals:
      return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
    default:
      return std::get<u64>(a.v_) < std::get<u64>(b.v_);
  }
}

}  // namespace kron
