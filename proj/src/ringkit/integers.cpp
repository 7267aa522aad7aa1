#include "kron/ringkit/integers.hpp"

#include <algorithm>
#include <map>

#include "kron/errors.hpp"
#include "kron/ringkit/domain.hpp"

namespace kron {

namespace {

// Pollard's rho with Floyd cycle detection; n is odd, composite.
mpz_class pollard_rho(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      mpz_class diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_rho(n);
  split(d, out);
  split(mpz_class(n / d), out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n) {
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> found;
  if (m <= 1) return {};
  for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[mpz_class(p)];
      m /= p;
    }
  }
  split(m, found);
  return {found.begin(), found.end()};
}

std::vector<std::uint64_t> prime_divisors(const mpz_class& n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factor_integer(n)) {
    if (!p.fits_ulong_p()) throw BudgetExceeded("prime divisor exceeds 64 bits: " + p.get_str());
    out.push_back(p.get_ui());
  }
  return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

}  // namespace kron
