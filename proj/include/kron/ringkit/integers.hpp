#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace kron {

/// Prime factorization of |n| as (prime, exponent) pairs in ascending order.
/// n = 0 and n = ±1 yield an empty list.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// Distinct prime divisors of |n|, ascending.
std::vector<std::uint64_t> prime_divisors(const mpz_class& n);

/// Primes p with lo <= p <= hi.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

}  // namespace kron
