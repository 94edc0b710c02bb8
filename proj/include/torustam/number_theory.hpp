#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace torustam {

bool is_prime(std::int64_t n);

/// All primes <= n, ascending (sieve of Eratosthenes).
std::vector<std::int64_t> primes_up_to(std::int64_t n);

/// Trial-division factorization of |n| (n != 0) as (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n);

bool is_squarefree(std::int64_t n);

/// Kronecker symbol (a|n) for arbitrary integers, including n <= 0 and even n.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// True if D is the discriminant of a quadratic field (D != 1).
bool is_fundamental_discriminant(std::int64_t d);

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t mod_inverse(std::int64_t a, std::int64_t mod);
std::int64_t isqrt(std::int64_t n);
std::int64_t ipow64(std::int64_t base, int exp);
/// p-adic valuation of n != 0.
int valuation(std::int64_t n, std::int64_t p);

}  // namespace torustam
