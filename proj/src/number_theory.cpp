#include "torustam/number_theory.hpp"

#include "torustam/error.hpp"

#include <cmath>
#include <numeric>

namespace torustam {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t f = 5; f * f <= n; f += 6)
    if (n % f == 0 || n % (f + 2) == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factor_integer(std::int64_t n) {
  if (n == 0) throw DomainError("factor_integer: zero");
  std::vector<std::pair<std::int64_t, int>> out;
  std::int64_t m = n < 0 ? -n : n;
  for (std::int64_t f = 2; f * f <= m; f += (f == 2 ? 1 : 2)) {
    int e = 0;
    while (m % f == 0) {
      m /= f;
      ++e;
    }
    if (e) out.emplace_back(f, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    // (a|2) = +1 for a = ±1 mod 8, -1 for a = ±3 mod 8
    std::int64_t r = ((a % 8) + 8) % 8;
    if ((v & 1) && (r == 3 || r == 5)) result = -result;
  }
  // Jacobi symbol (a|n) with n odd positive
  std::int64_t aa = a % n;
  if (aa < 0) aa += n;
  while (aa != 0) {
    while (aa % 2 == 0) {
      aa /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(aa, n);
    if (aa % 4 == 3 && n % 4 == 3) result = -result;
    aa %= n;
  }
  return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t d) {
  if (d == 0 || d == 1) return false;
  std::int64_t r = ((d % 4) + 4) % 4;
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  std::int64_t m = d / 4;
  std::int64_t rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(m);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  __int128 result = 1 % mod;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  std::int64_t g = mod, x = 0, x1 = 1, r = ((a % mod) + mod) % mod;
  while (r != 0) {
    std::int64_t q = g / r;
    std::int64_t t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw DomainError("mod_inverse: not invertible");
  return ((x % mod) + mod) % mod;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw DomainError("isqrt: negative");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t ipow64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw DomainError("valuation: zero");
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace torustam
