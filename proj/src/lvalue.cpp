#include "torustam/lvalue.hpp"

#include "torustam/error.hpp"
#include "torustam/number_theory.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>

namespace torustam {

const char* to_string(LMethod m) { return m == LMethod::character_sum ? "character-sum" : "euler-product"; }

const std::vector<std::int64_t>& cached_primes(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::vector<std::int64_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, primes_up_to(n)).first;
  return it->second;
}

namespace {

void check_discriminant(std::int64_t D) {
  if (D == 1 || !is_fundamental_discriminant(D))
    throw DomainError("l_value: " + std::to_string(D) + " is not a fundamental discriminant other than 1");
}

}  // namespace

double l_value_character_sum(std::int64_t D, double* abs_err) {
  check_discriminant(D);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const std::int64_t q = D < 0 ? -D : D;
  double value = 0, err = 0;
  if (D < 0) {
    // Σχ(a)·a is an exact integer for these sizes
    std::int64_t s = 0;
    for (std::int64_t a = 1; a < q; ++a) s += kronecker_symbol(D, a) * a;
    value = -std::numbers::pi * static_cast<double>(s) / std::pow(static_cast<double>(q), 1.5);
    err = 8 * eps * std::fabs(value);
  } else {
    double s = 0, mag = 0;
    for (std::int64_t a = 1; a < q; ++a) {
      int c = kronecker_symbol(D, a);
      if (c == 0) continue;
      double t = std::log(std::sin(std::numbers::pi * static_cast<double>(a) / static_cast<double>(q)));
      s += c * t;
      mag += std::fabs(t);
    }
    value = -s / std::sqrt(static_cast<double>(q));
    err = 8 * eps * (mag + static_cast<double>(q)) / std::sqrt(static_cast<double>(q));
  }
  if (abs_err) *abs_err = err;
  return value;
}

double l_value_euler_product(std::int64_t D, std::int64_t bound, double* abs_err) {
  check_discriminant(D);
  if (bound < 100) throw DomainError("l_value_euler_product: bound too small");
  double log_l = 0;
  for (std::int64_t p : cached_primes(bound)) {
    int c = kronecker_symbol(D, p);
    if (c) log_l -= std::log1p(-c / static_cast<double>(p));
  }
  if (abs_err) {
    // Under GRH |Σ_{p≤x} χ(p) log p| ≤ S(x) = √x·log x·(log x + 2 log q)/(2π);
    // partial summation bounds the first-order tail by about 2·S(P)/(P log P)
    // and the higher-order terms by 1/(P − 1).
    const double P = static_cast<double>(bound);
    const double lq = std::log(std::fabs(static_cast<double>(D)));
    const double lp = std::log(P);
    const double s = std::sqrt(P) * lp * (lp + 2 * lq) / (2 * std::numbers::pi);
    const double tail = 2 * s / (P * lp) + 1 / (P - 1);
    *abs_err = std::exp(log_l) * std::expm1(tail);
  }
  return std::exp(log_l);
}

LValue l_value(std::int64_t D, double tol, std::int64_t euler_bound) {
  LValue l;
  l.D = D;
  l.value = l_value_character_sum(D, &l.abs_err);
  if (l.abs_err > tol) throw ToleranceUnreachable("l_value: rounding bound exceeds requested tolerance");
  l.euler_bound = euler_bound;
  l.euler_value = l_value_euler_product(D, euler_bound, &l.euler_err);
  l.methods_agree = std::fabs(l.value - l.euler_value) <= l.abs_err + l.euler_err;
  return l;
}

}  // namespace torustam
