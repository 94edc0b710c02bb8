#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torustam {

enum class LMethod { character_sum, euler_product };
const char* to_string(LMethod m);

/// L(1, χ_D) by two independent routes.
struct LValue {
  std::int64_t D = 0;
  double value = 0;  ///< character-sum value
  double abs_err = 0;
  LMethod method = LMethod::character_sum;
  double euler_value = 0;  ///< truncated Euler product over p ≤ euler_bound
  double euler_err = 0;    ///< tail bound (conditional on GRH)
  std::int64_t euler_bound = 0;
  bool methods_agree = false;
};

/// Closed-form finite character sum; throws ToleranceUnreachable when its
/// rounding bound exceeds tol.
double l_value_character_sum(std::int64_t D, double* abs_err = nullptr);

/// ∏_{p ≤ bound} (1 − χ_D(p)/p)^{-1}, with an explicit bound on the tail.
double l_value_euler_product(std::int64_t D, std::int64_t bound, double* abs_err = nullptr);

/// Both methods; `methods_agree` compares them within the combined errors.
LValue l_value(std::int64_t D, double tol = 1e-9, std::int64_t euler_bound = 1'000'000);

/// Primes up to n, sieved once and shared.
const std::vector<std::int64_t>& cached_primes(std::int64_t n);

}  // namespace torustam
