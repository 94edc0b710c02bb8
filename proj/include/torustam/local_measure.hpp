#pragma once

#include "torustam/kernels.hpp"
#include "torustam/report.hpp"
#include "torustam/torus.hpp"

#include <cstdint>
#include <vector>

namespace torustam {

/// Default enumeration budget, in candidate points examined per level.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000'000;
/// Solutions kept in memory between lifting levels.
inline constexpr double kMaxStoredPoints = 2.0e7;
/// Models with this many variables are enumerated only at small p and k.
inline constexpr int kWideModelVars = 4;
inline constexpr std::int64_t kWideModelMaxPrime = 3;
inline constexpr int kWideModelMaxLevel = 3;

/// Budget from TORUSTAM_BUDGET when set and valid, else the default.
std::uint64_t default_enumeration_budget();

enum class DensityMethod { good_formula, brute_force };
const char* to_string(DensityMethod m);

struct TraceRow {
  int k = 0;
  std::uint64_t count = 0;  ///< points mod p^k
  BigRat ratio;             ///< count / p^{k·d}
};

struct LocalDensity {
  std::int64_t p = 0;
  BigRat value;
  DensityMethod method = DensityMethod::good_formula;
  std::vector<TraceRow> trace;
  bool stabilized = true;   ///< last two ratios equal
  bool confirmed = false;   ///< last three ratios equal
  bool budget_limited = false;

  Json to_json() const;
};

/// p^{−d}·|T(F_p)| at a good prime.
LocalDensity local_density_good(const TorusSpec& t, std::int64_t p);

/// Counts points of the model mod p^k for k = 1..k_max (fewer if the
/// budget runs out) by enumerating mod p and lifting level by level.
/// Throws BudgetExceeded when not even two levels fit. With
/// `stop_when_confirmed` the run ends once three ratios agree.
LocalDensity brute_force_density(const AffineModel& model, std::int64_t p, int k_max,
                                 std::uint64_t budget = default_enumeration_budget(), bool parallel = true,
                                 bool stop_when_confirmed = false);

/// |T(F_p)| by enumeration. The biquadratic quotient torus, which has no
/// model of its own, is counted as units of the algebra divided by p − 1.
std::uint64_t brute_force_point_count(const TorusSpec& t, std::int64_t p, bool parallel = true);

/// Good formula against brute force at a good prime.
VerificationReport cross_validate_density(const TorusSpec& t, std::int64_t p, int k_max = 2,
                                          std::uint64_t budget = default_enumeration_budget());

/// Density at 2 or a ramified prime, stabilized by brute force.
LocalDensity bad_prime_density(const TorusSpec& t, std::int64_t p, int k_max = 6,
                               std::uint64_t budget = default_enumeration_budget());

/// count(p^{k+1}) = p^d·count(p^k) along a trace; one report row per k.
VerificationReport smooth_lifting(const TorusSpec& t, std::int64_t p, int k_max = 3,
                                  std::uint64_t budget = default_enumeration_budget());

kernels::CongruenceSystem congruence_system(const AffineModel& model, std::int64_t p);

}  // namespace torustam
