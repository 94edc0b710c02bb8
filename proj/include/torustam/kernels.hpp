#pragma once

#include "torustam/polynomial.hpp"

#include <cstdint>
#include <vector>

/// Enumeration kernels behind every point count in the library.
///
/// Each kernel has a serial reference and an OpenMP version. Both return
/// identical results: counts are integer sums, and solution lists are
/// assembled in lexicographic order through a count/prefix-sum/fill pass.
namespace torustam::kernels {

/// A system of congruences over Z/m: every equation ≡ 0 and, when
/// `unit` is non-empty, unit(x) a unit mod p.
struct CongruenceSystem {
  int nvars = 0;
  std::vector<MPoly> equations;
  MPoly unit;  ///< no terms: no unit condition
  std::int64_t p = 2;

  bool has_unit_condition() const { return !unit.terms.empty(); }
  bool satisfied(const std::int64_t* x, std::int64_t m) const;
};

/// Number of points of [0, m)^n solving the system mod m.
std::uint64_t count_box_serial(const CongruenceSystem& sys, std::int64_t m);
std::uint64_t count_box_parallel(const CongruenceSystem& sys, std::int64_t m);

/// Solutions mod m, flattened (n entries per point), lexicographic order.
std::vector<std::int64_t> solutions_box_serial(const CongruenceSystem& sys, std::int64_t m);
std::vector<std::int64_t> solutions_box_parallel(const CongruenceSystem& sys, std::int64_t m);

/// Given every solution mod m, returns every solution mod m·p. A solution
/// mod m·p reduces to one mod m, so scanning the p^n lifts of each is exhaustive.
std::vector<std::int64_t> lift_solutions_serial(const CongruenceSystem& sys, std::int64_t m,
                                                const std::vector<std::int64_t>& sols);
std::vector<std::int64_t> lift_solutions_parallel(const CongruenceSystem& sys, std::int64_t m,
                                                  const std::vector<std::int64_t>& sols);

/// Number of solutions mod m·p lying over the given solutions mod m.
std::uint64_t lift_count_serial(const CongruenceSystem& sys, std::int64_t m, const std::vector<std::int64_t>& sols);
std::uint64_t lift_count_parallel(const CongruenceSystem& sys, std::int64_t m, const std::vector<std::int64_t>& sols);

/// Sets the OpenMP worker count used by the parallel kernels (<= 0: runtime default).
void set_worker_count(int workers);
int worker_count();

}  // namespace torustam::kernels
