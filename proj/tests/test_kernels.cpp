#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torustam/kernels.hpp"
#include "torustam/local_measure.hpp"
#include "torustam/torus.hpp"

using namespace torustam;

namespace {

struct Case {
  const char* torus;
  std::int64_t p;
  int levels;
};

const Case kCases[] = {
    {"norm1:-1", 5, 3}, {"norm1:-3", 3, 4}, {"res:-1", 3, 2}, {"quot:5", 7, 2}, {"norm1:-1", 2, 5}, {"norm1:13,17", 3, 2},
};

}  // namespace

TEST_CASE("serial and parallel kernels agree exactly") {
  for (int workers : {1, 2, 4}) {
    kernels::set_worker_count(workers);
    for (const Case& c : kCases) {
      CAPTURE(c.torus);
      CAPTURE(workers);
      const kernels::CongruenceSystem sys = congruence_system(*parse_torus(c.torus).model, c.p);
      CHECK(kernels::count_box_serial(sys, c.p) == kernels::count_box_parallel(sys, c.p));
      auto ser = kernels::solutions_box_serial(sys, c.p);
      auto par = kernels::solutions_box_parallel(sys, c.p);
      CHECK(ser == par);
      CHECK(ser.size() == sys.nvars * kernels::count_box_serial(sys, c.p));
      std::int64_t m = c.p;
      for (int k = 1; k < c.levels; ++k, m *= c.p) {
        CHECK(kernels::lift_count_serial(sys, m, ser) == kernels::lift_count_parallel(sys, m, ser));
        auto ls = kernels::lift_solutions_serial(sys, m, ser);
        auto lp = kernels::lift_solutions_parallel(sys, m, ser);
        CHECK(ls == lp);
        CHECK(ls.size() == sys.nvars * kernels::lift_count_serial(sys, m, ser));
        CHECK(kernels::count_box_serial(sys, m * c.p) * sys.nvars == ls.size());
        ser = std::move(ls);
      }
    }
  }
  kernels::set_worker_count(0);
}

TEST_CASE("solution lists are lexicographic") {
  const kernels::CongruenceSystem sys = congruence_system(*parse_torus("norm1:-1").model, 5);
  const auto sols = kernels::solutions_box_parallel(sys, 25);
  REQUIRE(sols.size() == 2 * 20);
  for (std::size_t i = 2; i < sols.size(); i += 2) {
    const bool ordered = sols[i - 2] < sols[i] || (sols[i - 2] == sols[i] && sols[i - 1] < sols[i + 1]);
    CHECK(ordered);
  }
}

TEST_CASE("densities do not depend on the worker count") {
  const TorusSpec t = parse_torus("norm1:-7");
  const AffineModel& m = *t.model;
  kernels::set_worker_count(1);
  const LocalDensity one = brute_force_density(m, 7, 4);
  kernels::set_worker_count(3);
  const LocalDensity three = brute_force_density(m, 7, 4);
  kernels::set_worker_count(0);
  CHECK(one.to_json().dump() == three.to_json().dump());
  CHECK(brute_force_density(m, 7, 4, default_enumeration_budget(), false).to_json().dump() == one.to_json().dump());
}
