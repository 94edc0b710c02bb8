#include "torustam/local_measure.hpp"

#include "torustam/error.hpp"
#include "torustam/number_theory.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace torustam {

std::uint64_t default_enumeration_budget() {
  if (const char* env = std::getenv("TORUSTAM_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 10'000) return v;
  }
  return kDefaultEnumerationBudget;
}

const char* to_string(DensityMethod m) { return m == DensityMethod::good_formula ? "good-formula" : "brute-force"; }

Json LocalDensity::to_json() const {
  Json j;
  j["p"] = p;
  j["value"] = rational_json(value);
  j["method"] = to_string(method);
  if (method == DensityMethod::brute_force) {
    j["stabilized"] = stabilized;
    j["confirmed"] = confirmed;
    j["budget_limited"] = budget_limited;
    Json tr = Json::array();
    for (const auto& r : trace) tr.push_back({{"k", r.k}, {"count", r.count}, {"ratio", rational_json(r.ratio)}});
    j["trace"] = tr;
  }
  return j;
}

LocalDensity local_density_good(const TorusSpec& t, std::int64_t p) {
  if (!is_good_prime(t, p)) throw DomainError("local_density_good: " + std::to_string(p) + " is not a good prime");
  LocalDensity d;
  d.p = p;
  d.method = DensityMethod::good_formula;
  d.value = BigRat(point_count_Fp(t, p), ipow(BigInt(p), static_cast<unsigned long>(t.dimension)));
  return d;
}

kernels::CongruenceSystem congruence_system(const AffineModel& model, std::int64_t p) {
  kernels::CongruenceSystem sys;
  sys.nvars = model.nvars;
  sys.equations = model.equations;
  sys.unit = model.unit;
  sys.p = p;
  return sys;
}

LocalDensity brute_force_density(const AffineModel& model, std::int64_t p, int k_max, std::uint64_t budget,
                                 bool parallel, bool stop_when_confirmed) {
  if (!is_prime(p)) throw DomainError("brute_force_density: " + std::to_string(p) + " is not prime");
  if (k_max < 1) throw DomainError("brute_force_density: k_max must be positive");
  const auto sys = congruence_system(model, p);
  const double box = std::pow(static_cast<double>(p), model.nvars);
  if (box > static_cast<double>(budget))
    throw BudgetExceeded("brute_force_density: p^vars = " + std::to_string(static_cast<long long>(box)) +
                         " exceeds budget");
  LocalDensity d;
  d.p = p;
  d.method = DensityMethod::brute_force;
  const double pd = std::pow(static_cast<double>(p), model.dimension);

  std::vector<std::int64_t> sols =
      parallel ? kernels::solutions_box_parallel(sys, p) : kernels::solutions_box_serial(sys, p);
  std::int64_t m = p;
  std::uint64_t count = sols.size() / model.nvars;
  auto push = [&](int k, std::uint64_t c) {
    BigInt den = ipow(BigInt(p), static_cast<unsigned long>(k) * model.dimension);
    d.trace.push_back({k, c, BigRat(BigInt(static_cast<unsigned long>(c)), den)});
  };
  push(1, count);
  for (int k = 2; k <= k_max; ++k) {
    const double work = static_cast<double>(count) * box;
    if (work > static_cast<double>(budget) || static_cast<double>(m) * p > 3.0e9) {
      d.budget_limited = true;
      break;
    }
    // keep solutions only if the level after this one is affordable too
    const bool need_points = k < k_max && static_cast<double>(count) * pd * box <= static_cast<double>(budget) &&
                             static_cast<double>(count) * pd <= static_cast<double>(kMaxStoredPoints);
    if (need_points) {
      sols = parallel ? kernels::lift_solutions_parallel(sys, m, sols) : kernels::lift_solutions_serial(sys, m, sols);
      count = sols.size() / model.nvars;
    } else {
      count = parallel ? kernels::lift_count_parallel(sys, m, sols) : kernels::lift_count_serial(sys, m, sols);
    }
    m *= p;
    push(k, count);
    const std::size_t n = d.trace.size();
    if (stop_when_confirmed && n >= 3 && d.trace[n - 1].ratio == d.trace[n - 2].ratio &&
        d.trace[n - 2].ratio == d.trace[n - 3].ratio)
      break;
    if (!need_points) {
      if (k < k_max) d.budget_limited = true;
      break;
    }
  }
  if (d.trace.size() < 2 && k_max >= 2)
    throw BudgetExceeded("brute_force_density: budget allows only one level at p = " + std::to_string(p));
  const std::size_t n = d.trace.size();
  d.value = d.trace.back().ratio;
  d.stabilized = n >= 2 && d.trace[n - 1].ratio == d.trace[n - 2].ratio;
  d.confirmed = n >= 3 && d.stabilized && d.trace[n - 2].ratio == d.trace[n - 3].ratio;
  return d;
}

std::uint64_t brute_force_point_count(const TorusSpec& t, std::int64_t p, bool parallel) {
  if (!is_prime(p)) throw DomainError("brute_force_point_count: " + std::to_string(p) + " is not prime");
  if (t.model) {
    if (!t.model->valid_at(p)) throw Unsupported("brute_force_point_count: model is not smooth at " + std::to_string(p));
    const auto sys = congruence_system(*t.model, p);
    return parallel ? kernels::count_box_parallel(sys, p) : kernels::count_box_serial(sys, p);
  }
  // quotient torus (K^*)/Q^*: over F_p this is (O/p)^* / F_p^* since H^1(F_p, G_m) = 0
  TorusSpec res = build_torus(Family::res_scalars, t.field);
  return brute_force_point_count(res, p, parallel) / static_cast<std::uint64_t>(p - 1);
}

VerificationReport cross_validate_density(const TorusSpec& t, std::int64_t p, int k_max, std::uint64_t budget) {
  VerificationReport r;
  r.identity = "local-density";
  r.torus = t.to_string();
  r.inputs = {{"p", p}, {"kmax", k_max}};
  if (!t.model) throw Unsupported("cross_validate_density: torus " + t.to_string() + " has no integral model");
  LocalDensity good = local_density_good(t, p);
  LocalDensity brute = brute_force_density(*t.model, p, k_max, budget);
  r.values["good_formula"] = good.to_json();
  r.values["brute_force"] = brute.to_json();
  r.values["good_formula"]["provenance"] = "point count from Frobenius on cocharacters";
  r.values["brute_force"]["provenance"] = "enumeration mod p^k";
  if (!brute.stabilized) {
    r.inconclusive("not-stabilized");
  } else if (!(good.value == brute.value)) {
    r.fail("density-mismatch");
  }
  return r;
}

LocalDensity bad_prime_density(const TorusSpec& t, std::int64_t p, int k_max, std::uint64_t budget) {
  if (is_good_prime(t, p)) throw DomainError("bad_prime_density: " + std::to_string(p) + " is a good prime");
  if (!t.model) throw Unsupported("bad_prime_density: torus " + t.to_string() + " has no integral model");
  if (!t.model->valid_at(p))
    throw Unsupported("bad_prime_density: the model of " + t.to_string() + " is not the maximal order at " +
                      std::to_string(p));
  return brute_force_density(*t.model, p, k_max, budget, true, true);
}

VerificationReport smooth_lifting(const TorusSpec& t, std::int64_t p, int k_max, std::uint64_t budget) {
  VerificationReport r;
  r.identity = "lifting";
  r.torus = t.to_string();
  r.inputs = {{"p", p}, {"kmax", k_max}};
  if (!t.model) throw Unsupported("smooth_lifting: torus " + t.to_string() + " has no integral model");
  if (!is_good_prime(t, p)) throw DomainError("smooth_lifting: " + std::to_string(p) + " is not a good prime");
  LocalDensity d;
  try {
    d = brute_force_density(*t.model, p, k_max + 1, budget);
  } catch (const BudgetExceeded& e) {
    r.inconclusive(std::string("budget-limited: ") + e.what());
    return r;
  }
  const BigInt pd = ipow(BigInt(p), static_cast<unsigned long>(t.model->dimension));
  for (std::size_t i = 0; i + 1 < d.trace.size(); ++i) {
    const BigInt lhs = BigInt(static_cast<unsigned long>(d.trace[i + 1].count));
    const BigInt rhs = pd * static_cast<unsigned long>(d.trace[i].count);
    const bool ok = lhs == rhs;
    r.rows.push_back({{"k", d.trace[i].k},
                      {"count_k", d.trace[i].count},
                      {"count_k_plus_1", d.trace[i + 1].count},
                      {"expected", rhs.get_str()},
                      {"verdict", ok ? "PASS" : "FAIL"}});
    if (!ok) r.fail("lifting-mismatch at k=" + std::to_string(d.trace[i].k));
  }
  r.values["trace"] = d.to_json();
  if (static_cast<int>(d.trace.size()) < k_max + 1) r.inconclusive("budget-limited: levels computed up to k=" +
                                                                  std::to_string(d.trace.size()));
  return r;
}

}  // namespace torustam
