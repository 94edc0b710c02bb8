#include "torustam/kernels.hpp"

#include "torustam/error.hpp"

#include <omp.h>

#include <array>

namespace torustam::kernels {

namespace {

constexpr int kMaxVars = 8;

void decode(std::uint64_t idx, int n, std::int64_t m, std::int64_t* x) {
  for (int i = n - 1; i >= 0; --i) {
    x[i] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(m));
    idx /= static_cast<std::uint64_t>(m);
  }
}

std::uint64_t box_size(int n, std::int64_t m) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (~0ULL) / static_cast<std::uint64_t>(m)) throw BudgetExceeded("box enumeration overflows");
    total *= static_cast<std::uint64_t>(m);
  }
  return total;
}

void check_arity(const CongruenceSystem& sys) {
  if (sys.nvars <= 0 || sys.nvars > kMaxVars) throw DomainError("kernels: unsupported variable count");
}

// Number of valid lifts of one solution, and optionally the lifts themselves.
// Lifts agree with `base` mod p, so the unit condition is decided once.
std::uint64_t scan_lifts(const CongruenceSystem& sys, std::int64_t m, const std::int64_t* base,
                         std::int64_t* out) {
  const int n = sys.nvars;
  const std::int64_t mp = m * sys.p;
  const std::uint64_t lifts = box_size(n, sys.p);
  if (sys.has_unit_condition() && sys.unit.eval_mod(base, sys.p) == 0) return 0;
  std::array<std::int64_t, kMaxVars> t{}, x{};
  for (int i = 0; i < n; ++i) x[i] = base[i];
  std::uint64_t found = 0;
  for (std::uint64_t idx = 0; idx < lifts; ++idx) {
    bool ok = true;
    for (const auto& eq : sys.equations)
      if (eq.eval_mod(x.data(), mp) != 0) {
        ok = false;
        break;
      }
    if (ok) {
      if (out)
        for (int i = 0; i < n; ++i) out[found * n + i] = x[i];
      ++found;
    }
    // odometer step over the lift digits, last coordinate fastest
    for (int i = n - 1; i >= 0; --i) {
      if (++t[i] < sys.p) {
        x[i] += m;
        break;
      }
      t[i] = 0;
      x[i] = base[i];
    }
  }
  return found;
}

}  // namespace

bool CongruenceSystem::satisfied(const std::int64_t* x, std::int64_t m) const {
  for (const auto& eq : equations)
    if (eq.eval_mod(x, m) != 0) return false;
  // p | m, so evaluating mod p on representatives mod m is exact.
  return !(has_unit_condition() && unit.eval_mod(x, p) == 0);
}

std::uint64_t count_box_serial(const CongruenceSystem& sys, std::int64_t m) {
  check_arity(sys);
  const std::uint64_t total = box_size(sys.nvars, m);
  std::array<std::int64_t, kMaxVars> x{};
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, sys.nvars, m, x.data());
    if (sys.satisfied(x.data(), m)) ++count;
  }
  return count;
}

std::uint64_t count_box_parallel(const CongruenceSystem& sys, std::int64_t m) {
  check_arity(sys);
  const auto total = static_cast<std::int64_t>(box_size(sys.nvars, m));
  std::uint64_t count = 0;
#pragma omp parallel for reduction(+ : count) schedule(static)
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::array<std::int64_t, kMaxVars> x{};
    decode(static_cast<std::uint64_t>(idx), sys.nvars, m, x.data());
    if (sys.satisfied(x.data(), m)) ++count;
  }
  return count;
}

std::vector<std::int64_t> solutions_box_serial(const CongruenceSystem& sys, std::int64_t m) {
  check_arity(sys);
  const std::uint64_t total = box_size(sys.nvars, m);
  std::array<std::int64_t, kMaxVars> x{};
  std::vector<std::int64_t> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, sys.nvars, m, x.data());
    if (sys.satisfied(x.data(), m)) out.insert(out.end(), x.begin(), x.begin() + sys.nvars);
  }
  return out;
}

std::vector<std::int64_t> solutions_box_parallel(const CongruenceSystem& sys, std::int64_t m) {
  check_arity(sys);
  const int n = sys.nvars;
  // One block per value of the leading coordinate keeps the output ordered.
  const std::uint64_t tail = box_size(n - 1, m);
  std::vector<std::vector<std::int64_t>> blocks(static_cast<std::size_t>(m));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t lead = 0; lead < m; ++lead) {
    std::array<std::int64_t, kMaxVars> x{};
    auto& block = blocks[static_cast<std::size_t>(lead)];
    for (std::uint64_t idx = 0; idx < tail; ++idx) {
      x[0] = lead;
      decode(idx, n - 1, m, x.data() + 1);
      if (sys.satisfied(x.data(), m)) block.insert(block.end(), x.begin(), x.begin() + n);
    }
  }
  std::vector<std::int64_t> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<std::int64_t> lift_solutions_serial(const CongruenceSystem& sys, std::int64_t m,
                                                const std::vector<std::int64_t>& sols) {
  check_arity(sys);
  const int n = sys.nvars;
  const std::size_t count = sols.size() / n;
  std::vector<std::int64_t> out;
  std::vector<std::int64_t> buf(box_size(n, sys.p) * n);
  for (std::size_t s = 0; s < count; ++s) {
    std::uint64_t found = scan_lifts(sys, m, sols.data() + s * n, buf.data());
    out.insert(out.end(), buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(found * n));
  }
  return out;
}

std::vector<std::int64_t> lift_solutions_parallel(const CongruenceSystem& sys, std::int64_t m,
                                                  const std::vector<std::int64_t>& sols) {
  check_arity(sys);
  const int n = sys.nvars;
  const auto count = static_cast<std::int64_t>(sols.size() / n);
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(count) + 1, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s)
    offsets[s + 1] = scan_lifts(sys, m, sols.data() + s * n, nullptr);
  for (std::int64_t s = 0; s < count; ++s) offsets[s + 1] += offsets[s];
  std::vector<std::int64_t> out(offsets.back() * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s)
    scan_lifts(sys, m, sols.data() + s * n, out.data() + offsets[s] * n);
  return out;
}

std::uint64_t lift_count_serial(const CongruenceSystem& sys, std::int64_t m, const std::vector<std::int64_t>& sols) {
  check_arity(sys);
  const int n = sys.nvars;
  const std::size_t count = sols.size() / n;
  std::uint64_t total = 0;
  for (std::size_t s = 0; s < count; ++s) total += scan_lifts(sys, m, sols.data() + s * n, nullptr);
  return total;
}

std::uint64_t lift_count_parallel(const CongruenceSystem& sys, std::int64_t m, const std::vector<std::int64_t>& sols) {
  check_arity(sys);
  const int n = sys.nvars;
  const auto count = static_cast<std::int64_t>(sols.size() / n);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t s = 0; s < count; ++s) total += scan_lifts(sys, m, sols.data() + s * n, nullptr);
  return total;
}

void set_worker_count(int workers) {
  if (workers > 0) omp_set_num_threads(workers);
}

int worker_count() { return omp_get_max_threads(); }

}  // namespace torustam::kernels
