#include "torustam/cohomology.hpp"

#include "torustam/error.hpp"
#include "torustam/normal_form.hpp"
#include "torustam/number_theory.hpp"

#include <algorithm>
#include <map>

namespace torustam {

namespace {

std::size_t power(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_budget(const GaloisLattice& m, int n) {
  const std::size_t g = m.group->order();
  // guard against overflow before multiplying out
  double est = static_cast<double>(m.rank) * static_cast<double>(power(g, n + 1));
  if (est > static_cast<double>(kCochainBudget))
    throw BudgetExceeded("cohomology: degree " + std::to_string(n) + " needs " + std::to_string(static_cast<long>(est)) +
                         " cochain coordinates, budget is " + std::to_string(kCochainBudget));
}

}  // namespace

IntMatrix coboundary_matrix(const GaloisLattice& m, int n) {
  if (n < 0) throw DomainError("coboundary_matrix: negative degree");
  check_budget(m, n);
  const FiniteGroup& G = *m.group;
  const std::size_t g = G.order(), r = m.rank;
  const std::size_t src = power(g, n), dst = power(g, n + 1);
  IntMatrix d(dst * r, src * r);
  std::vector<int> tup(n + 1);
  for (std::size_t T = 0; T < dst; ++T) {
    std::size_t x = T;
    for (int i = n; i >= 0; --i) {
      tup[i] = static_cast<int>(x % g);
      x /= g;
    }
    // g_1 · f(g_2, …, g_{n+1})
    const std::size_t tail = T % src;
    const IntMatrix& a = m.action[tup[0]];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        if (a(i, j) != 0) d(T * r + i, tail * r + j) += a(i, j);
    // (−1)^i f(…, g_i g_{i+1}, …)
    for (int i = 0; i < n; ++i) {
      std::size_t idx = 0;
      for (int k = 0; k <= n; ++k) {
        if (k == i + 1) continue;
        int v = k == i ? G.mul(tup[i], tup[i + 1]) : tup[k];
        idx = idx * g + v;
      }
      const long sign = (i + 1) % 2 ? -1 : 1;
      for (std::size_t a2 = 0; a2 < r; ++a2) d(T * r + a2, idx * r + a2) += sign;
    }
    // (−1)^{n+1} f(g_1, …, g_n)
    const std::size_t head = T / g;
    const long sign = (n + 1) % 2 ? -1 : 1;
    for (std::size_t a2 = 0; a2 < r; ++a2) d(T * r + a2, head * r + a2) += sign;
  }
  return d;
}

CochainComplex CochainComplex::build(const GaloisLattice& m, int max_degree) {
  CochainComplex c;
  c.module = m;
  c.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) c.d.push_back(coboundary_matrix(m, n));
  return c;
}

std::size_t CochainComplex::cochain_rank(int n) const { return module.rank * power(module.group->order(), n); }

bool CochainComplex::composes_to_zero() const {
  for (std::size_t n = 0; n + 1 < d.size(); ++n)
    if (!(d[n + 1] * d[n]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

std::vector<BigInt> CohomologyGroup::class_of(const std::vector<BigInt>& cocycle) const {
  if (component_rows.empty()) return {};
  std::vector<BigInt> c = kernel_coords.apply(cocycle);
  std::vector<BigInt> y = coord_transform.apply(c);
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < component_rows.size(); ++k) {
    BigInt v = y[component_rows[k]];
    const BigInt& ord = component_orders[k];
    if (ord != 0) {
      v %= ord;
      if (v < 0) v += ord;
    }
    out.push_back(v);
  }
  return out;
}

CohomologyGroup compute_cohomology(const GaloisLattice& m, int n) {
  if (n < 0) throw DomainError("cohomology: negative degree");
  CohomologyGroup h;
  h.degree = n;
  const IntMatrix dn = coboundary_matrix(m, n);
  const std::size_t cn = dn.cols();
  if (cn == 0) return h;
  SnfResult s = smith_normal_form(dn);
  const std::size_t k = cn - s.rank;
  if (k == 0) return h;
  IntMatrix basis = s.v.cols_range(s.rank, cn);
  h.kernel_coords = s.v_inv.rows_range(s.rank, cn);

  std::vector<BigInt> diag(k, BigInt(0));
  IntMatrix u2 = IntMatrix::identity(k), u2_inv = IntMatrix::identity(k);
  if (n > 0) {
    IntMatrix x = h.kernel_coords * coboundary_matrix(m, n - 1);
    SnfResult s2 = smith_normal_form(x);
    for (std::size_t i = 0; i < s2.d.size(); ++i) diag[i] = s2.d[i];
    u2 = s2.u;
    u2_inv = s2.u_inv;
  }
  h.coord_transform = u2;
  IntMatrix gens = basis * u2_inv;
  for (std::size_t i = 0; i < k; ++i) {
    if (diag[i] == 1) continue;
    h.component_rows.push_back(i);
    h.component_orders.push_back(diag[i]);
    std::vector<BigInt> z(cn);
    for (std::size_t j = 0; j < cn; ++j) z[j] = gens(j, i);
    h.generators.push_back(std::move(z));
  }
  h.invariants = AbelianGroupInvariants::from_diagonal(diag, k);
  return h;
}

AbelianGroupInvariants cohomology(const GaloisLattice& m, int n) { return compute_cohomology(m, n).invariants; }

AbelianGroupInvariants h0_torsion_dual(const GaloisLattice& m) {
  if (m.invariant_rank() != 0)
    throw DomainError("h0_torsion_dual: lattice has Galois-invariant characters (positive Q-rank)");
  if (m.rank == 0) return {};
  SnfResult s = smith_normal_form(m.stacked_differences(), false);
  return AbelianGroupInvariants::from_diagonal(s.d, m.rank);
}

CohomologyMap restriction(const GaloisLattice& m, const std::vector<int>& subgroup, int n) {
  if (!m.group->is_subgroup(subgroup)) throw DomainError("restriction: elements do not form a subgroup");
  CohomologyMap out;
  out.source = compute_cohomology(m, n);
  GaloisLattice sub = m.restrict_to(subgroup);
  out.target = compute_cohomology(sub, n);
  const std::size_t g = m.group->order(), hs = subgroup.size(), r = m.rank;
  const std::size_t tuples = power(hs, n);
  out.matrix = IntMatrix(out.target.component_orders.size(), out.source.component_orders.size());
  for (std::size_t j = 0; j < out.source.generators.size(); ++j) {
    const auto& z = out.source.generators[j];
    std::vector<BigInt> zr(tuples * r);
    for (std::size_t t = 0; t < tuples; ++t) {
      std::size_t x = t, big = 0, scale = 1;
      for (int i = 0; i < n; ++i) {
        big += static_cast<std::size_t>(subgroup[x % hs]) * scale;
        x /= hs;
        scale *= g;
      }
      for (std::size_t a = 0; a < r; ++a) zr[t * r + a] = z[big * r + a];
    }
    auto cls = out.target.class_of(zr);
    for (std::size_t i = 0; i < cls.size(); ++i) out.matrix(i, j) = cls[i];
  }
  return out;
}

BigInt kernel_order(const IntMatrix& matrix, const std::vector<BigInt>& source_orders,
                    const std::vector<BigInt>& target_orders) {
  BigInt src = 1, tgt = 1;
  for (const auto& a : source_orders) {
    if (a == 0) throw Unsupported("kernel_order: source group is infinite");
    src *= a;
  }
  if (target_orders.empty()) return src;
  for (const auto& b : target_orders) {
    if (b == 0) throw Unsupported("kernel_order: target group is infinite");
    tgt *= b;
  }
  const std::size_t t = target_orders.size(), s = matrix.cols();
  IntMatrix aug(t, s + t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < s; ++j) aug(i, j) = matrix(i, j);
    aug(i, s + i) = target_orders[i];
  }
  BigInt cok = 1;
  for (const auto& d : smith_normal_form(aug, false).d) cok *= d;
  const BigInt image = tgt / cok;
  return src / image;
}

// ---------------------------------------------------------------------------

ShaResult sha_norm_one(const TorusSpec& t, int unramified_samples) {
  if (t.family != Family::norm_one) throw Unsupported("sha_order: only the norm-one family is supported");
  auto G = t.field.galois_group();
  const GaloisLattice z = GaloisLattice::trivial(G, 1);
  ShaResult res;
  CohomologyGroup h3 = compute_cohomology(z, 3);
  res.h3 = h3.invariants;

  std::vector<PlaceGroup> places;
  {
    PlaceGroup inf{"inf", infinite_decomposition_group(t.field), true, false};
    places.push_back(inf);
  }
  for (std::int64_t p : bad_primes(t)) {
    PrimeDecomposition pd = decompose_prime(t.field, p);
    places.push_back({std::to_string(p), pd.decomposition_group, true, pd.ramified()});
  }
  int taken = 0;
  for (std::int64_t p = 2; taken < unramified_samples; ++p) {
    if (!is_prime(p) || is_ramified(t, p)) continue;
    ++taken;
    if (p == 2) continue;  // already listed among the bad primes
    PrimeDecomposition pd = decompose_prime(t.field, p);
    places.push_back({std::to_string(p), pd.decomposition_group, true, false});
  }

  // one restriction per distinct subgroup
  std::map<std::vector<int>, CohomologyMap> maps;
  for (auto& pl : places) {
    pl.cyclic = G->is_cyclic_subgroup(pl.group);
    res.all_decomposition_groups_cyclic = res.all_decomposition_groups_cyclic && pl.cyclic;
    if (!maps.count(pl.group)) maps.emplace(pl.group, restriction(z, pl.group, 3));
  }
  std::vector<IntMatrix> blocks;
  std::vector<BigInt> target_orders;
  for (const auto& [grp, mp] : maps) {
    if (mp.target.component_orders.empty()) continue;
    blocks.push_back(mp.matrix);
    for (const auto& b : mp.target.component_orders) target_orders.push_back(b);
  }
  IntMatrix stacked = blocks.empty() ? IntMatrix(0, h3.component_orders.size()) : IntMatrix::vstack(blocks);
  res.order = kernel_order(stacked, h3.component_orders, target_orders);
  res.places = std::move(places);
  return res;
}

BigInt sha_order(const TorusSpec& t) { return sha_norm_one(t).order; }

BigInt ono_constant(const TorusSpec& t) {
  switch (t.family) {
    case Family::norm_one: return sha_order(t);
    case Family::res_scalars: return 1;
    case Family::quotient_by_gm:
      if (!t.field.is_quadratic()) throw Unsupported("ono_constant: quotient torus over a biquadratic field");
      return sha_order(build_torus(Family::norm_one, t.field));
  }
  throw Unsupported("ono_constant: unknown family");
}

BigInt sha_bk_order(const TorusSpec& t, const BigInt& c_gamma) {
  if (c_gamma <= 0) throw DomainError("sha_bk_order: c_gamma must be positive");
  return c_gamma * ono_constant(t);
}

BigInt h1_order(const TorusSpec& t) {
  auto o = cohomology(t.characters, 1).order();
  if (!o) throw DomainError("h1_order: H^1 is infinite");
  return *o;
}

}  // namespace torustam
