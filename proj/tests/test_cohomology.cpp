#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torustam/cohomology.hpp"
#include "torustam/error.hpp"
#include "torustam/normal_form.hpp"
#include "torustam/torus.hpp"

using namespace torustam;

namespace {

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr cyclic(int n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }
GroupPtr klein(int k = 2) { return std::make_shared<const FiniteGroup>(FiniteGroup::elementary_abelian_2(k)); }

IntMatrix mat_pow(const IntMatrix& a, int e) {
  IntMatrix r = IntMatrix::identity(a.rows());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// Lattice for Z/n where the generator acts by `a` (a^n = 1).
GaloisLattice cyclic_lattice(int n, const IntMatrix& a) {
  GaloisLattice m;
  m.group = cyclic(n);
  m.rank = a.rows();
  for (int i = 0; i < n; ++i) m.action.push_back(mat_pow(a, i));
  m.validate();
  return m;
}

// Lattice for (Z/2)^k where element g acts by −1 when bit j of g is set.
GaloisLattice sign_lattice(int k, int bit) {
  GaloisLattice m;
  m.group = klein(k);
  m.rank = 1;
  for (int g = 0; g < (1 << k); ++g) m.action.push_back(IntMatrix{{((g >> bit) & 1) ? -1L : 1L}});
  return m;
}

struct CyclicCase {
  std::string name;
  int n;
  IntMatrix gen;
};

std::vector<CyclicCase> cyclic_cases() {
  std::vector<CyclicCase> out{
      {"C2 trivial", 2, IntMatrix{{1}}},
      {"C2 sign", 2, IntMatrix{{-1}}},
      {"C2 swap", 2, IntMatrix{{0, 1}, {1, 0}}},
      {"C3 rotation", 3, IntMatrix{{0, -1}, {1, -1}}},
      {"C4 rotation", 4, IntMatrix{{0, -1}, {1, 0}}},
      {"C6 rotation", 6, IntMatrix{{1, -1}, {1, 0}}},
      {"C4 sign", 4, IntMatrix{{-1}}},
      {"C3 permutation", 3, IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}},
      {"C2 sign plus trivial", 2, IntMatrix{{-1, 0}, {0, 1}}},
  };
  // regular representation of C4: cyclic shift
  out.push_back({"C4 regular", 4, IntMatrix{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
  return out;
}

// H^n of a cyclic group from the periodic resolution:
// H^0 = M^G, H^odd = ker N / im(σ−1), H^even>0 = M^G / im N.
AbelianGroupInvariants periodic_oracle(int n_order, const IntMatrix& a, int n) {
  const std::size_t r = a.rows();
  const IntMatrix sm1 = a - IntMatrix::identity(r);
  IntMatrix norm(r, r);
  for (int i = 0; i < n_order; ++i) norm = norm + mat_pow(a, i);
  if (n == 0) return AbelianGroupInvariants{r - matrix_rank(sm1), {}};
  // the relevant kernel is saturated, so the quotient is the torsion of the cokernel
  const IntMatrix& image = (n % 2 == 1) ? sm1 : norm;
  AbelianGroupInvariants q = AbelianGroupInvariants::cokernel_of_rows(image.transpose());
  q.free_rank = 0;
  return q;
}

}  // namespace

TEST_CASE("cohomology examples") {
  auto c2 = cyclic(2);
  GaloisLattice sign{c2, 1, {IntMatrix{{1}}, IntMatrix{{-1}}}};
  CHECK(cohomology(sign, 1).torsion == std::vector<BigInt>{2});
  CHECK(cohomology(sign, 1).free_rank == 0);
  for (GroupPtr g : {cyclic(2), cyclic(3), klein(), std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3())})
    CHECK(cohomology(GaloisLattice::trivial(g, 1), 1).is_trivial());
  const AbelianGroupInvariants h3 = cohomology(GaloisLattice::trivial(klein(), 1), 3);
  CHECK(h3.free_rank == 0);
  CHECK(h3.torsion == std::vector<BigInt>{2});
  // H^2(G, Z) = Hom(G, Q/Z)
  CHECK(cohomology(GaloisLattice::trivial(klein(), 1), 2).torsion == std::vector<BigInt>{2, 2});
  CHECK(cohomology(GaloisLattice::trivial(cyclic(6), 1), 2).torsion == std::vector<BigInt>{6});
  // H^0 of a trivial lattice is free of its rank
  CHECK(cohomology(GaloisLattice::trivial(cyclic(3), 2), 0) == AbelianGroupInvariants{2, {}});
}

TEST_CASE("torsion dual of invariants") {
  auto c2 = cyclic(2);
  GaloisLattice sign{c2, 1, {IntMatrix{{1}}, IntMatrix{{-1}}}};
  CHECK(h0_torsion_dual(sign).order() == BigInt(2));
  CHECK_THROWS_AS(h0_torsion_dual(GaloisLattice::trivial(c2, 1)), DomainError);
  // the swap module has invariants, so it is rejected
  GaloisLattice swap{c2, 2, {IntMatrix::identity(2), IntMatrix{{0, 1}, {1, 0}}}};
  CHECK_THROWS_AS(h0_torsion_dual(swap), DomainError);
  GaloisLattice minus{c2, 2, {IntMatrix::identity(2), IntMatrix{{-1, 0}, {0, -1}}}};
  CHECK(h0_torsion_dual(minus).torsion == std::vector<BigInt>{2, 2});
}

TEST_CASE("coboundaries compose to zero") {
  for (const auto& c : cyclic_cases()) {
    CAPTURE(c.name);
    const CochainComplex cc = CochainComplex::build(cyclic_lattice(c.n, c.gen), 2);
    CHECK(cc.composes_to_zero());
  }
  CHECK(CochainComplex::build(GaloisLattice::trivial(klein(), 1), 3).composes_to_zero());
  CHECK(CochainComplex::build(GaloisLattice::regular(klein()), 2).composes_to_zero());
  CHECK(CochainComplex::build(parse_torus("norm1:13,17").characters, 2).composes_to_zero());
}

TEST_CASE("cyclic groups match the periodic resolution") {
  for (const auto& c : cyclic_cases()) {
    const GaloisLattice m = cyclic_lattice(c.n, c.gen);
    for (int n = 0; n <= 2; ++n) {
      CAPTURE(c.name);
      CAPTURE(n);
      CHECK(cohomology(m, n) == periodic_oracle(c.n, c.gen, n));
    }
  }
}

TEST_CASE("Shapiro: the regular module is acyclic") {
  for (GroupPtr g : {cyclic(2), cyclic(3), cyclic(4), klein(), std::make_shared<const FiniteGroup>(FiniteGroup::symmetric3())}) {
    const GaloisLattice reg = GaloisLattice::regular(g);
    CHECK(cohomology(reg, 1).is_trivial());
    CHECK(cohomology(reg, 2).is_trivial());
  }
}

TEST_CASE("global invariants identity on every rank-zero torus") {
  for (const char* spec : {"norm1:-1", "norm1:-3", "norm1:5", "quot:-23", "quot:13", "norm1:13,17", "quot:13,17",
                           "norm1:-1,2", "quot:-1,-3"}) {
    CAPTURE(spec);
    const GaloisLattice& x = parse_torus(spec).characters;
    CHECK(cohomology(x, 1).order() == h0_torsion_dual(x).order());
  }
}

TEST_CASE("restriction examples") {
  auto c2 = cyclic(2);
  GaloisLattice sign{c2, 1, {IntMatrix{{1}}, IntMatrix{{-1}}}};
  const CohomologyMap id = restriction(sign, {0, 1}, 1);
  CHECK(id.matrix == IntMatrix{{1}});
  CHECK(restriction(sign, {0}, 1).matrix.is_zero());
  const CohomologyMap r3 = restriction(GaloisLattice::trivial(klein(), 1), {0, 1}, 3);
  CHECK(r3.source.invariants.torsion == std::vector<BigInt>{2});
  CHECK(r3.target.invariants.is_trivial());
  CHECK(r3.matrix.is_zero());
  // H^2(G, Z) → H^2(H, Z) is surjective onto Z/2 for H of order 2
  const CohomologyMap r2 = restriction(GaloisLattice::trivial(klein(), 1), {0, 1}, 2);
  CHECK(kernel_order(r2.matrix, r2.source.component_orders, r2.target.component_orders) == 2);
}

TEST_CASE("restriction is functorial") {
  // G = (Z/2)^3 ⊃ H = {0..3} ⊃ K = {0, 1}; indices in H agree with those in G
  const std::vector<int> h{0, 1, 2, 3}, k{0, 1};
  std::vector<GaloisLattice> lattices{GaloisLattice::trivial(klein(3), 1), sign_lattice(3, 0), sign_lattice(3, 2)};
  for (std::size_t li = 0; li < lattices.size(); ++li) {
    const GaloisLattice& m = lattices[li];
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(li);
      CAPTURE(n);
      const CohomologyMap gh = restriction(m, h, n);
      const CohomologyMap hk = restriction(m.restrict_to(h), k, n);
      const CohomologyMap gk = restriction(m, k, n);
      REQUIRE(hk.source.component_orders == gh.target.component_orders);
      const IntMatrix composed = hk.matrix * gh.matrix;
      REQUIRE(composed.rows() == gk.matrix.rows());
      REQUIRE(composed.cols() == gk.matrix.cols());
      for (std::size_t i = 0; i < composed.rows(); ++i) {
        const BigInt& ord = gk.target.component_orders[i];
        for (std::size_t j = 0; j < composed.cols(); ++j) {
          BigInt diff = composed(i, j) - gk.matrix(i, j);
          if (ord != 0) diff %= ord;
          CHECK(diff == 0);
        }
      }
    }
  }
}

TEST_CASE("classes of coboundaries vanish and generators have their orders") {
  const GaloisLattice m = GaloisLattice::trivial(klein(), 1);
  const CohomologyGroup h2 = compute_cohomology(m, 2);
  const IntMatrix d1 = coboundary_matrix(m, 1);
  for (std::size_t j = 0; j < d1.cols(); ++j) {
    std::vector<BigInt> e(d1.cols());
    e[j] = 1;
    for (const auto& c : h2.class_of(d1.apply(e))) CHECK(c == 0);
  }
  for (std::size_t i = 0; i < h2.generators.size(); ++i) {
    const auto cls = h2.class_of(h2.generators[i]);
    for (std::size_t j = 0; j < cls.size(); ++j) CHECK(cls[j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("the cochain budget is enforced") {
  CHECK_THROWS_AS(coboundary_matrix(GaloisLattice::regular(cyclic(8)), 4), BudgetExceeded);
}

TEST_CASE("knot group and Ono constant") {
  for (std::int64_t d : {-1, -2, -3, -5, -7, -23, 2, 3, 5, 13}) {
    const ShaResult s = sha_norm_one(build_torus(Family::norm_one, FieldSpec::quadratic(d)));
    CHECK(s.h3.is_trivial());
    CHECK(s.order == 1);
  }
  const ShaResult big = sha_norm_one(parse_torus("norm1:13,17"));
  CHECK(big.h3.torsion == std::vector<BigInt>{2});
  CHECK(big.all_decomposition_groups_cyclic);
  CHECK(big.order == 2);
  // 2 is totally ramified in Q(i, √2), so one decomposition group is all of G
  const ShaResult small = sha_norm_one(parse_torus("norm1:-1,2"));
  CHECK(small.order == 1);
  CHECK_FALSE(small.all_decomposition_groups_cyclic);
  CHECK(ono_constant(parse_torus("res:-1")) == 1);
  CHECK(ono_constant(parse_torus("quot:-23")) == 1);
  CHECK(ono_constant(parse_torus("norm1:13,17")) == 2);
  CHECK(sha_bk_order(parse_torus("norm1:13,17"), 3) == 6);
  CHECK(sha_bk_order(parse_torus("norm1:-1"), 1) == 1);
  CHECK(h1_order(parse_torus("norm1:-1")) == 2);
  CHECK(h1_order(parse_torus("quot:-7")) == 2);
}
