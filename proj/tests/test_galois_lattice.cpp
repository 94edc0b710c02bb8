#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torustam/error.hpp"
#include "torustam/local_measure.hpp"
#include "torustam/number_theory.hpp"
#include "torustam/torus.hpp"

using namespace torustam;

namespace {

std::vector<TorusSpec> supported_tori() {
  std::vector<TorusSpec> out;
  for (std::int64_t d : {-1, -2, -3, -5, -7, -23, 2, 3, 5, 13})
    for (Family f : {Family::res_scalars, Family::norm_one, Family::quotient_by_gm})
      out.push_back(build_torus(f, FieldSpec::quadratic(d)));
  for (Family f : {Family::res_scalars, Family::norm_one, Family::quotient_by_gm}) {
    out.push_back(build_torus(f, FieldSpec::biquadratic(13, 17)));
    out.push_back(build_torus(f, FieldSpec::biquadratic(-1, 2)));
  }
  return out;
}

}  // namespace

TEST_CASE("character lattices over Q(i)") {
  const TorusSpec res = parse_torus("res:-1");
  CHECK(res.characters.rank == 2);
  CHECK(res.characters.action[1] == IntMatrix{{0, 1}, {1, 0}});
  const TorusSpec n1 = parse_torus("norm1:-1");
  CHECK(n1.characters.rank == 1);
  CHECK(n1.characters.action[1] == IntMatrix{{-1}});
  const TorusSpec q = parse_torus("quot:-1");
  CHECK(q.characters.rank == 1);
  CHECK(q.characters.action[1] == IntMatrix{{-1}});
}

TEST_CASE("invariant ranks") {
  CHECK(parse_torus("res:-1").characters.invariant_rank() == 1);
  CHECK(parse_torus("norm1:-1").characters.invariant_rank() == 0);
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  CHECK(GaloisLattice::trivial(g, 4).invariant_rank() == 4);
}

TEST_CASE("Frobenius over Q(i)") {
  CHECK(frobenius_matrix(parse_torus("res:-1"), 5) == IntMatrix::identity(2));
  CHECK(frobenius_matrix(parse_torus("res:-1"), 3) == IntMatrix{{0, 1}, {1, 0}});
  CHECK(frobenius_matrix(parse_torus("norm1:-1"), 3) == IntMatrix{{-1}});
}

TEST_CASE("Euler factors and point counts over Q(i)") {
  CHECK(euler_factor_at_one(parse_torus("res:-1"), 5) == BigRat(16, 25));
  CHECK(euler_factor_at_one(parse_torus("res:-1"), 3) == BigRat(8, 9));
  CHECK(euler_factor_at_one(parse_torus("norm1:-1"), 3) == BigRat(4, 3));
  CHECK(point_count_Fp(parse_torus("res:-1"), 5) == 16);
  CHECK(point_count_Fp(parse_torus("norm1:-1"), 5) == 4);
  CHECK(point_count_Fp(parse_torus("norm1:-1"), 3) == 4);
  CHECK(brute_force_point_count(parse_torus("res:-1"), 5) == 16);
  CHECK(brute_force_point_count(parse_torus("res:-1"), 3) == 8);
  CHECK(brute_force_point_count(parse_torus("norm1:-1"), 3) == 4);
}

TEST_CASE("every action is a homomorphism and X_* is the contragredient of X^*") {
  for (const TorusSpec& t : supported_tori()) {
    CAPTURE(t.to_string());
    CHECK_NOTHROW(t.characters.validate());
    CHECK_NOTHROW(t.cocharacters.validate());
    CHECK(t.characters.rank == static_cast<std::size_t>(t.dimension));
    for (int g = 0; g < t.characters.group->order(); ++g)
      CHECK(t.cocharacters.action[g] == unimodular_inverse(t.characters.action[g]).transpose());
  }
}

TEST_CASE("p^d times the Euler factor is the point count at good primes") {
  for (const TorusSpec& t : supported_tori()) {
    CAPTURE(t.to_string());
    for (std::int64_t p : primes_up_to(100)) {
      if (!is_good_prime(t, p)) continue;
      const BigRat scaled = euler_factor_at_one(t, p) * BigRat(ipow(BigInt(p), t.dimension));
      CHECK(scaled.is_integer());
      CHECK(scaled.numerator() == point_count_Fp(t, p));
    }
  }
}

TEST_CASE("point counts agree with brute-force enumeration") {
  for (const TorusSpec& t : supported_tori()) {
    CAPTURE(t.to_string());
    const std::int64_t pmax = t.field.is_quadratic() ? 13 : 5;
    for (std::int64_t p : primes_up_to(pmax)) {
      if (!is_good_prime(t, p)) continue;
      CHECK(point_count_Fp(t, p) == brute_force_point_count(t, p));
    }
  }
}

TEST_CASE("Q-rank gate") {
  for (const TorusSpec& t : supported_tori()) {
    CAPTURE(t.to_string());
    if (t.family == Family::res_scalars)
      CHECK(q_rank(t) >= 1);
    else
      CHECK(q_rank(t) == 0);
  }
}

TEST_CASE("prime decomposition in a biquadratic field") {
  const FieldSpec f = FieldSpec::biquadratic(13, 17);
  CHECK(f.degree() == 4);
  CHECK(f.subfields()[2].d == 221);
  // 2 is inert in Q(√13) and split in Q(√17)
  const PrimeDecomposition at2 = decompose_prime(f, 2);
  CHECK(at2.decomposition_group.size() == 2);
  CHECK_FALSE(at2.ramified());
  const PrimeDecomposition at13 = decompose_prime(f, 13);
  CHECK(at13.ramified());
  CHECK(at13.inertia_group.size() == 2);
  CHECK(at13.decomposition_group.size() == 2);
  // 3 is inert in Q(√-1) and Q(√2), split in Q(√-2)
  const PrimeDecomposition at3 = decompose_prime(FieldSpec::biquadratic(-1, 2), 3);
  CHECK(at3.decomposition_group.size() == 2);
  CHECK(infinite_decomposition_group(FieldSpec::biquadratic(13, 17)).size() == 1);
  CHECK(infinite_decomposition_group(FieldSpec::quadratic(-7)).size() == 2);
}

TEST_CASE("bad primes") {
  CHECK(bad_primes(parse_torus("norm1:-1")) == std::vector<std::int64_t>{2});
  CHECK(bad_primes(parse_torus("norm1:5")) == std::vector<std::int64_t>{2, 5});
  CHECK(bad_primes(parse_torus("norm1:13,17")) == std::vector<std::int64_t>{2, 13, 17});
  CHECK_FALSE(is_good_prime(parse_torus("norm1:-3"), 3));
  CHECK(is_good_prime(parse_torus("norm1:-3"), 5));
}

TEST_CASE("local Euler factor at ramified primes uses inertia invariants") {
  // sign module: no inertia invariants at 2, factor 1
  CHECK(local_euler_factor(parse_torus("norm1:-1"), 2) == BigRat(1));
  // permutation module: invariant line with Frobenius trivial, factor 1 − 1/p
  CHECK(local_euler_factor(parse_torus("res:-1"), 2) == BigRat(1, 2));
  CHECK(local_euler_factor(parse_torus("norm1:-1"), 5) == euler_factor_at_one(parse_torus("norm1:-1"), 5));
}

TEST_CASE("torus spec parsing") {
  CHECK(parse_torus("norm1:-1").to_string() == "norm1:-1");
  CHECK(parse_torus("res:13,17").to_string() == "res:13,17");
  CHECK(parse_torus("quot:-23").family == Family::quotient_by_gm);
  CHECK_THROWS_AS(parse_torus("foo:-1"), DomainError);
  CHECK_THROWS_AS(parse_torus("norm1:1"), DomainError);
  CHECK_THROWS_AS(parse_torus("norm1:-4"), DomainError);
  CHECK_THROWS_AS(parse_torus("norm1"), DomainError);
  CHECK_THROWS_AS(parse_torus("norm1:x"), DomainError);
  CHECK_THROWS_AS(parse_torus("norm1:5,5"), DomainError);
}

TEST_CASE("affine models") {
  const TorusSpec n1 = parse_torus("norm1:-1");
  REQUIRE(n1.model.has_value());
  CHECK(n1.model->nvars == 2);
  CHECK(n1.model->dimension == 1);
  CHECK(n1.model->smooth_at_base_point());
  CHECK(parse_torus("norm1:13,17").model->nvars == 4);
  CHECK(parse_torus("norm1:13,17").model->dimension == 3);
  CHECK_FALSE(parse_torus("quot:13,17").model.has_value());
  CHECK_FALSE(parse_torus("norm1:13,17").model->valid_at(2));
  CHECK(parse_torus("norm1:-1").model->valid_at(2));
}
