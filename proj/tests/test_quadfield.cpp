#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torustam/number_theory.hpp"
#include "torustam/poly_mod_p.hpp"
#include "torustam/quadfield.hpp"

#include <cmath>
#include <numeric>
#include <set>

using namespace torustam;

namespace {

// h(D) by counting reduced forms directly, without composition
std::size_t naive_class_number(std::int64_t disc) {
  std::size_t h = 0;
  const std::int64_t amax = static_cast<std::int64_t>(std::sqrt(-disc / 3.0)) + 1;
  for (std::int64_t a = 1; a <= amax; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if ((b * b - disc) % (4 * a) != 0) continue;
      const std::int64_t c = (b * b - disc) / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

std::uint64_t naive_norm_count(const QuadField& k, std::int64_t p, int e, std::int64_t target) {
  const std::int64_t m = ipow64(p, e);
  std::uint64_t n = 0;
  for (std::int64_t x = 0; x < m; ++x)
    for (std::int64_t y = 0; y < m; ++y) {
      const std::int64_t v = ((k.norm(x, y) - target) % m + m) % m;
      if (v == 0 && k.norm(x, y) % p != 0) ++n;
    }
  return n;
}

const std::vector<std::int64_t> kNegDiscs{-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, -31, -35, -39, -40,
                                          -47, -51, -52, -55, -56, -71, -84, -87, -95, -104, -120, -143};

}  // namespace

TEST_CASE("field constants") {
  const QuadField i = QuadField::from_d(-1);
  CHECK(i.disc == -4);
  CHECK(i.norm(3, 4) == 25);
  const QuadField g = QuadField::from_d(5);
  CHECK(g.disc == 5);
  CHECK(g.trace_omega == 1);
  CHECK(g.norm_omega == -1);
  CHECK(QuadField::from_discriminant(-23).d == -23);
  CHECK(QuadField::from_discriminant(8).d == 2);
  const auto [w1, w2] = g.omega_embeddings();
  CHECK(w1 == doctest::Approx((1 + std::sqrt(5.0)) / 2));
  CHECK(w2 == doctest::Approx((1 - std::sqrt(5.0)) / 2));
}

TEST_CASE("splitting type examples") {
  const QuadField i = QuadField::from_d(-1);
  CHECK(splitting_type(i, 5).type == SplitType::split);
  CHECK(splitting_type(i, 3).type == SplitType::inert);
  CHECK(splitting_type(i, 2).type == SplitType::ramified);
  CHECK(splitting_type(i, 3).residue_degree == std::vector<int>{2});
  CHECK(splitting_type(i, 2).ramification == std::vector<int>{2});
}

TEST_CASE("splitting type agrees with factoring the minimal polynomial") {
  for (std::int64_t d : {-1, -2, -3, -5, -23, 2, 3, 5, 13, 17}) {
    const QuadField k = QuadField::from_d(d);
    int split_seen = 0;
    for (std::int64_t p : primes_up_to(3000)) {
      if (kronecker_symbol(k.disc, p) != 1) continue;
      const auto f = factor_poly_mod_p(k.min_poly(), p);
      REQUIRE(f.size() == 2);
      CHECK(f[0].factor.degree() == 1);
      CHECK(f[1].factor.degree() == 1);
      CHECK(f[0].factor != f[1].factor);
      CHECK(splitting_type(k, p).type == SplitType::split);
      if (++split_seen == 100) break;
    }
    CHECK(split_seen == 100);
  }
}

TEST_CASE("class group examples") {
  CHECK(class_group(-4).h == 1);
  const ClassGroupData g23 = class_group(-23);
  CHECK(g23.h == 3);
  CHECK(g23.structure.torsion == std::vector<BigInt>{3});
  std::set<Form> forms(g23.forms.begin(), g23.forms.end());
  CHECK(forms == std::set<Form>{{1, 1, 6}, {2, 1, 3}, {2, -1, 3}});
  const ClassGroupData g20 = class_group(-20);
  CHECK(g20.h == 2);
  CHECK(g20.forms.front() == Form{1, 0, 5});
  CHECK(class_group(-84).structure.torsion == std::vector<BigInt>{2, 2});
}

TEST_CASE("class numbers agree with a direct count of reduced forms") {
  for (std::int64_t D : kNegDiscs) CHECK(class_group(D).h == naive_class_number(D));
}

TEST_CASE("class group axioms") {
  for (std::int64_t D : kNegDiscs) {
    const ClassGroupData g = class_group(D);
    if (g.h > 8) continue;
    const Form e = principal_form(D);
    for (const Form& f : g.forms) {
      CHECK(f.is_reduced());
      CHECK(f.discriminant() == D);
      CHECK(compose(f, e) == f);
      CHECK(compose(f, inverse(f)) == e);
      for (const Form& a : g.forms)
        for (const Form& b : g.forms) CHECK(compose(compose(f, a), b) == compose(f, compose(a, b)));
    }
  }
}

TEST_CASE("fundamental unit examples") {
  const UnitData u5 = fundamental_unit(5);
  CHECK(u5.x == 0);
  CHECK(u5.y == 1);
  CHECK(u5.norm == -1);
  CHECK(u5.regulator == doctest::Approx(0.481212).epsilon(1e-6));
  const UnitData u8 = fundamental_unit(8);
  CHECK(u8.x == 1);
  CHECK(u8.y == 1);
  CHECK(u8.norm == -1);
  const UnitData u12 = fundamental_unit(12);
  CHECK(u12.x == 2);
  CHECK(u12.y == 1);
  CHECK(u12.norm == 1);
  const UnitData n5 = norm_one_unit(5);
  CHECK(n5.norm == 1);
  CHECK(n5.regulator == doctest::Approx(2 * u5.regulator));
}

TEST_CASE("fundamental units are units and minimal") {
  for (std::int64_t D : {5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41, 44, 53, 56, 57, 61}) {
    const QuadField k = QuadField::from_discriminant(D);
    const UnitData u = fundamental_unit(D);
    const BigInt n = k.norm(u.x, u.y);
    CHECK(abs(n) == 1);
    CHECK(n == u.norm);
    // a unit x + yω > 1 has y > 0 and |x + yω̄| < 1, so x sits next to −yω̄
    const double wbar = k.omega_embeddings().second;
    const long ymax = u.y.get_si();
    for (long y = 1; y < ymax && y < 2000; ++y) {
      const long xc = std::lround(-y * wbar);
      for (long x = xc - 2; x <= xc + 2; ++x) CHECK(std::abs(k.norm(x, y)) != 1);
    }
  }
}

TEST_CASE("residue ring norm counts") {
  const QuadField i = QuadField::from_d(-1);
  CHECK(residue_ring_norm_count(i, 3, 1, 1) == 4);
  CHECK(residue_ring_norm_count(i, 5, 1, 1) == 4);
  CHECK(residue_ring_norm_count(i, 5, 2, 1) == 20);
  for (std::int64_t d : {-1, -3, -7, 5, 13})
    for (std::int64_t p : {3, 5, 7}) {
      const QuadField k = QuadField::from_d(d);
      CHECK(residue_ring_norm_count(k, p, 2, 1) == naive_norm_count(k, p, 2, 1));
    }
}

TEST_CASE("residue ring norm counts lift smoothly at unramified odd primes") {
  for (std::int64_t d : {-1, -2, -3, -5, -7, 2, 3, 5, 13}) {
    const QuadField k = QuadField::from_d(d);
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
      if (k.disc % p == 0) continue;
      for (int e = 1; e <= 2; ++e)
        CHECK(residue_ring_norm_count(k, p, e + 1, 1) ==
              static_cast<std::uint64_t>(p) * residue_ring_norm_count(k, p, e, 1));
    }
  }
}
