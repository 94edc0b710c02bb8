#pragma once

#include "torustam/finite_group.hpp"
#include "torustam/polynomial.hpp"
#include "torustam/quadfield.hpp"
#include "torustam/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torustam {

/// A quadratic field Q(√d) or a biquadratic field Q(√d1, √d2).
///
/// The Galois group is (Z/2)^k (k = 1, 2); bit i of an element says whether
/// it negates √d_i. The biquadratic case is handled entirely through its
/// three quadratic subfields and their characters.
struct FieldSpec {
  std::vector<std::int64_t> ds;

  static FieldSpec quadratic(std::int64_t d);
  static FieldSpec biquadratic(std::int64_t d1, std::int64_t d2);

  bool is_quadratic() const { return ds.size() == 1; }
  int degree() const { return 1 << ds.size(); }
  /// Quadratic subfields: {K} or {Q(√d1), Q(√d2), Q(√d1d2)}.
  std::vector<QuadField> subfields() const;
  /// Whether group element g acts nontrivially on subfield j.
  bool moves_subfield(int g, std::size_t j) const;
  std::shared_ptr<const FiniteGroup> galois_group() const;
  std::string to_string() const;
};

enum class Family { res_scalars, norm_one, quotient_by_gm };

const char* family_tag(Family f);  ///< "res" | "norm1" | "quot"
Family parse_family(const std::string& tag);

/// Affine Z-model with a gauge form.
///
/// Points mod m are the tuples solving every equation with `unit`
/// (when present) invertible mod p. The gauge form is
/// dx_0∧…/(∂F/∂x_gauge_var) for a hypersurface, or the unit-scaled volume
/// form when there are no equations; in both cases the Weil measure of the
/// Z_p-points is lim count(p^k)/p^{k·dimension}.
struct AffineModel {
  int nvars = 0;
  std::vector<MPoly> equations;
  MPoly unit;
  int dimension = 0;
  int gauge_var = -1;
  std::vector<std::int64_t> base_point;
  /// Primes at which the coordinate ring is not the maximal order.
  std::vector<std::int64_t> non_maximal_primes;
  std::string description;

  bool valid_at(std::int64_t p) const;
  /// Jacobian of the equations at the base point has full rank over Q.
  bool smooth_at_base_point() const;
};

struct TorusSpec {
  Family family = Family::norm_one;
  FieldSpec field;
  int dimension = 0;
  GaloisLattice characters;    ///< X^*
  GaloisLattice cocharacters;  ///< X_*
  std::optional<AffineModel> model;

  std::string to_string() const;  ///< e.g. "norm1:-1", "res:13,17"
};

TorusSpec build_torus(Family family, const FieldSpec& field);
/// Parses "family:d" or "family:d1,d2".
TorusSpec parse_torus(const std::string& spec);

/// Rank of the Galois-invariant characters.
std::size_t q_rank(const TorusSpec& t);

/// Decomposition data of a rational prime in the splitting field.
struct PrimeDecomposition {
  std::int64_t p = 0;
  std::vector<int> decomposition_group;
  std::vector<int> inertia_group;
  int frobenius = 0;  ///< generator of D/I (identity when D = I)
  bool ramified() const { return inertia_group.size() > 1; }
};

PrimeDecomposition decompose_prime(const FieldSpec& field, std::int64_t p);
/// Decomposition group of the infinite place (generated by complex conjugation).
std::vector<int> infinite_decomposition_group(const FieldSpec& field);

bool is_ramified(const TorusSpec& t, std::int64_t p);
/// Odd and unramified in the splitting field.
bool is_good_prime(const TorusSpec& t, std::int64_t p);
/// Primes dividing 2·disc (2 and the ramified primes), ascending.
std::vector<std::int64_t> bad_primes(const TorusSpec& t);

/// Action of Frobenius on X_* at an unramified prime.
IntMatrix frobenius_matrix(const TorusSpec& t, std::int64_t p);

/// det(1 − Fr_p^{-1}·p^{-1} | X_*⊗Q) from the characteristic polynomial.
BigRat euler_factor_at_one(const TorusSpec& t, std::int64_t p);

/// |T(F_p)| = det(p − Fr_p^{-1} | X_*), by fraction-free determinant.
BigInt point_count_Fp(const TorusSpec& t, std::int64_t p);

/// det(1 − Fr^{-1}·p^{-1} | (X_*⊗Q)^{I_p}) at any prime (inertia invariants).
BigRat local_euler_factor(const TorusSpec& t, std::int64_t p);

}  // namespace torustam
