#pragma once

#include "torustam/abelian_group.hpp"
#include "torustam/finite_group.hpp"
#include "torustam/torus.hpp"

#include <string>
#include <vector>

namespace torustam {

/// Largest cochain space (rank·|G|^{n+1}) a boundary matrix may have.
inline constexpr std::size_t kCochainBudget = 20000;

/// Inhomogeneous (non-normalized) bar complex C^0 → C^1 → … of a lattice.
///
/// A cochain of degree n is a function G^n → M stored as a vector of
/// length rank·|G|^n; tuple (g_1, …, g_n) has index Σ g_i·|G|^{n−i} and
/// coordinate a of its value sits at tuple_index·rank + a.
struct CochainComplex {
  GaloisLattice module;
  int max_degree = 0;
  std::vector<IntMatrix> d;  ///< d[n] : C^n → C^{n+1}, n = 0..max_degree

  static CochainComplex build(const GaloisLattice& m, int max_degree);

  std::size_t cochain_rank(int n) const;
  /// d[n+1]·d[n] == 0 for every consecutive pair (exact).
  bool composes_to_zero() const;
};

/// Coboundary d^n as a matrix; throws BudgetExceeded past kCochainBudget.
IntMatrix coboundary_matrix(const GaloisLattice& m, int n);

/// H^n with enough bookkeeping to name classes and pick representatives.
struct CohomologyGroup {
  int degree = 0;
  AbelianGroupInvariants invariants;
  /// One entry per nontrivial cyclic component: its order (0 = infinite).
  std::vector<BigInt> component_orders;
  /// Cocycle representatives of the component generators.
  std::vector<std::vector<BigInt>> generators;

  /// Coordinates of a cocycle on the components (reduced mod orders).
  std::vector<BigInt> class_of(const std::vector<BigInt>& cocycle) const;

  // kernel coordinates and the Smith transform of the image inside them
  IntMatrix kernel_coords;
  IntMatrix coord_transform;
  std::vector<std::size_t> component_rows;
};

CohomologyGroup compute_cohomology(const GaloisLattice& m, int n);
AbelianGroupInvariants cohomology(const GaloisLattice& m, int n);

/// (M ⊗ Q/Z)^G for a lattice without invariants. Throws DomainError when
/// the invariant rank is positive.
AbelianGroupInvariants h0_torsion_dual(const GaloisLattice& m);

/// Restriction H^n(G, M) → H^n(H, M) in component coordinates:
/// column j is the class of the restricted j-th source generator.
struct CohomologyMap {
  CohomologyGroup source;
  CohomologyGroup target;
  IntMatrix matrix;  ///< target components × source components
};

CohomologyMap restriction(const GaloisLattice& m, const std::vector<int>& subgroup, int n);

/// Order of the kernel of a map between finite groups given by a matrix
/// in component coordinates (source orders a, target orders b).
BigInt kernel_order(const IntMatrix& matrix, const std::vector<BigInt>& source_orders,
                    const std::vector<BigInt>& target_orders);

/// A place of Q with its decomposition group in the Galois group.
struct PlaceGroup {
  std::string place;  ///< "inf" or the prime
  std::vector<int> group;
  bool cyclic = true;
  bool ramified = false;
};

struct ShaResult {
  BigInt order;
  AbelianGroupInvariants h3;  ///< H^3(G, Z)
  std::vector<PlaceGroup> places;
  bool all_decomposition_groups_cyclic = true;
};

/// Knot group ker(H^3(G, Z) → ∏_v H^3(G_v, Z)) for a norm-one torus. The
/// places are ∞, every ramified prime, and the first `unramified_samples`
/// unramified primes.
ShaResult sha_norm_one(const TorusSpec& t, int unramified_samples = 50);
BigInt sha_order(const TorusSpec& t);

/// i(T) = #Sha(T). Restriction of scalars has trivial Sha (Shapiro and
/// Hilbert 90); the quadratic quotient torus is isomorphic to the norm-one
/// torus.
BigInt ono_constant(const TorusSpec& t);

BigInt sha_bk_order(const TorusSpec& t, const BigInt& c_gamma);

/// #H^1(G, X^*).
BigInt h1_order(const TorusSpec& t);

}  // namespace torustam
