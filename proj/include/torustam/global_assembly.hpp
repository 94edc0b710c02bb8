#pragma once

#include "torustam/local_measure.hpp"
#include "torustam/lvalue.hpp"
#include "torustam/report.hpp"
#include "torustam/torus.hpp"

#include <cstdint>
#include <vector>

namespace torustam {

/// Volume of T(R)/Γ for the gauge form dx/(∂F/∂y) on the norm-form model.
struct ArchVolume {
  double value = 0;
  double abs_err = 0;
  int torsion_order = 1;       ///< w₁, the order of the finite part of Γ
  std::size_t intervals = 0;   ///< accepted quadrature panels
  int components = 1;          ///< connected components of T(R)
  double regulator = 0;        ///< log ε₁ (real fields)
  std::string domain;          ///< what was integrated

  Json to_json() const;
};

ArchVolume archimedean_volume(const TorusSpec& t, double tol = 1e-10);

/// L_S(1) = L(1)·∏_{p∈S} E_p(1). S lists finite primes; ∞ is implicit.
/// Throws DomainError when S misses a bad prime.
struct PartialL {
  double value = 0;
  double abs_err = 0;
  std::vector<LValue> factors;  ///< one per quadratic character in X_*⊗Q
  BigRat removed;               ///< ∏_{p∈S} E_p(1)
};
PartialL partial_l_value(const TorusSpec& t, const std::vector<std::int64_t>& S, double tol = 1e-9);

/// c_Γ = [T(A_f) : T(Q)·∏ T^c_p].
struct CGamma {
  BigInt value;
  bool heuristic = false;   ///< relation-lattice search rather than a closed formula
  bool stabilized = true;
  std::string method;
  struct Step {
    std::int64_t prime_bound, box;
    std::size_t relations;
    std::optional<BigInt> index;
  };
  std::vector<Step> history;

  Json to_json() const;
};
CGamma c_gamma(const TorusSpec& t, int max_rounds = 7);

struct TauCoh {
  double value = 0;
  double abs_err = 0;
  std::vector<std::int64_t> S;
  PartialL l_s;
  std::vector<LocalDensity> densities;  ///< one per p ∈ S
  BigRat density_product;
  ArchVolume volume;
  std::int64_t pmax = 0;
  std::size_t good_primes_checked = 0;  ///< primes where E_p^{-1}·μ_p = 1 was confirmed
  bool stabilized = true;

  Json to_json() const;
};

/// L_S^{-1}·∏_{p∈S} μ_p·vol with S = bad primes ∪ extra_primes.
/// Throws AssumptionViolated for positive Q-rank.
TauCoh tau_coh(const TorusSpec& t, double tol = 1e-9, std::int64_t pmax = 97,
               const std::vector<std::int64_t>& extra_primes = {},
               std::uint64_t budget = default_enumeration_budget());

double tau_tam(const TorusSpec& t, double tol = 1e-9);

/// #H^1(G, X^*)/i(T), exact.
BigRat ono_rhs(const TorusSpec& t);

struct TncOptions {
  double tol = 1e-6;
  std::int64_t pmax = 97;
  std::uint64_t budget = default_enumeration_budget();
};

VerificationReport verify_tnc(const TorusSpec& t, const TncOptions& opt = {});

}  // namespace torustam
