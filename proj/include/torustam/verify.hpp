#pragma once

#include "torustam/global_assembly.hpp"
#include "torustam/report.hpp"
#include "torustam/torus.hpp"

#include <cstdint>
#include <optional>

namespace torustam {

/// p^d·E_p(1) = |T(F_p)| for every good p ≤ pmax, with a brute-force
/// F_p count for p ≤ brute_pmax.
VerificationReport verify_euler(const TorusSpec& t, std::int64_t pmax = 97, std::int64_t brute_pmax = 13);

/// count(p^{k+1}) = p^d·count(p^k), k ≤ kmax, for every good p ≤ pmax.
VerificationReport verify_lifting(const TorusSpec& t, std::int64_t pmax = 13, int kmax = 3,
                                  std::uint64_t budget = default_enumeration_budget());

/// #H^1(G, X^*) = #(X^*⊗Q/Z)^G.
VerificationReport verify_globalinv(const TorusSpec& t);

/// Good formula against brute force at good p ≤ pmax, plus the stabilized
/// brute-force density at every bad prime the model covers.
VerificationReport verify_density(const TorusSpec& t, std::int64_t pmax = 13, int kmax = 6,
                                  std::uint64_t budget = default_enumeration_budget());

/// Knot group with its place list. PASS when the order agrees with what the
/// decomposition groups force: 1 if some decomposition group is all of G,
/// #H^3(G, Z) if every decomposition group is cyclic.
VerificationReport verify_sha(const TorusSpec& t);

/// Independent value of c_Γ from the class group: h/#Cl[2] for imaginary
/// fields (genus theory), 1 for real fields of class number one, and the
/// analytic class number for restriction of scalars.
std::optional<BigInt> c_gamma_oracle(const TorusSpec& t);

/// #Sha_BK reported through the relation-lattice c_Γ equals c_Γ·i(T) with
/// c_Γ from the class-group oracle.
VerificationReport verify_sha_bk(const TorusSpec& t);

}  // namespace torustam
