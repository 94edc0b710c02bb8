#pragma once

#include "torustam/int_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torustam {

/// Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k with 1 < d_1 | d_2 | ... | d_k.
struct AbelianGroupInvariants {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  /// Group order, or nullopt when the group is infinite.
  std::optional<BigInt> order() const;
  /// "Z^r ⊕ Z/d1 ⊕ ..." with "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;

  /// Cokernel of `relations`: Z^cols modulo the row span.
  static AbelianGroupInvariants cokernel_of_rows(const IntMatrix& relations);
  /// Builds invariants from Smith diagonal entries and an ambient rank.
  static AbelianGroupInvariants from_diagonal(const std::vector<BigInt>& d, std::size_t ambient_rank);
};

}  // namespace torustam
