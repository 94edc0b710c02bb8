#pragma once

#include "torustam/int_matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace torustam {

/// Finite group given by its multiplication table; elements are 0..n-1.
class FiniteGroup {
 public:
  /// Validates associativity, identity and inverses.
  FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  static FiniteGroup cyclic(int n);
  /// (Z/2)^k with element bits as coordinates and XOR as product.
  static FiniteGroup elementary_abelian_2(int k);
  static FiniteGroup symmetric3();

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_subgroup(const std::vector<int>& elems) const;
  /// Subgroup generated by `gens` (sorted element list).
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  bool is_cyclic_subgroup(const std::vector<int>& elems) const;
  int element_order(int a) const;
  /// The subgroup as a group of its own; element i of the result is elems[i].
  FiniteGroup subgroup(const std::vector<int>& elems) const;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

/// Free Z-module of finite rank with a linear action of a finite group.
struct GaloisLattice {
  std::shared_ptr<const FiniteGroup> group;
  std::size_t rank = 0;
  std::vector<IntMatrix> action;  ///< one matrix per group element

  /// Checks the homomorphism property exhaustively; throws DomainError.
  void validate() const;

  /// Contragredient lattice: g acts by the inverse transpose.
  GaloisLattice dual() const;
  /// Restriction of the action to a subgroup (elements listed in `elems`).
  GaloisLattice restrict_to(const std::vector<int>& elems) const;
  /// Rows stacked from (action[g] − 1) for g in `elems` (all elements if empty).
  IntMatrix stacked_differences(const std::vector<int>& elems = {}) const;
  /// Rank of the sublattice of invariants.
  std::size_t invariant_rank() const;

  static GaloisLattice trivial(std::shared_ptr<const FiniteGroup> g, std::size_t rank);
  /// Z[G] with g·e_h = e_{gh}.
  static GaloisLattice regular(std::shared_ptr<const FiniteGroup> g);
  /// Z[G]/Z·(Σ e_g), presented through the Smith form of the norm vector.
  static GaloisLattice regular_mod_norm(std::shared_ptr<const FiniteGroup> g);
  /// Augmentation kernel {Σ a_g e_g : Σ a_g = 0} ⊂ Z[G].
  static GaloisLattice augmentation_kernel(std::shared_ptr<const FiniteGroup> g);
};

}  // namespace torustam
