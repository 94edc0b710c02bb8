#pragma once

#include "torustam/int_matrix.hpp"

#include <optional>
#include <vector>

namespace torustam {

/// Smith normal form u·M·v = diag(d).
///
/// `d` has min(rows, cols) entries, non-negative, with d[i] | d[i+1]; zeros
/// (if any) come last. The inverses of u and v are tracked alongside because
/// cohomology needs to move between the original and the diagonal bases.
struct SnfResult {
  std::vector<BigInt> d;
  IntMatrix u, v;
  IntMatrix u_inv, v_inv;
  std::size_t rank = 0;
};

/// Smith normal form with minimal-absolute-value pivoting (deterministic).
/// When `with_transforms` is false only `d` and `rank` are filled.
SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = true);

/// Row-style Hermite normal form: u·M = h, h upper echelon with positive
/// pivots and entries above each pivot reduced into [0, pivot).
/// The lattice in question is the row span of M.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_cols;

  std::size_t rank() const { return pivot_cols.size(); }
  std::vector<BigInt> pivots() const;
  /// [Z^cols : row span]; empty when the row span is not of full rank.
  std::optional<BigInt> index() const;
};

HnfResult hermite_normal_form(const IntMatrix& m, bool with_transform = true);

std::size_t matrix_rank(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x : M x = 0}. The basis is
/// saturated: it spans every integral kernel vector.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace torustam
