#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace torustam {

/// Sparse multivariate polynomial with int64 coefficients.
struct MPoly {
  struct Term {
    std::int64_t coef = 0;
    std::vector<int> exps;
  };

  int nvars = 0;
  std::vector<Term> terms;

  MPoly() = default;
  explicit MPoly(int n) : nvars(n) {}

  static MPoly constant(int nvars, std::int64_t c);
  static MPoly variable(int nvars, int index);

  int total_degree() const;
  /// ∂/∂x_index
  MPoly partial(int index) const;
  /// Exact integer evaluation (callers keep values small).
  std::int64_t eval(const std::vector<std::int64_t>& x) const;
  /// Evaluation modulo m (< 2^31) with x already reduced into [0, m).
  std::int64_t eval_mod(const std::int64_t* x, std::int64_t m) const;
  std::string to_string() const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(std::int64_t s, const MPoly& a);

 private:
  void normalize();
};

}  // namespace torustam
