#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace torustam {

/// Polynomial over F_p, coefficients low-to-high, no trailing zeros.
/// The zero polynomial is the empty vector.
struct PolyModP {
  std::int64_t p = 2;
  std::vector<std::int64_t> c;

  PolyModP() = default;
  PolyModP(std::int64_t prime, std::vector<std::int64_t> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::int64_t lead() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  PolyModP monic() const;
  std::int64_t eval(std::int64_t x) const;
  std::string to_string() const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend bool operator==(const PolyModP& a, const PolyModP& b) { return a.p == b.p && a.c == b.c; }
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP poly_gcd(PolyModP a, PolyModP b);
PolyModP derivative(const PolyModP& f);
/// base^e mod m.
PolyModP powmod(const PolyModP& base, std::uint64_t e, const PolyModP& m);

struct PolyFactor {
  PolyModP factor;
  int multiplicity = 1;
};

/// Factorization of f (integer coefficients, low-to-high) over F_p into monic
/// irreducibles with multiplicities, sorted by (degree, coefficients).
/// Square-free splitting, then distinct-degree splitting via
/// gcd(f, x^{p^k} - x), then exhaustive search inside each equal-degree part.
/// Supports equal-degree parts that are linear products or a product of two
/// quadratics, which covers every polynomial of degree <= 4.
std::vector<PolyFactor> factor_poly_mod_p(const std::vector<std::int64_t>& f, std::int64_t p);

}  // namespace torustam
