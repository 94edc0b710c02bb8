#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace torustam {

using BigInt = mpz_class;

/// Exact rational kept in lowest terms with a positive denominator.
///
/// Every arithmetic result is canonicalized eagerly, so two equal values
/// always have identical numerator/denominator pairs.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long v) : q_(v) {}                       // NOLINT(implicit)
  BigRat(const BigInt& v) : q_(v) {}              // NOLINT(implicit)
  BigRat(const BigInt& num, const BigInt& den);

  static BigRat from_string(const std::string& s);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  /// Canonical rendering "num/den" (the denominator is always printed).
  std::string to_string() const;

  BigRat operator-() const;
  BigRat& operator+=(const BigRat& o);
  BigRat& operator-=(const BigRat& o);
  BigRat& operator*=(const BigRat& o);
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

/// base^exp as an exact rational; negative exponents invert.
BigRat pow(const BigRat& base, long exp);

/// Exact integer power.
BigInt ipow(const BigInt& base, unsigned long exp);

}  // namespace torustam
