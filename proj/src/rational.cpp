#include "torustam/rational.hpp"

#include "torustam/error.hpp"

namespace torustam {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("BigRat: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRat BigRat::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRat(BigInt(s));
  return BigRat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string BigRat::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRat BigRat::operator-() const {
  BigRat r;
  r.q_ = -q_;
  return r;
}

BigRat& BigRat::operator+=(const BigRat& o) {
  q_ += o.q_;
  return *this;
}

BigRat& BigRat::operator-=(const BigRat& o) {
  q_ -= o.q_;
  return *this;
}

BigRat& BigRat::operator*=(const BigRat& o) {
  q_ *= o.q_;
  return *this;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.q_ == 0) throw DomainError("BigRat: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRat pow(const BigRat& base, long exp) {
  BigRat result(1L);
  BigRat b = exp < 0 ? BigRat(1L) / base : base;
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  while (e) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace torustam
