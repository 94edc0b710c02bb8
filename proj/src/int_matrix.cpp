#include "torustam/int_matrix.hpp"

#include "torustam/error.hpp"

#include <sstream>
#include <utility>

namespace torustam {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::vstack(const std::vector<IntMatrix>& blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DomainError("vstack: column mismatch");
    rows += b.rows();
  }
  IntMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks)
    for (std::size_t i = 0; i < b.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::rows_range(std::size_t begin, std::size_t end) const {
  IntMatrix out(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i - begin, j) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::cols_range(std::size_t begin, std::size_t end) const {
  IntMatrix out(rows_, end - begin);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = begin; j < end; ++j) out(i, j - begin) = (*this)(i, j);
  return out;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

std::vector<BigInt> IntMatrix::apply(const std::vector<BigInt>& x) const {
  if (x.size() != cols_) throw DomainError("IntMatrix::apply: size mismatch");
  std::vector<BigInt> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(x[j]) != 0) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("IntMatrix product: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("IntMatrix sum: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("IntMatrix difference: shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::row_submul(std::size_t i, std::size_t j, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    if ((*this)(j, c) != 0)
      mpz_submul((*this)(i, c).get_mpz_t(), q.get_mpz_t(), (*this)(j, c).get_mpz_t());
}

void IntMatrix::col_submul(std::size_t i, std::size_t j, const BigInt& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    if ((*this)(r, j) != 0)
      mpz_submul((*this)(r, i).get_mpz_t(), q.get_mpz_t(), (*this)(r, j).get_mpz_t());
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("characteristic_polynomial: matrix not square");
  std::size_t n = m.rows();
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  // M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I
  IntMatrix mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix amk = m * mk;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += amk(i, i);
    BigInt coeff = -tr;
    mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(), k);
    c[n - k] = coeff;
    mk = amk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeff;
  }
  return c;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("unimodular_inverse: matrix not square");
  std::size_t n = m.rows();
  IntMatrix a = m;
  IntMatrix inv = IntMatrix::identity(n);
  // Euclidean row reduction to the identity; every step is unimodular.
  for (std::size_t col = 0; col < n; ++col) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t r = col; r < n; ++r)
        if (a(r, col) != 0 && (best == n || abs(a(r, col)) < abs(a(best, col)))) best = r;
      if (best == n) throw DomainError("unimodular_inverse: singular matrix");
      a.swap_rows(col, best);
      inv.swap_rows(col, best);
      bool done = true;
      for (std::size_t r = col + 1; r < n; ++r) {
        if (a(r, col) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, col).get_mpz_t(), a(col, col).get_mpz_t());
        a.row_submul(r, col, q);
        inv.row_submul(r, col, q);
        if (a(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (abs(a(col, col)) != 1) throw DomainError("unimodular_inverse: matrix not unimodular");
    if (a(col, col) < 0) {
      a.negate_row(col);
      inv.negate_row(col);
    }
  }
  for (std::size_t col = n; col-- > 0;)
    for (std::size_t r = 0; r < col; ++r) {
      BigInt q = a(r, col);
      a.row_submul(r, col, q);
      inv.row_submul(r, col, q);
    }
  return inv;
}

}  // namespace torustam
