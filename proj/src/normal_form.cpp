#include "torustam/normal_form.hpp"

#include "torustam/error.hpp"

#include <algorithm>

namespace torustam {

namespace {

struct Transforms {
  bool on;
  IntMatrix u, u_inv, v, v_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    if (!on) return;
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (!on) return;
    v.swap_cols(i, j);
    v_inv.swap_rows(i, j);
  }
  // row[i] -= q row[j]
  void row_submul(std::size_t i, std::size_t j, const BigInt& q) {
    if (!on) return;
    u.row_submul(i, j, q);
    u_inv.col_submul(j, i, -q);
  }
  // col[i] -= q col[j]
  void col_submul(std::size_t i, std::size_t j, const BigInt& q) {
    if (!on) return;
    v.col_submul(i, j, q);
    v_inv.row_submul(j, i, -q);
  }
  void negate_row(std::size_t i) {
    if (!on) return;
    u.negate_row(i);
    u_inv.negate_col(i);
  }
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  Transforms tr{with_transforms, {}, {}, {}, {}};
  if (with_transforms) {
    tr.u = tr.u_inv = IntMatrix::identity(rows);
    tr.v = tr.v_inv = IntMatrix::identity(cols);
  }
  const std::size_t diag = std::min(rows, cols);
  std::size_t rank = 0;

  for (std::size_t t = 0; t < diag; ++t) {
    bool finished = false;
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const BigInt& x = a(i, j);
          if (x == 0) continue;
          if (pi == rows || mpz_cmpabs(x.get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) {
        finished = true;
        break;
      }
      a.swap_rows(t, pi);
      tr.swap_rows(t, pi);
      a.swap_cols(t, pj);
      tr.swap_cols(t, pj);

      bool clean = true;
      BigInt q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.row_submul(i, t, q);
        tr.row_submul(i, t, q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.col_submul(j, t, q);
        tr.col_submul(j, t, q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility d_t | remaining block
      std::size_t bad_row = rows;
      for (std::size_t i = t + 1; i < rows && bad_row == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == rows) break;
      a.row_submul(t, bad_row, -1);
      tr.row_submul(t, bad_row, -1);
    }
    if (finished) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      tr.negate_row(t);
    }
    ++rank;
  }

  SnfResult res;
  res.d.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) res.d[i] = a(i, i);
  res.rank = rank;
  if (with_transforms) {
    res.u = std::move(tr.u);
    res.u_inv = std::move(tr.u_inv);
    res.v = std::move(tr.v);
    res.v_inv = std::move(tr.v_inv);
  }
  return res;
}

std::vector<BigInt> HnfResult::pivots() const {
  std::vector<BigInt> p;
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) p.push_back(h(r, pivot_cols[r]));
  return p;
}

std::optional<BigInt> HnfResult::index() const {
  if (pivot_cols.size() != h.cols()) return std::nullopt;
  BigInt idx = 1;
  for (const auto& p : pivots()) idx *= p;
  return idx;
}

HnfResult hermite_normal_form(const IntMatrix& m, bool with_transform) {
  const std::size_t rows = m.rows(), cols = m.cols();
  HnfResult res;
  res.h = m;
  if (with_transform) res.u = IntMatrix::identity(rows);
  IntMatrix& h = res.h;
  std::size_t r = 0;
  BigInt q;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (best == rows || mpz_cmpabs(h(i, c).get_mpz_t(), h(best, c).get_mpz_t()) < 0)) best = i;
      if (best == rows) break;
      h.swap_rows(r, best);
      if (with_transform) res.u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        h.row_submul(i, r, q);
        if (with_transform) res.u.row_submul(i, r, q);
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      if (with_transform) res.u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      h.row_submul(i, r, q);
      if (with_transform) res.u.row_submul(i, r, q);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

std::size_t matrix_rank(const IntMatrix& m) { return hermite_normal_form(m, false).rank(); }

IntMatrix integer_kernel(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  return s.v.cols_range(s.rank, m.cols());
}

}  // namespace torustam
