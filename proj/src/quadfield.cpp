#include "torustam/quadfield.hpp"

#include "torustam/error.hpp"
#include "torustam/kernels.hpp"
#include "torustam/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace torustam {

QuadField QuadField::from_d(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d))
    throw DomainError("QuadField: d = " + std::to_string(d) + " is not a squarefree integer other than 0, 1");
  QuadField k;
  k.d = d;
  if (((d % 4) + 4) % 4 == 1) {
    k.disc = d;
    k.trace_omega = 1;
    k.norm_omega = (1 - d) / 4;
  } else {
    k.disc = 4 * d;
    k.trace_omega = 0;
    k.norm_omega = -d;
  }
  return k;
}

QuadField QuadField::from_discriminant(std::int64_t disc) {
  if (!is_fundamental_discriminant(disc))
    throw DomainError("QuadField: " + std::to_string(disc) + " is not a fundamental discriminant");
  return from_d(disc % 4 == 0 ? disc / 4 : disc);
}

BigInt QuadField::norm(const BigInt& x, const BigInt& y) const {
  return x * x + trace_omega * x * y + norm_omega * y * y;
}

std::pair<double, double> QuadField::omega_embeddings() const {
  if (d < 0) throw DomainError("omega_embeddings: field is imaginary");
  double s = std::sqrt(static_cast<double>(d));
  if (trace_omega == 1) return {(1.0 + s) / 2.0, (1.0 - s) / 2.0};
  return {s, -s};
}

std::string QuadField::to_string() const { return "Q(sqrt(" + std::to_string(d) + "))"; }

const char* to_string(SplitType t) {
  switch (t) {
    case SplitType::split: return "split";
    case SplitType::inert: return "inert";
    case SplitType::ramified: return "ramified";
  }
  return "?";
}

SplittingData splitting_type(const QuadField& field, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("splitting_type: " + std::to_string(p) + " is not prime");
  SplittingData s;
  s.p = p;
  switch (kronecker_symbol(field.disc, p)) {
    case 1:
      s.type = SplitType::split;
      s.ramification = {1, 1};
      s.residue_degree = {1, 1};
      break;
    case -1:
      s.type = SplitType::inert;
      s.ramification = {1};
      s.residue_degree = {2};
      break;
    default:
      s.type = SplitType::ramified;
      s.ramification = {2};
      s.residue_degree = {1};
  }
  return s;
}

// ---------------------------------------------------------------------------
// Binary quadratic forms

bool Form::is_reduced() const {
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::string Form::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t pos_mod(std::int64_t a, std::int64_t m) {
  a %= m;
  return a < 0 ? a + m : a;
}

// u·a + v·b = g = gcd(a, b) >= 0
std::int64_t xgcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = floor_div(r0, r1);
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  u = s0;
  v = t0;
  return r0;
}

}  // namespace

Form reduce_form(Form f) {
  const std::int64_t disc = f.discriminant();
  if (disc >= 0 || f.a <= 0) throw DomainError("reduce_form: form is not positive definite");
  for (;;) {
    if (!(-f.a < f.b && f.b <= f.a)) {
      std::int64_t k = floor_div(f.a - f.b, 2 * f.a);
      f.b += 2 * k * f.a;
      f.c = (f.b * f.b - disc) / (4 * f.a);
    }
    if (f.a > f.c) {
      f = Form{f.c, -f.b, f.a};
      continue;
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    break;
  }
  return f;
}

Form compose(const Form& f, const Form& g) {
  if (f.discriminant() != g.discriminant()) throw DomainError("compose: discriminants differ");
  Form f1 = f, f2 = g;
  if (f1.a > f2.a) std::swap(f1, f2);
  const std::int64_t s = (f1.b + f2.b) / 2;
  const std::int64_t n = f2.b - s;
  std::int64_t y1, d;
  if (f2.a % f1.a == 0) {
    y1 = 0;
    d = f1.a;
  } else {
    std::int64_t u, v;
    d = xgcd(f2.a, f1.a, u, v);
    y1 = u;
  }
  std::int64_t x2, y2, d1;
  if (s % d == 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    std::int64_t u, v;
    d1 = xgcd(s, d, u, v);
    x2 = u;
    y2 = -v;
  }
  const std::int64_t v1 = f1.a / d1, v2 = f2.a / d1;
  const std::int64_t r = pos_mod(pos_mod(y1 * y2 % v1 * n, v1) - x2 % v1 * (f2.c % v1), v1);
  Form out;
  out.b = f2.b + 2 * v2 * r;
  out.a = v1 * v2;
  out.c = (f2.c * d1 + r * (f2.b + v2 * r)) / v1;
  return reduce_form(out);
}

Form inverse(const Form& f) { return reduce_form(Form{f.a, -f.b, f.c}); }

Form principal_form(std::int64_t disc) {
  std::int64_t b = ((disc % 4) + 4) % 4 == 0 ? 0 : 1;
  return Form{1, b, (b - disc) / 4};
}

std::size_t ClassGroupData::index_of(const Form& f) const {
  auto it = std::find(forms.begin(), forms.end(), f);
  if (it == forms.end()) throw DomainError("class group: form " + f.to_string() + " is not reduced for this D");
  return static_cast<std::size_t>(it - forms.begin());
}

std::vector<std::vector<std::size_t>> ClassGroupData::table() const {
  std::vector<std::vector<std::size_t>> t(h, std::vector<std::size_t>(h));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) t[i][j] = index_of(compose(forms[i], forms[j]));
  return t;
}

ClassGroupData class_group(std::int64_t disc) {
  if (disc >= 0) throw DomainError("class_group: discriminant must be negative");
  if (!is_fundamental_discriminant(disc))
    throw DomainError("class_group: " + std::to_string(disc) + " is not a fundamental discriminant");
  ClassGroupData cg;
  cg.disc = disc;
  const std::int64_t bound = isqrt(-disc / 3);
  for (std::int64_t a = 1; a <= bound; ++a)
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (pos_mod(b - disc, 2) != 0) continue;
      std::int64_t num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      Form f{a, b, num / (4 * a)};
      if (f.is_reduced() && std::gcd(std::gcd(f.a, f.b), f.c) == 1) cg.forms.push_back(f);
    }
  std::sort(cg.forms.begin(), cg.forms.end());
  cg.h = cg.forms.size();

  const auto tab = cg.table();
  IntMatrix rel(cg.h * cg.h + 1, cg.h);
  for (std::size_t i = 0; i < cg.h; ++i)
    for (std::size_t j = 0; j < cg.h; ++j) {
      std::size_t r = i * cg.h + j;
      rel(r, i) += 1;
      rel(r, j) += 1;
      rel(r, tab[i][j]) -= 1;
    }
  rel(cg.h * cg.h, cg.index_of(principal_form(disc))) = 1;
  cg.structure = AbelianGroupInvariants::cokernel_of_rows(rel);
  return cg;
}

// ---------------------------------------------------------------------------
// Units of real quadratic fields

UnitData fundamental_unit(std::int64_t disc) {
  if (disc <= 0 || !is_fundamental_discriminant(disc))
    throw DomainError("fundamental_unit: " + std::to_string(disc) + " is not a positive fundamental discriminant");
  const QuadField k = QuadField::from_discriminant(disc);
  const std::int64_t d = k.d;
  const std::int64_t sd = isqrt(d);
  // Expand θ = −ω̄ = (P + √d)/Q; a unit x + yω > 1 has x/y a convergent of θ.
  std::int64_t P = k.trace_omega == 1 ? -1 : 0;
  std::int64_t Q = k.trace_omega == 1 ? 2 : 1;
  BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (int step = 0; step < 100000; ++step) {
    if (Q <= 0) throw DomainError("fundamental_unit: lost reduced form in expansion");
    std::int64_t a = floor_div(P + sd, Q);
    BigInt pn = a * p_prev + p_prev2;
    BigInt qn = a * q_prev + q_prev2;
    p_prev2 = p_prev;
    p_prev = pn;
    q_prev2 = q_prev;
    q_prev = qn;
    if (qn >= 1 && pn >= 0) {
      BigInt nrm = k.norm(pn, qn);
      if (nrm == 1 || nrm == -1) {
        UnitData u;
        u.disc = disc;
        u.x = pn;
        u.y = qn;
        u.norm = nrm == 1 ? 1 : -1;
        u.regulator = std::log(pn.get_d() + qn.get_d() * k.omega_embeddings().first);
        return u;
      }
    }
    P = a * Q - P;
    Q = (d - P * P) / Q;
  }
  throw DomainError("fundamental_unit: continued fraction did not close");
}

UnitData norm_one_unit(std::int64_t disc) {
  UnitData e = fundamental_unit(disc);
  if (e.norm == 1) return e;
  const QuadField k = QuadField::from_discriminant(disc);
  UnitData sq = e;
  sq.x = e.x * e.x - k.norm_omega * e.y * e.y;
  sq.y = 2 * e.x * e.y + k.trace_omega * e.y * e.y;
  sq.norm = 1;
  sq.regulator = 2 * e.regulator;
  return sq;
}

std::uint64_t residue_ring_norm_count(const QuadField& field, std::int64_t p, int k, std::int64_t target,
                                      std::uint64_t budget) {
  if (!is_prime(p)) throw DomainError("residue_ring_norm_count: p not prime");
  if (k < 1) throw DomainError("residue_ring_norm_count: k must be positive");
  const std::int64_t m = ipow64(p, k);
  if (static_cast<double>(m) * static_cast<double>(m) > static_cast<double>(budget))
    throw BudgetExceeded("residue_ring_norm_count: p^{2k} exceeds enumeration budget");
  kernels::CongruenceSystem sys;
  sys.nvars = 2;
  sys.p = p;
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly nrm = x * x + field.trace_omega * (x * y) + field.norm_omega * (y * y);
  sys.equations.push_back(nrm - MPoly::constant(2, pos_mod(target, m)));
  sys.unit = nrm;
  return kernels::count_box_parallel(sys, m);
}

}  // namespace torustam
