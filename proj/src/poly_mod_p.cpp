#include "torustam/poly_mod_p.hpp"

#include "torustam/error.hpp"
#include "torustam/number_theory.hpp"

#include <algorithm>
#include <sstream>

namespace torustam {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

void trim(std::vector<std::int64_t>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

PolyModP x_poly(std::int64_t p) { return PolyModP(p, {0, 1}); }
PolyModP one_poly(std::int64_t p) { return PolyModP(p, {1}); }

PolyModP exact_div(const PolyModP& a, const PolyModP& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("poly exact division left a remainder");
  return q;
}

PolyModP pth_root(const PolyModP& f) {
  std::vector<std::int64_t> c;
  for (std::size_t i = 0; i < f.c.size(); i += static_cast<std::size_t>(f.p)) c.push_back(f.c[i]);
  return PolyModP(f.p, c);
}

void square_free(const PolyModP& f, int mult, std::vector<PolyFactor>& out) {
  const std::int64_t p = f.p;
  PolyModP c = poly_gcd(f, derivative(f));
  PolyModP w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    PolyModP y = poly_gcd(w, c);
    PolyModP z = exact_div(w, y);
    if (z.degree() > 0) out.push_back({z.monic(), i * mult});
    ++i;
    w = y;
    c = exact_div(c, y);
  }
  if (c.degree() > 0) square_free(pth_root(c).monic(), mult * static_cast<int>(p), out);
}

// Splits a square-free monic f into (product of all degree-k irreducibles, k).
std::vector<std::pair<PolyModP, int>> distinct_degree(PolyModP f) {
  const std::int64_t p = f.p;
  std::vector<std::pair<PolyModP, int>> out;
  PolyModP h = x_poly(p);
  for (int k = 1; 2 * k <= f.degree(); ++k) {
    h = powmod(h, static_cast<std::uint64_t>(p), f);
    PolyModP g = poly_gcd(f, h - x_poly(p));
    if (g.degree() > 0) {
      out.emplace_back(g, k);
      f = exact_div(f, g);
      h = divmod(h, f).second;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<PolyModP> split_linear(const PolyModP& g) {
  std::vector<PolyModP> out;
  for (std::int64_t r = 0; r < g.p && static_cast<int>(out.size()) < g.degree(); ++r)
    if (g.eval(r) == 0) out.emplace_back(g.p, std::vector<std::int64_t>{reduce(-r, g.p), 1});
  if (static_cast<int>(out.size()) != g.degree()) throw DomainError("split_linear: missing roots");
  return out;
}

// g monic of degree 4, product of two distinct irreducible quadratics.
std::vector<PolyModP> split_two_quadratics(const PolyModP& g) {
  const std::int64_t p = g.p;
  const std::int64_t f0 = g.c[0], f1 = g.c[1], f2 = g.c[2], f3 = g.c[3];
  auto attempt = [&](std::int64_t a, std::int64_t b) -> std::vector<PolyModP> {
    PolyModP q(p, {b, a, 1});
    auto [quo, rem] = divmod(g, q);
    if (rem.is_zero()) return {q, quo};
    return {};
  };
  for (std::int64_t a = 0; a < p; ++a) {
    std::int64_t c = reduce(f3 - a, p);
    std::int64_t s = reduce(f2 - a * c, p);
    if (a != c) {
      std::int64_t e = reduce((f1 - s * c % p) % p * mod_inverse(reduce(a - c, p), p), p);
      auto r = attempt(a, reduce(s - e, p));
      if (!r.empty()) return r;
    } else {
      for (std::int64_t z = 0; z < p; ++z)
        if (reduce(z * z - s * z + f0, p) == 0) {
          auto r = attempt(a, z);
          if (!r.empty()) return r;
        }
    }
  }
  throw DomainError("split_two_quadratics: no quadratic factor found");
}

}  // namespace

PolyModP::PolyModP(std::int64_t prime, std::vector<std::int64_t> coeffs) : p(prime), c(std::move(coeffs)) {
  for (auto& v : c) v = reduce(v, p);
  trim(c);
}

PolyModP PolyModP::monic() const {
  if (c.empty()) return *this;
  std::int64_t inv = mod_inverse(c.back(), p);
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] * inv % p;
  return PolyModP(p, out);
}

std::int64_t PolyModP::eval(std::int64_t x) const {
  std::int64_t acc = 0;
  x = reduce(x, p);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

std::string PolyModP::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t v = c[i];
    if (v == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || v != 1) os << v;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<std::int64_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return PolyModP(a.p, c);
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<std::int64_t> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return PolyModP(a.p, c);
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p, {});
  std::vector<std::int64_t> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % a.p;
  return PolyModP(a.p, c);
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw DomainError("poly divmod: division by zero");
  const std::int64_t p = a.p;
  std::vector<std::int64_t> r = a.c;
  if (a.degree() < b.degree()) return {PolyModP(p, {}), a};
  std::vector<std::int64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  std::int64_t inv = mod_inverse(b.lead(), p);
  for (int i = a.degree(); i >= b.degree(); --i) {
    std::int64_t coef = r[i] * inv % p;
    if (coef == 0) continue;
    q[i - b.degree()] = coef;
    for (int j = 0; j <= b.degree(); ++j)
      r[i - b.degree() + j] = reduce(r[i - b.degree() + j] - coef * b.c[j], p);
  }
  return {PolyModP(p, q), PolyModP(p, r)};
}

PolyModP poly_gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    PolyModP r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP derivative(const PolyModP& f) {
  std::vector<std::int64_t> c;
  for (std::size_t i = 1; i < f.c.size(); ++i) c.push_back(static_cast<std::int64_t>(i) % f.p * f.c[i] % f.p);
  return PolyModP(f.p, c);
}

PolyModP powmod(const PolyModP& base, std::uint64_t e, const PolyModP& m) {
  PolyModP result = divmod(one_poly(base.p), m).second;
  PolyModP b = divmod(base, m).second;
  while (e) {
    if (e & 1U) result = divmod(result * b, m).second;
    b = divmod(b * b, m).second;
    e >>= 1U;
  }
  return result;
}

std::vector<PolyFactor> factor_poly_mod_p(const std::vector<std::int64_t>& f, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("factor_poly_mod_p: modulus " + std::to_string(p) + " is not prime");
  PolyModP poly(p, f);
  if (poly.is_zero()) throw DomainError("factor_poly_mod_p: polynomial vanishes mod p");
  std::vector<PolyFactor> out;
  if (poly.degree() == 0) return out;

  std::vector<PolyFactor> sqf;
  square_free(poly.monic(), 1, sqf);
  for (const auto& part : sqf) {
    for (const auto& [g, k] : distinct_degree(part.factor)) {
      std::vector<PolyModP> pieces;
      if (g.degree() == k) {
        pieces = {g};
      } else if (k == 1) {
        pieces = split_linear(g);
      } else if (k == 2 && g.degree() == 4) {
        pieces = split_two_quadratics(g);
      } else {
        throw Unsupported("factor_poly_mod_p: equal-degree part of degree " + std::to_string(g.degree()) +
                          " with factors of degree " + std::to_string(k));
      }
      for (auto& piece : pieces) out.push_back({piece.monic(), part.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return std::lexicographical_compare(a.factor.c.rbegin(), a.factor.c.rend(), b.factor.c.rbegin(),
                                        b.factor.c.rend());
  });
  return out;
}

}  // namespace torustam
