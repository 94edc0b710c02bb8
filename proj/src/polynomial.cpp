#include "torustam/polynomial.hpp"

#include "torustam/error.hpp"

#include <algorithm>
#include <sstream>

namespace torustam {

MPoly MPoly::constant(int nvars, std::int64_t c) {
  MPoly p(nvars);
  if (c != 0) p.terms.push_back({c, std::vector<int>(nvars, 0)});
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  MPoly p(nvars);
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.terms.push_back({1, e});
  return p;
}

void MPoly::normalize() {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exps == t.exps)
      merged.back().coef += t.coef;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
  terms = std::move(merged);
}

int MPoly::total_degree() const {
  int deg = 0;
  for (const auto& t : terms) {
    int s = 0;
    for (int e : t.exps) s += e;
    deg = std::max(deg, s);
  }
  return deg;
}

MPoly MPoly::partial(int index) const {
  MPoly out(nvars);
  for (const auto& t : terms) {
    if (t.exps[index] == 0) continue;
    Term d = t;
    d.coef *= t.exps[index];
    d.exps[index] -= 1;
    out.terms.push_back(d);
  }
  out.normalize();
  return out;
}

std::int64_t MPoly::eval(const std::vector<std::int64_t>& x) const {
  if (static_cast<int>(x.size()) != nvars) throw DomainError("MPoly::eval: arity mismatch");
  std::int64_t acc = 0;
  for (const auto& t : terms) {
    std::int64_t v = t.coef;
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < t.exps[i]; ++e) v *= x[i];
    acc += v;
  }
  return acc;
}

std::int64_t MPoly::eval_mod(const std::int64_t* x, std::int64_t m) const {
  std::int64_t acc = 0;
  for (const auto& t : terms) {
    std::int64_t v = t.coef % m;
    if (v < 0) v += m;
    for (int i = 0; i < nvars; ++i)
      for (int e = 0; e < t.exps[i]; ++e) v = v * x[i] % m;
    acc += v;
    if (acc >= m) acc -= m;
  }
  return acc;
}

std::string MPoly::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& t = terms[k];
    if (k) os << (t.coef < 0 ? " - " : " + ");
    else if (t.coef < 0) os << "-";
    std::int64_t c = t.coef < 0 ? -t.coef : t.coef;
    bool has_var = std::any_of(t.exps.begin(), t.exps.end(), [](int e) { return e > 0; });
    if (c != 1 || !has_var) os << c;
    for (int i = 0; i < nvars; ++i) {
      if (t.exps[i] == 0) continue;
      os << "x" << i;
      if (t.exps[i] > 1) os << "^" << t.exps[i];
    }
  }
  return os.str();
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars, b.nvars));
  r.terms = a.terms;
  r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
  r.normalize();
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-1 * b); }

MPoly operator*(std::int64_t s, const MPoly& a) {
  MPoly r = a;
  for (auto& t : r.terms) t.coef *= s;
  r.normalize();
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars != b.nvars) throw DomainError("MPoly product: arity mismatch");
  MPoly r(a.nvars);
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) {
      MPoly::Term u{s.coef * t.coef, s.exps};
      for (int i = 0; i < a.nvars; ++i) u.exps[i] += t.exps[i];
      r.terms.push_back(u);
    }
  r.normalize();
  return r;
}

}  // namespace torustam
