#include "torustam/quadrature.hpp"

#include "torustam/error.hpp"

#include <cmath>
#include <vector>

namespace torustam {

namespace {

struct Panel {
  double a, b, fa, fm, fb, whole, tol;
  int depth;
};

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                                  std::size_t max_intervals) {
  if (!(tol > 0)) throw DomainError("adaptive_simpson: tolerance must be positive");
  if (a == b) return {};
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  QuadratureResult out;
  // explicit stack in left-to-right order keeps the summation order fixed
  std::vector<Panel> stack{{a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), tol, 0}};
  std::size_t seen = 0;
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    if (++seen > 2 * max_intervals)
      throw ToleranceUnreachable("adaptive_simpson: subdivision budget exhausted");
    const double mid = 0.5 * (p.a + p.b);
    const double lm = 0.5 * (p.a + mid), rm = 0.5 * (mid + p.b);
    const double flm = f(lm), frm = f(rm);
    const double left = (mid - p.a) / 6 * (p.fa + 4 * flm + p.fm);
    const double right = (p.b - mid) / 6 * (p.fm + 4 * frm + p.fb);
    const double err = std::fabs(left + right - p.whole) / 15;
    if ((err <= p.tol && p.depth >= 3) || p.depth > 50) {
      if (!std::isfinite(left + right)) throw ToleranceUnreachable("adaptive_simpson: integrand is not finite");
      out.value += left + right + (left + right - p.whole) / 15;
      out.abs_err += err;
      ++out.intervals;
      continue;
    }
    stack.push_back({mid, p.b, p.fm, frm, p.fb, right, p.tol / 2, p.depth + 1});
    stack.push_back({p.a, mid, p.fa, flm, p.fm, left, p.tol / 2, p.depth + 1});
  }
  if (out.abs_err > tol) throw ToleranceUnreachable("adaptive_simpson: error estimate exceeds tolerance");
  return out;
}

}  // namespace torustam
