// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include "torustam/cohomology.hpp"
#include "torustam/global_assembly.hpp"
#include "torustam/local_measure.hpp"
#include "torustam/lvalue.hpp"
#include "torustam/quadfield.hpp"
#include "torustam/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace torustam;

namespace {

const std::vector<std::int64_t> kTwentyFields{-1, -2, -3, -5, -6, -7, -10, -11, -15, -23,
                                              2,  3,  5,  6,  7,  10, 13,  17,  21,  29};
const std::vector<std::int64_t> kSuite{-1, -3, -5, -7, -23, 5, 13};
const Family kFamilies[] = {Family::res_scalars, Family::norm_one, Family::quotient_by_gm};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << "failed: ";
      else detail << "; ";
      detail << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double max_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > max_seconds) o.require(false, "runtime " + std::to_string(secs) + " s over the limit");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  [" << std::fixed
            << std::setprecision(2) << secs << " s]";
  const std::string d = o.detail.str();
  if (!d.empty()) std::cout << "  " << d;
  std::cout << std::endl;
}

TorusSpec quad(Family f, std::int64_t d) { return build_torus(f, FieldSpec::quadratic(d)); }

}  // namespace

int main() {
  criterion(1, "Euler factor identity, 20 fields x 3 families, p <= 97, brute force p <= 13", 10, [](Outcome& o) {
    std::size_t rows = 0;
    for (std::int64_t d : kTwentyFields)
      for (Family f : kFamilies) {
        const TorusSpec t = quad(f, d);
        const VerificationReport r = verify_euler(t, 97, 13);
        rows += r.rows.size();
        o.require(r.verdict == Verdict::pass, t.to_string() + " " + r.cause);
      }
    o.detail << rows << " exact rows";
  });

  criterion(2, "density and smooth lifting at good p <= 13, k <= 3", 60, [](Outcome& o) {
    std::vector<TorusSpec> tori;
    for (std::int64_t d : kSuite)
      for (Family f : kFamilies) tori.push_back(quad(f, d));
    tori.push_back(parse_torus("norm1:13,17"));
    tori.push_back(parse_torus("res:13,17"));
    for (const TorusSpec& t : tori) {
      const VerificationReport dens = verify_density(t, 13, 6);
      const VerificationReport lift = verify_lifting(t, 13, 3);
      o.require(dens.verdict == Verdict::pass, t.to_string() + " density " + dens.cause);
      o.require(lift.verdict == Verdict::pass, t.to_string() + " lifting " + lift.cause);
    }
    if (o.ok) o.detail << tori.size() << " tori; 4-variable models enumerated at p <= 3 only";
  });

  criterion(3, "Q(i) norm-one torus at p = 2 stabilizes at density 2", 1, [](Outcome& o) {
    const LocalDensity d = bad_prime_density(parse_torus("norm1:-1"), 2);
    o.require(d.trace.size() >= 4, "trace too short");
    if (d.trace.size() >= 4) {
      o.require(d.trace[2].k == 3 && d.trace[2].count == 16, "count mod 8");
      o.require(d.trace[3].k == 4 && d.trace[3].count == 32, "count mod 16");
    }
    o.require(d.value == BigRat(2), "density " + d.value.to_string());
    o.require(d.stabilized, "not stabilized");
    o.detail << "counts";
    for (const auto& row : d.trace) o.detail << " " << row.count;
  });

  criterion(4, "#H^1(G, X^*) equals the torsion dual of invariants", 10, [](Outcome& o) {
    std::vector<std::string> specs;
    for (std::int64_t d : kSuite) {
      specs.push_back("norm1:" + std::to_string(d));
      specs.push_back("quot:" + std::to_string(d));
    }
    for (const char* s : {"norm1:13,17", "quot:13,17", "norm1:-1,2", "quot:-1,2", "norm1:-1,-3"}) specs.push_back(s);
    for (const auto& s : specs) {
      const VerificationReport r = verify_globalinv(parse_torus(s));
      o.require(r.verdict == Verdict::pass, s + " " + r.cause);
    }
    o.detail << specs.size() << " lattices";
  });

  criterion(5, "flagship d = -1: tau^coh = 2 from its components", 10, [](Outcome& o) {
    const TorusSpec t = parse_torus("norm1:-1");
    const TauCoh tc = tau_coh(t, 1e-10);
    o.require(std::fabs(tc.value - 2) < 1e-6, "tau_coh " + std::to_string(tc.value));
    o.require(std::fabs(tc.l_s.value - M_PI / 4) < 1e-9, "L_S");
    o.require(tc.density_product == BigRat(2), "density at 2");
    o.require(std::fabs(tc.volume.value - M_PI / 4) < 1e-9, "volume");
    const CGamma c = c_gamma(t);
    o.require(c.value == 1 && c.stabilized, "c_gamma");
    o.require(ono_rhs(t) == BigRat(2), "Ono RHS " + ono_rhs(t).to_string());
    TncOptions opt;
    opt.tol = 1e-6;
    o.require(verify_tnc(t, opt).verdict == Verdict::pass, "verify_tnc");
    o.detail << "tau_coh = " << std::setprecision(12) << tc.value;
  });

  criterion(6, "TNC suite, |tau^Tam - #H^1/i(T)| < 1e-3", 300, [](Outcome& o) {
    double worst = 0;
    for (std::int64_t d : kSuite) {
      const TorusSpec t = quad(Family::norm_one, d);
      TncOptions opt;
      opt.tol = 1e-3;
      const VerificationReport r = verify_tnc(t, opt);
      o.require(r.verdict == Verdict::pass, t.to_string() + " " + r.cause);
      const double diff = std::fabs(tau_tam(t) - ono_rhs(t).to_double());
      worst = std::max(worst, diff);
      o.require(diff < 1e-3, t.to_string() + " difference " + std::to_string(diff));
    }
    o.detail << "largest difference " << std::scientific << std::setprecision(2) << worst;
  });

  criterion(7, "Ono constant: 1 over quadratic fields, 2 over Q(sqrt13, sqrt17)", 60, [](Outcome& o) {
    for (std::int64_t d : kTwentyFields) {
      const ShaResult s = sha_norm_one(quad(Family::norm_one, d));
      o.require(s.h3.is_trivial(), "H^3 nonzero for d = " + std::to_string(d));
      o.require(s.order == 1, "i(T) for d = " + std::to_string(d));
    }
    const ShaResult big = sha_norm_one(parse_torus("norm1:13,17"));
    o.require(big.order == 2, "i(T) = " + big.order.get_str());
    o.require(big.all_decomposition_groups_cyclic, "a decomposition group is not cyclic");
    const auto h3 = cohomology(GaloisLattice::trivial(FieldSpec::biquadratic(13, 17).galois_group(), 1), 3);
    o.require(h3.free_rank == 0 && h3.torsion == std::vector<BigInt>{2}, "H^3((Z/2)^2, Z) = " + h3.to_string());
    o.detail << big.places.size() << " places checked over Q(sqrt13, sqrt17)";
  });

  criterion(8, "Sha_BK = c_Gamma * i(T) with c_Gamma from its own oracle", 120, [](Outcome& o) {
    std::size_t n = 0;
    for (std::int64_t d : kSuite)
      for (Family f : kFamilies) {
        const TorusSpec t = quad(f, d);
        const VerificationReport r = verify_sha_bk(t);
        o.require(r.verdict == Verdict::pass, t.to_string() + " " + r.cause);
        ++n;
      }
    o.detail << n << " tori";
  });

  criterion(9, "L(1, chi_D) reproduces h(D) for D in {-4, -8, -20, -23, -47}", 10, [](Outcome& o) {
    for (std::int64_t D : {-4, -8, -20, -23, -47}) {
      // (w/2)·√|D|·L/π; the unit factor w/2 is 2 for D = −4 and 1 otherwise
      const double half_w = D == -4 ? 2 : (D == -3 ? 3 : 1);
      const double h = half_w * std::sqrt(static_cast<double>(-D)) * l_value(D).value / M_PI;
      const std::size_t forms = class_group(D).h;
      o.require(std::fabs(h - static_cast<double>(forms)) < 1e-6,
                "D = " + std::to_string(D) + ": " + std::to_string(h) + " vs " + std::to_string(forms));
      o.detail << "h(" << D << ")=" << forms << " ";
    }
  });

  std::cout << (failures == 0 ? "all criteria PASS" : std::to_string(failures) + " criteria FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
