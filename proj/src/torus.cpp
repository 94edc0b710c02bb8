#include "torustam/torus.hpp"

#include "torustam/error.hpp"
#include "torustam/normal_form.hpp"
#include "torustam/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace torustam {

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::quadratic(std::int64_t d) {
  QuadField::from_d(d);
  return FieldSpec{{d}};
}

FieldSpec FieldSpec::biquadratic(std::int64_t d1, std::int64_t d2) {
  QuadField::from_d(d1);
  QuadField::from_d(d2);
  if (d1 == d2) throw DomainError("biquadratic field needs two distinct quadratic subfields");
  return FieldSpec{{d1, d2}};
}

std::vector<QuadField> FieldSpec::subfields() const {
  if (is_quadratic()) return {QuadField::from_d(ds[0])};
  const std::int64_t g = std::gcd(ds[0], ds[1]);
  const std::int64_t d3 = (ds[0] / g) * (ds[1] / g);
  return {QuadField::from_d(ds[0]), QuadField::from_d(ds[1]), QuadField::from_d(d3)};
}

bool FieldSpec::moves_subfield(int g, std::size_t j) const {
  if (j < ds.size()) return (g >> j) & 1;
  return ((g & 1) ^ ((g >> 1) & 1)) != 0;
}

std::shared_ptr<const FiniteGroup> FieldSpec::galois_group() const {
  return std::make_shared<const FiniteGroup>(FiniteGroup::elementary_abelian_2(static_cast<int>(ds.size())));
}

std::string FieldSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + std::to_string(ds[i]);
  return s;
}

const char* family_tag(Family f) {
  switch (f) {
    case Family::res_scalars: return "res";
    case Family::norm_one: return "norm1";
    case Family::quotient_by_gm: return "quot";
  }
  return "?";
}

Family parse_family(const std::string& tag) {
  if (tag == "res" || tag == "res-scalars") return Family::res_scalars;
  if (tag == "norm1" || tag == "norm-one") return Family::norm_one;
  if (tag == "quot" || tag == "quotient-by-gm") return Family::quotient_by_gm;
  throw DomainError("unknown torus family '" + tag + "'");
}

// ---------------------------------------------------------------------------
// AffineModel

bool AffineModel::valid_at(std::int64_t p) const {
  return std::find(non_maximal_primes.begin(), non_maximal_primes.end(), p) == non_maximal_primes.end();
}

bool AffineModel::smooth_at_base_point() const {
  if (equations.empty()) return unit.terms.empty() || unit.eval(base_point) != 0;
  IntMatrix jac(equations.size(), nvars);
  for (std::size_t i = 0; i < equations.size(); ++i)
    for (int j = 0; j < nvars; ++j) jac(i, j) = static_cast<long>(equations[i].partial(j).eval(base_point));
  return matrix_rank(jac) == equations.size();
}

namespace {

MPoly quadratic_norm_form(const QuadField& k) {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  return x * x + k.trace_omega * (x * y) + k.norm_omega * (y * y);
}

// N_{L/Q}(a + b√d1 + c√d2 + e√d1√d2) in the order Z[√d1, √d2].
MPoly biquadratic_norm_form(std::int64_t d1, std::int64_t d2) {
  MPoly a = MPoly::variable(4, 0), b = MPoly::variable(4, 1), c = MPoly::variable(4, 2), e = MPoly::variable(4, 3);
  // α = (a + b√d1) + (c + e√d1)√d2; N_{L/K1}(α) = A + B√d1
  MPoly A = a * a + d1 * (b * b) - d2 * (c * c) - (d1 * d2) * (e * e);
  MPoly B = 2 * (a * b) - (2 * d2) * (c * e);
  return A * A - d1 * (B * B);
}

AffineModel make_model(Family family, const FieldSpec& field) {
  AffineModel m;
  if (field.is_quadratic()) {
    const QuadField k = QuadField::from_d(field.ds[0]);
    MPoly nrm = quadratic_norm_form(k);
    m.nvars = 2;
    m.base_point = {1, 0};
    if (family == Family::res_scalars) {
      m.unit = nrm;
      m.dimension = 2;
      m.description = "units of Z[w]: N(x + y*w) invertible";
    } else {
      m.equations = {nrm - MPoly::constant(2, 1)};
      m.dimension = 1;
      m.gauge_var = 1;
      m.description = "norm form " + m.equations[0].to_string() + " = 0, gauge dx/(dF/dy)";
      if (family == Family::quotient_by_gm) m.description += " (via t -> t/sigma(t))";
    }
    return m;
  }
  const std::int64_t d1 = field.ds[0], d2 = field.ds[1];
  MPoly nrm = biquadratic_norm_form(d1, d2);
  m.nvars = 4;
  m.base_point = {1, 0, 0, 0};
  m.non_maximal_primes.push_back(2);
  for (const auto& [p, e] : factor_integer(std::gcd(d1, d2))) m.non_maximal_primes.push_back(p);
  if (family == Family::res_scalars) {
    m.unit = nrm;
    m.dimension = 4;
    m.description = "units of Z[sqrt(d1), sqrt(d2)]";
  } else {
    m.equations = {nrm - MPoly::constant(4, 1)};
    m.dimension = 3;
    m.gauge_var = 3;
    m.description = "biquadratic norm form = 1 in Z[sqrt(d1), sqrt(d2)]";
  }
  return m;
}

}  // namespace

std::string TorusSpec::to_string() const { return std::string(family_tag(family)) + ":" + field.to_string(); }

TorusSpec build_torus(Family family, const FieldSpec& field) {
  auto g = field.galois_group();
  TorusSpec t;
  t.family = family;
  t.field = field;
  switch (family) {
    case Family::res_scalars: t.characters = GaloisLattice::regular(g); break;
    case Family::norm_one: t.characters = GaloisLattice::regular_mod_norm(g); break;
    case Family::quotient_by_gm: t.characters = GaloisLattice::augmentation_kernel(g); break;
  }
  t.characters.validate();
  t.cocharacters = t.characters.dual();
  t.cocharacters.validate();
  t.dimension = static_cast<int>(t.characters.rank);
  if (!(field.is_quadratic() == false && family == Family::quotient_by_gm)) t.model = make_model(family, field);
  return t;
}

TorusSpec parse_torus(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("torus spec '" + spec + "' must look like family:d or family:d1,d2");
  Family fam = parse_family(spec.substr(0, colon));
  std::vector<std::int64_t> ds;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      ds.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("torus spec '" + spec + "': '" + item + "' is not an integer");
    }
  }
  if (ds.size() == 1) return build_torus(fam, FieldSpec::quadratic(ds[0]));
  if (ds.size() == 2) return build_torus(fam, FieldSpec::biquadratic(ds[0], ds[1]));
  throw DomainError("torus spec '" + spec + "': expected one or two field integers");
}

std::size_t q_rank(const TorusSpec& t) { return t.characters.invariant_rank(); }

// ---------------------------------------------------------------------------
// Primes

PrimeDecomposition decompose_prime(const FieldSpec& field, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("decompose_prime: " + std::to_string(p) + " is not prime");
  const auto subs = field.subfields();
  std::vector<int> chi;
  for (const auto& k : subs) chi.push_back(kronecker_symbol(k.disc, p));
  PrimeDecomposition pd;
  pd.p = p;
  const int n = field.degree();
  for (int g = 0; g < n; ++g) {
    bool in_inertia = true, in_decomp = true;
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (!field.moves_subfield(g, j)) continue;
      if (chi[j] != 0) in_inertia = false;
      if (chi[j] == 1) in_decomp = false;
    }
    if (in_inertia) pd.inertia_group.push_back(g);
    if (in_decomp) pd.decomposition_group.push_back(g);
  }
  pd.frobenius = 0;
  for (int g : pd.decomposition_group)
    if (std::find(pd.inertia_group.begin(), pd.inertia_group.end(), g) == pd.inertia_group.end()) {
      pd.frobenius = g;
      break;
    }
  return pd;
}

std::vector<int> infinite_decomposition_group(const FieldSpec& field) {
  int conj = 0;
  for (std::size_t i = 0; i < field.ds.size(); ++i)
    if (field.ds[i] < 0) conj |= 1 << i;
  if (conj == 0) return {0};
  return {0, conj};
}

bool is_ramified(const TorusSpec& t, std::int64_t p) {
  for (const auto& k : t.field.subfields())
    if (k.disc % p == 0) return true;
  return false;
}

bool is_good_prime(const TorusSpec& t, std::int64_t p) { return p > 2 && is_prime(p) && !is_ramified(t, p); }

std::vector<std::int64_t> bad_primes(const TorusSpec& t) {
  std::set<std::int64_t> s{2};
  for (const auto& k : t.field.subfields())
    for (const auto& [p, e] : factor_integer(k.disc)) s.insert(p);
  return {s.begin(), s.end()};
}

IntMatrix frobenius_matrix(const TorusSpec& t, std::int64_t p) {
  if (!is_prime(p)) throw DomainError("frobenius_matrix: " + std::to_string(p) + " is not prime");
  PrimeDecomposition pd = decompose_prime(t.field, p);
  if (pd.ramified()) throw DomainError("frobenius_matrix: " + std::to_string(p) + " is ramified");
  return t.cocharacters.action[pd.frobenius];
}

namespace {

void require_good(const TorusSpec& t, std::int64_t p, const char* who) {
  if (!is_prime(p)) throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not prime");
  if (is_ramified(t, p)) throw DomainError(std::string(who) + ": " + std::to_string(p) + " is ramified");
  if (!is_good_prime(t, p)) throw DomainError(std::string(who) + ": " + std::to_string(p) + " is not a good prime");
}

BigRat det_one_minus_over_p(const IntMatrix& f, std::int64_t p) {
  // det(1 − F/p) = p^{-d}·det(p − F) = p^{-d}·charpoly_F(p)
  const auto c = characteristic_polynomial(f);
  BigInt value = 0, pk = 1;
  for (const auto& coeff : c) {
    value += coeff * pk;
    pk *= p;
  }
  return BigRat(value, ipow(BigInt(p), static_cast<unsigned long>(f.rows())));
}

}  // namespace

BigRat euler_factor_at_one(const TorusSpec& t, std::int64_t p) {
  require_good(t, p, "euler_factor_at_one");
  const auto g = t.cocharacters.group;
  const auto pd = decompose_prime(t.field, p);
  return det_one_minus_over_p(t.cocharacters.action[g->inverse(pd.frobenius)], p);
}

BigInt point_count_Fp(const TorusSpec& t, std::int64_t p) {
  require_good(t, p, "point_count_Fp");
  const auto g = t.cocharacters.group;
  const auto pd = decompose_prime(t.field, p);
  const IntMatrix& f = t.cocharacters.action[g->inverse(pd.frobenius)];
  IntMatrix m = IntMatrix::identity(f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) m(i, i) = p;
  return determinant(m - f);
}

BigRat local_euler_factor(const TorusSpec& t, std::int64_t p) {
  const auto pd = decompose_prime(t.field, p);
  const auto& lat = t.cocharacters;
  const auto g = lat.group;
  const IntMatrix& f = lat.action[g->inverse(pd.frobenius)];
  if (!pd.ramified()) return det_one_minus_over_p(f, p);
  SnfResult s = smith_normal_form(lat.stacked_differences(pd.inertia_group));
  if (s.rank == lat.rank) return BigRat(1L);
  IntMatrix basis = s.v.cols_range(s.rank, lat.rank);
  IntMatrix coords = s.v_inv.rows_range(s.rank, lat.rank);
  return det_one_minus_over_p(coords * f * basis, p);
}

}  // namespace torustam
