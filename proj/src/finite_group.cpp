#include "torustam/finite_group.hpp"

#include "torustam/abelian_group.hpp"
#include "torustam/error.hpp"
#include "torustam/normal_form.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace torustam {

// ---------------------------------------------------------------------------
// AbelianGroupInvariants

std::optional<BigInt> AbelianGroupInvariants::order() const {
  if (free_rank) return std::nullopt;
  BigInt o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::string AbelianGroupInvariants::to_string() const {
  std::string s;
  if (free_rank) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& d : torsion) s += (s.empty() ? "" : " ⊕ ") + std::string("Z/") + d.get_str();
  return s.empty() ? "0" : s;
}

AbelianGroupInvariants AbelianGroupInvariants::from_diagonal(const std::vector<BigInt>& d, std::size_t ambient_rank) {
  AbelianGroupInvariants g;
  std::size_t nonzero = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) g.torsion.push_back(x);
  }
  g.free_rank = ambient_rank - nonzero;
  return g;
}

AbelianGroupInvariants AbelianGroupInvariants::cokernel_of_rows(const IntMatrix& relations) {
  if (relations.rows() == 0) {
    AbelianGroupInvariants g;
    g.free_rank = relations.cols();
    return g;
  }
  return from_diagonal(smith_normal_form(relations, false).d, relations.cols());
}

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw DomainError("FiniteGroup: empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw DomainError("FiniteGroup: table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw DomainError("FiniteGroup: entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("FiniteGroup: no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw DomainError("FiniteGroup: not associative");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw DomainError("FiniteGroup: element without inverse");
  if (labels_.empty())
    for (int a = 0; a < n; ++a) labels_.push_back("g" + std::to_string(a));
  if (static_cast<int>(labels_.size()) != n) throw DomainError("FiniteGroup: label count mismatch");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(t);
}

FiniteGroup FiniteGroup::elementary_abelian_2(int k) {
  const int n = 1 << k;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = a ^ b;
    std::string l = "(";
    for (int i = 0; i < k; ++i) l += (i ? "," : "") + std::to_string((a >> i) & 1);
    labels.push_back(l + ")");
  }
  return FiniteGroup(t, labels);
}

FiniteGroup FiniteGroup::symmetric3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  const int n = 6;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(t);
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  if (elems.empty()) return false;
  std::set<int> s(elems.begin(), elems.end());
  if (static_cast<std::size_t>(s.size()) != elems.size()) return false;
  for (int a : elems)
    if (a < 0 || a >= order()) return false;
  for (int a : elems)
    for (int b : elems)
      if (!s.count(mul(a, b))) return false;
  return true;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
  std::set<int> s{identity_};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int g : gens)
        if (s.insert(mul(a, g)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_cyclic_subgroup(const std::vector<int>& elems) const {
  for (int a : elems)
    if (element_order(a) == static_cast<int>(elems.size())) return true;
  return false;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elems) const {
  if (!is_subgroup(elems)) throw DomainError("FiniteGroup::subgroup: not closed under multiplication");
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(labels_[elems[i]]);
    for (int j = 0; j < n; ++j)
      t[i][j] = static_cast<int>(std::find(elems.begin(), elems.end(), mul(elems[i], elems[j])) - elems.begin());
  }
  return FiniteGroup(t, labels);
}

// ---------------------------------------------------------------------------
// GaloisLattice

void GaloisLattice::validate() const {
  if (!group) throw DomainError("GaloisLattice: no group");
  const int n = group->order();
  if (static_cast<int>(action.size()) != n) throw DomainError("GaloisLattice: need one matrix per element");
  for (const auto& a : action)
    if (a.rows() != rank || a.cols() != rank) throw DomainError("GaloisLattice: matrix shape mismatch");
  if (!(action[group->identity()] == IntMatrix::identity(rank)))
    throw DomainError("GaloisLattice: identity does not act trivially");
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!(action[g] * action[h] == action[group->mul(g, h)]))
        throw DomainError("GaloisLattice: action is not a homomorphism");
  for (const auto& a : action) {
    BigInt det = determinant(a);
    if (det != 1 && det != -1) throw DomainError("GaloisLattice: action matrix not invertible over Z");
  }
}

GaloisLattice GaloisLattice::dual() const {
  GaloisLattice d{group, rank, {}};
  for (int g = 0; g < group->order(); ++g) d.action.push_back(action[group->inverse(g)].transpose());
  return d;
}

GaloisLattice GaloisLattice::restrict_to(const std::vector<int>& elems) const {
  auto sub = std::make_shared<const FiniteGroup>(group->subgroup(elems));
  GaloisLattice r{sub, rank, {}};
  for (int g : elems) r.action.push_back(action[g]);
  return r;
}

IntMatrix GaloisLattice::stacked_differences(const std::vector<int>& elems) const {
  std::vector<int> gs = elems;
  if (gs.empty())
    for (int g = 0; g < group->order(); ++g) gs.push_back(g);
  std::vector<IntMatrix> blocks;
  for (int g : gs) blocks.push_back(action[g] - IntMatrix::identity(rank));
  return IntMatrix::vstack(blocks);
}

std::size_t GaloisLattice::invariant_rank() const {
  if (rank == 0) return 0;
  return rank - matrix_rank(stacked_differences());
}

GaloisLattice GaloisLattice::trivial(std::shared_ptr<const FiniteGroup> g, std::size_t rank) {
  GaloisLattice l{g, rank, {}};
  for (int i = 0; i < g->order(); ++i) l.action.push_back(IntMatrix::identity(rank));
  return l;
}

GaloisLattice GaloisLattice::regular(std::shared_ptr<const FiniteGroup> g) {
  const int n = g->order();
  GaloisLattice l{g, static_cast<std::size_t>(n), {}};
  for (int a = 0; a < n; ++a) {
    IntMatrix m(n, n);
    for (int h = 0; h < n; ++h) m(g->mul(a, h), h) = 1;
    l.action.push_back(m);
  }
  return l;
}

GaloisLattice GaloisLattice::regular_mod_norm(std::shared_ptr<const FiniteGroup> g) {
  GaloisLattice reg = regular(g);
  const std::size_t n = reg.rank;
  IntMatrix norm(n, 1);
  for (std::size_t i = 0; i < n; ++i) norm(i, 0) = 1;
  // u·N = e_1 (up to sign), so coordinates 1..n-1 of u·x present the quotient.
  SnfResult s = smith_normal_form(norm);
  GaloisLattice q{g, n - 1, {}};
  for (const auto& a : reg.action) {
    IntMatrix conj = s.u * a * s.u_inv;
    q.action.push_back(conj.rows_range(1, n).cols_range(1, n));
  }
  return q;
}

GaloisLattice GaloisLattice::augmentation_kernel(std::shared_ptr<const FiniteGroup> g) {
  GaloisLattice reg = regular(g);
  const std::size_t n = reg.rank;
  IntMatrix aug(1, n);
  for (std::size_t i = 0; i < n; ++i) aug(0, i) = 1;
  SnfResult s = smith_normal_form(aug);
  IntMatrix basis = s.v.cols_range(s.rank, n);
  IntMatrix coords = s.v_inv.rows_range(s.rank, n);
  GaloisLattice k{g, n - 1, {}};
  for (const auto& a : reg.action) k.action.push_back(coords * a * basis);
  return k;
}

}  // namespace torustam
