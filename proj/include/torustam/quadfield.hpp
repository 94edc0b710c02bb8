#pragma once

#include "torustam/abelian_group.hpp"
#include "torustam/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace torustam {

/// Q(√d) with ring of integers Z[ω], ω = √d (d ≢ 1 mod 4) or (1+√d)/2.
struct QuadField {
  std::int64_t d = -1;
  std::int64_t disc = -4;
  std::int64_t trace_omega = 0;  ///< ω + ω̄
  std::int64_t norm_omega = 1;   ///< ω·ω̄

  static QuadField from_d(std::int64_t d);
  static QuadField from_discriminant(std::int64_t disc);

  bool is_imaginary() const { return d < 0; }

  /// N(x + yω) = x² + Tr(ω)·xy + N(ω)·y².
  BigInt norm(const BigInt& x, const BigInt& y) const;
  std::int64_t norm(std::int64_t x, std::int64_t y) const { return x * x + trace_omega * x * y + norm_omega * y * y; }

  /// Minimal polynomial of ω, low-to-high: ω² − Tr·ω + N.
  std::vector<std::int64_t> min_poly() const { return {norm_omega, -trace_omega, 1}; }
  /// The two real embeddings of ω (real fields only), larger first.
  std::pair<double, double> omega_embeddings() const;

  std::string to_string() const;
};

enum class SplitType { split, inert, ramified };

const char* to_string(SplitType t);

struct SplittingData {
  std::int64_t p = 2;
  SplitType type = SplitType::split;
  std::vector<int> ramification;  ///< e_i
  std::vector<int> residue_degree;  ///< f_i
};

/// Decomposition of p in the field, read off the Kronecker symbol (D|p).
SplittingData splitting_type(const QuadField& field, std::int64_t p);

/// Binary quadratic form ax² + bxy + cy².
struct Form {
  std::int64_t a = 1, b = 0, c = 1;

  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  bool is_reduced() const;
  std::string to_string() const;
  friend bool operator==(const Form&, const Form&) = default;
  friend auto operator<=>(const Form&, const Form&) = default;
};

/// Reduces a positive definite form to the unique reduced representative.
Form reduce_form(Form f);
/// Gauss composition (Dirichlet's united forms), reduced result.
Form compose(const Form& f, const Form& g);
Form inverse(const Form& f);
Form principal_form(std::int64_t disc);

struct ClassGroupData {
  std::int64_t disc = -4;
  std::vector<Form> forms;  ///< reduced forms, principal form first
  std::size_t h = 1;
  AbelianGroupInvariants structure;

  /// Index of a reduced form in `forms`.
  std::size_t index_of(const Form& f) const;
  /// Multiplication table in terms of `forms` indices.
  std::vector<std::vector<std::size_t>> table() const;
};

/// Class group of a negative fundamental discriminant.
ClassGroupData class_group(std::int64_t disc);

/// Fundamental unit ε = x + yω > 1 of a real quadratic field.
struct UnitData {
  std::int64_t disc = 5;
  BigInt x, y;
  int norm = -1;
  double regulator = 0.0;  ///< ln ε
};

UnitData fundamental_unit(std::int64_t disc);

/// Generator ε₁ > 1 of the norm-one units modulo ±1 (ε or ε²).
UnitData norm_one_unit(std::int64_t disc);

/// Number of (a, b) mod p^k with N(a + bω) ≡ target and a + bω a unit of O/p^k.
std::uint64_t residue_ring_norm_count(const QuadField& field, std::int64_t p, int k, std::int64_t target,
                                      std::uint64_t budget = 100'000'000ULL);

}  // namespace torustam
