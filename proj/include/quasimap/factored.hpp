#pragma once

#include <bitset>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quasimap/linear_form.hpp"
#include "quasimap/polynomial.hpp"
#include "quasimap/rational.hpp"

namespace quasimap {

inline constexpr std::size_t kMaxVars = 64;

/// Set of variable indices. In a TaggedFactor it lists the variables whose
/// contour encloses the zero of the factor.
using VarSet = std::bitset<kMaxVars>;

VarSet var_set(std::initializer_list<std::size_t> vars);

struct TaggedFactor {
  LinForm form;
  int multiplicity = 1;
  VarSet allowed;

  friend bool operator==(const TaggedFactor&, const TaggedFactor&) = default;
};

/// scalar * num / prod(form_i ^ multiplicity_i).
///
/// Denominator forms are stored canonically (coprime integer coefficients,
/// leading coefficient positive) and pairwise distinct; construction folds
/// the extracted scalars into `scalar`, merges proportional factors and unions
/// their tags. Tags are clipped to the variables a form actually involves.
/// The zero function is stored as scalar 0, num 0, empty denominator.
class FactoredRat {
 public:
  explicit FactoredRat(std::size_t nvars = 0);
  FactoredRat(Rat scalar, MPoly num, std::vector<TaggedFactor> den = {});

  static FactoredRat polynomial(MPoly num) { return FactoredRat(1, std::move(num)); }
  static FactoredRat constant(std::size_t nvars, const Rat& c);

  std::size_t nvars() const { return num_.nvars(); }
  const Rat& scalar() const { return scalar_; }
  const MPoly& num() const { return num_; }
  const std::vector<TaggedFactor>& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool involves(std::size_t var) const;
  /// Sum of denominator multiplicities.
  int den_degree() const;
  /// Value at a point; throws std::domain_error if a denominator form vanishes.
  Rat evaluate(std::span<const Rat> point) const;

  /// Multiplies by form^(-multiplicity).
  FactoredRat& divide_by(const LinForm& form, int multiplicity, VarSet allowed);
  FactoredRat& operator*=(const FactoredRat& o);
  FactoredRat& operator*=(const Rat& s);

  friend bool operator==(const FactoredRat&, const FactoredRat&) = default;

 private:
  void normalize();

  Rat scalar_;
  MPoly num_;
  std::vector<TaggedFactor> den_;
};

FactoredRat operator*(FactoredRat a, const FactoredRat& b);
FactoredRat operator*(const Rat& s, FactoredRat a);

/// Sum over a common denominator (the multiplicity-wise maximum). Tags of a
/// shared form are unioned.
FactoredRat operator+(const FactoredRat& a, const FactoredRat& b);

/// Exact partial derivative. The numerator is combined over
/// prod_{i involving var} f_i^(m_i + 1); factors free of var are untouched.
FactoredRat fr_derivative(const FactoredRat& f, std::size_t var);

/// Cancels every denominator factor that exactly divides the numerator.
/// Value-preserving and idempotent.
FactoredRat fr_reduce(const FactoredRat& f);

/// z_var := point in numerator and denominator; tags lose `var`.
/// Throws std::domain_error if a denominator form vanishes identically.
FactoredRat fr_subst(const FactoredRat& f, std::size_t var, const LinForm& point);

std::string to_string(const FactoredRat& f, std::string_view var = "z");

}  // namespace quasimap
