#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasimap/linear_form.hpp"
#include "quasimap/rational.hpp"

namespace quasimap {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<int>;

/// Sparse multivariate polynomial over Q in a fixed number of variables.
/// Terms with zero coefficient are never stored.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rat>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rat& c);
  static MPoly variable(std::size_t nvars, std::size_t j, const Rat& c = 1);
  static MPoly monomial(std::size_t nvars, const Monomial& exps, const Rat& c = 1);
  static MPoly from_linear(const LinForm& f);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rat constant_term() const;
  Rat coeff(const Monomial& exps) const;

  void add_term(const Monomial& exps, const Rat& c);

  /// Common total degree of all terms; nullopt if the degrees are mixed or
  /// the polynomial is zero.
  std::optional<int> homogeneous_degree() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(std::size_t var) const;
  bool involves(std::size_t var) const { return degree_in(var) > 0; }
  MPoly homogeneous_component(int degree) const;

  Rat evaluate(std::span<const Rat> point) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& s);

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

 private:
  void check_arity(const MPoly& o) const;

  std::size_t nvars_;
  Terms terms_;
};

MPoly operator+(MPoly a, const MPoly& b);
MPoly operator-(MPoly a, const MPoly& b);
MPoly operator-(MPoly a);
MPoly operator*(const MPoly& a, const MPoly& b);
MPoly operator*(const Rat& s, MPoly a);
MPoly pow(const MPoly& p, unsigned e);

enum class PolyOp { add, sub, mul };
MPoly mpoly_arith(const MPoly& a, const MPoly& b, PolyOp op);

/// p with z_var replaced by `point` (which must not involve z_var).
MPoly subst_linear(const MPoly& p, std::size_t var, const LinForm& point);

/// Coefficients N_0..N_order of p(z_var = point + t) as a polynomial in t.
std::vector<MPoly> taylor_coefficients(const MPoly& p, std::size_t var, const LinForm& point, int order);

MPoly derivative(const MPoly& p, std::size_t var);

/// Exact quotient p / form when the linear form divides p, nullopt otherwise.
std::optional<MPoly> divide_linear(const MPoly& p, const LinForm& form);

/// Renders e.g. "2*z0^2 + 5*z0*z1 + 2*z1^2"; `var` is the variable stem.
std::string to_string(const MPoly& p, std::string_view var = "z");

}  // namespace quasimap
