#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quasimap/rational.hpp"

namespace quasimap {

/// Homogeneous linear form c_0 z_0 + ... + c_{n-1} z_{n-1}. There is no
/// constant slot: the calculus built on top is homogeneous throughout.
class LinForm {
 public:
  explicit LinForm(std::size_t nvars = 0) : coeffs_(nvars) {}
  explicit LinForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {}

  static LinForm variable(std::size_t nvars, std::size_t j, const Rat& c = 1);
  /// Builds from integer coefficients, e.g. {-1, 2, -1} for -z0 + 2z1 - z2.
  static LinForm from_ints(std::initializer_list<long> coeffs);

  std::size_t nvars() const { return coeffs_.size(); }
  const Rat& coeff(std::size_t j) const { return coeffs_.at(j); }
  void set_coeff(std::size_t j, const Rat& c) { coeffs_.at(j) = c; }
  std::span<const Rat> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool involves(std::size_t j) const { return coeffs_.at(j) != 0; }
  /// Indices with a nonzero coefficient.
  std::vector<std::size_t> support() const;

  Rat evaluate(std::span<const Rat> point) const;

  /// Replaces z_var by `point`; `point` must not involve z_var.
  LinForm subst(std::size_t var, const LinForm& point) const;

  /// Solves form == 0 for z_var, returning the point p with z_var = p.
  /// Throws std::invalid_argument when the form does not involve z_var.
  LinForm solve_for(std::size_t var) const;

  /// Splits *this into scalar * canon, where canon has coprime integer
  /// coefficients and its first nonzero coefficient is positive.
  /// Throws std::invalid_argument on the zero form.
  std::pair<Rat, LinForm> canonical() const;

  LinForm& operator+=(const LinForm& o);
  LinForm& operator-=(const LinForm& o);
  LinForm& operator*=(const Rat& s);

  friend bool operator==(const LinForm& a, const LinForm& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const LinForm& a, const LinForm& b) { return a.coeffs_ < b.coeffs_; }

 private:
  std::vector<Rat> coeffs_;
};

LinForm operator+(LinForm a, const LinForm& b);
LinForm operator-(LinForm a, const LinForm& b);
LinForm operator-(LinForm a);
LinForm operator*(const Rat& s, LinForm a);

std::string to_string(const LinForm& f, std::string_view var = "z");

}  // namespace quasimap
