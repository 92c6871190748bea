#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasimap/rational.hpp"

namespace quasimap {

/// Truncated power series c_0 + c_1 z + ... + c_N z^N over Scalar.
/// Binary operations truncate to the smaller order.
template <typename Scalar>
class Series {
 public:
  explicit Series(std::size_t order = 0) : coeffs_(order + 1, Scalar(0)) {}
  explicit Series(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(Scalar(0));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t n) const { return coeffs_.at(n); }
  Scalar& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Series truncated(std::size_t order) const {
    std::vector<Scalar> c(order + 1, Scalar(0));
    for (std::size_t n = 0; n <= std::min(order, this->order()); ++n) c[n] = coeffs_[n];
    return Series(std::move(c));
  }

  Series& operator+=(const Series& o) {
    *this = truncated(std::min(order(), o.order()));
    for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  Series& operator-=(const Series& o) {
    *this = truncated(std::min(order(), o.order()));
    for (std::size_t n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }
  Series& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Scalar& s, Series a) { return a *= s; }
  friend Series operator*(const Series& a, const Series& b) {
    const std::size_t order = std::min(a.order(), b.order());
    Series out(order);
    for (std::size_t i = 0; i <= order; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t k = 0; i + k <= order; ++k) out.coeffs_[i + k] += a.coeffs_[i] * b.coeffs_[k];
    }
    return out;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  /// Multiplicative inverse; the constant term must be nonzero.
  Series inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("Series::inverse: constant term is zero");
    Series out(order());
    const Scalar inv0 = Scalar(1) / coeffs_[0];
    out.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
      Scalar acc = 0;
      for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * out.coeffs_[n - k];
      out.coeffs_[n] = -acc * inv0;
    }
    return out;
  }

  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

  /// exp of a series without constant term, from n E_n = sum_k k S_k E_{n-k}.
  Series exp() const {
    if (coeffs_[0] != 0) throw std::domain_error("Series::exp: constant term must vanish");
    Series out(order());
    out.coeffs_[0] = 1;
    for (std::size_t n = 1; n <= order(); ++n) {
      Scalar acc = 0;
      for (std::size_t k = 1; k <= n; ++k) acc += Scalar(static_cast<long>(k)) * coeffs_[k] * out.coeffs_[n - k];
      out.coeffs_[n] = acc / Scalar(static_cast<long>(n));
    }
    return out;
  }

  /// Theta = z d/dz.
  Series theta() const {
    Series out = *this;
    for (std::size_t n = 0; n <= order(); ++n) out.coeffs_[n] *= Scalar(static_cast<long>(n));
    return out;
  }

  /// Multiplication by z^k, keeping the order.
  Series shifted(std::size_t k) const {
    Series out(order());
    for (std::size_t n = k; n <= order(); ++n) out.coeffs_[n] = coeffs_[n - k];
    return out;
  }

 private:
  std::vector<Scalar> coeffs_;
};

using SeriesQ = Series<Rat>;

/// p(z) log z + g(z).
struct LogSeries {
  SeriesQ p;
  SeriesQ g;

  LogSeries theta() const { return {p.theta(), p + g.theta()}; }
  LogSeries shifted(std::size_t k) const { return {p.shifted(k), g.shifted(k)}; }
  LogSeries& operator*=(const Rat& s) {
    p *= s;
    g *= s;
    return *this;
  }
  friend LogSeries operator-(const LogSeries& a, const LogSeries& b) { return {a.p - b.p, a.g - b.g}; }
};

/// Ordered partition of d into positive parts.
struct Composition {
  std::vector<int> parts;
};

/// All 2^{d-1} compositions of d, in lexicographic order of the parts.
std::vector<Composition> compositions(int d);

/// A_n = 2^{3n} (6n-1)!! / (n!)^3, A_0 = 1.
Rat f0_coeff(int n);
/// sum_{j=1}^{3n} 6/(2j-1) - sum_{j=1}^{n} 3/j.
Rat harmonic_bracket(int n);
/// B_n = A_n * harmonic_bracket(n), B_0 = 0.
Rat f1_hat_coeff(int n);

SeriesQ f0_series(int order);
LogSeries f1_series(int order);

struct PfReport {
  bool ok = true;
  int first_failing_order = -1;
  std::string what;
};

/// Recursion A_n = 8(6n-5)(6n-3)(6n-1)/n^3 A_{n-1} for n <= order, then the
/// operator Theta^3 - 8z(6Theta+1)(6Theta+3)(6Theta+5) on f0 and f1.
PfReport pf_recursion_check(int order);
PfReport pf_recursion_check(const SeriesQ& f0, const LogSeries& f1);

/// Applies Theta^3 - 8z(6Theta+1)(6Theta+3)(6Theta+5).
SeriesQ apply_pf_operator(const SeriesQ& f);
LogSeries apply_pf_operator(const LogSeries& f);

/// w_1..w_N from B(z)/A(z); element i is w_{i+1}. w_1..w_4 and w_6 are
/// integers, w_5 = 3169342733223744/5 is not.
std::vector<Rat> mirror_w(int order);

/// j_1..j_N by summing over compositions; element i is j_{i+1}.
std::vector<Rat> j_from_w(const std::vector<Rat>& w);
std::vector<Rat> j_from_w(int order);

/// j_1..j_N by inverting q = u exp(sum w_d u^d) with Lagrange's formula and
/// expanding 1/u(q).
std::vector<Rat> lagrange_oracle(int order);
std::vector<Rat> lagrange_oracle(const std::vector<Rat>& w);

}  // namespace quasimap
