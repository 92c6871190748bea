#include "quasimap/series.hpp"

#include <algorithm>

namespace quasimap {

std::vector<Composition> compositions(int d) {
  if (d < 1) throw std::invalid_argument("compositions: d must be positive");
  std::vector<Composition> out;
  std::vector<int> parts;
  // Depth-first over the first part; lexicographic by construction.
  auto recurse = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back({parts});
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      parts.push_back(first);
      self(self, remaining - first);
      parts.pop_back();
    }
  };
  recurse(recurse, d);
  return out;
}

Rat f0_coeff(int n) {
  if (n < 0) throw std::invalid_argument("f0_coeff: negative index");
  Int two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(3 * n));
  const Int f = factorial(static_cast<unsigned long>(n));
  return make_rat(two_pow * double_factorial(6L * n - 1), f * f * f);
}

Rat harmonic_bracket(int n) {
  Rat acc = 0;
  for (int j = 1; j <= 3 * n; ++j) acc += make_rat(6, 2 * j - 1);
  for (int j = 1; j <= n; ++j) acc -= make_rat(3, j);
  return acc;
}

Rat f1_hat_coeff(int n) {
  if (n < 0) throw std::invalid_argument("f1_hat_coeff: negative index");
  return f0_coeff(n) * harmonic_bracket(n);
}

SeriesQ f0_series(int order) {
  SeriesQ s(static_cast<std::size_t>(order));
  for (int n = 0; n <= order; ++n) s[static_cast<std::size_t>(n)] = f0_coeff(n);
  return s;
}

LogSeries f1_series(int order) {
  SeriesQ g(static_cast<std::size_t>(order));
  for (int n = 0; n <= order; ++n) g[static_cast<std::size_t>(n)] = f1_hat_coeff(n);
  return {f0_series(order), g};
}

namespace {

SeriesQ add(const SeriesQ& a, const SeriesQ& b) { return a + b; }
LogSeries add(const LogSeries& a, const LogSeries& b) { return {a.p + b.p, a.g + b.g}; }

// 8 (6 Theta + 1)(6 Theta + 3)(6 Theta + 5) applied to x.
template <typename S>
S pf_right(const S& x) {
  auto step = [](const S& y, long c) {
    S out = y.theta();
    out *= Rat(6);
    S shift = y;
    shift *= Rat(c);
    return add(out, shift);
  };
  S y = step(step(step(x, 5), 3), 1);
  y *= Rat(8);
  return y;
}

template <typename S>
S pf_apply(const S& f) {
  S lhs = f.theta().theta().theta();
  return lhs - pf_right(f).shifted(1);
}

int first_nonzero(const SeriesQ& s) {
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (s[n] != 0) return static_cast<int>(n);
  }
  return -1;
}

}  // namespace

SeriesQ apply_pf_operator(const SeriesQ& f) { return pf_apply(f); }
LogSeries apply_pf_operator(const LogSeries& f) { return pf_apply(f); }

PfReport pf_recursion_check(const SeriesQ& f0, const LogSeries& f1) {
  PfReport report;
  for (std::size_t n = 1; n <= f0.order(); ++n) {
    const long k = static_cast<long>(n);
    const Rat ratio = make_rat(8 * (6 * k - 5) * (6 * k - 3) * (6 * k - 1), k * k * k);
    if (f0[n] != ratio * f0[n - 1]) {
      return {false, static_cast<int>(n), "coefficient recursion"};
    }
  }
  if (int bad = first_nonzero(apply_pf_operator(f0)); bad >= 0) return {false, bad, "operator on f0"};
  const LogSeries r = apply_pf_operator(f1);
  const int bad_p = first_nonzero(r.p);
  const int bad_g = first_nonzero(r.g);
  if (bad_p >= 0 || bad_g >= 0) {
    int bad = bad_p < 0 ? bad_g : (bad_g < 0 ? bad_p : std::min(bad_p, bad_g));
    return {false, bad, "operator on f1"};
  }
  return report;
}

PfReport pf_recursion_check(int order) {
  if (order < 1) throw std::invalid_argument("pf_recursion_check: order must be positive");
  return pf_recursion_check(f0_series(order), f1_series(order));
}

std::vector<Rat> mirror_w(int order) {
  if (order < 1) throw std::invalid_argument("mirror_w: order must be positive");
  const LogSeries f1 = f1_series(order);
  const SeriesQ ratio = f1.g / f0_series(order);
  std::vector<Rat> w;
  for (int d = 1; d <= order; ++d) {
    w.push_back(ratio[static_cast<std::size_t>(d)]);
  }
  return w;
}

std::vector<Rat> j_from_w(const std::vector<Rat>& w) {
  std::vector<Rat> j;
  for (int d = 1; d <= static_cast<int>(w.size()); ++d) {
    Rat acc = 0;
    for (const auto& sigma : compositions(d)) {
      const auto len = static_cast<long>(sigma.parts.size());
      Rat term = 1;
      for (int part : sigma.parts) term *= w[static_cast<std::size_t>(part - 1)];
      Rat weight = 1;
      for (long e = 1; e < len; ++e) weight *= Rat(-(d - 1));
      weight /= Rat(factorial(static_cast<unsigned long>(len)));
      acc += weight * term;
    }
    j.push_back(acc);
  }
  return j;
}

std::vector<Rat> j_from_w(int order) { return j_from_w(mirror_w(order)); }

std::vector<Rat> lagrange_oracle(const std::vector<Rat>& w) {
  const std::size_t order = w.size();
  SeriesQ big_w(order);
  for (std::size_t d = 1; d <= order; ++d) big_w[d] = w[d - 1];

  // u = q phi(u) with phi = exp(-W): [q^n] u = (1/n) [u^{n-1}] exp(-n W).
  SeriesQ u_over_q(order);
  for (std::size_t n = 1; n <= order + 1; ++n) {
    SeriesQ scaled = big_w;
    scaled *= Rat(-static_cast<long>(n));
    const SeriesQ e = scaled.exp();
    u_over_q[n - 1] = e[n - 1] / Rat(static_cast<long>(n));
  }
  // j = 1/u = q^{-1} (u/q)^{-1}; j_d is the q^d coefficient of (u/q)^{-1}.
  const SeriesQ inv = u_over_q.inverse();
  std::vector<Rat> j;
  for (std::size_t d = 1; d <= order; ++d) j.push_back(inv[d]);
  return j;
}

std::vector<Rat> lagrange_oracle(int order) {
  if (order < 1) throw std::invalid_argument("lagrange_oracle: order must be positive");
  return lagrange_oracle(mirror_w(order));
}

}  // namespace quasimap
