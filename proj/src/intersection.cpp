#include "quasimap/intersection.hpp"

#include <stdexcept>

#include "quasimap/series.hpp"

namespace quasimap {

namespace {

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("degree must be at least 1");
}

Rat power(long base, int e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rat(out);
}

LinForm z(int d, int j) { return LinForm::variable(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(j)); }

LinForm wall(int d, int j) {
  LinForm f(static_cast<std::size_t>(d + 1));
  f.set_coeff(static_cast<std::size_t>(j - 1), -1);
  f.set_coeff(static_cast<std::size_t>(j), 2);
  f.set_coeff(static_cast<std::size_t>(j + 1), -1);
  return f;
}

Rat residue_of(const IntegrandSpec& spec, const EngineOptions& options) {
  const FactoredRat integrand = build_integrand(spec);
  return iterated_residue(integrand, ResiduePlan::ascending(integrand.nvars(), 6 * spec.d + 2), options);
}

}  // namespace

std::vector<LinForm> e6_factors(const LinForm& x, const LinForm& y, E6Variant variant) {
  std::vector<LinForm> out;
  for (long j = 0; j <= 6; ++j) {
    const Rat cy = variant == E6Variant::corrected ? Rat(j) : Rat(1);
    out.push_back(Rat(6 - j) * x + cy * y);
  }
  return out;
}

std::pair<Rat, std::vector<LinForm>> e_tilde_factors(const LinForm& x, const LinForm& y) {
  std::vector<LinForm> out{x, y};
  for (long i = 0; i <= 2; ++i) out.push_back(Rat(2 * i + 1) * x + Rat(5 - 2 * i) * y);
  return {Rat(144), out};
}

MPoly product(std::size_t nvars, const std::vector<LinForm>& factors) {
  MPoly p = MPoly::constant(nvars, 1);
  for (const auto& f : factors) p *= MPoly::from_linear(f);
  return p;
}

std::pair<Rat, std::vector<TaggedFactor>> r_denominator(int d) {
  require_degree(d);
  std::vector<TaggedFactor> den;
  for (int j = 0; j <= d; ++j) den.push_back({z(d, j), 4, var_set({static_cast<std::size_t>(j)})});
  for (int i = 0; i < d; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(i + 1);
    den.push_back({Rat(2) * z(d, i) + z(d, i + 1), 1, var_set({lo})});
    den.push_back({z(d, i) + Rat(2) * z(d, i + 1), 1, var_set({hi})});
  }
  for (int j = 1; j <= d - 1; ++j) den.push_back({wall(d, j), 1, var_set({static_cast<std::size_t>(j)})});
  return {power(3, d + 1), den};
}

IntegrandSpec IntegrandSpec::two_point(int d, int a, int b, E6Variant variant) {
  require_degree(d);
  const auto n = static_cast<std::size_t>(d + 1);
  IntegrandSpec spec;
  spec.d = d;
  spec.e6_variant = variant;
  spec.inverse_powers.assign(n, 0);
  Monomial m(n, 0);
  if (a >= 0) m[0] += a; else spec.inverse_powers[0] -= a;
  if (b >= 0) m[n - 1] += b; else spec.inverse_powers[n - 1] -= b;
  spec.numerator_extra = MPoly::monomial(n, m);
  return spec;
}

FactoredRat build_integrand(const IntegrandSpec& spec) {
  const int d = spec.d;
  require_degree(d);
  const auto n = static_cast<std::size_t>(d + 1);
  if (spec.numerator_extra.nvars() != n) throw std::invalid_argument("build_integrand: numerator arity");
  std::vector<int> inverse = spec.inverse_powers;
  if (inverse.empty()) inverse.assign(n, 0);
  if (inverse.size() != n) throw std::invalid_argument("build_integrand: inverse_powers arity");

  Rat scalar = spec.prefactor / power(3, d + 1);
  std::vector<int> z_power(n, 4);
  for (std::size_t j = 0; j < n; ++j) z_power[j] += inverse[j];
  MPoly num = spec.numerator_extra;
  std::vector<TaggedFactor> den;

  if (spec.use_e6) {
    scalar /= power(6, d - 1);
    for (int j = 1; j <= d - 1; ++j) z_power[static_cast<std::size_t>(j)] += 1;
  }

  if (spec.use_e6 && spec.e6_variant == E6Variant::corrected) {
    // e^6 = e~ (2x+y)(x+2y): the pair cancels R's edge factors; the x y of e~
    // lowers the z-powers.
    for (int i = 1; i <= d; ++i) {
      auto [c, factors] = e_tilde_factors(z(d, i - 1), z(d, i));
      scalar *= c;
      num *= product(n, std::vector<LinForm>(factors.begin() + 2, factors.end()));
      z_power[static_cast<std::size_t>(i - 1)] -= 1;
      z_power[static_cast<std::size_t>(i)] -= 1;
    }
    for (int j = 1; j <= d - 1; ++j) den.push_back({wall(d, j), 1, var_set({static_cast<std::size_t>(j)})});
  } else {
    auto [r_scalar, r_factors] = r_denominator(d);
    for (auto& f : r_factors) {
      if (f.form.support().size() == 1) continue;  // z-powers tracked in z_power
      den.push_back(std::move(f));
    }
    if (spec.use_e6) {
      for (int i = 1; i <= d; ++i) num *= product(n, e6_factors(z(d, i - 1), z(d, i), spec.e6_variant));
    }
  }

  for (std::size_t j = 0; j < n; ++j) {
    if (z_power[j] > 0) {
      den.push_back({z(d, static_cast<int>(j)), z_power[j], var_set({j})});
    } else if (z_power[j] < 0) {
      Monomial m(n, 0);
      m[j] = -z_power[j];
      num *= MPoly::monomial(n, m);
    }
  }
  return fr_reduce(FactoredRat(scalar, std::move(num), std::move(den)));
}

FactoredRat class_integrand(int d, const MPoly& omega) {
  require_degree(d);
  if (omega.nvars() != static_cast<std::size_t>(d + 1)) throw std::invalid_argument("class_integrand: class arity");
  auto [r_scalar, r_factors] = r_denominator(d);
  const FactoredRat raw(1 / r_scalar, omega, std::move(r_factors));
  return fr_reduce(homogeneity_filter(raw, d));
}

Rat integrate_class(int d, const MPoly& omega, const EngineOptions& options) {
  const FactoredRat integrand = class_integrand(d, omega);
  return iterated_residue(integrand, ResiduePlan::ascending(integrand.nvars(), 6 * d + 2), options);
}

Rat integrate(const FactoredRat& integrand, const ResiduePlan& plan, const EngineOptions& options) {
  return iterated_residue(integrand, plan, options);
}

Rat compute_w(int d, int a, int b, const EngineOptions& options, E6Variant variant) {
  return residue_of(IntegrandSpec::two_point(d, a, b, variant), options);
}

Rat lemma_second_value(int d, const EngineOptions& options) {
  IntegrandSpec spec = IntegrandSpec::two_point(d, 1, -1);
  spec.numerator_extra *= MPoly::variable(static_cast<std::size_t>(d + 1), 1);
  spec.prefactor = make_rat(1, 2);
  return residue_of(spec, options);
}

Rat lemma_second_closed_form(int d) {
  require_degree(d);
  return make_rat(1, d) * f0_coeff(d) * (1 - make_rat(1, d) + harmonic_bracket(d));
}

LemmaLastResult lemma_last_check(int d, int f, const EngineOptions& options) {
  if (d < 2) throw std::invalid_argument("lemma_last_check: degree must be at least 2");
  if (f < 1 || f > d - 1) throw std::invalid_argument("lemma_last_check: f must lie in 1..d-1");
  LemmaLastResult out;
  out.product_side = make_rat(1, 4) * compute_w(d - f, 1, 0, options) * compute_w(f, 2, -1, options);

  IntegrandSpec spec = IntegrandSpec::two_point(d, 1, -1);
  spec.numerator_extra *= MPoly::from_linear(wall(d, d - f));
  spec.prefactor = make_rat(1, 2);
  out.residue_side = residue_of(spec, options);
  out.holds = out.product_side == out.residue_side;
  return out;
}

Rat main_theorem_Rd(int d, const EngineOptions& options) {
  IntegrandSpec spec = IntegrandSpec::two_point(d, 1, -1);
  const auto n = static_cast<std::size_t>(d + 1);
  // d (z_1 - z_0) + z_0
  LinForm bracket(n);
  bracket.set_coeff(0, Rat(1 - d));
  bracket.set_coeff(1, bracket.coeff(1) + Rat(d));
  spec.numerator_extra *= MPoly::from_linear(bracket);
  spec.prefactor = make_rat(1, 2);
  return residue_of(spec, options);
}

MPoly telescoping_lhs(int d) {
  require_degree(d);
  MPoly sum(static_cast<std::size_t>(d + 1));
  for (int f = 1; f <= d - 1; ++f) sum += Rat(f) * MPoly::from_linear(wall(d, d - f));
  return sum;
}

MPoly telescoping_rhs(int d) {
  require_degree(d);
  const auto n = static_cast<std::size_t>(d + 1);
  MPoly z0 = MPoly::variable(n, 0);
  MPoly z1 = MPoly::variable(n, 1);
  MPoly zd = MPoly::variable(n, static_cast<std::size_t>(d));
  return Rat(d) * (z1 - z0) + z0 - zd;
}

}  // namespace quasimap
