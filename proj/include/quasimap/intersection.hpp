#pragma once

#include <vector>

#include "quasimap/factored.hpp"
#include "quasimap/residue.hpp"

namespace quasimap {

/// Which product is used for e^6(x, y).
enum class E6Variant {
  corrected,  // prod_{j=0}^6 ((6-j) x + j y) = e~(x,y) (2x+y)(x+2y)
  printed,    // prod_{j=0}^6 ((6-j) x + y); only used as a negative control
};

/// The seven linear factors of e^6(x, y).
std::vector<LinForm> e6_factors(const LinForm& x, const LinForm& y, E6Variant variant = E6Variant::corrected);

/// e~(x, y) = 2^4 3^2 x y prod_{i=0}^2 ((2i+1) x + (5-2i) y), returned as
/// scalar 144 and its five linear factors.
std::pair<Rat, std::vector<LinForm>> e_tilde_factors(const LinForm& x, const LinForm& y);

MPoly product(std::size_t nvars, const std::vector<LinForm>& factors);

/// Denominator R of the residue formula with its contour tags:
/// z_j^4 for j; (2z_j + z_{j+1}) and (z_{j-1} + 2z_j) for j; walls
/// (2z_j - z_{j-1} - z_{j+1}) for j. The scalar 3^{d+1} is returned apart.
std::pair<Rat, std::vector<TaggedFactor>> r_denominator(int d);

/// Integrand of a two-point number on the degree-d space.
///
/// The value is prefactor * extra / prod_j z_j^{inverse_powers[j]} times
/// prod e^6(z_{i-1}, z_i) / prod_{i=1}^{d-1} 6 z_i / R. With the corrected e^6
/// the (2z+z')(z+2z') pairs are cancelled against R while building, leaving
/// only z-powers and walls in the denominator.
struct IntegrandSpec {
  int d = 1;
  MPoly numerator_extra;
  std::vector<int> inverse_powers;  // empty means none
  bool use_e6 = true;
  E6Variant e6_variant = E6Variant::corrected;
  Rat prefactor = 1;

  /// z_0^a z_d^b, negative exponents going to the denominator.
  static IntegrandSpec two_point(int d, int a, int b, E6Variant variant = E6Variant::corrected);
};

FactoredRat build_integrand(const IntegrandSpec& spec);

/// Omega(z)/R restricted to the degree that survives, reduced.
FactoredRat class_integrand(int d, const MPoly& omega);

/// Integral of a class Omega(H_0..H_d) as the iterated residue of Omega(z)/R.
Rat integrate_class(int d, const MPoly& omega, const EngineOptions& options = {});

/// Residue of an integrand over d+1 variables in the given order.
Rat integrate(const FactoredRat& integrand, const ResiduePlan& plan, const EngineOptions& options = {});

/// w(O_{z^a} O_{z^b})_{0,d}.
Rat compute_w(int d, int a, int b, const EngineOptions& options = {}, E6Variant variant = E6Variant::corrected);

/// Residue with numerator z_0 z_1 / z_d and prefactor 1/2.
Rat lemma_second_value(int d, const EngineOptions& options = {});
/// (1/d) A_d (1 - 1/d + sum 6/(2j-1) - sum 3/j).
Rat lemma_second_closed_form(int d);

struct LemmaLastResult {
  bool holds = false;
  Rat product_side;  // (1/4) w(O_{z^1}O_{z^0})_{0,d-f} * w(O_{z^2}O_{z^-1})_{0,f}
  Rat residue_side;  // numerator z_0 (2z_{d-f} - z_{d-f-1} - z_{d-f+1}) / z_d
};

LemmaLastResult lemma_last_check(int d, int f, const EngineOptions& options = {});

/// R_d: numerator z_0 (d(z_1 - z_0) + z_0) / z_d, prefactor 1/2.
Rat main_theorem_Rd(int d, const EngineOptions& options = {});

/// sum_{f=1}^{d-1} f (2z_{d-f} - z_{d-f-1} - z_{d-f+1}) and d(z_1 - z_0) + z_0 - z_d.
MPoly telescoping_lhs(int d);
MPoly telescoping_rhs(int d);

}  // namespace quasimap
