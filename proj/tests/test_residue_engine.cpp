#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quasimap/intersection.hpp"
#include "quasimap/residue.hpp"
#include "quasimap/toric.hpp"

using namespace quasimap;

namespace {

MPoly z(std::size_t n, std::size_t j) { return MPoly::variable(n, j); }
LinForm zf(std::size_t n, std::size_t j) { return LinForm::variable(n, j); }

}  // namespace

TEST_CASE("single residues") {
  const std::size_t n = 2;
  const FactoredRat simple(1, MPoly::constant(n, 1), {{zf(n, 0), 1, var_set({0})}});
  CHECK(residue_at_point(simple, 0, LinForm(n)).scalar() == 1);

  // (a + b z0)/z0^2 with a = z1, b = 7
  const FactoredRat order_two(1, z(n, 1) + Rat(7) * z(n, 0), {{zf(n, 0), 2, var_set({0})}});
  const FactoredRat r = residue_at_point(order_two, 0, LinForm(n));
  CHECK(r.evaluate(std::vector<Rat>{Rat(0), Rat(3)}) == 7);

  const std::size_t m = 3;
  const FactoredRat lead(1, MPoly::constant(m, 1), {{LinForm::from_ints({0, 2, -1}), 1, var_set({1})}});
  const LinForm half({Rat(0), Rat(0), make_rat(1, 2)});
  CHECK(residue_at_point(lead, 1, half).evaluate(std::vector<Rat>{Rat(1), Rat(1), Rat(1)}) == make_rat(1, 2));
  CHECK_THROWS_AS(residue_at_point(lead, 1, LinForm::from_ints({0, 1, 0})), ResidueError);
}

TEST_CASE("Taylor and derivative routes agree") {
  const std::size_t n = 3;
  const LinForm wall = LinForm::from_ints({-1, 2, -1});
  const MPoly num = pow(z(n, 0) + Rat(2) * z(n, 2), 3) * (z(n, 1) - z(n, 2));
  const FactoredRat f(make_rat(3, 5), num,
                      {{zf(n, 1), 3, var_set({1})}, {wall, 2, var_set({1})}, {LinForm::from_ints({1, 1, 1}), 1, {}}});
  for (const auto& p : residue_points(f, 1)) {
    const FactoredRat a = residue_at_point(f, 1, p);
    const FactoredRat b = residue_by_derivative(f, 1, p);
    for (const auto& pt : {std::vector<Rat>{Rat(1), Rat(0), Rat(3)}, std::vector<Rat>{make_rat(2, 3), Rat(0), Rat(-5)}}) {
      CHECK(a.evaluate(pt) == b.evaluate(pt));
    }
  }
  CHECK(residue_points(f, 1).size() == 2);
  CHECK(residue_points(f, 0).empty());
}

TEST_CASE("hand oracle: 48(z0+z1)(5z0+z1)(z0+5z1)/(z0^2 z1^3) -> 1488") {
  const std::size_t n = 2;
  const MPoly num = MPoly::from_linear(LinForm::from_ints({1, 1})) * MPoly::from_linear(LinForm::from_ints({5, 1})) *
                    MPoly::from_linear(LinForm::from_ints({1, 5}));
  const FactoredRat f(48, num, {{zf(n, 0), 2, var_set({0})}, {zf(n, 1), 3, var_set({1})}});
  CHECK(iterated_residue(f, ResiduePlan::ascending(n)) == 1488);
  CHECK(iterated_residue(f, ResiduePlan::descending(n)) == 1488);
}

TEST_CASE("product of simple poles integrates to 1") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<TaggedFactor> den;
    for (std::size_t j = 0; j < n; ++j) den.push_back({zf(n, j), 1, var_set({j})});
    CHECK(iterated_residue(FactoredRat(1, MPoly::constant(n, 1), den), ResiduePlan::ascending(n)) == 1);
  }
}

TEST_CASE("homogeneity filter") {
  const std::size_t n = 2;
  const std::vector<TaggedFactor> den{{zf(n, 0), 5, var_set({0})}, {zf(n, 1), 5, var_set({1})}};
  // total degree must be -(d+1) = -2: numerator degree 8
  const FactoredRat right(1, pow(z(n, 0), 8), den);
  CHECK(homogeneity_filter(right, 1).num() == right.num());
  CHECK(homogeneity_filter(FactoredRat(1, pow(z(n, 0), 7), den), 1).is_zero());
  const FactoredRat mixed(1, pow(z(n, 0), 8) + pow(z(n, 1), 3), den);
  CHECK(homogeneity_filter(mixed, 1).num() == pow(z(n, 0), 8));
}

TEST_CASE("iterated residue rejects bad plans") {
  const std::size_t n = 2;
  const FactoredRat f(1, MPoly::constant(n, 1), {{zf(n, 0), 1, var_set({0})}, {zf(n, 1), 1, var_set({1})}});
  ResiduePlan bad;
  bad.order = {0, 0};
  CHECK_THROWS_AS(iterated_residue(f, bad), std::invalid_argument);
  ResiduePlan short_plan;
  short_plan.order = {0};
  CHECK_THROWS_AS(iterated_residue(f, short_plan), std::invalid_argument);
  // no pole is tagged for z1, so its contour encloses nothing
  const FactoredRat g(1, z(n, 1), {{zf(n, 0), 1, var_set({0})}, {zf(n, 1), 2, {}}});
  CHECK(iterated_residue(g, ResiduePlan::ascending(n)) == 0);
}

TEST_CASE("results do not depend on the thread count") {
  const FactoredRat f = build_integrand(IntegrandSpec::two_point(3, 1, 0));
  ResidueStats one_stats;
  ResidueStats many_stats;
  const Rat one = iterated_residue(f, ResiduePlan::ascending(4), EngineOptions{1}, &one_stats);
  const Rat many = iterated_residue(f, ResiduePlan::ascending(4), EngineOptions{4}, &many_stats);
  CHECK(one == many);
  CHECK(one == 2 * Rat(451734080));
  CHECK(one_stats.branches == many_stats.branches);
  CHECK(one_stats.branches > 0);
}

TEST_CASE("residue is linear") {
  const int d = 2;
  const std::size_t n = 3;
  const MPoly a = pow(z(n, 0), 14);
  const MPoly b = pow(z(n, 1), 7) * pow(z(n, 2), 7);
  const Rat x = make_rat(3, 7);
  const Rat y = make_rat(-5, 2);
  CHECK(integrate_class(d, x * a + y * b) == x * integrate_class(d, a) + y * integrate_class(d, b));
}

TEST_CASE("ideal generators integrate to zero") {
  for (int d = 1; d <= 2; ++d) {
    const auto n = static_cast<std::size_t>(d + 1);
    const auto gens = sr_ideal(d);
    for (const auto& r : gens) {
      const int comp = 6 * d + 2 - r.total_degree();
      CHECK(integrate_class(d, r * pow(z(n, 0), static_cast<unsigned>(comp))) == 0);
      CHECK(integrate_class(d, r * pow(z(n, n - 1), static_cast<unsigned>(comp))) == 0);
    }
  }
}
