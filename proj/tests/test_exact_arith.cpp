#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "quasimap/factored.hpp"

using namespace quasimap;

namespace {

MPoly z(std::size_t n, std::size_t j) { return MPoly::variable(n, j); }

}  // namespace

TEST_CASE("rational strings round-trip") {
  CHECK(to_string(make_rat(6, -4)) == "-3/2");
  CHECK(to_string(make_rat(10, 5)) == "2");
  CHECK(parse_rat("-3/2") == make_rat(-3, 2));
  CHECK(parse_rat("4/6") == make_rat(2, 3));
  CHECK(to_string(parse_rat("510531007770")) == "510531007770");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(5) == 120);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(11) == 10395);
  CHECK(binomial(6, 2) == 15);
  CHECK(is_integer(make_rat(4, 2)));
  CHECK_FALSE(is_integer(make_rat(1, 2)));
}

TEST_CASE("linear forms") {
  const LinForm f = LinForm::from_ints({0, 2, -1});
  CHECK(f.support() == std::vector<std::size_t>{1, 2});
  auto [scale, canon] = LinForm::from_ints({-2, 4, -2}).canonical();
  CHECK(scale == -2);
  CHECK(canon == LinForm::from_ints({1, -2, 1}));
  CHECK_THROWS_AS(LinForm(3).canonical(), std::invalid_argument);
  CHECK(f.solve_for(1) == LinForm({Rat(0), Rat(0), make_rat(1, 2)}));
  CHECK_THROWS_AS(f.subst(1, LinForm::from_ints({0, 1, 0})), std::invalid_argument);
  CHECK(to_string(LinForm::from_ints({-1, 2, -1}), "H") == "-H0 + 2*H1 - H2");
}

TEST_CASE("polynomial arithmetic examples") {
  const std::size_t n = 2;
  CHECK((z(n, 0) + z(n, 1)) * (z(n, 0) - z(n, 1)) == pow(z(n, 0), 2) - pow(z(n, 1), 2));
  const MPoly p = Rat(3) * z(n, 0) * z(n, 1) + z(n, 1);
  CHECK(p + MPoly(n) == p);
  const MPoly q = (Rat(2) * z(n, 0) + z(n, 1)) * (z(n, 0) + Rat(2) * z(n, 1));
  CHECK(q == Rat(2) * pow(z(n, 0), 2) + Rat(5) * z(n, 0) * z(n, 1) + Rat(2) * pow(z(n, 1), 2));
  CHECK(mpoly_arith(q, q, PolyOp::sub).is_zero());
  CHECK(q.homogeneous_degree() == 2);
  CHECK_FALSE(p.homogeneous_degree().has_value());
  CHECK(p.homogeneous_component(1) == z(n, 1));
}

TEST_CASE("substitution examples") {
  const LinForm half_z2 = LinForm({Rat(0), Rat(0), make_rat(1, 2)});
  CHECK(subst_linear(MPoly::from_linear(LinForm::from_ints({0, 2, -1})), 1, half_z2).is_zero());
  CHECK(subst_linear(MPoly::from_linear(LinForm::from_ints({1, 5})), 0, LinForm(2)) == Rat(5) * z(2, 1));
  const std::size_t n = 4;
  const MPoly wall = MPoly::from_linear(LinForm::from_ints({0, -1, 2, -1}));
  const LinForm point({Rat(0), Rat(0), make_rat(1, 2), Rat(0)});
  CHECK(subst_linear(wall, 1, point) == make_rat(3, 2) * z(n, 2) - z(n, 3));
}

TEST_CASE("taylor coefficients and division") {
  const std::size_t n = 2;
  const MPoly p = pow(z(n, 0) + z(n, 1), 3);
  const auto c = taylor_coefficients(p, 0, LinForm(n), 3);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == pow(z(n, 1), 3));
  CHECK(c[1] == Rat(3) * pow(z(n, 1), 2));
  CHECK(c[3] == MPoly::constant(n, 1));
  const auto q = divide_linear(pow(z(n, 0), 2) - pow(z(n, 1), 2), LinForm::from_ints({1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == z(n, 0) - z(n, 1));
  CHECK_FALSE(divide_linear(pow(z(n, 0), 2) + pow(z(n, 1), 2), LinForm::from_ints({1, 1})).has_value());
}

TEST_CASE("factored normalization merges proportional factors") {
  const std::size_t n = 2;
  FactoredRat f(1, MPoly::constant(n, 1),
                {{LinForm::from_ints({2, 4}), 1, var_set({0})}, {LinForm::from_ints({-1, -2}), 2, var_set({1})}});
  REQUIRE(f.den().size() == 1);
  CHECK(f.den()[0].form == LinForm::from_ints({1, 2}));
  CHECK(f.den()[0].multiplicity == 3);
  CHECK(f.den()[0].allowed == var_set({0, 1}));
  CHECK(f.scalar() == make_rat(1, 2));  // 1 / (2 * (-1)^2)
  FactoredRat g(1, MPoly::constant(n, 1), {{LinForm::from_ints({0, 3}), 1, var_set({0, 1})}});
  CHECK(g.den()[0].allowed == var_set({1}));  // clipped to the support
}

TEST_CASE("fr_derivative examples") {
  const std::size_t n = 3;
  const LinForm wall = LinForm::from_ints({-1, 2, -1});
  const FactoredRat f(1, MPoly::constant(n, 1), {{wall, 1, var_set({1})}});
  const FactoredRat df = fr_derivative(f, 0);
  const FactoredRat expected(1, MPoly::constant(n, 1), {{wall, 2, var_set({1})}});
  const std::vector<Rat> p{Rat(1), Rat(3), Rat(2)};
  CHECK(df.evaluate(p) == expected.evaluate(p));
  CHECK(fr_derivative(FactoredRat::polynomial(z(n, 1)), 0).is_zero());
  const FactoredRat g(1, pow(z(n, 0), 2), {{LinForm::variable(n, 1), 1, var_set({1})}});
  const FactoredRat dg = fr_reduce(fr_derivative(g, 0));
  const FactoredRat g_expected(2, z(n, 0), {{LinForm::variable(n, 1), 1, var_set({1})}});
  CHECK(dg.den() == g_expected.den());
  for (const auto& pt : {std::vector<Rat>{Rat(2), Rat(5), Rat(1)}, std::vector<Rat>{make_rat(-1, 3), Rat(7), Rat(0)}}) {
    CHECK(dg.evaluate(pt) == g_expected.evaluate(pt));
  }
}

TEST_CASE("fr_reduce cancels, is idempotent and keeps values") {
  const std::size_t n = 2;
  const FactoredRat f(1, pow(z(n, 0), 2) - pow(z(n, 1), 2), {{LinForm::from_ints({1, 1}), 1, var_set({0})}});
  const FactoredRat r = fr_reduce(f);
  CHECK(r.den().empty());
  CHECK(r.num() == z(n, 0) - z(n, 1));
  const FactoredRat rr = fr_reduce(r);
  CHECK(rr.num() == r.num());
  CHECK(rr.den() == r.den());

  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int t = 0; t < 20; ++t) {
    const LinForm a = LinForm::from_ints({c(rng) | 1, c(rng)});
    const LinForm b = LinForm::from_ints({c(rng), c(rng) | 1});
    const MPoly num = MPoly::from_linear(a) * (z(n, 0) + Rat(c(rng)) * z(n, 1));
    const FactoredRat g(make_rat(c(rng) | 1, 3), num, {{a, 2, var_set({0})}, {b, 1, var_set({1})}});
    const FactoredRat h = fr_reduce(g);
    CHECK(h.den_degree() <= g.den_degree());
    const std::vector<Rat> pt{make_rat(c(rng), 7) + make_rat(1, 11), make_rat(c(rng), 5) + make_rat(1, 13)};
    try {
      CHECK(h.evaluate(pt) == g.evaluate(pt));
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("sums and products of factored functions") {
  const std::size_t n = 2;
  const FactoredRat a(2, z(n, 0), {{LinForm::from_ints({1, 1}), 1, var_set({0})}});
  const FactoredRat b(3, z(n, 1), {{LinForm::from_ints({1, -1}), 2, var_set({1})}});
  const std::vector<Rat> p{make_rat(5, 3), make_rat(-2, 7)};
  CHECK((a + b).evaluate(p) == a.evaluate(p) + b.evaluate(p));
  CHECK((a * b).evaluate(p) == a.evaluate(p) * b.evaluate(p));
  CHECK((a + FactoredRat(n)).evaluate(p) == a.evaluate(p));
  CHECK((Rat(0) * a).is_zero());
  CHECK_THROWS_AS(a.evaluate(std::vector<Rat>{Rat(1), Rat(-1)}), std::domain_error);
}

TEST_CASE("fr_subst drops the substituted variable from tags") {
  const std::size_t n = 3;
  const FactoredRat f(1, z(n, 0), {{LinForm::from_ints({-1, 2, -1}), 1, var_set({1, 2})}});
  const FactoredRat g = fr_subst(f, 2, LinForm::from_ints({0, 0, 0}));
  REQUIRE(g.den().size() == 1);
  CHECK(g.den()[0].allowed == var_set({1}));
  CHECK_THROWS_AS(fr_subst(f, 0, LinForm::from_ints({0, 2, -1})), std::domain_error);
}
