#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quasimap/series.hpp"

using namespace quasimap;

TEST_CASE("series arithmetic") {
  SeriesQ one_minus(std::vector<Rat>{Rat(1), Rat(-1), Rat(0), Rat(0)});
  const SeriesQ geo = one_minus.inverse();
  CHECK(geo == SeriesQ(std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(1)}));
  CHECK((geo * one_minus) == SeriesQ(std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(0)}));
  SeriesQ x(std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0)});
  CHECK(x.exp() == SeriesQ(std::vector<Rat>{Rat(1), Rat(1), make_rat(1, 2), make_rat(1, 6)}));
  CHECK(geo.theta() == SeriesQ(std::vector<Rat>{Rat(0), Rat(1), Rat(2), Rat(3)}));
  CHECK(geo.shifted(2) == SeriesQ(std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(1)}));
  CHECK((geo + SeriesQ(1)).order() == 1);
  CHECK_THROWS_AS(x.inverse(), std::domain_error);
  CHECK_THROWS_AS(geo.exp(), std::domain_error);
}

TEST_CASE("compositions") {
  CHECK(compositions(1).size() == 1);
  const auto c3 = compositions(3);
  REQUIRE(c3.size() == 4);
  CHECK(c3[0].parts == std::vector<int>{1, 1, 1});
  CHECK(c3[3].parts == std::vector<int>{3});
  for (int d = 1; d <= 10; ++d) {
    const auto c = compositions(d);
    CHECK(c.size() == (std::size_t{1} << (d - 1)));
    for (const auto& s : c) {
      int sum = 0;
      for (int p : s.parts) sum += p;
      CHECK(sum == d);
    }
  }
}

TEST_CASE("hypergeometric coefficients") {
  CHECK(f0_coeff(0) == 1);
  CHECK(f0_coeff(1) == 120);
  CHECK(f0_coeff(2) == 83160);
  CHECK(f1_hat_coeff(0) == 0);
  CHECK(f1_hat_coeff(1) == 744);
  CHECK(f1_hat_coeff(2) == 562932);
  CHECK(harmonic_bracket(1) == make_rat(31, 5));
}

TEST_CASE("Picard-Fuchs operator") {
  const auto rep = pf_recursion_check(20);
  CHECK(rep.ok);
  SeriesQ bad = f0_series(6);
  bad[4] += 1;
  const auto broken = pf_recursion_check(bad, f1_series(6));
  CHECK_FALSE(broken.ok);
  CHECK(broken.first_failing_order == 4);
}

TEST_CASE("mirror map coefficients") {
  const auto w = mirror_w(6);
  CHECK(w[0] == 744);
  CHECK(w[1] == 473652);
  CHECK(w[2] == 451734080);
  CHECK(w[3] == Rat(Int("510531007770")));
  CHECK(w[4] == Rat(Int("3169342733223744"), Int(5)));
  CHECK(w[1] == f1_hat_coeff(2) - w[0] * f0_coeff(1));
  CHECK_THROWS_AS(mirror_w(0), std::invalid_argument);
}

TEST_CASE("j-invariant coefficients") {
  const auto j = j_from_w(5);
  CHECK(j == std::vector<Rat>{Rat(744), Rat(196884), Rat(21493760), Rat(864299970), Rat(Int("20245856256"))});
  CHECK(j_from_w(std::vector<Rat>{Rat(744), Rat(473652)})[1] == 473652 - Rat(744 * 744) / 2);
  for (int n = 1; n <= 8; ++n) CHECK(j_from_w(n) == lagrange_oracle(n));
  CHECK(lagrange_oracle(2)[0] == 744);
}
