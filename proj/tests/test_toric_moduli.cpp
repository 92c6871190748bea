#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "quasimap/toric.hpp"

using namespace quasimap;

namespace {

MPoly h(std::size_t n, std::size_t j) { return MPoly::variable(n, j); }

}  // namespace

TEST_CASE("fan dimensions and counts") {
  for (int d = 1; d <= 10; ++d) {
    const FanData fan = build_fan(d);
    CHECK(fan.rays.cols() == 7 * d + 3);
    CHECK(fan.rays.rows() == 6 * d + 2);
    CHECK(fan.labels.size() == static_cast<std::size_t>(7 * d + 3));
    REQUIRE(fan.primitive_collections.size() == static_cast<std::size_t>(d + 1));
    CHECK(fan.primitive_collections.front().size() == 5);
    CHECK(fan.primitive_collections.back().size() == 5);
    for (int i = 1; i <= d - 1; ++i) CHECK(fan.primitive_collections[static_cast<std::size_t>(i)].size() == 7);
    Int cones = 25;
    for (int i = 1; i < d; ++i) cones *= 7;
    CHECK(maximal_cone_count(fan) == cones);
  }
  CHECK_THROWS_AS(build_fan(0), std::invalid_argument);
}

TEST_CASE("primitive collections for d = 1") {
  const FanData fan = build_fan(1);
  CHECK(fan.collection_labels(0) == std::vector<std::string>{"v0,0", "v1,0", "v2,0", "v3,0", "v3,1"});
  CHECK(fan.collection_labels(1) == std::vector<std::string>{"v0,1", "v1,1", "v2,1", "v3,2", "v3,3"});
  CHECK(fan.column("v3,3") == fan.v_column(3, 3));
  CHECK_THROWS_AS(fan.column("u1"), std::out_of_range);
}

TEST_CASE("ray relations") {
  for (int d = 1; d <= 10; ++d) CHECK(relation_check(build_fan(d)).ok);
  FanData broken = build_fan(3);
  broken.rays(0, broken.v_column(1, 0)) += 1;
  const auto rep = relation_check(broken);
  CHECK_FALSE(rep.ok);
  CHECK(rep.first_failing == 0);
}

TEST_CASE("divisor classes") {
  const int d = 3;
  const auto n = static_cast<std::size_t>(d + 1);
  const FanData fan = build_fan(d);
  const DivisorClasses dc = divisor_classes(d);
  for (int j = 0; j <= d; ++j) {
    for (int i = 0; i <= 2; ++i) CHECK(dc.class_polynomial(fan.v_column(i, j)) == h(n, static_cast<std::size_t>(j)));
    CHECK(dc.class_polynomial(fan.v_column(3, 3 * j)) == Rat(3) * h(n, static_cast<std::size_t>(j)));
  }
  CHECK(dc.class_polynomial(fan.v_column(3, 1)) == Rat(2) * h(n, 0) + h(n, 1));
  CHECK(dc.class_polynomial(fan.v_column(3, 2)) == h(n, 0) + Rat(2) * h(n, 1));
  CHECK(dc.class_polynomial(fan.u_column(2)) == Rat(2) * h(n, 2) - h(n, 1) - h(n, 3));
}

TEST_CASE("Stanley-Reisner generators") {
  const std::size_t n = 2;
  const auto gens = sr_ideal(1);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0] == pow(h(n, 0), 4) * (Rat(2) * h(n, 0) + h(n, 1)));
  CHECK(gens[1] == pow(h(n, 1), 4) * (h(n, 0) + Rat(2) * h(n, 1)));
  const auto g2 = sr_ideal(2);
  const std::size_t m = 3;
  CHECK(g2[1] == pow(h(m, 1), 4) * (h(m, 0) + Rat(2) * h(m, 1)) * (Rat(2) * h(m, 1) + h(m, 2)) *
                     (Rat(2) * h(m, 1) - h(m, 0) - h(m, 2)));
  for (int d = 1; d <= 4; ++d) {
    const auto g = sr_ideal(d);
    const auto f = sr_ideal_factors(d);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i].total_degree() == ((i == 0 || i + 1 == g.size()) ? 5 : 7));
      MPoly p = MPoly::constant(static_cast<std::size_t>(d + 1), 1);
      for (const auto& form : f[i]) p *= MPoly::from_linear(form);
      CHECK(p == g[i]);
    }
  }
}

TEST_CASE("volume form") {
  const std::size_t n = 2;
  CHECK(volume_form(1) == Rat(9) * pow(h(n, 0), 3) * pow(h(n, 1), 3) * (Rat(2) * h(n, 0) + h(n, 1)) *
                              (h(n, 0) + Rat(2) * h(n, 1)));
  for (int d = 1; d <= 6; ++d) CHECK(volume_form(d).homogeneous_degree() == 6 * d + 2);
}

TEST_CASE("B_k determinants") {
  CHECK(det_Bk(1) == 3);
  CHECK(det_Bk(2) == 12);
  CHECK(det_Bk(30) == 264);
  for (int k = 1; k <= 30; ++k) CHECK(det_Bk(k) == 9 * k - 6);
  IntMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(exact_determinant(singular) == 0);
  IntMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(exact_determinant(swap) == -1);
}

TEST_CASE("orientation enumeration") {
  const auto one = orientation_enumeration(1);
  CHECK(one.regions == 4);
  CHECK(one.min_det == 1);
  CHECK(one.max_det == 3);
  CHECK(one.all_positive);
  const auto two = orientation_enumeration(2);
  CHECK(two.regions == 16);
  CHECK(two.all_positive);
  for (int d = 3; d <= 4; ++d) CHECK(orientation_enumeration(d).all_positive);
}

TEST_CASE("recession map") {
  CHECK(eval_recession(2, {Rat(1), Rat(1), Rat(1)}) == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  CHECK(eval_recession(3, {Rat(0), Rat(0), Rat(0), Rat(0)}) == std::vector<Rat>(4, Rat(0)));
  const std::vector<Rat> a{make_rat(-3, 2), Rat(4), make_rat(1, 3)};
  std::vector<Rat> scaled = a;
  for (auto& x : scaled) x *= make_rat(7, 5);
  auto image = eval_recession(2, a);
  for (auto& x : image) x *= make_rat(7, 5);
  CHECK(eval_recession(2, scaled) == image);
  CHECK_THROWS_AS(eval_recession(2, {Rat(1)}), std::invalid_argument);
}

TEST_CASE("fan document") {
  const auto doc = nlohmann::json::parse(fan_document(build_fan(2)));
  CHECK(doc.at("rays").size() == 17);
  CHECK(doc.at("rays").at(0).size() == 14);
  CHECK(doc.at("primitive_collections").size() == 3);
  CHECK(doc.at("primitive_collections").at(1).size() == 7);
}
