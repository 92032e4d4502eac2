#include "roc/achievability.hpp"
#include "roc/error.hpp"
#include "roc/transform.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace roc;

namespace {

std::vector<Rational> qs(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.push_back(parseRational(x));
  return v;
}

RocFamily randomFamily(std::mt19937_64& rng, double a, bool allowBipartite) {
  std::uniform_real_distribution<double> m(0.5, 6.0), q(0.1, 1.0), w(0.1, 1.0);
  std::uniform_int_distribution<int> size(1, 3), coin(0, 1);
  RocFamily f;
  f.a = a;
  const int n = size(rng);
  for (int i = 0; i < n; ++i)
    f.specs.push_back({m(rng), q(rng), allowBipartite ? coin(rng) : 0, w(rng)});
  f.normalizeWeights();
  return f;
}

}  // namespace

TEST_SUITE("achievability") {
  TEST_CASE("family cycle moments") {
    auto c = familyCycleMoments(RocFamily::single(4, 0.5, 0, 0.0), 6);
    // m^{j-2} q^{j-1}
    CHECK(c[0] == doctest::Approx(1.0));
    CHECK(c[1] == doctest::Approx(2.0));
    CHECK(c[3] == doctest::Approx(8.0));
    auto b = familyCycleMoments(RocFamily::single(8, 0.25, 1, 0.5), 8);
    CHECK(b[0] == 0.0);
    // 2 x (mq)^j with x = 1 / (2 m^2 q)
    CHECK(b[1] == doctest::Approx(1.0));
    CHECK(b[3] == doctest::Approx(4.0));
    CHECK(b[5] == doctest::Approx(16.0));
  }

  TEST_CASE("familyLimit by regime") {
    auto catalan = familyLimit(RocFamily::single(3, 0.5, 0, 0.25), 8);
    CHECK(catalan == qs({"0", "2", "0", "5", "0", "14"}));
    // One bipartite type matches the hypercube through k = 6 only.
    auto cube = familyLimit(RocFamily::single(8, 0.25, 1, 0.5), 8);
    CHECK(cube == qs({"0", "3", "0", "15", "0", "94"}));
    auto dense = familyLimit(RocFamily::single(0.5, 1.0, 0, 1.0), 4);
    CHECK(dense == qs({"1/2", "1/4"}));
  }

  TEST_CASE("hypercube limit is achieved exactly by one bipartite community") {
    auto r = checkAchievable(qs({"0", "3", "0", "15"}), Rational(1, 2), 6);
    REQUIRE(r.feasible());
    const auto& w = *r.witness;
    CHECK(w.residual == 0.0);
    REQUIRE(w.family.specs.size() == 1);
    CHECK(w.family.specs[0].beta == 1);
    CHECK(w.family.specs[0].m == doctest::Approx(8.0));
    CHECK(w.family.specs[0].q == doctest::Approx(0.25));
    CHECK(familyLimit(w.family, 6) == qs({"0", "3", "0", "15"}));
  }

  TEST_CASE("five-cycle doubling limit is not achievable") {
    auto r = checkAchievable(qs({"0", "3/4", "1/8", "5/8"}), Rational(1), 6);
    CHECK_FALSE(r.feasible());
    REQUIRE(r.infeasible.has_value());
    CHECK(r.infeasible->kind == InfeasibleKind::NecessaryCondition);
    CHECK(r.infeasible->condition == "w_3 w_6^2 >= w_5^3");
  }

  TEST_CASE("necessary conditions") {
    auto neg = checkAchievable(qs({"1", "-1"}), Rational(1), 4);
    CHECK(neg.infeasible->condition == "c_j >= 0");
    auto cs = checkAchievable(qs({"2", "3"}), Rational(1), 4);
    CHECK(cs.infeasible->condition == "c_j^2 <= c_{j-1} c_{j+1}");
    // Disjoint K4 ratios: c = (2, 2) has c_3^2 > c_4.
    CHECK_FALSE(checkKRatioAchievable(qs({"4", "4"})).feasible());
  }

  TEST_CASE("closed forms for k = 3 and k = 4") {
    auto three = checkAchievable(qs({"5/2"}), Rational(3, 4), 3);
    REQUIRE(three.feasible());
    CHECK(three.witness->family.specs[0].q == doctest::Approx(1.0));
    CHECK(three.witness->family.specs[0].m == doctest::Approx(2.5));
    auto four = checkAchievable(qs({"1", "2"}), Rational(3, 4), 4);
    REQUIRE(four.feasible());
    CHECK(four.witness->family.specs[0].m == doctest::Approx(4.0));
    CHECK(four.witness->family.specs[0].q == doctest::Approx(0.5));
    auto bip = checkAchievable(qs({"0", "9"}), Rational(1), 4);
    REQUIRE(bip.feasible());
    CHECK(bip.witness->family.specs[0].beta == 1);
    CHECK(bip.witness->family.specs[0].m == doctest::Approx(3.0));
    CHECK(bip.witness->family.specs[0].q == doctest::Approx(1.0));
  }

  TEST_CASE("zero targets") {
    auto eps = checkKRatioAchievable(qs({"0", "0", "0"}));
    REQUIRE(eps.feasible());
    CHECK(eps.witness->approximate);
    CHECK(eps.witness->residual < 1e-5);
    auto cat = checkAchievable(qs({"0", "2", "0", "5"}), Rational(1, 2), 6);
    REQUIRE(cat.feasible());
    CHECK(cat.witness->family.a < 0.5);
  }

  TEST_CASE("limits of random families are achievable (alpha = 1)") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
      auto f = randomFamily(rng, 1.0, t % 2 == 1);
      auto w = familyLimit(f, 8);
      auto r = checkAchievable(w, Rational(1), 8);
      CAPTURE(t);
      REQUIRE(r.feasible());
      CHECK(r.witness->residual <= 1e-8);
      auto back = familyCycleMoments(r.witness->family, 8);
      for (int j = 3; j <= 8; ++j) {
        const double target = toDouble(at3(w, j));
        CHECK(back[j - 3] == doctest::Approx(target).epsilon(1e-7).scale(1.0));
      }
    }
  }

  TEST_CASE("limits of random families are achievable (alpha = 1/2)") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 25; ++t) {
      auto f = randomFamily(rng, 0.5, true);
      auto w = familyLimit(f, 8);
      auto r = checkAchievable(w, Rational(1, 2), 8);
      CAPTURE(t);
      REQUIRE(r.feasible());
      CHECK(r.witness->residual <= 1e-8);
    }
  }

  TEST_CASE("buildRocFromMoments") {
    // Plain atom (x, t) = (1/4, 2): s_2 = 1, one community m = 2, q = 1.
    auto f = buildRocFromMoments({{0.25, 2.0}}, {}, 1.0, 0.0);
    REQUIRE(f.specs.size() == 1);
    CHECK(f.specs[0].m == doctest::Approx(2.0));
    CHECK(f.specs[0].q == doctest::Approx(1.0));
    CHECK_THROWS_AS(buildRocFromMoments({{1.0, 2.0}}, {}, 1.0, 0.0), Error);
    CHECK_THROWS_AS(buildRocFromMoments({}, {{1.0, 1.0}}, 0.0, 0.0), Error);
    CHECK_THROWS_AS(buildRocFromMoments({{0.25, 2.0}}, {}, 1.5, 0.0), Error);
  }
}
