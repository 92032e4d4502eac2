#include "roc/achievability.hpp"
#include "roc/error.hpp"
#include "roc/fitting.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include "rel.hpp"

#include <cmath>
#include <random>

using namespace roc;

namespace {

// R_j = 2 s^{j-2} q^{j-1} for one plain community type with a = 0.
double singleRatio(const RocFamily& f, int j) {
  const auto& c = f.specs.at(0);
  return 2.0 * std::pow(c.m, j - 2) * std::pow(c.q, j - 1);
}

}  // namespace

TEST_SUITE("fitting") {
  TEST_CASE("closed-form triangle and four-cycle fit") {
    auto r = fitTriangleFourCycle(2, 4);
    CHECK(r.route == "closed-form");
    CHECK_FALSE(r.approximate);
    REQUIRE(r.family.specs.size() == 1);
    CHECK(r.family.specs[0].m == doctest::Approx(4.0));
    CHECK(r.family.specs[0].q == doctest::Approx(0.5));
    CHECK(r.residual < 1e-9);

    auto big = fitTriangleFourCycle(3, 100);
    CHECK(big.family.specs[0].m == doctest::Approx(2e4 / 27));
    CHECK(big.family.specs[0].q == doctest::Approx(9.0 / 200));
    CHECK(singleRatio(big.family, 3) == doctest::Approx(3.0));
    CHECK(singleRatio(big.family, 4) == doctest::Approx(100.0));
  }

  TEST_CASE("random closed-form round trips") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> s(1.5, 200.0), q(0.01, 1.0);
    for (int i = 0; i < 200; ++i) {
      RocFamily f = RocFamily::single(s(rng), q(rng), 0, 0.0);
      auto r = fitTriangleFourCycle(singleRatio(f, 3), singleRatio(f, 4));
      CHECK(r.family.specs[0].m == test::rel(f.specs[0].m, 1e-9));
      CHECK(r.family.specs[0].q == test::rel(f.specs[0].q, 1e-9));
    }
  }

  TEST_CASE("boundary q = 1") {
    auto r = fitTriangleFourCycle(4, 8);
    CHECK_FALSE(r.approximate);
    CHECK(r.family.specs[0].q == doctest::Approx(1.0));
    CHECK(r.family.specs[0].m == doctest::Approx(2.0));
  }

  TEST_CASE("infeasible ratio pair falls back") {
    auto r = fitTriangleFourCycle(3, 3);
    CHECK(r.approximate);
    CHECK(r.route == "approximate");
    CHECK(r.family.specs[0].q == 1.0);
    CHECK(r.family.specs[0].m == doctest::Approx(1.5));
    REQUIRE(r.predicted.size() == 2);
    CHECK(r.predicted[0] == doctest::Approx(3.0));
    CHECK(r.predicted[1] == doctest::Approx(4.5));
    CHECK_FALSE(r.notes.empty());
  }

  TEST_CASE("zero triangles") {
    auto b = fitTriangleFourCycle(0, 18);
    CHECK(b.route == "bipartite");
    CHECK(b.family.specs[0].beta == 1);
    CHECK(b.family.specs[0].m == doctest::Approx(3.0));
    CHECK(b.residual < 1e-9);
    auto e = fitTriangleFourCycle(0, 0);
    CHECK(e.approximate);
    CHECK_THROWS_AS(fitTriangleFourCycle(-1, 2), Error);
    CHECK_THROWS_AS(fitTriangleFourCycle(1, NAN), Error);
  }

  TEST_CASE("four-term limits") {
    auto r = fitFourLimit(Rational(1), Rational(2), Rational(3, 4));
    CHECK(r.route == "closed-form");
    CHECK(r.family.specs[0].m == doctest::Approx(4.0));
    CHECK(r.family.specs[0].q == doctest::Approx(0.5));
    CHECK(r.family.a == doctest::Approx(0.75));
    CHECK(r.residual < 1e-9);

    auto cube = fitFourLimit(Rational(0), Rational(15), Rational(1, 2));
    CHECK(cube.route == "bipartite");
    CHECK(cube.family.specs[0].m == doctest::Approx(std::sqrt(13.0)));
    CHECK(cube.residual < 1e-9);

    auto half = fitFourLimit(Rational(1), Rational(4), Rational(1, 2));
    CHECK(half.residual < 1e-9);

    try {
      fitFourLimit(Rational(1), Rational(1, 2), Rational(3, 4));
      FAIL("expected infeasible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Infeasible);
      CHECK(std::string(e.what()).find("w4 >= w3^2") != std::string::npos);
    }
    CHECK_THROWS_AS(fitFourLimit(Rational(1), Rational(5, 2), Rational(1, 2)), Error);
    CHECK_THROWS_AS(fitFourLimit(Rational(1), Rational(2), Rational(1, 4)), Error);
  }

  TEST_CASE("fitted limits are achievable") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> num(1, 12), den(1, 6);
    int fitted = 0;
    for (int i = 0; i < 60; ++i) {
      Rational w3(num(rng), den(rng)), w4(num(rng), den(rng));
      if (w4 < w3 * w3) continue;
      auto r = fitFourLimit(w3, w4, Rational(1));
      auto check = checkAchievable({w3, w4}, Rational(1), 4);
      CHECK(check.feasible());
      CHECK(r.residual < 1e-9);
      ++fitted;
    }
    CHECK(fitted > 10);
  }

  TEST_CASE("fit from graphs") {
    auto k4s = test::disjointUnion(test::completeGraph(4), 5);
    auto tf = fitFromGraph(k4s);
    // R_3 = R_4 = 4, so c3^2 > 2 c4.
    CHECK(tf.approximate);
    CHECK(tf.targets == std::vector<double>{4.0, 4.0});

    GraphFitOptions five;
    five.kmax = 5;
    CHECK_THROWS_AS(fitFromGraph(k4s, five), Error);

    // Ratios (0, 0, 2): odd cycles need plain communities, which would
    // also give triangles.
    try {
      fitFromGraph(test::cycleGraph(5), five);
      FAIL("expected infeasible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Infeasible);
    }

    GraphFitOptions withDegree;
    withDegree.degree = 7.5;
    auto noted = fitFromGraph(test::completeGraph(6), withDegree);
    CHECK(noted.notes.back() == "matched degree d = 7.5");

    CHECK_THROWS_AS(fitFromGraph(Graph::fromEdges(3, {})), Error);
  }
}
