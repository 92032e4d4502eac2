#include "roc/analysis.hpp"
#include "roc/achievability.hpp"
#include "roc/counts.hpp"
#include "roc/error.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include "rel.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <random>

using namespace roc;

namespace {

// Direct sum of P(Bin(N, s/n) = i) s(s-1) q^3 i / (s q i + 2 - 2q)^2 in
// plain doubles, for small N.
double directClustering(double n, double d, double s, double q) {
  const auto N = static_cast<int>(std::floor(n * d / (s * s * q)));
  const double p = s / n;
  double total = 0.0;
  for (int i = 1; i <= N; ++i) {
    double logp = std::lgamma(N + 1.0) - std::lgamma(i + 1.0) - std::lgamma(N - i + 1.0) + i * std::log(p) +
                  (N - i) * std::log1p(-p);
    double denom = s * q * i + 2.0 - 2.0 * q;
    total += std::exp(logp) * s * (s - 1.0) * q * q * q * i / (denom * denom);
  }
  return total;
}

// BFS over the vertex-community incidence graph.
bool connectedOracle(const std::vector<std::vector<Vertex>>& groups, std::size_t n) {
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (!groups[i].empty()) live.push_back(i);
  if (live.size() <= 1) return true;
  std::vector<std::vector<std::size_t>> byVertex(n);
  for (std::size_t i : live)
    for (Vertex v : groups[i]) byVertex[v].push_back(i);
  std::vector<char> seen(groups.size(), 0);
  std::queue<std::size_t> todo;
  todo.push(live[0]);
  seen[live[0]] = 1;
  std::size_t reached = 1;
  while (!todo.empty()) {
    auto c = todo.front();
    todo.pop();
    for (Vertex v : groups[c])
      for (auto o : byVertex[v])
        if (!seen[o]) seen[o] = 1, ++reached, todo.push(o);
  }
  return reached == live.size();
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("clustering point estimates") {
    CHECK(expectedClusteringApprox(10000, 25, 30, 0.2).point == doctest::Approx(0.048));
    CHECK(expectedClusteringApprox(10000, 25, 30, 0.1).point == doctest::Approx(0.012));
    auto zero = expectedClusteringApprox(10000, 25, 30, 0.0);
    CHECK(zero.point == 0.0);
    CHECK(zero.upper == 0.0);
    CHECK(expectedClusteringExact(10000, 25, 30, 0.0) == 0.0);
  }

  TEST_CASE("exact clustering sum against a direct sum") {
    for (auto [n, d, s, q] : {std::array{2000.0, 10.0, 10.0, 0.5}, {10000.0, 25.0, 30.0, 0.2}, {500.0, 6.0, 4.0, 1.0}}) {
      CHECK(expectedClusteringExact(n, d, s, q) == test::rel(directClustering(n, d, s, q), 1e-9));
    }
    const double s1 = expectedClusteringExact(10000, 25, 30, 0.2);
    const double s2 = expectedClusteringExact(10000, 25, 30, 0.2, CommunityCount::SSMinusOne);
    CHECK(s1 == test::rel(0.04836, 1e-3));
    // More communities per vertex lower the clustering slightly.
    CHECK(s2 < s1);
    CHECK(s2 == test::rel(s1, 0.05));
  }

  // Both bounds carry a (1 + o(1)) factor, read here as 5%.
  TEST_CASE("exact clustering lies between the bounds inside the regime") {
    int checked = 0;
    for (double n : {1e6, 1e7, 1e8})
      for (double d : {150.0, 250.0, 400.0, 800.0})
        for (double s : {10.0, 20.0})
          for (double q : {0.05, 0.1, 0.2}) {
            auto a = expectedClusteringApprox(n, d, s, q);
            const auto& f = a.regime;
            if (!(f.dSmall() && f.dLarge() && f.s2qLarge() && f.sqSmall())) continue;
            double exact = expectedClusteringExact(n, d, s, q);
            CHECK(exact >= 0.95 * a.lower);
            CHECK(exact <= 1.05 * a.upper);
            ++checked;
          }
    CHECK(checked > 0);
  }

  TEST_CASE("regime flags") {
    auto f = regimeFlags(1e6, 50, 10, 0.5);
    CHECK(f.dOverSqrtN == doctest::Approx(0.05));
    CHECK(f.s2q == doctest::Approx(50.0));
    CHECK(f.sqOverD == doctest::Approx(0.1));
    CHECK(f.dSmall());
    CHECK(f.s2qLarge());
    CHECK(f.sqSmall());
    CHECK(f.dOverSqLog == doctest::Approx(50.0 / (5.0 * std::log(1e6 * 50 / 10))));
  }

  TEST_CASE("clustering given the degree") {
    auto c = clusteringGivenDegree(30, 0.2, 25);
    CHECK(c.value == doctest::Approx(0.048));
    CHECK(c.valid);
    CHECK(clusteringGivenDegree(30, 0.2, 50).value == doctest::Approx(0.024));
    CHECK_FALSE(clusteringGivenDegree(30, 0.2, 11).valid);
    CHECK_THROWS_AS(clusteringGivenDegree(30, 0.2, 0), Error);
  }

  TEST_CASE("degree-dependent clustering in sampled graphs") {
    Graph g = sampleRoc(20000, 30, 20, 0.5, 7);
    auto bins = degreeBinnedClustering(g, 10);
    REQUIRE(bins.size() >= 3);
    std::size_t total = 0;
    for (const auto& b : bins) {
      CHECK(b.hi == b.lo + 10);
      total += b.count;
    }
    std::size_t eligible = 0;
    for (Vertex v = 0; v < g.numVertices(); ++v) eligible += g.degree(v) >= 2;
    CHECK(total == eligible);
    // Clustering falls with degree: compare the bins around d/2 and 2d.
    double low = 0, high = 0;
    for (const auto& b : bins) {
      if (b.lo == 10) low = b.meanClustering;
      if (b.lo == 60) high = b.meanClustering;
    }
    REQUIRE(low > 0);
    REQUIRE(high > 0);
    CHECK(low > 2.0 * high);
    CHECK(high == test::rel(clusteringGivenDegree(20, 0.5, 65).value, 0.3));
  }

  TEST_CASE("droc clustering interval") {
    std::vector<double> t(1000, 20.0);
    auto r = drocExpectedClustering(t, 40, 0.0, 20);
    CHECK(r.lower == 0.0);
    CHECK(r.upper == 0.0);
    auto p = drocExpectedClustering(t, 40, 0.5, 20);
    // (sum t^2)^2 / (d^3 n^2 s) = d / s for constant targets.
    const double e = 1.0 - std::exp(-20.0);
    CHECK(p.lower == doctest::Approx(0.5 * e * e * 0.25));
    CHECK(p.upper == doctest::Approx(0.5 * (e * e * 0.25 + 6.2 * 0.125)));
    CHECK_THROWS_AS(drocExpectedClustering({}, 40, 0.5, 20), Error);
  }

  TEST_CASE("isolation diagnostics") {
    const double n = 1e5, s = 10, q = 0.5;
    const double d = (s - 1) * q * (std::log(n) + 3.0);
    auto r = isolationDiagnostics(n, d, s, q);
    CHECK(r.c == doctest::Approx(3.0));
    CHECK(r.communityLhs == doctest::Approx(d / q));
    CHECK(r.communityRhs == doctest::Approx(std::log(n * d / (s * s * q))));
    CHECK(r.communityCondition);
    CHECK_THROWS_AS(isolationDiagnostics(n, d, 1.0, q), Error);
    CHECK_THROWS_AS(isolationDiagnostics(n, d, s, 0.0), Error);

    // d = (s-1) q e^{sq} (1 - eps)
    auto v = isolationDiagnostics(n, 4.5 * std::exp(5.0) * 0.75, s, q);
    CHECK(v.epsilon == doctest::Approx(0.25));
    CHECK(v.vertexCondition);
  }

  TEST_CASE("isolated vertex counting") {
    auto g = Graph::fromEdges(6, {{0, 1}, {1, 2}});
    CHECK(countIsolated(g) == 3);
    CHECK(countIsolated(test::completeGraph(4)) == 0);
  }

  TEST_CASE("community graph connectivity against BFS") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 30;
      std::uniform_int_distribution<int> count(0, 12), size(0, 4);
      std::uniform_int_distribution<Vertex> vertex(0, n - 1);
      std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(count(rng)));
      for (auto& g : groups) {
        int k = size(rng);
        for (int i = 0; i < k; ++i) g.push_back(vertex(rng));
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
      }
      CHECK(communityGraphConnected(groups, n) == connectedOracle(groups, n));
    }
    CHECK(communityGraphConnected({}, 5));
    CHECK(communityGraphConnected({{0, 1}, {}, {1, 2}}, 5));
    CHECK_FALSE(communityGraphConnected({{0, 1}, {2, 3}}, 5));
  }

  TEST_CASE("deviation bound cases") {
    const double n = 1e6, d = 100;
    CHECK(deviationBound(n, d, 0.25, 5) ==
          doctest::Approx(std::pow(d, -0.5) + std::pow(d, 1.5) / n + std::pow(d, 4 * -0.5) / n));
    CHECK(deviationBound(n, d, 0.5, 6) == doctest::Approx(d * d / n + 0.1));
    CHECK(deviationBound(n, d, 0.75, 4) == doctest::Approx(std::pow(d, -0.5) + std::pow(d, 0.5) / n));
    CHECK(deviationBound(n, d, 1.0, 4) == doctest::Approx(0.01 + 1e-4));
    CHECK_THROWS_AS(deviationBound(n, d, 1.5, 4), Error);
    CHECK_THROWS_AS(deviationBound(0, d, 0.5, 4), Error);
  }

  TEST_CASE("degree ceiling exponent") {
    CHECK(degreeCeilingExponent(0.5, 6) == doctest::Approx(1.0 / 3.0));
    CHECK(degreeCeilingExponent(0.5, 6, DegreeCeiling::Sequence) == doctest::Approx(1.0 / 3.0));
    CHECK(degreeCeilingExponent(0.0, 4) == doctest::Approx(1.0 / 3.0));
    CHECK(degreeCeilingExponent(0.0, 4, DegreeCeiling::Sequence) == doctest::Approx(1.0 / 5.0));
    CHECK(degreeCeilingExponent(0.75, 4) == doctest::Approx(1.0 / 1.5));
    CHECK(degreeCeilingExponent(0.75, 4, DegreeCeiling::Sequence) == doctest::Approx(1.0 / 0.5));
    CHECK(degreeCeilingExponent(1.0, 4) == doctest::Approx(1.0));
    CHECK(std::isinf(degreeCeilingExponent(1.0, 4, DegreeCeiling::Sequence)));
    CHECK_THROWS_AS(degreeCeilingExponent(1.5, 4), Error);
  }

  TEST_CASE("prediction comparison") {
    auto r = comparePrediction(1.0, {0.9, 1.1, 1.0, 1.0}, 0.05);
    CHECK(r.empiricalMean == doctest::Approx(1.0));
    CHECK(r.nSamples == 4);
    CHECK(r.empiricalStdErr == doctest::Approx(std::sqrt(0.02 / 3.0 / 4.0)));
    CHECK(r.within);
    CHECK_FALSE(comparePrediction(2.0, {1.0}, 0.1).within);
    CHECK(comparePrediction(2.0, {1.0}, 0.1).empiricalStdErr == 0.0);
    CHECK_THROWS_AS(comparePrediction(1.0, {}, 0.1), Error);
  }

  TEST_CASE("convergence harness") {
    auto fam = RocFamily::single(2, 0.5, 0, 1.0);
    ConvergenceOptions opt;
    opt.samplesPer = 3;
    opt.seed = 5;
    auto rep = convergenceHarness(fam, {{4000, 4}, {20000, 16}}, 4, opt);
    CHECK(rep.alpha == 1.0);
    REQUIRE(rep.limit.size() == 2);
    auto lim = familyLimit(fam, 4);
    CHECK(rep.limit[0] == doctest::Approx(toDouble(lim[0])));
    REQUIRE(rep.points.size() == 2);
    for (const auto& p : rep.points) {
      REQUIRE(p.mean.size() == 2);
      CHECK(std::isfinite(p.mean[0]));
      CHECK(p.boundScale == doctest::Approx(deviationBound(static_cast<double>(p.n), p.d, 1.0, 4)));
    }
    // a = 1, k = 4: d = o(n) either way.
    CHECK(rep.points[0].degreeCeiling == doctest::Approx(4000.0));
    CHECK(rep.points[0].belowCeiling);
    CHECK(rep.points[1].deviation[0] < rep.points[0].deviation[0]);
    CHECK(rep.points[1].deviation[0] < 0.1 * rep.limit[0]);
    CHECK_THROWS_AS(convergenceHarness(fam, {{100, 4}}, 2), Error);
  }
}
