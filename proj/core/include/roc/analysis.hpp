#pragma once

#include "roc/graph.hpp"
#include "roc/sampler.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace roc {

// Asymptotic factors below are replaced by unit constants. Every such value
// is a scale, not a bound.

enum class CommunityCount {
  SSquared,  // n d / (s^2 q)
  SSMinusOne,  // n d / (s (s - 1) q)
};

// sum_{i=1}^{N} Binom(N, s/n)(i) s(s-1) q^3 i / (s q i + 2 - 2q)^2 with N
// communities (floor of the real count), binomials in log space.
double expectedClusteringExact(double n, double d, double s, double q,
                               CommunityCount count = CommunityCount::SSquared);

struct RegimeFlags {
  double dOverSqrtN = 0.0;        // d = o(sqrt n)
  bool dBelowExpCap = false;      // d < (s-1) q e^{sq}
  double dOverSqLog = 0.0;        // d = omega(s q log(n d / s))
  double s2q = 0.0;               // s^2 q = omega(1)
  double sqOverD = 0.0;           // s q = o(d)
  // Each asymptotic flag read against unit constants: ratio <= 0.1 for o(.),
  // >= 10 for omega(.).
  bool dSmall() const { return dOverSqrtN <= 0.1; }
  bool dLarge() const { return dOverSqLog >= 10.0; }
  bool s2qLarge() const { return s2q >= 10.0; }
  bool sqSmall() const { return sqOverD <= 0.1; }
};

RegimeFlags regimeFlags(double n, double d, double s, double q);

struct ClusteringApprox {
  double lower = 0.0;  // (s-1) q^2 / d (1 - n d / (s (s-1) q) e^{-d / ((s-1) q)})
  double upper = 0.0;  // (s-1) q^2 / d (1 + (s-1) q / d)
  double point = 0.0;  // s q^2 / d
  RegimeFlags regime;
};

ClusteringApprox expectedClusteringApprox(double n, double d, double s, double q);

struct DegreeClustering {
  double value = 0.0;  // s q^2 / r
  bool valid = false;  // r >= 2 s q
};

DegreeClustering clusteringGivenDegree(double s, double q, double r);

struct ClusteringInterval {
  double lower = 0.0;  // c_t = 0
  double upper = 0.0;  // c_t = 6.2
};

// (sum t^2)^2 / (d^3 n^2 s) ((1 - e^{-t})^2 q^2 + c_t q^3), c_t in [0, 6.2).
ClusteringInterval drocExpectedClustering(const std::vector<double>& targets, double s, double q, double t);

struct IsolationReport {
  double c = 0.0;                  // d / ((s-1) q) - ln n
  double epsilon = 0.0;            // from d = (s-1) q e^{sq} (1 - epsilon)
  bool vertexCondition = false;    // epsilon in (0, 1)
  double expectedIsolated = 0.0;   // e^{-c} / (1 - epsilon), scale
  double communityLhs = 0.0;       // d / q
  double communityRhs = 0.0;       // log(n d / (s^2 q))
  bool communityCondition = false;
};

IsolationReport isolationDiagnostics(double n, double d, double s, double q);

std::size_t countIsolated(const Graph& g);

// Communities are adjacent when they share a vertex. Empty rounds are
// ignored; true when at most one community is nonempty.
bool communityGraphConnected(const std::vector<std::vector<Vertex>>& memberships, std::size_t n);

// The four-case order of P(|W_j(G, alpha) - w_j| > eps) with unit constants.
double deviationBound(double n, double d, double a, int k);

struct PredictionReport {
  double predicted = 0.0;
  double empiricalMean = 0.0;
  double empiricalStdErr = 0.0;
  std::size_t nSamples = 0;
  double tolerance = 0.0;  // relative
  bool within = false;
};

// Throws Error(Argument) on an empty sample.
PredictionReport comparePrediction(double predicted, const std::vector<double>& samples, double relTolerance);

struct DegreeBin {
  std::size_t lo = 0;  // inclusive
  std::size_t hi = 0;  // exclusive
  std::size_t count = 0;
  double meanClustering = 0.0;
};

// Vertices of degree >= 2 binned by degree; width 0 means max(1, d/10).
std::vector<DegreeBin> degreeBinnedClustering(const Graph& g, std::size_t width = 0);

// d = o(n^e) for a k-achievable sequence. Definition: e = 1 / ((1-a) k + 2a - 1);
// Sequence: e = 1 / ((1-a) k + 1 - 2a). The two readings differ for a != 1/2.
enum class DegreeCeiling { Definition, Sequence };
double degreeCeilingExponent(double a, int k, DegreeCeiling which = DegreeCeiling::Definition);

struct ConvergencePoint {
  std::size_t n = 0;
  double d = 0.0;
  std::vector<double> mean;       // W_j(G, alpha), j = 3..k
  std::vector<double> stdErr;
  std::vector<double> deviation;  // |mean - w_j|
  double boundScale = 0.0;        // deviationBound(n, d, a, k)
  double degreeCeiling = 0.0;     // n^e
  bool belowCeiling = false;      // d < n^e
};

struct ConvergenceReport {
  double alpha = 0.0;
  std::vector<double> limit;  // w_3..w_k
  std::vector<ConvergencePoint> points;
};

struct ConvergenceOptions {
  std::size_t samplesPer = 4;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  DegreeCeiling ceiling = DegreeCeiling::Definition;
};

// alpha = max(a, 1/2).
ConvergenceReport convergenceHarness(const RocFamily& family, const std::vector<std::pair<std::size_t, double>>& sizes,
                                     int k, const ConvergenceOptions& opt = {});

}  // namespace roc
