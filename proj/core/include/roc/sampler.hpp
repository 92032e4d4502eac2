#pragma once

#include "roc/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace roc {

struct CommunitySpec {
  double m = 1.0;       // expected size is m d^a (per side when bipartite)
  double q = 0.0;       // internal edge probability
  int beta = 0;         // 1: bipartite community
  double weight = 1.0;  // selection probability mu_i
};

struct RocFamily {
  std::vector<CommunitySpec> specs;
  double a = 0.0;

  // 1 / (sum_{beta=0} mu m^2 q + 2 sum_{beta=1} mu m^2 q)
  double x() const;

  // Throws Error(Parameter) unless weights sum to 1 (1e-12), m > 0,
  // q in [0,1], beta in {0,1}, a in [0,1] and some q > 0.
  void validate() const;

  // Rescales weights to sum to 1.
  void normalizeWeights();

  static RocFamily single(double m, double q, int beta, double a);
};

enum class RoundConvention {
  // x n d^{1-2a}; the expected average degree is d.
  Degree,
  // n d / (s (s-1) q) for single non-bipartite specs with a = 0, s > 1
  // (expected degree d s / (s-1) under Bernoulli membership);
  // x n d^{1-2a} otherwise.
  Pairs,
};

struct SampleOptions {
  unsigned threads = 1;
  RoundConvention rounds = RoundConvention::Degree;
  // Experimental: keep each round's member list in SampleInfo.
  bool recordMemberships = false;
};

struct SampleInfo {
  std::uint64_t rounds = 0;
  std::uint64_t attemptedEdges = 0;
  std::vector<std::string> warnings;
  std::vector<std::vector<Vertex>> memberships;  // per round, when recorded
};

std::uint64_t rocRoundCount(std::size_t n, double d, const RocFamily& family,
                            RoundConvention convention = RoundConvention::Degree);

Graph sampleRoc(std::size_t n, double d, const RocFamily& family, std::uint64_t seed,
                const SampleOptions& opt = {}, SampleInfo* info = nullptr);

// Classical single-community ROC(n, d, s, q).
Graph sampleRoc(std::size_t n, double d, double s, double q, std::uint64_t seed,
                const SampleOptions& opt = {}, SampleInfo* info = nullptr);

// G(n, p).
Graph sampleErdosRenyi(std::size_t n, double p, std::uint64_t seed);

struct DegreeTarget {
  std::vector<double> targets;
  double meanDegree() const;
};

// max_v t(v)^2 <= s d / q; on failure returns the offending vertex.
std::optional<std::size_t> drocInfeasibleVertex(const DegreeTarget& t, double s, double q);

std::uint64_t drocRoundCount(std::size_t n, double s, double q);

Graph sampleDroc(std::size_t n, const DegreeTarget& targets, double s, double q, std::uint64_t seed,
                 const SampleOptions& opt = {}, SampleInfo* info = nullptr);

struct PowerLawTargets {
  DegreeTarget targets;
  double zetaRatio = 0.0;  // population mean zeta(gamma-1)/zeta(gamma)
  double maxTargetBound = 0.0;  // n^{2/(gamma-1)}

  // s/q >= c n^{1/(gamma-1)}
  bool feasible(double s, double q, double c = 1.0) const;
  double gamma = 0.0;
  std::size_t n = 0;
};

PowerLawTargets samplePowerLawTargets(std::size_t n, double gamma, std::uint64_t seed);

struct LayeredHypercubeLayout {
  int d = 0;
  std::vector<std::uint64_t> layerSize;    // C(d, i)
  std::vector<std::uint64_t> layerOffset;  // first vertex of layer i
  std::vector<double> crossProbability;    // p_i = (d - i) / C(d, i+1)
};

LayeredHypercubeLayout layeredHypercubeLayout(int d);

// Expected C_4 (walk convention) split by the layers a 4-cycle touches.
// threeLayer: one vertex in layer i, two in i+1, one in i+2, i.e.
// 8 sum_i l_i C(l_{i+1}, 2) l_{i+2} p_i^2 p_{i+1}^2. twoLayer: two vertices
// in each of two consecutive layers.
struct LayeredC4Expectation {
  double threeLayer = 0.0;
  double twoLayer = 0.0;
  double total() const { return threeLayer + twoLayer; }
};
LayeredC4Expectation layeredHypercubeExpectedC4(int d);

Graph sampleLayeredHypercube(int d, std::uint64_t seed);

}  // namespace roc
