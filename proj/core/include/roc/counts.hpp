#pragma once

#include "roc/graph.hpp"
#include "roc/numeric.hpp"

#include <map>
#include <optional>
#include <vector>

namespace roc {

struct CountOptions {
  int walkCap = 16;
  int cycleCap = 10;
  unsigned threads = 1;
};

// W_k(G) = trace(A^k) for 2 <= k <= kmax, exact.
std::map<int, BigInt> walkCounts(const Graph& g, int kmax, const CountOptions& opt = {});

// C_k(G) for 3 <= k <= kmax in the walk convention: every k-cycle subgraph
// contributes 2k closed walks.
std::map<int, BigInt> cycleCounts(const Graph& g, int kmax, const CountOptions& opt = {});

// C_k(G, v): closed walks rooted at v that traverse a simple k-cycle
// (two per cycle through v). Sums to cycleCounts(g, k)[k].
std::vector<BigInt> perVertexCycleCounts(const Graph& g, int k, const CountOptions& opt = {});

struct CountReport {
  std::size_t n = 0;
  int kmax = 0;
  Rational avgDegree;
  double alpha = 1.0;
  std::map<int, BigInt> walkCounts;
  std::map<int, BigInt> cycleCounts;
  std::map<int, double> normalizedWalks;  // W_k / (n d^{1 + alpha (k-2)})
  std::map<int, double> cycleEdgeRatios;  // 2 C_k / (n d)

  // Number of k-cycle subgraphs, C_k / (2k).
  BigInt cycleSubgraphs(int k) const;
};

CountReport normalize(const Graph& g, const std::map<int, BigInt>& walks,
                      const std::map<int, BigInt>& cycles, double alpha);

// Exact W_k / (n d^{1 + alpha (k-2)}) when the exponent is an integer
// (alpha given as a rational); empty otherwise.
std::optional<Rational> normalizedWalkExact(const BigInt& walks, std::size_t n,
                                            const Rational& d, const Rational& alpha, int k);

double clusteringCoefficient(const Graph& g, Vertex v);

struct ClusteringSummary {
  double average = 0.0;         // over vertices of degree >= 2
  std::size_t counted = 0;
  double skippedFraction = 0.0;
};
ClusteringSummary averageClustering(const Graph& g);

// Local clustering for every vertex; NaN where the degree is below 2.
std::vector<double> localClustering(const Graph& g);

struct SpectrumOptions {
  std::size_t maxVertices = 2000;
};

// sum_i lambda_i^k from a dense symmetric eigensolve.
std::map<int, double> spectrumCheck(const Graph& g, int kmax, const SpectrumOptions& opt = {});
std::vector<double> adjacencySpectrum(const Graph& g, const SpectrumOptions& opt = {});

}  // namespace roc
