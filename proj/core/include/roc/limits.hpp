#pragma once

#include "roc/graph.hpp"
#include "roc/numeric.hpp"

#include <map>
#include <vector>

namespace roc {

// Vertex counts are capped at 2^16.
Graph hypercubeGraph(int d);
// {0..k-1}^d, adjacent at Hamming distance 1.
Graph hammingGraph(int d, int k);
// {0..k-1}^d, adjacent when the labels differ by +-e_i mod k.
Graph cayleyGraph(int d, int k);
// K_k box K_k.
Graph rookGraph(int k);

struct LimitVector {
  Rational alpha;
  std::vector<Rational> values;  // w_3..w_k
};

// w_j = 0 for odd j and (j-1)!! for even j, alpha = 1/2; kmax <= 30.
LimitVector hypercubeLimit(int kmax);
// s_1..s_nmax with s_1 = 1, s_n = (n-1) sum_{j<n} s_j s_{n-j}.
std::vector<BigInt> hypercubeCycleSeq(int nmax);
// w_j = 2^{2-j}, alpha = 1.
LimitVector rookLimit(int kmax);

// Limits of G(n^{2l}, n^{2-2l}) for l > 1.
struct ErLimit {
  int regime = 0;       // 1: k < 2l, 2: k = 2l, 3: k > 2l
  double alpha = 0.5;   // k-sparsity exponent
  std::vector<Rational> values;  // w_3..w_k
  double fullAlpha = 1.0;        // the full limit is all zeros with exponent 1
};
ErLimit erLimit(double ell, int k);
// d^j + Cat_{j/2} n d^{j/2} (second term for even j only); lower-order
// terms dropped.
double erExpectedWalks(double n, double d, int j);

// Adjacency [[A, A], [A, A]] applied i times.
Graph doublingSequence(const Graph& g0, int i);
Graph disjointCopies(const Graph& g, int t);

struct SeriesPoint {
  std::size_t n = 0;
  double d = 0.0;
  std::map<int, BigInt> walks;
};

struct SparsityEstimate {
  std::map<int, double> perK;       // slope of log(W_j/(n d)) on (j-2) log d, clamped
  std::map<int, double> rawSlope;   // before clamping
  std::map<int, double> residualRms;
  double alpha = 0.5;               // max over j of perK
};
// Needs >= 3 points with strictly increasing d; j with a zero count are
// skipped.
SparsityEstimate estimateSparsityExponent(const std::vector<SeriesPoint>& series, int kmax);

struct LayeredMatrix {
  std::vector<std::vector<double>> matrix;  // (d+1) x (d+1)
  std::vector<double> eigenvalues;          // ascending
  double maxDeviation = 0.0;                // from {-d + 2i}
};
// Reduced layered hypercube operator: M[i][i+1] = i + 1, M[i+1][i] = d - i.
LayeredMatrix layeredHypercubeMatrix(int d);

}  // namespace roc
