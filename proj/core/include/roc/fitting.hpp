#pragma once

#include "roc/graph.hpp"
#include "roc/numeric.hpp"
#include "roc/sampler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace roc {

struct FitResult {
  RocFamily family;
  std::vector<double> targets;    // what was asked for
  std::vector<double> predicted;  // what the family gives, same indexing
  double residual = 0.0;          // max relative deviation (absolute where the target is 0)
  bool approximate = false;
  std::string route;
  std::vector<std::string> notes;
};

// Cycle-to-edge ratios R_3 = c3, R_4 = c4 with one community type:
// s = 2 c4^2 / c3^3, q = c3^2 / (2 c4). When c3^2 > 2 c4, falls back to
// q = 1, s = c3 / 2 (c3 exact, R_4 = c3^2 / 2). When c3 = 0, a bipartite
// community with q = 1 and R_4 = 2 m^2. A closed form with s <= 1 goes
// through the k-ratio moment route. Throws Error(Argument) on negative
// input and Error(Infeasible) when no fit exists.
FitResult fitTriangleFourCycle(double c3, double c4);

struct GraphFitOptions {
  int kmax = 4;
  std::optional<double> degree;  // d for the matched model; default: average degree
};

// Fits the ratios 2 C_j / (n d) of g for j = 3..kmax.
FitResult fitFromGraph(const Graph& g, const GraphFitOptions& opt = {});

// Single-spec witness for the limit (w3, w4): a > 1/2 uses
// m = w4^2 / w3^3, q = w3^2 / w4; alpha = 1/2 replaces w4 with w4 - 2.
// w3 = 0 gives a bipartite community with q = 1 and m = sqrt(w4) (or
// sqrt(w4 - 2)). Throws Error(Infeasible) naming the failed inequality.
FitResult fitFourLimit(const Rational& w3, const Rational& w4, const Rational& alpha);

}  // namespace roc
