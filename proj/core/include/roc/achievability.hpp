#pragma once

#include "roc/moments.hpp"
#include "roc/numeric.hpp"
#include "roc/sampler.hpp"

#include <optional>
#include <string>
#include <vector>

namespace roc {

// c(3..k) of a family: x sum_{beta=0} mu (mq)^j, plus 2x sum_{beta=1} mu (mq)^j
// for even j.
std::vector<double> familyCycleMoments(const RocFamily& family, int k);
// The same in exact arithmetic on the binary values of the family's fields.
std::vector<Rational> familyCycleMomentsExact(const RocFamily& family, int k);

// The limit (w_3..w_k) the family achieves: Catalan numbers when a < 1/2,
// T(c) when a = 1/2, c itself when a > 1/2.
std::vector<Rational> familyLimit(const RocFamily& family, int k);

// plain: atoms (x_i, t_i) with s_j = sum x t^j and s_2 <= 1; each becomes
// (m = t / s_2, q = s_2, beta = 0). bipartite: atoms (x_i, u_i) with
// t_{2j} = 2 sum x u^j and t_2 <= 1; each becomes (m = sqrt(u) / t_2,
// q = t_2, beta = 1). Weights are x gamma / z and x (1 - gamma) / z with
// z = gamma sum_plain x + (1 - gamma) sum_bipartite x, so the family has
// normalization x = z. Throws Infeasible when s_2 or t_2 exceeds 1.
RocFamily buildRocFromMoments(const DiscreteMeasure& plain, const DiscreteMeasure& bipartite, double gamma,
                              double a);

enum class InfeasibleKind {
  // A condition every achievable vector satisfies fails.
  NecessaryCondition,
  // No witness under the search policy; achievability is not ruled out.
  SearchExhausted,
};

struct InfeasibleReport {
  InfeasibleKind kind = InfeasibleKind::NecessaryCondition;
  std::string condition;
  std::string detail;
};

struct AchievabilityWitness {
  double gamma = 0.0;
  RocFamily family;
  DiscreteMeasure plain;
  DiscreteMeasure bipartite;
  std::vector<double> achieved;  // c(3..k) of the family
  double residual = 0.0;         // max deviation from the targets, relative where nonzero
  bool approximate = false;      // epsilon construction for all-zero targets
  std::string route;
};

struct AchievabilityResult {
  std::vector<Rational> targets;  // the cycle moments c_3..c_k that were matched
  std::optional<AchievabilityWitness> witness;
  std::optional<InfeasibleReport> infeasible;
  bool feasible() const { return witness.has_value(); }
};

// w holds w_3..w_k. For alpha = 1/2 the targets are T^{-1}(w); above 1/2
// they are w itself.
AchievabilityResult checkAchievable(const std::vector<Rational>& w, const Rational& alpha, int k);

// ratios holds 2 C_j / (n d) for j = 3..k. Targets are ratios / 2 and the
// witness uses a = 0.
AchievabilityResult checkKRatioAchievable(const std::vector<Rational>& ratios);

// Epsilon used for all-zero targets: one community with m = 2, q = delta.
inline constexpr double kZeroTargetDelta = 1e-3;

}  // namespace roc
