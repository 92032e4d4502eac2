#include "roc/fitting.hpp"

#include "roc/achievability.hpp"
#include "roc/counts.hpp"
#include "roc/error.hpp"

#include <algorithm>
#include <cmath>

namespace roc {

namespace {

double maxRelative(const std::vector<double>& target, const std::vector<double>& got) {
  double r = 0.0;
  for (std::size_t i = 0; i < target.size() && i < got.size(); ++i) {
    const double diff = std::abs(got[i] - target[i]);
    r = std::max(r, target[i] != 0.0 ? diff / std::abs(target[i]) : diff);
  }
  return r;
}

// 2 c_j for a = 0 families.
std::vector<double> ratiosOf(const RocFamily& f, int k) {
  auto c = familyCycleMoments(f, k);
  for (auto& v : c) v *= 2.0;
  return c;
}

FitResult finishRatios(RocFamily family, std::vector<double> targets, std::string route) {
  FitResult r;
  r.predicted = ratiosOf(family, static_cast<int>(targets.size()) + 2);
  r.residual = maxRelative(targets, r.predicted);
  r.family = std::move(family);
  r.targets = std::move(targets);
  r.route = std::move(route);
  return r;
}

[[noreturn]] void raise(const InfeasibleReport& why) {
  fail(ErrorKind::Infeasible, why.condition + (why.detail.empty() ? "" : ": " + why.detail));
}

FitResult fromAchievability(const AchievabilityResult& res, std::vector<double> targets) {
  if (!res.feasible()) raise(*res.infeasible);
  const auto& w = *res.witness;
  FitResult r = finishRatios(w.family, std::move(targets), "moments:" + w.route);
  r.approximate = w.approximate;
  return r;
}

std::vector<Rational> exact(const std::vector<double>& v) {
  std::vector<Rational> out;
  for (double x : v) out.push_back(toRational(x));
  return out;
}

}  // namespace

FitResult fitTriangleFourCycle(double c3, double c4) {
  if (!(c3 >= 0.0 && c4 >= 0.0) || !std::isfinite(c3) || !std::isfinite(c4))
    fail(ErrorKind::Argument, "ratios must be finite and nonnegative");
  const std::vector<double> targets{c3, c4};
  if (c3 == 0.0) {
    if (c4 == 0.0) return fromAchievability(checkKRatioAchievable(exact(targets)), targets);
    return finishRatios(RocFamily::single(std::sqrt(c4 / 2.0), 1.0, 1, 0.0), targets, "bipartite");
  }
  if (c3 * c3 > 2.0 * c4) {
    FitResult r = finishRatios(RocFamily::single(c3 / 2.0, 1.0, 0, 0.0), targets, "approximate");
    r.approximate = true;
    r.notes.push_back("c3^2 > 2 c4: matched c3 with q = 1; R_4 off by " +
                      formatDouble(std::abs(r.predicted[1] - c4)));
    if (c3 / 2.0 <= 1.0) r.notes.push_back("community size " + formatDouble(c3 / 2.0) + " is at most 1");
    return r;
  }
  const double s = 2.0 * c4 * c4 / (c3 * c3 * c3);
  const double q = std::min(1.0, c3 * c3 / (2.0 * c4));
  if (s <= 1.0) {
    FitResult r = fromAchievability(checkKRatioAchievable(exact(targets)), targets);
    r.notes.push_back("closed form gives s = " + formatDouble(s) + " <= 1");
    return r;
  }
  return finishRatios(RocFamily::single(s, q, 0, 0.0), targets, "closed-form");
}

FitResult fitFromGraph(const Graph& g, const GraphFitOptions& opt) {
  if (g.numVertices() == 0) fail(ErrorKind::Argument, "graph is empty");
  if (g.numEdges() == 0) fail(ErrorKind::Degenerate, "graph has no edges");
  if (opt.kmax < 3) fail(ErrorKind::Argument, "kmax must be at least 3");
  auto cycles = cycleCounts(g, opt.kmax);
  const Rational nd = Rational(2 * g.numEdges());
  std::vector<Rational> ratios;
  std::vector<double> targets;
  for (int j = 3; j <= opt.kmax; ++j) {
    ratios.push_back(Rational(2 * cycles[j]) / nd);
    targets.push_back(toDouble(ratios.back()));
  }
  FitResult r = opt.kmax == 4 && targets[0] > 0.0 ? fitTriangleFourCycle(targets[0], targets[1])
                                                  : fromAchievability(checkKRatioAchievable(ratios), targets);
  const double d = opt.degree.value_or(g.meanDegree());
  r.notes.push_back("matched degree d = " + formatDouble(d));
  return r;
}

FitResult fitFourLimit(const Rational& w3, const Rational& w4, const Rational& alpha) {
  if (alpha < Rational(1, 2) || alpha > 1) fail(ErrorKind::Argument, "alpha must lie in [1/2, 1]");
  if (w3 < 0) fail(ErrorKind::Infeasible, "w3 >= 0 fails");
  const bool half = alpha == Rational(1, 2);
  const Rational c4 = half ? w4 - 2 : w4;
  if (half && c4 < w3 * w3)
    fail(ErrorKind::Infeasible, "w4 >= w3^2 + 2 fails: w4 = " + toString(w4) + ", w3^2 + 2 = " + toString(w3 * w3 + 2));
  if (!half && c4 < w3 * w3)
    fail(ErrorKind::Infeasible, "w4 >= w3^2 fails: w4 = " + toString(w4) + ", w3^2 = " + toString(w3 * w3));
  const double a = toDouble(alpha);
  RocFamily family;
  std::string route;
  if (w3 == 0) {
    if (c4 == 0) fail(ErrorKind::Infeasible, "w4 > " + std::string(half ? "2" : "0") + " needed when w3 = 0");
    family = RocFamily::single(std::sqrt(toDouble(c4)), 1.0, 1, a);
    route = "bipartite";
  } else {
    family = RocFamily::single(toDouble(c4 * c4 / (w3 * w3 * w3)), toDouble(w3 * w3 / c4), 0, a);
    route = "closed-form";
  }
  FitResult r;
  r.targets = {toDouble(w3), toDouble(w4)};
  for (const auto& v : familyLimit(family, 4)) r.predicted.push_back(toDouble(v));
  r.residual = maxRelative(r.targets, r.predicted);
  r.family = std::move(family);
  r.route = route;
  return r;
}

}  // namespace roc
