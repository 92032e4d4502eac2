#include "roc/achievability.hpp"

#include "roc/error.hpp"
#include "roc/transform.hpp"

#include <algorithm>
#include <cmath>

namespace roc {

namespace {

constexpr double kWitnessTolerance = 1e-8;

Rational catalan(unsigned n) { return Rational(binomial(2 * n, n)) / (n + 1); }

bool allZero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

InfeasibleReport necessary(std::string condition, std::string detail) {
  return {InfeasibleKind::NecessaryCondition, std::move(condition), std::move(detail)};
}

InfeasibleReport exhausted(std::string detail) {
  return {InfeasibleKind::SearchExhausted, "no witness under the search policy", std::move(detail)};
}

// Appends one entry above the value that would zero the next determinant
// when the length is odd, so the Gauss rule of the result has only
// positive atoms.
std::vector<Rational> padToEven(std::vector<Rational> mu) {
  if (mu.size() % 2 == 0) return mu;
  auto zeroed = extendTruncated(mu, mu.size() + 1).mu.back();
  mu.push_back(zeroed > 0 ? Rational(2 * zeroed) : Rational(zeroed + 1));
  return mu;
}

// A measure with the given moment sequence and positive atoms.
std::optional<DiscreteMeasure> representing(const std::vector<Rational>& mu) {
  auto diag = satisfiesStieltjes(mu);
  if (!diag.ok) return std::nullopt;
  try {
    return recoverAtoms(diag.firstZero >= 0 ? mu : padToEven(mu));
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Measure with moments (mass, tail...) of least mass <= budget.
struct Completion {
  Rational mass;
  DiscreteMeasure atoms;
};
std::optional<Completion> completeExact(const std::vector<Rational>& tail, const Rational& budget) {
  auto lead = minimalLeadingMoment(tail);
  if (!lead) return std::nullopt;
  Rational mass = lead->infimum;
  if (!lead->attained) {
    if (mass >= budget) return std::nullopt;
    mass = (mass + budget) / 2;
  }
  if (mass > budget) return std::nullopt;
  std::vector<Rational> mu{mass};
  mu.insert(mu.end(), tail.begin(), tail.end());
  auto atoms = representing(mu);
  if (!atoms) return std::nullopt;
  return Completion{mass, std::move(*atoms)};
}

// Residuals computed in floats leave determinants that should vanish at
// rounding size; retry on the prefix before the first such determinant.
std::optional<Completion> complete(const std::vector<Rational>& tail, const Rational& budget) {
  if (auto c = completeExact(tail, budget)) return c;
  std::vector<double> f;
  for (const auto& v : tail) f.push_back(toDouble(v));
  const int z = satisfiesStieltjes(f).firstZero;
  if (z <= 0 || z >= static_cast<int>(tail.size())) return std::nullopt;
  return completeExact(std::vector<Rational>(tail.begin(), tail.begin() + z), budget);
}

struct Split {
  double gamma;
  DiscreteMeasure plain;      // (x, t) with s_j = sum x t^j
  DiscreteMeasure bipartite;  // (x, u) with t_{2j} = 2 sum x u^j
  std::string route;
};

// nu: atoms carrying gamma s_j directly; lambda: atoms in u = tau^2 carrying
// (1 - gamma) t_j. Rescales both into the lemma normalizations.
Split makeSplit(const DiscreteMeasure& nu, const DiscreteMeasure& lambda, double gamma, std::string route) {
  Split s{gamma, {}, {}, std::move(route)};
  for (const auto& a : nu) s.plain.push_back({a.weight / gamma, a.position});
  for (const auto& a : lambda) s.bipartite.push_back({a.weight / (2.0 * (1.0 - gamma)), a.position});
  return s;
}

std::vector<Rational> evenEntries(const std::vector<Rational>& c, int k, int from) {
  std::vector<Rational> out;
  for (int j = from; j <= k; j += 2) out.push_back(at3(c, j));
  return out;
}

std::optional<Split> bipartiteRoute(const std::vector<Rational>& c, int k, InfeasibleReport& why) {
  // lambda in u; eta = u lambda has mass t_2 and moments c_4, c_6, ...
  auto tail = evenEntries(c, k, 4);
  auto lead = minimalLeadingMoment(tail);
  if (!lead) {
    why = necessary("even entries form a Stieltjes sequence", "c_4, c_6, ... admit no positive-support measure");
    return std::nullopt;
  }
  if (lead->infimum > 1 || (lead->infimum == 1 && !lead->attained)) {
    why = necessary("t_2 <= 1", "the smallest bipartite t_2 is " + formatDouble(toDouble(lead->infimum)));
    return std::nullopt;
  }
  auto eta = complete(tail, Rational(1));
  if (!eta) {
    why = exhausted("could not represent the even entries");
    return std::nullopt;
  }
  DiscreteMeasure lambda;
  for (const auto& a : eta->atoms) lambda.push_back({a.weight / a.position, a.position});
  return makeSplit({}, lambda, 0.0, "bipartite");
}

std::optional<Split> plainRoute(const std::vector<Rational>& c, int k) {
  // rho = tau^2 nu has mass s_2 and moments c_3, c_4, ...
  std::vector<Rational> tail;
  for (int j = 3; j <= k; ++j) tail.push_back(at3(c, j));
  auto rho = complete(tail, Rational(1));
  if (!rho) return std::nullopt;
  DiscreteMeasure nu;
  for (const auto& a : rho->atoms) nu.push_back({a.weight / (a.position * a.position), a.position});
  return makeSplit(nu, {}, 1.0, "plain");
}

// The odd entries fix sigma = tau^3 nu as a measure in u = tau^2. Candidate
// sigmas come from the Gauss rule of the odd sequence and from extensions
// whose next entry is raised above the zeroing value; the even remainder
// must be carried by bipartite communities.
std::optional<Split> mixedRoute(const std::vector<Rational>& c, int k, InfeasibleReport& why) {
  std::vector<Rational> odd;
  for (int j = 3; j <= k; j += 2) odd.push_back(at3(c, j));
  auto diag = satisfiesStieltjes(odd);
  if (!diag.ok) {
    why = necessary("odd entries form a Stieltjes sequence", "c_3, c_5, ...: " + diag.reason);
    return std::nullopt;
  }

  std::vector<DiscreteMeasure> candidates;
  auto add = [&](const std::vector<Rational>& mu) {
    if (auto m = representing(mu)) candidates.push_back(std::move(*m));
  };
  if (diag.firstZero >= 0) {
    add(odd);
  } else {
    // Targets rounded from floats leave a determinant that should vanish
    // slightly positive; the Gauss rule of the prefix before it comes first.
    std::vector<double> oddF;
    for (const auto& v : odd) oddF.push_back(toDouble(v));
    const int nearZero = satisfiesStieltjes(oddF).firstZero;
    if (nearZero > 0) add(std::vector<Rational>(odd.begin(), odd.begin() + nearZero));
    const Rational zeroed = extendTruncated(odd, odd.size() + 1).mu.back();
    if (odd.size() % 2 == 0) add(odd);
    const Rational base = zeroed != 0 ? Rational(abs(zeroed)) : Rational(1);
    for (const char* step : {"1e-6", "1e-3", "1e-2", "1e-1", "1", "10", "100"}) {
      auto mu = odd;
      mu.push_back(zeroed + base * parseRational(step));
      add(mu);
    }
  }

  for (const auto& sigma : candidates) {
    DiscreteMeasure nu;
    double plainMass = 0.0;
    for (const auto& a : sigma) {
      double tau = std::sqrt(a.position);
      double w = a.weight / (a.position * tau);
      nu.push_back({w, tau});
      plainMass += w * tau * tau;
    }
    if (plainMass > 1.0) continue;
    std::vector<Rational> residual;
    bool negative = false, zero = true;
    for (int j = 4; j <= k; j += 2) {
      double s = 0.0;
      for (const auto& a : nu) s += a.weight * std::pow(a.position, j);
      const double target = toDouble(at3(c, j));
      double r = target - s;
      if (r < -1e-12 * std::max(target, 1.0)) negative = true;
      if (std::abs(r) <= 1e-12 * std::max(target, 1.0)) r = 0.0;
      zero = zero && r == 0.0;
      residual.push_back(toRational(r));
    }
    if (negative) continue;
    if (zero) return makeSplit(nu, {}, 1.0, "odd-determined");
    auto eta = complete(residual, toRational(1.0 - plainMass));
    if (!eta) continue;
    DiscreteMeasure lambda;
    for (const auto& a : eta->atoms) lambda.push_back({a.weight / a.position, a.position});
    return makeSplit(nu, lambda, plainMass, "mixed");
  }
  why = exhausted("tried " + std::to_string(candidates.size()) + " odd-moment representations");
  return std::nullopt;
}

AchievabilityResult finish(std::vector<Rational> targets, const Split& split, double a, int k) {
  AchievabilityResult res;
  res.targets = std::move(targets);
  AchievabilityWitness w;
  w.gamma = split.gamma;
  w.plain = split.plain;
  w.bipartite = split.bipartite;
  w.route = split.route;
  w.family = buildRocFromMoments(split.plain, split.bipartite, split.gamma, a);
  w.achieved = familyCycleMoments(w.family, k);
  for (int j = 3; j <= k; ++j) {
    double t = toDouble(at3(res.targets, j));
    double d = std::abs(w.achieved[static_cast<std::size_t>(j - 3)] - t);
    w.residual = std::max(w.residual, t != 0.0 ? d / std::abs(t) : d);
  }
  if (w.residual > kWitnessTolerance) {
    res.infeasible = exhausted("witness from route '" + split.route + "' misses the targets by " +
                               formatDouble(w.residual));
    return res;
  }
  res.witness = std::move(w);
  return res;
}

AchievabilityResult solve(std::vector<Rational> c, int k, double a) {
  AchievabilityResult res;
  res.targets = c;

  for (int j = 3; j <= k; ++j)
    if (at3(c, j) < 0) {
      res.infeasible = necessary("c_j >= 0", "c_" + std::to_string(j) + " = " + toString(at3(c, j)));
      return res;
    }
  // Odd Cauchy-Schwarz with c_2 <= 1: c_j^2 <= c_{j-1} c_{j+1}.
  for (int j = 3; j + 1 <= k; j += 2) {
    Rational lower = j == 3 ? Rational(1) : at3(c, j - 1);
    if (at3(c, j) * at3(c, j) > lower * at3(c, j + 1)) {
      res.infeasible = necessary("c_j^2 <= c_{j-1} c_{j+1}", "fails at j = " + std::to_string(j) + " (c_2 = 1)");
      return res;
    }
  }
  if (k >= 6) {
    const auto &c3 = at3(c, 3), &c5 = at3(c, 5), &c6 = at3(c, 6);
    if (c3 * c6 * c6 < c5 * c5 * c5) {
      res.infeasible = necessary("w_3 w_6^2 >= w_5^3",
                                 toString(c3 * c6 * c6) + " < " + toString(c5 * c5 * c5));
      return res;
    }
  }

  if (allZero(c)) {
    AchievabilityWitness w;
    w.gamma = 1.0;
    w.approximate = true;
    w.route = "epsilon";
    w.family = RocFamily::single(2.0, kZeroTargetDelta, 0, a);
    w.plain = {{1.0 / (4.0 * kZeroTargetDelta), 2.0 * kZeroTargetDelta}};
    w.achieved = familyCycleMoments(w.family, k);
    for (double v : w.achieved) w.residual = std::max(w.residual, v);
    res.witness = std::move(w);
    return res;
  }

  if (k == 3) {
    const double m = toDouble(at3(c, 3));
    return finish(c, makeSplit({{1.0 / (m * m), m}}, {}, 1.0, "closed-form"), a, k);
  }
  if (k == 4) {
    const Rational &c3 = at3(c, 3), &c4 = at3(c, 4);
    if (c3 > 0) {
      const double m = toDouble(Rational(c4 * c4 / (c3 * c3 * c3))), q = toDouble(Rational(c3 * c3 / c4));
      const double t = m * q;
      return finish(c, makeSplit({{q / (t * t), t}}, {}, 1.0, "closed-form"), a, k);
    }
    // One bipartite community with q = 1 and m = sqrt(c_4).
    const double u = toDouble(c4);
    return finish(c, Split{0.0, {}, {{1.0 / (2.0 * u), u}}, "closed-form"}, a, k);
  }

  bool oddZero = true;
  for (int j = 3; j <= k; j += 2) oddZero = oddZero && at3(c, j) == 0;
  InfeasibleReport why;
  if (oddZero) {
    if (auto split = bipartiteRoute(c, k, why)) return finish(c, *split, a, k);
    res.infeasible = why;
    return res;
  }
  if (auto split = plainRoute(c, k)) return finish(c, *split, a, k);
  if (auto split = mixedRoute(c, k, why)) return finish(c, *split, a, k);
  res.infeasible = why;
  return res;
}

}  // namespace

std::vector<double> familyCycleMoments(const RocFamily& family, int k) {
  const long double x = family.x();
  std::vector<double> c;
  for (int j = 3; j <= k; ++j) {
    long double sum = 0.0L;
    for (const auto& s : family.specs) {
      if (s.beta && j % 2) continue;
      sum += (s.beta ? 2.0L : 1.0L) * s.weight * std::pow(static_cast<long double>(s.m) * s.q, j);
    }
    c.push_back(static_cast<double>(x * sum));
  }
  return c;
}

std::vector<Rational> familyCycleMomentsExact(const RocFamily& family, int k) {
  Rational denom = 0;
  for (const auto& s : family.specs)
    denom += Rational(s.beta ? 2 : 1) * toRational(s.weight) * pow(toRational(s.m), 2) * toRational(s.q);
  const Rational x = 1 / denom;
  std::vector<Rational> c;
  for (int j = 3; j <= k; ++j) {
    Rational sum = 0;
    for (const auto& s : family.specs) {
      if (s.beta && j % 2) continue;
      sum += Rational(s.beta ? 2 : 1) * toRational(s.weight) *
             pow(Rational(toRational(s.m) * toRational(s.q)), static_cast<unsigned>(j));
    }
    c.push_back(x * sum);
  }
  return c;
}

std::vector<Rational> familyLimit(const RocFamily& family, int k) {
  if (family.a < 0.5) {
    std::vector<Rational> w;
    for (int j = 3; j <= k; ++j) w.push_back(j % 2 ? Rational(0) : catalan(static_cast<unsigned>(j / 2)));
    return w;
  }
  auto c = familyCycleMomentsExact(family, k);
  return family.a == 0.5 ? cycleToWalk(c, k) : c;
}

RocFamily buildRocFromMoments(const DiscreteMeasure& plain, const DiscreteMeasure& bipartite, double gamma,
                              double a) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) fail(ErrorKind::Argument, "gamma must lie in [0, 1]");
  double s2 = 0.0, t2 = 0.0, plainMass = 0.0, bipartiteMass = 0.0;
  for (const auto& at : plain) {
    if (!(at.weight > 0.0 && at.position > 0.0)) fail(ErrorKind::Argument, "atoms need positive weight and position");
    s2 += at.weight * at.position * at.position;
    plainMass += at.weight;
  }
  for (const auto& at : bipartite) {
    if (!(at.weight > 0.0 && at.position > 0.0)) fail(ErrorKind::Argument, "atoms need positive weight and position");
    t2 += 2.0 * at.weight * at.position;
    bipartiteMass += at.weight;
  }
  if (s2 > 1.0 + 1e-12) fail(ErrorKind::Infeasible, "s_2 = " + formatDouble(s2) + " exceeds 1");
  if (t2 > 1.0 + 1e-12) fail(ErrorKind::Infeasible, "t_2 = " + formatDouble(t2) + " exceeds 1");
  s2 = std::min(s2, 1.0);
  t2 = std::min(t2, 1.0);
  const bool usePlain = !plain.empty() && gamma > 0.0;
  const bool useBipartite = !bipartite.empty() && gamma < 1.0;
  if (!usePlain && !useBipartite) fail(ErrorKind::Argument, "no atoms carry weight");

  const double z = (usePlain ? gamma * plainMass : 0.0) + (useBipartite ? (1.0 - gamma) * bipartiteMass : 0.0);
  RocFamily f;
  f.a = a;
  if (usePlain)
    for (const auto& at : plain) f.specs.push_back({at.position / s2, s2, 0, at.weight * gamma / z});
  if (useBipartite)
    for (const auto& at : bipartite)
      f.specs.push_back({std::sqrt(at.position) / t2, t2, 1, at.weight * (1.0 - gamma) / z});
  f.normalizeWeights();
  return f;
}

AchievabilityResult checkAchievable(const std::vector<Rational>& w, const Rational& alpha, int k) {
  if (alpha < Rational(1, 2) || alpha > 1) fail(ErrorKind::Argument, "alpha must lie in [1/2, 1]");
  if (k < 3 || w.size() < static_cast<std::size_t>(k - 2)) fail(ErrorKind::Argument, "need w_3..w_k");
  std::vector<Rational> target(w.begin(), w.begin() + (k - 2));
  const bool half = alpha == Rational(1, 2);
  std::vector<Rational> c = half ? walkToCycle(target, k) : target;
  if (half && allZero(c)) {
    // Any family with a < 1/2 has the Catalan limit.
    AchievabilityResult res;
    res.targets = c;
    AchievabilityWitness wit;
    wit.gamma = 1.0;
    wit.route = "catalan";
    wit.family = RocFamily::single(1.0, 1.0, 0, 0.25);
    wit.plain = {{1.0, 1.0}};
    wit.achieved.assign(static_cast<std::size_t>(k - 2), 0.0);
    res.witness = std::move(wit);
    return res;
  }
  return solve(std::move(c), k, toDouble(alpha));
}

AchievabilityResult checkKRatioAchievable(const std::vector<Rational>& ratios) {
  if (ratios.empty()) fail(ErrorKind::Argument, "need at least c_3");
  std::vector<Rational> c;
  for (const auto& r : ratios) c.push_back(r / 2);
  return solve(std::move(c), static_cast<int>(ratios.size()) + 2, 0.0);
}

}  // namespace roc
