#include "roc/analysis.hpp"

#include "roc/achievability.hpp"
#include "roc/counts.hpp"
#include "roc/error.hpp"
#include "roc/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace roc {

namespace {

double logBinomialPmf(double N, double i, double p) {
  return std::lgamma(N + 1.0) - std::lgamma(i + 1.0) - std::lgamma(N - i + 1.0) + i * std::log(p) +
         (N - i) * std::log1p(-p);
}

}  // namespace

double expectedClusteringExact(double n, double d, double s, double q, CommunityCount count) {
  if (!(n > 0.0 && d > 0.0 && s > 0.0)) fail(ErrorKind::Parameter, "n, d and s must be positive");
  if (!(q >= 0.0 && q <= 1.0)) fail(ErrorKind::Parameter, "q must lie in [0, 1]");
  if (q == 0.0) return 0.0;
  const double communities = count == CommunityCount::SSquared ? n * d / (s * s * q) : n * d / (s * (s - 1.0) * q);
  const double N = std::floor(communities);
  if (N < 1.0) return 0.0;
  const double p = std::min(1.0, s / n);
  auto term = [&](double i) { return s * (s - 1.0) * q * q * q * i / std::pow(s * q * i + 2.0 - 2.0 * q, 2.0); };
  if (p == 1.0) return term(N);
  const double mean = N * p, sd = std::sqrt(N * p * (1.0 - p));
  const double lo = std::max(1.0, std::floor(mean - 40.0 * sd - 10.0));
  const double hi = std::min(N, std::ceil(mean + 40.0 * sd + 10.0));
  double total = 0.0;
  for (double i = lo; i <= hi; i += 1.0) total += std::exp(logBinomialPmf(N, i, p)) * term(i);
  return total;
}

RegimeFlags regimeFlags(double n, double d, double s, double q) {
  RegimeFlags f;
  f.dOverSqrtN = d / std::sqrt(n);
  f.dBelowExpCap = d < (s - 1.0) * q * std::exp(s * q);
  f.dOverSqLog = d / (s * q * std::log(n * d / s));
  f.s2q = s * s * q;
  f.sqOverD = s * q / d;
  return f;
}

ClusteringApprox expectedClusteringApprox(double n, double d, double s, double q) {
  ClusteringApprox r;
  r.regime = regimeFlags(n, d, s, q);
  if (q == 0.0) return r;
  const double base = (s - 1.0) * q * q / d;
  r.lower = base * (1.0 - n * d / (s * (s - 1.0) * q) * std::exp(-d / ((s - 1.0) * q)));
  r.upper = base * (1.0 + (s - 1.0) * q / d);
  r.point = s * q * q / d;
  return r;
}

DegreeClustering clusteringGivenDegree(double s, double q, double r) {
  if (!(r > 0.0)) fail(ErrorKind::Argument, "degree must be positive");
  return {s * q * q / r, r >= 2.0 * s * q};
}

ClusteringInterval drocExpectedClustering(const std::vector<double>& targets, double s, double q, double t) {
  if (targets.empty()) fail(ErrorKind::Argument, "targets must be nonempty");
  const double n = static_cast<double>(targets.size());
  const double d = std::accumulate(targets.begin(), targets.end(), 0.0) / n;
  double sq = 0.0;
  for (double v : targets) sq += v * v;
  const double scale = sq * sq / (d * d * d * n * n * s);
  const double e = 1.0 - std::exp(-t);
  return {scale * e * e * q * q, scale * (e * e * q * q + 6.2 * q * q * q)};
}

IsolationReport isolationDiagnostics(double n, double d, double s, double q) {
  IsolationReport r;
  if (!(q > 0.0 && s > 1.0)) fail(ErrorKind::Parameter, "need q > 0 and s > 1");
  r.c = d / ((s - 1.0) * q) - std::log(n);
  r.epsilon = 1.0 - d / ((s - 1.0) * q * std::exp(s * q));
  r.vertexCondition = r.epsilon > 0.0 && r.epsilon < 1.0;
  r.expectedIsolated = std::exp(-r.c) / (1.0 - std::clamp(r.epsilon, 0.0, 1.0 - 1e-12));
  r.communityLhs = d / q;
  r.communityRhs = std::log(n * d / (s * s * q));
  r.communityCondition = r.communityLhs > r.communityRhs;
  return r;
}

std::size_t countIsolated(const Graph& g) {
  std::size_t c = 0;
  for (Vertex v = 0; v < g.numVertices(); ++v) c += g.degree(v) == 0;
  return c;
}

bool communityGraphConnected(const std::vector<std::vector<Vertex>>& memberships, std::size_t n) {
  // Union-find over communities through shared vertices.
  std::vector<std::size_t> parent(memberships.size());
  std::iota(parent.begin(), parent.end(), std::size_t(0));
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, kNone);
  std::size_t nonempty = 0;
  for (std::size_t c = 0; c < memberships.size(); ++c) {
    if (memberships[c].empty()) continue;
    ++nonempty;
    for (Vertex v : memberships[c]) {
      if (v >= n) fail(ErrorKind::Argument, "member out of range");
      if (owner[v] == kNone)
        owner[v] = c;
      else
        parent[find(c)] = find(owner[v]);
    }
  }
  if (nonempty <= 1) return true;
  std::size_t root = kNone;
  for (std::size_t c = 0; c < memberships.size(); ++c) {
    if (memberships[c].empty()) continue;
    if (root == kNone)
      root = find(c);
    else if (find(c) != root)
      return false;
  }
  return true;
}

double deviationBound(double n, double d, double a, int k) {
  if (!(a >= 0.0 && a <= 1.0)) fail(ErrorKind::Argument, "a must lie in [0, 1]");
  if (!(n > 0.0 && d > 0.0)) fail(ErrorKind::Argument, "n and d must be positive");
  const double kk = k;
  if (a < 0.5)
    return std::pow(d, -1.0 + 2.0 * a) + std::pow(d, kk / 2.0 - 1.0) / n +
           std::pow(d, (kk - 1.0) * (2.0 * a - 1.0)) / n;
  if (a == 0.5) return std::pow(d, kk / 2.0 - 1.0) / n + std::pow(d, -0.5);
  if (a < 1.0) return std::pow(d, 1.0 - 2.0 * a) + std::pow(d, (1.0 - a) * (kk - 2.0)) / n;
  return 1.0 / d + d / n;
}

PredictionReport comparePrediction(double predicted, const std::vector<double>& samples, double relTolerance) {
  if (samples.empty()) fail(ErrorKind::Argument, "no samples");
  PredictionReport r;
  r.predicted = predicted;
  r.nSamples = samples.size();
  r.tolerance = relTolerance;
  const double m = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  double ss = 0.0;
  for (double x : samples) ss += (x - m) * (x - m);
  r.empiricalMean = m;
  r.empiricalStdErr =
      samples.size() > 1 ? std::sqrt(ss / static_cast<double>(samples.size() - 1) / static_cast<double>(samples.size()))
                         : 0.0;
  r.within = std::abs(m - predicted) <= relTolerance * std::abs(predicted);
  return r;
}

std::vector<DegreeBin> degreeBinnedClustering(const Graph& g, std::size_t width) {
  if (width == 0) width = std::max<std::size_t>(1, static_cast<std::size_t>(g.meanDegree() / 10.0));
  auto local = localClustering(g);
  std::vector<DegreeBin> bins;
  for (Vertex v = 0; v < g.numVertices(); ++v) {
    if (std::isnan(local[v])) continue;
    const std::size_t b = g.degree(v) / width;
    if (bins.size() <= b) bins.resize(b + 1);
    bins[b].count++;
    bins[b].meanClustering += local[v];
  }
  std::vector<DegreeBin> out;
  for (std::size_t b = 0; b < bins.size(); ++b) {
    if (bins[b].count == 0) continue;
    DegreeBin bin = bins[b];
    bin.lo = b * width;
    bin.hi = (b + 1) * width;
    bin.meanClustering /= static_cast<double>(bin.count);
    out.push_back(bin);
  }
  return out;
}

double degreeCeilingExponent(double a, int k, DegreeCeiling which) {
  if (!(a >= 0.0 && a <= 1.0)) fail(ErrorKind::Argument, "a must lie in [0, 1]");
  if (k < 3) fail(ErrorKind::Argument, "k must be at least 3");
  const double base = (1.0 - a) * k;
  const double denom = which == DegreeCeiling::Definition ? base + 2.0 * a - 1.0 : base + 1.0 - 2.0 * a;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / denom;
}

ConvergenceReport convergenceHarness(const RocFamily& family, const std::vector<std::pair<std::size_t, double>>& sizes,
                                     int k, const ConvergenceOptions& opt) {
  if (k < 3) fail(ErrorKind::Argument, "k must be at least 3");
  if (opt.samplesPer == 0) fail(ErrorKind::Argument, "samplesPer must be positive");
  ConvergenceReport report;
  report.alpha = std::max(family.a, 0.5);
  for (const auto& w : familyLimit(family, k)) report.limit.push_back(toDouble(w));
  Stream seeds(opt.seed, 0x636f6e76);
  for (const auto& [n, d] : sizes) {
    ConvergencePoint pt;
    pt.n = n;
    pt.d = d;
    std::vector<std::vector<double>> values(static_cast<std::size_t>(k - 2));
    for (std::size_t rep = 0; rep < opt.samplesPer; ++rep) {
      SampleOptions so;
      so.threads = opt.threads;
      Graph g = sampleRoc(n, d, family, seeds(), so);
      if (g.numEdges() == 0) continue;
      CountOptions co;
      co.threads = opt.threads;
      co.walkCap = std::max(k, co.walkCap);
      auto walks = walkCounts(g, k, co);
      const double dbar = g.meanDegree();
      for (int j = 3; j <= k; ++j)
        values[j - 3].push_back(toDouble(walks[j]) /
                                (static_cast<double>(n) * std::pow(dbar, 1.0 + report.alpha * (j - 2))));
    }
    for (int j = 3; j <= k; ++j) {
      const auto& v = values[j - 3];
      double mean = std::numeric_limits<double>::quiet_NaN(), se = 0.0;
      if (!v.empty()) {
        auto r = comparePrediction(report.limit[j - 3], v, 0.0);
        mean = r.empiricalMean;
        se = r.empiricalStdErr;
      }
      pt.mean.push_back(mean);
      pt.stdErr.push_back(se);
      pt.deviation.push_back(std::abs(mean - report.limit[j - 3]));
    }
    pt.boundScale = deviationBound(static_cast<double>(n), d, family.a, k);
    pt.degreeCeiling = std::pow(static_cast<double>(n), degreeCeilingExponent(family.a, k, opt.ceiling));
    pt.belowCeiling = d < pt.degreeCeiling;
    report.points.push_back(std::move(pt));
  }
  return report;
}

}  // namespace roc
