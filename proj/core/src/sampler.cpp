#include "roc/sampler.hpp"

#include "roc/error.hpp"
#include "roc/numeric.hpp"
#include "roc/parallel.hpp"
#include "roc/rng.hpp"

#include <boost/math/special_functions/zeta.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace roc {

namespace {

constexpr std::size_t kRoundChunk = 1024;

// Indices in [0, n) selected independently with probability p, in order.
void bernoulliSubset(Stream& rng, std::uint64_t n, double p, std::vector<Vertex>& out) {
  out.clear();
  if (p <= 0.0) return;
  if (p >= 1.0) {
    out.resize(n);
    std::iota(out.begin(), out.end(), Vertex(0));
    return;
  }
  for (std::uint64_t i = rng.geometric(p); i < n;) {
    out.push_back(static_cast<Vertex>(i));
    std::uint64_t skip = rng.geometric(p);
    if (skip >= n) break;
    i += skip + 1;
  }
}

// G(|members|, q) on the given vertices.
void denseCommunity(Stream& rng, const std::vector<Vertex>& members, double q, std::vector<Edge>& out) {
  const std::uint64_t k = members.size();
  if (k < 2 || q <= 0.0) return;
  const std::uint64_t pairs = k * (k - 1) / 2;
  std::uint64_t row = 0, rowStart = 0;
  auto emit = [&](std::uint64_t idx) {
    while (idx >= rowStart + (k - 1 - row)) {
      rowStart += k - 1 - row;
      ++row;
    }
    std::uint64_t col = row + 1 + (idx - rowStart);
    Vertex u = members[row], v = members[col];
    out.emplace_back(std::min(u, v), std::max(u, v));
  };
  if (q >= 1.0) {
    for (std::uint64_t idx = 0; idx < pairs; ++idx) emit(idx);
    return;
  }
  for (std::uint64_t idx = rng.geometric(q); idx < pairs;) {
    emit(idx);
    std::uint64_t skip = rng.geometric(q);
    if (skip >= pairs) break;
    idx += skip + 1;
  }
}

// One fair coin per vertex, shared by every bipartite community of a sample,
// so the union of bipartite communities stays bipartite.
bool vertexSide(std::uint64_t seed, Vertex v) { return mix64(mix64(seed ^ 0x7369646573ULL) + v) >> 63; }

// Bipartite G(|S1|, |S2|, q) on the members split by vertexSide.
void bipartiteCommunity(Stream& rng, std::uint64_t seed, const std::vector<Vertex>& members, double q,
                        std::vector<Vertex>& side1, std::vector<Vertex>& side2, std::vector<Edge>& out) {
  side1.clear();
  side2.clear();
  for (Vertex v : members) (vertexSide(seed, v) ? side1 : side2).push_back(v);
  const std::uint64_t a = side1.size(), b = side2.size();
  const std::uint64_t pairs = a * b;
  if (pairs == 0 || q <= 0.0) return;
  auto emit = [&](std::uint64_t idx) {
    Vertex u = side1[idx / b], v = side2[idx % b];
    out.emplace_back(std::min(u, v), std::max(u, v));
  };
  if (q >= 1.0) {
    for (std::uint64_t idx = 0; idx < pairs; ++idx) emit(idx);
    return;
  }
  for (std::uint64_t idx = rng.geometric(q); idx < pairs;) {
    emit(idx);
    std::uint64_t skip = rng.geometric(q);
    if (skip >= pairs) break;
    idx += skip + 1;
  }
}

Graph assemble(std::size_t n, std::vector<std::vector<Edge>>& perChunk, SampleInfo* info) {
  std::size_t total = 0;
  for (const auto& c : perChunk) total += c.size();
  std::vector<Edge> edges;
  edges.reserve(total);
  for (auto& c : perChunk) {
    edges.insert(edges.end(), c.begin(), c.end());
    std::vector<Edge>().swap(c);
  }
  if (info) info->attemptedEdges = total;
  return Graph::fromEdges(n, std::move(edges));
}

}  // namespace

double RocFamily::x() const {
  double denom = 0.0;
  for (const auto& s : specs) denom += (s.beta ? 2.0 : 1.0) * s.weight * s.m * s.m * s.q;
  return 1.0 / denom;
}

void RocFamily::validate() const {
  if (specs.empty()) fail(ErrorKind::Parameter, "family has no community specs");
  if (!(a >= 0.0 && a <= 1.0)) fail(ErrorKind::Parameter, "exponent a must lie in [0, 1]");
  double total = 0.0;
  bool anyEdges = false;
  for (const auto& s : specs) {
    if (!(s.m > 0.0)) fail(ErrorKind::Parameter, "community size coefficient m must be positive");
    if (!(s.q >= 0.0 && s.q <= 1.0)) fail(ErrorKind::Parameter, "community density q must lie in [0, 1]");
    if (s.beta != 0 && s.beta != 1) fail(ErrorKind::Parameter, "beta must be 0 or 1");
    if (!(s.weight > 0.0 && s.weight <= 1.0)) fail(ErrorKind::Parameter, "weights must lie in (0, 1]");
    total += s.weight;
    anyEdges = anyEdges || s.q > 0.0;
  }
  if (std::abs(total - 1.0) > 1e-12) fail(ErrorKind::Parameter, "weights must sum to 1");
  if (!anyEdges) fail(ErrorKind::Parameter, "at least one community spec needs q > 0");
}

void RocFamily::normalizeWeights() {
  double total = 0.0;
  for (const auto& s : specs) total += s.weight;
  if (!(total > 0.0)) fail(ErrorKind::Parameter, "weights must be positive");
  for (auto& s : specs) s.weight /= total;
}

RocFamily RocFamily::single(double m, double q, int beta, double a) {
  RocFamily f;
  f.specs.push_back({m, q, beta, 1.0});
  f.a = a;
  return f;
}

std::uint64_t rocRoundCount(std::size_t n, double d, const RocFamily& family, RoundConvention convention) {
  family.validate();
  if (!(d > 0.0)) fail(ErrorKind::Parameter, "degree d must be positive");
  const auto& s = family.specs;
  if (convention == RoundConvention::Pairs && s.size() == 1 && s[0].beta == 0 && family.a == 0.0 &&
      s[0].m > 1.0)
    return roundHalfEven(static_cast<double>(n) * d / (s[0].m * (s[0].m - 1.0) * s[0].q));
  return roundHalfEven(family.x() * static_cast<double>(n) * std::pow(d, 1.0 - 2.0 * family.a));
}

Graph sampleRoc(std::size_t n, double d, const RocFamily& family, std::uint64_t seed,
                const SampleOptions& opt, SampleInfo* info) {
  if (n == 0) fail(ErrorKind::Parameter, "n must be positive");
  const std::uint64_t rounds = rocRoundCount(n, d, family, opt.rounds);
  SampleInfo local;
  SampleInfo& meta = info ? *info : local;
  meta.rounds = rounds;
  if (rounds == 0) meta.warnings.push_back("round count rounds to 0; returning the empty graph");

  const double scale = std::pow(d, family.a);
  std::vector<double> inclusion, cumulative;
  double acc = 0.0;
  for (const auto& s : family.specs) {
    const double size = s.m * scale;
    if (size > static_cast<double>(n))
      fail(ErrorKind::Parameter, "community size m d^a = " + formatDouble(size) + " exceeds n = " +
                                     std::to_string(n));
    double p = (s.beta ? 2.0 : 1.0) * size / static_cast<double>(n);
    if (p > 1.0) {
      meta.warnings.push_back("membership probability " + formatDouble(p) + " clamped to 1");
      p = 1.0;
    }
    inclusion.push_back(p);
    acc += s.weight;
    cumulative.push_back(acc);
  }
  cumulative.back() = 1.0;

  std::vector<std::vector<Edge>> perChunk(chunkCount(rounds, kRoundChunk));
  std::vector<std::vector<std::vector<Vertex>>> perChunkMembers(opt.recordMemberships ? perChunk.size() : 0);
  forEachChunk(rounds, kRoundChunk, opt.threads,
               [&](std::size_t c, std::size_t b, std::size_t e, unsigned) {
                 std::vector<Vertex> members, side1, side2;
                 auto& out = perChunk[c];
                 for (std::size_t r = b; r < e; ++r) {
                   Stream rng(seed, r);
                   double u = rng.uniform();
                   std::size_t idx = static_cast<std::size_t>(
                       std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
                   idx = std::min(idx, family.specs.size() - 1);
                   const auto& spec = family.specs[idx];
                   bernoulliSubset(rng, n, inclusion[idx], members);
                   if (opt.recordMemberships) perChunkMembers[c].push_back(members);
                   if (spec.beta)
                     bipartiteCommunity(rng, seed, members, spec.q, side1, side2, out);
                   else
                     denseCommunity(rng, members, spec.q, out);
                 }
               });
  for (auto& chunk : perChunkMembers)
    for (auto& m : chunk) meta.memberships.push_back(std::move(m));
  return assemble(n, perChunk, &meta);
}

Graph sampleRoc(std::size_t n, double d, double s, double q, std::uint64_t seed, const SampleOptions& opt,
                SampleInfo* info) {
  return sampleRoc(n, d, RocFamily::single(s, q, 0, 0.0), seed, opt, info);
}

Graph sampleErdosRenyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::Parameter, "edge probability must lie in [0, 1]");
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex(0));
  Stream rng(seed, 0);
  std::vector<std::vector<Edge>> out(1);
  denseCommunity(rng, all, p, out[0]);
  return assemble(n, out, nullptr);
}

double DegreeTarget::meanDegree() const {
  if (targets.empty()) return 0.0;
  return std::accumulate(targets.begin(), targets.end(), 0.0) / static_cast<double>(targets.size());
}

std::optional<std::size_t> drocInfeasibleVertex(const DegreeTarget& t, double s, double q) {
  if (q <= 0.0) return std::nullopt;
  const double bound = s * t.meanDegree() / q;
  for (std::size_t v = 0; v < t.targets.size(); ++v)
    if (t.targets[v] * t.targets[v] > bound * (1.0 + 1e-12)) return v;
  return std::nullopt;
}

std::uint64_t drocRoundCount(std::size_t n, double s, double q) {
  if (!(s > 1.0)) fail(ErrorKind::Parameter, "DROC needs s > 1");
  if (!(q > 0.0 && q <= 1.0)) fail(ErrorKind::Parameter, "DROC needs q in (0, 1]");
  return roundHalfEven(static_cast<double>(n) / ((s - 1.0) * q));
}

Graph sampleDroc(std::size_t n, const DegreeTarget& targets, double s, double q, std::uint64_t seed,
                 const SampleOptions& opt, SampleInfo* info) {
  if (n == 0 || targets.targets.size() != n)
    fail(ErrorKind::Parameter, "need one target degree per vertex");
  if (!(s > 1.0 && s <= static_cast<double>(n))) fail(ErrorKind::Parameter, "DROC needs 1 < s <= n");
  if (!(q >= 0.0 && q <= 1.0)) fail(ErrorKind::Parameter, "q must lie in [0, 1]");
  for (double t : targets.targets)
    if (!(t > 0.0)) fail(ErrorKind::Parameter, "target degrees must be positive");
  SampleInfo local;
  SampleInfo& meta = info ? *info : local;
  if (q == 0.0) {
    meta.rounds = 0;
    return Graph::fromEdges(n, {});
  }
  if (auto bad = drocInfeasibleVertex(targets, s, q)) {
    const double t = targets.targets[*bad];
    fail(ErrorKind::Parameter, "vertex " + std::to_string(*bad) + " has target " + formatDouble(t) +
                                   " with t^2 = " + formatDouble(t * t) + " > s d / q = " +
                                   formatDouble(s * targets.meanDegree() / q));
  }
  const std::uint64_t rounds = drocRoundCount(n, s, q);
  meta.rounds = rounds;
  const double coef = q / (s * targets.meanDegree());
  const double inclusion = s / static_cast<double>(n);
  const auto& t = targets.targets;

  std::vector<std::vector<Edge>> perChunk(chunkCount(rounds, kRoundChunk));
  forEachChunk(rounds, kRoundChunk, opt.threads,
               [&](std::size_t c, std::size_t b, std::size_t e, unsigned) {
                 std::vector<Vertex> members;
                 auto& out = perChunk[c];
                 for (std::size_t r = b; r < e; ++r) {
                   Stream rng(seed, r);
                   bernoulliSubset(rng, n, inclusion, members);
                   for (std::size_t i = 0; i < members.size(); ++i)
                     for (std::size_t j = i + 1; j < members.size(); ++j) {
                       Vertex u = members[i], v = members[j];
                       if (rng.bernoulli(coef * t[u] * t[v])) out.emplace_back(u, v);
                     }
                 }
               });
  return assemble(n, perChunk, &meta);
}

bool PowerLawTargets::feasible(double s, double q, double c) const {
  return s / q >= c * std::pow(static_cast<double>(n), 1.0 / (gamma - 1.0));
}

PowerLawTargets samplePowerLawTargets(std::size_t n, double gamma, std::uint64_t seed) {
  if (!(gamma > 2.0)) fail(ErrorKind::Parameter, "power-law exponent gamma must exceed 2");
  PowerLawTargets out;
  out.gamma = gamma;
  out.n = n;
  out.zetaRatio = boost::math::zeta(gamma - 1.0) / boost::math::zeta(gamma);
  out.maxTargetBound = std::pow(static_cast<double>(n), 2.0 / (gamma - 1.0));
  out.targets.targets.resize(n);
  // Devroye's rejection sampler for the zeta distribution.
  const double b = std::pow(2.0, gamma - 1.0);
  for (std::size_t v = 0; v < n; ++v) {
    Stream rng(seed, v);
    for (;;) {
      double u = rng.uniformPositive(), w = rng.uniform();
      double x = std::floor(std::pow(u, -1.0 / (gamma - 1.0)));
      if (!(x < 9.0e15)) continue;
      double t = std::pow(1.0 + 1.0 / x, gamma - 1.0);
      if (w * x * (t - 1.0) / (b - 1.0) <= t / b) {
        out.targets.targets[v] = x;
        break;
      }
    }
  }
  return out;
}

LayeredHypercubeLayout layeredHypercubeLayout(int d) {
  if (d < 1 || d > 20) fail(ErrorKind::Argument, "layered hypercube dimension must be in [1, 20]");
  LayeredHypercubeLayout l;
  l.d = d;
  std::uint64_t offset = 0;
  for (int i = 0; i <= d; ++i) {
    std::uint64_t size = binomial(d, i).convert_to<std::uint64_t>();
    l.layerSize.push_back(size);
    l.layerOffset.push_back(offset);
    offset += size;
  }
  for (int i = 0; i < d; ++i)
    l.crossProbability.push_back(static_cast<double>(d - i) / static_cast<double>(l.layerSize[i + 1]));
  return l;
}

LayeredC4Expectation layeredHypercubeExpectedC4(int d) {
  const auto l = layeredHypercubeLayout(d);
  auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
  LayeredC4Expectation e;
  for (int i = 0; i + 2 <= d; ++i) {
    double pi = l.crossProbability[i], pj = l.crossProbability[i + 1];
    e.threeLayer += 8.0 * static_cast<double>(l.layerSize[i]) * choose2(static_cast<double>(l.layerSize[i + 1])) *
                    static_cast<double>(l.layerSize[i + 2]) * pi * pi * pj * pj;
  }
  for (int i = 0; i + 1 <= d; ++i) {
    double p = l.crossProbability[i];
    e.twoLayer += 8.0 * choose2(static_cast<double>(l.layerSize[i])) *
                  choose2(static_cast<double>(l.layerSize[i + 1])) * p * p * p * p;
  }
  return e;
}

Graph sampleLayeredHypercube(int d, std::uint64_t seed) {
  if (d < 1 || d > 14) fail(ErrorKind::Argument, "layered hypercube sampling needs 1 <= d <= 14");
  const auto l = layeredHypercubeLayout(d);
  const std::size_t n = std::size_t(1) << d;
  std::vector<std::vector<Edge>> perLayer(d);
  for (int i = 0; i < d; ++i) {
    Stream rng(seed, static_cast<std::uint64_t>(i));
    const std::uint64_t a = l.layerSize[i], b = l.layerSize[i + 1];
    const std::uint64_t pairs = a * b;
    const double p = l.crossProbability[i];
    auto& out = perLayer[i];
    for (std::uint64_t idx = rng.geometric(p); idx < pairs;) {
      out.emplace_back(static_cast<Vertex>(l.layerOffset[i] + idx / b),
                       static_cast<Vertex>(l.layerOffset[i + 1] + idx % b));
      std::uint64_t skip = rng.geometric(p);
      if (skip >= pairs) break;
      idx += skip + 1;
    }
  }
  return assemble(n, perLayer, nullptr);
}

}  // namespace roc
