#include "roc/counts.hpp"

#include "roc/error.hpp"
#include "roc/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace roc {

namespace {

using Int128 = __int128;

constexpr std::size_t kVertexChunk = 128;

// Sparse vector over vertices: dense values plus the list of touched slots.
template <class T>
struct Level {
  std::vector<T> value;
  std::vector<Vertex> support;
};

template <class T>
struct WalkWorkspace {
  std::vector<Level<T>> levels;

  void prepare(std::size_t n, int depth) {
    if (levels.size() == static_cast<std::size_t>(depth + 1) &&
        (levels.empty() || levels[0].value.size() == n))
      return;
    levels.assign(depth + 1, Level<T>{std::vector<T>(n, T(0)), {}});
  }
};

// Adds sum_v (A^a e_v) . (A^b e_v) for a = floor(k/2), b = ceil(k/2) to
// totals[k], for v in [begin, end).
template <class T>
void walkChunk(const Graph& g, int kmax, std::size_t begin, std::size_t end,
               WalkWorkspace<T>& ws, std::vector<T>& totals) {
  const int depth = (kmax + 1) / 2;
  for (std::size_t v = begin; v < end; ++v) {
    ws.levels[0].value[v] = T(1);
    ws.levels[0].support.push_back(static_cast<Vertex>(v));
    for (int i = 1; i <= depth; ++i) {
      auto& prev = ws.levels[i - 1];
      auto& cur = ws.levels[i];
      for (Vertex u : prev.support) {
        const T& x = prev.value[u];
        for (Vertex w : g.neighbors(u)) {
          if (cur.value[w] == 0) cur.support.push_back(w);
          cur.value[w] += x;
        }
      }
    }
    for (int k = 2; k <= kmax; ++k) {
      const auto& la = ws.levels[k / 2];
      const auto& lb = ws.levels[k - k / 2];
      T s(0);
      for (Vertex u : la.support) s += la.value[u] * lb.value[u];
      totals[k] += s;
    }
    for (auto& level : ws.levels) {
      for (Vertex u : level.support) level.value[u] = T(0);
      level.support.clear();
    }
  }
}

template <class T>
std::map<int, BigInt> walkCountsImpl(const Graph& g, int kmax, unsigned threads) {
  const std::size_t n = g.numVertices();
  const std::size_t chunks = chunkCount(n, kVertexChunk);
  std::vector<std::vector<T>> perChunk(chunks, std::vector<T>(kmax + 1, T(0)));
  std::vector<WalkWorkspace<T>> workspaces(workerCount(n, kVertexChunk, threads));
  forEachChunk(n, kVertexChunk, threads,
               [&](std::size_t c, std::size_t b, std::size_t e, unsigned worker) {
                 auto& ws = workspaces[worker];
                 ws.prepare(n, (kmax + 1) / 2);
                 walkChunk(g, kmax, b, e, ws, perChunk[c]);
               });
  std::map<int, BigInt> out;
  for (int k = 2; k <= kmax; ++k) {
    BigInt total = 0;
    for (const auto& chunk : perChunk) {
      if constexpr (std::is_same_v<T, Int128>) {
        // cpp_int has no __int128 constructor on all toolchains; split.
        Int128 x = chunk[k];
        bool neg = x < 0;
        unsigned __int128 ux = neg ? static_cast<unsigned __int128>(-x) : static_cast<unsigned __int128>(x);
        BigInt part = static_cast<std::uint64_t>(ux >> 64);
        part <<= 64;
        part += static_cast<std::uint64_t>(ux);
        total += neg ? BigInt(-part) : part;
      } else {
        total += chunk[k];
      }
    }
    out[k] = total;
  }
  return out;
}

void checkWalkRange(int kmax, int cap) {
  if (kmax < 2 || kmax > cap)
    fail(ErrorKind::Argument, "walk length must be in [2, " + std::to_string(cap) + "], got " +
                                  std::to_string(kmax));
}

void checkCycleRange(int k, int cap, const char* what) {
  if (k < 3 || k > cap)
    fail(ErrorKind::Argument, std::string(what) + " must be in [3, " + std::to_string(cap) +
                                  "], got " + std::to_string(k) +
                                  "; enumeration cost grows exponentially, raise the cap explicitly");
}

struct CycleWorkspace {
  std::vector<char> onPath;
  std::vector<char> closesToStart;
  std::vector<Vertex> path;
};

// Enumerates simple paths start -> ... with all vertices greater than start.
// Every cycle whose minimum vertex is start is reached once per direction.
template <class OnCycle>
void cycleSearch(const Graph& g, Vertex start, int kmax, CycleWorkspace& ws, OnCycle&& onCycle) {
  for (Vertex w : g.neighbors(start)) ws.closesToStart[w] = 1;
  ws.path.assign(1, start);
  ws.onPath[start] = 1;

  auto recurse = [&](auto&& self, Vertex u) -> void {
    const int len = static_cast<int>(ws.path.size());  // vertices on the path
    if (len >= 3 && ws.closesToStart[u]) onCycle(len, ws.path);
    if (len == kmax) return;
    auto nb = g.neighbors(u);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), start); it != nb.end(); ++it) {
      Vertex w = *it;
      if (ws.onPath[w]) continue;
      ws.onPath[w] = 1;
      ws.path.push_back(w);
      self(self, w);
      ws.path.pop_back();
      ws.onPath[w] = 0;
    }
  };
  recurse(recurse, start);

  ws.onPath[start] = 0;
  for (Vertex w : g.neighbors(start)) ws.closesToStart[w] = 0;
}

BigInt fromU128(unsigned __int128 x) {
  BigInt r = static_cast<std::uint64_t>(x >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(x);
  return r;
}

}  // namespace

std::map<int, BigInt> walkCounts(const Graph& g, int kmax, const CountOptions& opt) {
  checkWalkRange(kmax, opt.walkCap);
  // Entries of A^j e_v are at most Delta^j; every partial sum is at most
  // n * Delta^k. Stay in 128-bit arithmetic only when that cannot overflow.
  double delta = std::max<double>(1.0, static_cast<double>(g.maxDegree()));
  double bits = std::log2(std::max<double>(1.0, static_cast<double>(g.numVertices()))) +
                kmax * std::log2(delta);
  if (bits < 124.0) return walkCountsImpl<Int128>(g, kmax, opt.threads);
  return walkCountsImpl<BigInt>(g, kmax, opt.threads);
}

std::map<int, BigInt> cycleCounts(const Graph& g, int kmax, const CountOptions& opt) {
  checkCycleRange(kmax, opt.cycleCap, "cycle length");
  std::map<int, BigInt> out;
  const std::size_t n = g.numVertices();

  if (kmax <= 4) {
    // Closed 3-walks are exactly triangle traversals; closed 4-walks are
    // 4-cycle traversals plus 2 sum_v deg(v)^2 - 2|E| degenerate walks.
    auto walks = walkCounts(g, kmax, CountOptions{std::max(opt.walkCap, 4), opt.cycleCap, opt.threads});
    out[3] = walks[3];
    if (kmax == 4) {
      BigInt sq = 0;
      for (Vertex v = 0; v < n; ++v) sq += BigInt(g.degree(v)) * g.degree(v);
      out[4] = walks[4] - 2 * sq + 2 * BigInt(g.numEdges());
    }
    return out;
  }

  const std::size_t chunks = chunkCount(n, kVertexChunk);
  std::vector<std::vector<unsigned __int128>> perChunk(chunks, std::vector<unsigned __int128>(kmax + 1, 0));
  std::vector<CycleWorkspace> workspaces(workerCount(n, kVertexChunk, opt.threads));
  forEachChunk(n, kVertexChunk, opt.threads,
               [&](std::size_t c, std::size_t b, std::size_t e, unsigned worker) {
                 auto& ws = workspaces[worker];
                 if (ws.onPath.size() != n) {
                   ws.onPath.assign(n, 0);
                   ws.closesToStart.assign(n, 0);
                 }
                 auto& tally = perChunk[c];
                 for (std::size_t s = b; s < e; ++s)
                   cycleSearch(g, static_cast<Vertex>(s), kmax, ws,
                               [&](int len, const std::vector<Vertex>&) { ++tally[len]; });
               });
  for (int k = 3; k <= kmax; ++k) {
    unsigned __int128 directed = 0;
    for (const auto& t : perChunk) directed += t[k];
    // directed = 2 * (number of k-cycle subgraphs); walk convention is 2k each.
    out[k] = fromU128(directed) * k;
  }
  return out;
}

std::vector<BigInt> perVertexCycleCounts(const Graph& g, int k, const CountOptions& opt) {
  checkCycleRange(k, opt.cycleCap, "cycle length");
  const std::size_t n = g.numVertices();
  const unsigned workers = workerCount(n, kVertexChunk, opt.threads);
  std::vector<std::vector<std::uint64_t>> perWorker(workers, std::vector<std::uint64_t>(n, 0));
  std::vector<CycleWorkspace> workspaces(workers);
  forEachChunk(n, kVertexChunk, opt.threads,
               [&](std::size_t, std::size_t b, std::size_t e, unsigned worker) {
                 auto& ws = workspaces[worker];
                 if (ws.onPath.size() != n) {
                   ws.onPath.assign(n, 0);
                   ws.closesToStart.assign(n, 0);
                 }
                 auto& tally = perWorker[worker];
                 for (std::size_t s = b; s < e; ++s)
                   cycleSearch(g, static_cast<Vertex>(s), k, ws,
                               [&](int len, const std::vector<Vertex>& path) {
                                 if (len != k) return;
                                 for (Vertex u : path) ++tally[u];
                               });
               });
  std::vector<BigInt> out(n, 0);
  for (const auto& tally : perWorker)
    for (std::size_t v = 0; v < n; ++v) out[v] += tally[v];
  return out;
}

BigInt CountReport::cycleSubgraphs(int k) const {
  auto it = cycleCounts.find(k);
  if (it == cycleCounts.end()) fail(ErrorKind::Argument, "no cycle count for k=" + std::to_string(k));
  return it->second / (2 * k);
}

CountReport normalize(const Graph& g, const std::map<int, BigInt>& walks,
                      const std::map<int, BigInt>& cycles, double alpha) {
  if (!(alpha >= 0.5 && alpha <= 1.0))
    fail(ErrorKind::Argument, "alpha must lie in [1/2, 1]");
  if (g.numEdges() == 0)
    fail(ErrorKind::Degenerate, "graph has no edges; average degree is 0");

  CountReport r;
  r.n = g.numVertices();
  r.avgDegree = g.averageDegree();
  r.alpha = alpha;
  r.walkCounts = walks;
  r.cycleCounts = cycles;
  const long double n = static_cast<long double>(r.n);
  const long double d = static_cast<long double>(toDouble(r.avgDegree));
  for (const auto& [k, w] : walks) {
    r.kmax = std::max(r.kmax, k);
    long double denom = n * std::pow(d, 1.0L + alpha * (k - 2));
    r.normalizedWalks[k] = static_cast<double>(w.convert_to<long double>() / denom);
  }
  for (const auto& [k, c] : cycles) {
    r.kmax = std::max(r.kmax, k);
    r.cycleEdgeRatios[k] = static_cast<double>(2.0L * c.convert_to<long double>() / (n * d));
  }
  return r;
}

std::optional<Rational> normalizedWalkExact(const BigInt& walks, std::size_t n, const Rational& d,
                                            const Rational& alpha, int k) {
  Rational e = 1 + alpha * (k - 2);
  if (boost::multiprecision::denominator(e) != 1 || e < 0 || d <= 0 || n == 0) return std::nullopt;
  unsigned exponent = boost::multiprecision::numerator(e).convert_to<unsigned>();
  return Rational(walks) / (Rational(BigInt(n)) * pow(d, exponent));
}

std::vector<double> localClustering(const Graph& g) {
  const std::size_t n = g.numVertices();
  std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<Vertex> mark(n, std::numeric_limits<Vertex>::max());
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t deg = g.degree(v);
    if (deg < 2) continue;
    for (Vertex u : g.neighbors(v)) mark[u] = v;
    std::size_t links = 0;
    for (Vertex u : g.neighbors(v))
      for (Vertex w : g.neighbors(u))
        if (w > u && mark[w] == v) ++links;
    out[v] = static_cast<double>(links) / (static_cast<double>(deg) * (deg - 1) / 2.0);
  }
  return out;
}

double clusteringCoefficient(const Graph& g, Vertex v) {
  if (v >= g.numVertices()) fail(ErrorKind::Argument, "vertex out of range");
  const std::size_t deg = g.degree(v);
  if (deg < 2)
    fail(ErrorKind::Undefined, "clustering undefined at vertex " + std::to_string(v) +
                                   " of degree " + std::to_string(deg));
  std::size_t links = 0;
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.hasEdge(nb[i], nb[j])) ++links;
  return static_cast<double>(links) / (static_cast<double>(deg) * (deg - 1) / 2.0);
}

ClusteringSummary averageClustering(const Graph& g) {
  ClusteringSummary s;
  const auto local = localClustering(g);
  double sum = 0.0;
  for (double c : local) {
    if (std::isnan(c)) continue;
    sum += c;
    ++s.counted;
  }
  s.average = s.counted ? sum / static_cast<double>(s.counted) : 0.0;
  s.skippedFraction = local.empty() ? 0.0
                                    : static_cast<double>(local.size() - s.counted) / static_cast<double>(local.size());
  return s;
}

std::vector<double> adjacencySpectrum(const Graph& g, const SpectrumOptions& opt) {
  const std::size_t n = g.numVertices();
  if (n > opt.maxVertices)
    fail(ErrorKind::Argument, "dense eigensolve refused: n=" + std::to_string(n) + " exceeds cap " +
                                  std::to_string(opt.maxVertices));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) fail(ErrorKind::IllPosed, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::map<int, double> spectrumCheck(const Graph& g, int kmax, const SpectrumOptions& opt) {
  if (kmax < 2) fail(ErrorKind::Argument, "kmax must be at least 2");
  const auto ev = adjacencySpectrum(g, opt);
  std::map<int, double> out;
  for (int k = 2; k <= kmax; ++k) {
    long double s = 0;
    for (double l : ev) s += std::pow(static_cast<long double>(l), k);
    out[k] = static_cast<double>(s);
  }
  return out;
}

}  // namespace roc
