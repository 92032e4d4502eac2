#include "roc/limits.hpp"

#include "roc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace roc {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t(1) << 16;

std::uint64_t checkedPower(int base, int exp, const char* what) {
  if (base < 2 || exp < 1) fail(ErrorKind::Argument, std::string(what) + " needs k >= 2 and d >= 1");
  std::uint64_t n = 1;
  for (int i = 0; i < exp; ++i) {
    n *= static_cast<std::uint64_t>(base);
    if (n > kMaxVertices) fail(ErrorKind::Argument, std::string(what) + " would exceed 2^16 vertices");
  }
  return n;
}

// Vertices of {0..k-1}^d in mixed radix; connect v to v with coordinate i
// replaced by each value in step(x).
template <class Step>
Graph productGraph(int d, int k, const char* what, Step step) {
  const std::uint64_t n = checkedPower(k, d, what);
  std::vector<Edge> edges;
  std::uint64_t place = 1;
  for (int i = 0; i < d; ++i, place *= static_cast<std::uint64_t>(k)) {
    for (std::uint64_t v = 0; v < n; ++v) {
      int x = static_cast<int>((v / place) % static_cast<std::uint64_t>(k));
      for (int y : step(x)) {
        if (y <= x) continue;
        std::uint64_t u = v + static_cast<std::uint64_t>(y - x) * place;
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(u));
      }
    }
  }
  return Graph::fromEdges(n, std::move(edges));
}

Rational catalan(unsigned n) { return Rational(binomial(2 * n, n)) / (n + 1); }

}  // namespace

Graph hypercubeGraph(int d) { return hammingGraph(d, 2); }

Graph hammingGraph(int d, int k) {
  return productGraph(d, k, "hammingGraph", [k](int) {
    std::vector<int> all(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  });
}

Graph cayleyGraph(int d, int k) {
  return productGraph(d, k, "cayleyGraph", [k](int x) {
    return std::vector<int>{(x + 1) % k, (x + k - 1) % k};
  });
}

Graph rookGraph(int k) { return hammingGraph(2, k); }

LimitVector hypercubeLimit(int kmax) {
  if (kmax < 3 || kmax > 30) fail(ErrorKind::Argument, "hypercubeLimit needs 3 <= kmax <= 30");
  LimitVector out{Rational(1, 2), {}};
  for (int j = 3; j <= kmax; ++j) {
    BigInt v = j % 2 ? 0 : 1;
    if (j % 2 == 0)
      for (int i = j - 1; i > 1; i -= 2) v *= i;
    out.values.emplace_back(v);
  }
  return out;
}

std::vector<BigInt> hypercubeCycleSeq(int nmax) {
  if (nmax < 1 || nmax > 200) fail(ErrorKind::Argument, "hypercubeCycleSeq needs 1 <= n <= 200");
  std::vector<BigInt> s{BigInt(1)};
  for (int n = 2; n <= nmax; ++n) {
    BigInt sum = 0;
    for (int j = 1; j < n; ++j) sum += s[static_cast<std::size_t>(j - 1)] * s[static_cast<std::size_t>(n - j - 1)];
    s.push_back((n - 1) * sum);
  }
  return s;
}

LimitVector rookLimit(int kmax) {
  if (kmax < 3 || kmax > 64) fail(ErrorKind::Argument, "rookLimit needs 3 <= kmax <= 64");
  LimitVector out{Rational(1), {}};
  for (int j = 3; j <= kmax; ++j) out.values.push_back(Rational(1) / pow(Rational(2), static_cast<unsigned>(j - 2)));
  return out;
}

ErLimit erLimit(double ell, int k) {
  if (!(ell > 1.0)) fail(ErrorKind::Argument, "erLimit needs l > 1");
  if (k < 3 || k > 60) fail(ErrorKind::Argument, "erLimit needs 3 <= k <= 60");
  ErLimit out;
  const double twoEll = 2.0 * ell;
  if (k < twoEll || k == twoEll) {
    out.regime = k < twoEll ? 1 : 2;
    out.alpha = 0.5;
    for (int j = 3; j <= k; ++j) out.values.push_back(j % 2 ? Rational(0) : catalan(static_cast<unsigned>(j / 2)));
    if (out.regime == 2) out.values.back() += 1;
  } else {
    out.regime = 3;
    out.alpha = (k - ell - 1.0) / (k - 2.0);
    out.values.assign(static_cast<std::size_t>(k - 2), Rational(0));
    out.values.back() = 1;
  }
  return out;
}

double erExpectedWalks(double n, double d, int j) {
  double w = std::pow(d, j);
  if (j % 2 == 0) w += toDouble(catalan(static_cast<unsigned>(j / 2))) * n * std::pow(d, j / 2);
  return w;
}

Graph doublingSequence(const Graph& g0, int i) {
  if (i < 0) fail(ErrorKind::Argument, "doubling count must be >= 0");
  Graph g = g0;
  for (int step = 0; step < i; ++step) {
    const std::size_t n = g.numVertices();
    if (2 * n > (std::size_t(1) << 20) || 4 * g.numEdges() > 50'000'000)
      fail(ErrorKind::Argument, "doubling sequence exceeds the size cap");
    std::vector<Edge> edges;
    edges.reserve(4 * g.numEdges());
    for (auto [u, v] : g.edges()) {
      const auto un = static_cast<Vertex>(u + n), vn = static_cast<Vertex>(v + n);
      edges.emplace_back(u, v);
      edges.emplace_back(un, vn);
      edges.emplace_back(u, vn);
      edges.emplace_back(std::min(un, v), std::max(un, v));
    }
    g = Graph::fromEdges(2 * n, std::move(edges));
  }
  return g;
}

Graph disjointCopies(const Graph& g, int t) {
  if (t < 1) fail(ErrorKind::Argument, "need at least one copy");
  const std::size_t n = g.numVertices();
  if (n * static_cast<std::size_t>(t) > (std::size_t(1) << 24)) fail(ErrorKind::Argument, "too many copies");
  std::vector<Edge> edges;
  edges.reserve(g.numEdges() * static_cast<std::size_t>(t));
  for (int c = 0; c < t; ++c) {
    const auto off = static_cast<Vertex>(n * static_cast<std::size_t>(c));
    for (auto [u, v] : g.edges()) edges.emplace_back(u + off, v + off);
  }
  return Graph::fromEdges(n * static_cast<std::size_t>(t), std::move(edges));
}

SparsityEstimate estimateSparsityExponent(const std::vector<SeriesPoint>& series, int kmax) {
  if (series.size() < 3) fail(ErrorKind::Argument, "need at least 3 series points");
  for (std::size_t i = 1; i < series.size(); ++i)
    if (!(series[i].d > series[i - 1].d)) fail(ErrorKind::Argument, "average degrees must strictly increase");
  if (!(series.front().d > 1.0)) fail(ErrorKind::Argument, "average degrees must exceed 1");
  SparsityEstimate est;
  bool any = false;
  for (int j = 3; j <= kmax; ++j) {
    std::vector<double> xs, ys;
    for (const auto& p : series) {
      auto it = p.walks.find(j);
      if (it == p.walks.end() || it->second <= 0) break;
      xs.push_back((j - 2) * std::log(p.d));
      ys.push_back(std::log(toDouble(it->second)) - std::log(static_cast<double>(p.n) * p.d));
    }
    if (xs.size() != series.size()) continue;
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i] / n, my += ys[i] / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sxx += (xs[i] - mx) * (xs[i] - mx), sxy += (xs[i] - mx) * (ys[i] - my);
    const double slope = sxy / sxx, intercept = my - slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      double r = ys[i] - intercept - slope * xs[i];
      rss += r * r;
    }
    est.rawSlope[j] = slope;
    est.perK[j] = std::clamp(slope, 0.5, 1.0);
    est.residualRms[j] = std::sqrt(rss / n);
    est.alpha = any ? std::max(est.alpha, est.perK[j]) : est.perK[j];
    any = true;
  }
  if (!any) fail(ErrorKind::Degenerate, "every walk count in range is zero somewhere in the series");
  return est;
}

LayeredMatrix layeredHypercubeMatrix(int d) {
  if (d < 1 || d > 64) fail(ErrorKind::Argument, "layeredHypercubeMatrix needs 1 <= d <= 64");
  const auto n = static_cast<std::size_t>(d + 1);
  LayeredMatrix out;
  out.matrix.assign(n, std::vector<double>(n, 0.0));
  // Similar symmetric tridiagonal form: off-diagonal sqrt((i+1)(d-i)).
  Eigen::MatrixXd sym = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (int i = 0; i < d; ++i) {
    out.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = i + 1;
    out.matrix[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = d - i;
    double off = std::sqrt(static_cast<double>(i + 1) * static_cast<double>(d - i));
    sym(i, i + 1) = off;
    sym(i + 1, i) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(n); ++i) {
    double lambda = solver.eigenvalues()(i);
    out.eigenvalues.push_back(lambda);
    out.maxDeviation = std::max(out.maxDeviation, std::abs(lambda - (-d + 2.0 * static_cast<double>(i))));
  }
  return out;
}

}  // namespace roc
