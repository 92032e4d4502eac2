#pragma once

// Independent reference implementations used only by the tests.

#include "roc/graph.hpp"
#include "roc/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace roc::test {

inline Graph randomGraph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::fromEdges(n, edges);
}

inline Graph cycleGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::fromEdges(n, edges);
}

inline Graph completeGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::fromEdges(n, edges);
}

inline Graph disjointUnion(const Graph& g, int copies) {
  const std::size_t n = g.numVertices();
  std::vector<Edge> edges;
  for (int c = 0; c < copies; ++c)
    for (auto [u, v] : g.edges())
      edges.emplace_back(static_cast<Vertex>(u + c * n), static_cast<Vertex>(v + c * n));
  return Graph::fromEdges(n * copies, edges);
}

using Matrix = std::vector<std::vector<BigInt>>;

inline Matrix adjacency(const Graph& g) {
  const std::size_t n = g.numVertices();
  Matrix a(n, std::vector<BigInt>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
  const std::size_t n = x.size();
  Matrix z(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
    }
  return z;
}

// trace(A^k) for k = 2..kmax by repeated dense multiplication.
inline std::map<int, BigInt> traceWalks(const Graph& g, int kmax) {
  std::map<int, BigInt> out;
  Matrix a = adjacency(g), p = a;
  for (int k = 2; k <= kmax; ++k) {
    p = multiply(p, a);
    BigInt t = 0;
    for (std::size_t i = 0; i < p.size(); ++i) t += p[i][i];
    out[k] = t;
  }
  return out;
}

// Number of k-cycle subgraphs times 2k, by DFS from the smallest vertex of
// each cycle.
inline BigInt bruteCycles(const Graph& g, int k) {
  const std::size_t n = g.numVertices();
  BigInt count = 0;
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  auto dfs = [&](auto&& self, Vertex start, Vertex v) -> void {
    if (static_cast<int>(path.size()) == k) {
      if (g.hasEdge(v, start)) ++count;
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (w <= start || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    dfs(dfs, s, s);
    used[s] = 0;
  }
  // Each cycle is found twice (two directions) from its smallest vertex.
  return count / 2 * 2 * k;
}

}  // namespace roc::test
