#pragma once

#include "roc/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace roc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph in CSR form. Edges are stored with
// first < second, sorted lexicographically.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges (in either orientation) are collapsed. Self-loops and
  // out-of-range endpoints are rejected.
  static Graph fromEdges(std::size_t n, std::vector<Edge> edges);

  std::size_t numVertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t numEdges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t maxDegree() const;
  bool hasEdge(Vertex u, Vertex v) const;

  // 2|E|/n, exact.
  Rational averageDegree() const;
  double meanDegree() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
};

struct EdgeListData {
  Graph graph;
  std::vector<std::string> labels;  // labels[i] is the original name of vertex i
  std::size_t duplicateEdges = 0;
  std::size_t selfLoops = 0;
};

// One edge per line, two whitespace-separated labels; '#' lines and blank
// lines are skipped. Labels are remapped to 0..n-1 in order of first
// appearance. Throws Error(Io) with the line number on malformed input.
EdgeListData readEdgeList(std::istream& in);
EdgeListData readEdgeListFile(const std::string& path);

void writeEdgeList(std::ostream& out, const Graph& g, const std::string& header = {});
void writeEdgeListFile(const std::string& path, const Graph& g, const std::string& header = {});

}  // namespace roc
