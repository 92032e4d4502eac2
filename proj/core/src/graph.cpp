#include "roc/graph.hpp"

#include "roc/error.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace roc {

Graph Graph::fromEdges(std::size_t n, std::vector<Edge> edges) {
  if (n > std::size_t(std::numeric_limits<Vertex>::max()))
    fail(ErrorKind::Argument, "too many vertices");
  for (auto& e : edges) {
    if (e.first >= n || e.second >= n)
      fail(ErrorKind::Argument, "edge endpoint out of range");
    if (e.first == e.second)
      fail(ErrorKind::Argument, "self-loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adjacency_[fill[u]++] = v;
    g.adjacency_[fill[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(g.adjacency_.begin() + g.offsets_[i], g.adjacency_.begin() + g.offsets_[i + 1]);
  g.edges_ = std::move(edges);
  return g;
}

std::size_t Graph::maxDegree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::hasEdge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Rational Graph::averageDegree() const {
  if (numVertices() == 0) return Rational(0);
  return Rational(BigInt(2 * numEdges()), BigInt(numVertices()));
}

double Graph::meanDegree() const {
  if (numVertices() == 0) return 0.0;
  return 2.0 * static_cast<double>(numEdges()) / static_cast<double>(numVertices());
}

EdgeListData readEdgeList(std::istream& in) {
  EdgeListData out;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Edge> edges;
  auto lookup = [&](const std::string& label) {
    auto [it, inserted] = index.emplace(label, static_cast<Vertex>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b))
      fail(ErrorKind::Io, "line " + std::to_string(lineNo) + ": expected two vertex labels");
    if (fields >> extra && extra[0] != '#')
      fail(ErrorKind::Io, "line " + std::to_string(lineNo) + ": unexpected third field '" + extra + "'");
    Vertex u = lookup(a), v = lookup(b);
    if (u == v) {
      ++out.selfLoops;
      continue;
    }
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (in.bad()) fail(ErrorKind::Io, "read error");
  if (out.labels.empty()) fail(ErrorKind::Io, "edge list contains no edges");

  std::size_t raw = edges.size();
  out.graph = Graph::fromEdges(out.labels.size(), std::move(edges));
  out.duplicateEdges = raw - out.graph.numEdges();
  return out;
}

EdgeListData readEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  return readEdgeList(in);
}

void writeEdgeList(std::ostream& out, const Graph& g, const std::string& header) {
  if (!header.empty()) {
    std::istringstream lines(header);
    std::string l;
    while (std::getline(lines, l)) out << "# " << l << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void writeEdgeListFile(const std::string& path, const Graph& g, const std::string& header) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write '" + path + "'");
  writeEdgeList(out, g, header);
  if (!out) fail(ErrorKind::Io, "write failed for '" + path + "'");
}

}  // namespace roc
