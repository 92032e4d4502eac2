#include "roc/transform.hpp"

#include "roc/error.hpp"

#include <algorithm>
#include <functional>

namespace roc {

namespace {

constexpr int kMaxPartitionK = 24;
constexpr int kMaxPermutationK = 14;

char labelChar(int a) { return a < 10 ? static_cast<char>('0' + a) : static_cast<char>('A' + (a - 10)); }

int labelValue(char c) { return c <= '9' ? c - '0' : 10 + (c - 'A'); }

void requireRange(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    fail(ErrorKind::Argument, std::string(what) + " needs " + std::to_string(lo) + " <= k <= " + std::to_string(hi) +
                                  ", got " + std::to_string(k));
}

// Sum over S in S_k of |P_S| prod c_a^t, with c_2 = 1.
Rational transformEntry(const std::vector<Rational>& c, const std::vector<CyclePartition>& parts) {
  Rational total = 0;
  for (const auto& s : parts) {
    Rational term = Rational(permutationCount(s));
    for (auto [a, t] : s.parts) {
      if (a == 2) continue;
      term *= pow(at3(c, a), static_cast<unsigned>(t));
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

}  // namespace

int CyclePartition::k() const {
  int k = 0;
  for (auto [a, t] : parts) k += a * t;
  return k;
}

int CyclePartition::cycles() const {
  int n = 0;
  for (auto [a, t] : parts) n += t;
  return n;
}

std::string CyclePartition::toString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(parts[i].first) + "," + std::to_string(parts[i].second) + ")";
  }
  return out + "}";
}

std::vector<CyclePartition> enumeratePartitions(int k) {
  requireRange(k, 2, kMaxPartitionK, "enumeratePartitions");
  std::vector<CyclePartition> out;
  CyclePartition cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxPart) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int a = std::min(remaining, maxPart); a >= 2; --a)
      for (int t = remaining / a; t >= 1; --t) {
        cur.parts.emplace_back(a, t);
        rec(remaining - a * t, a - 1);
        cur.parts.pop_back();
      }
  };
  rec(k, k);
  return out;
}

BigInt permutationCount(const CyclePartition& s) {
  const int k = s.k(), total = s.cycles();
  BigInt denom = factorial(static_cast<unsigned>(k + 1 - total));
  for (auto [a, t] : s.parts) denom *= factorial(static_cast<unsigned>(t));
  return factorial(static_cast<unsigned>(k)) / denom;
}

std::vector<std::string> enumerateCyclePermutations(const CyclePartition& s) {
  const int k = s.k();
  requireRange(k, 2, kMaxPermutationK, "enumerateCyclePermutations");
  std::string labels(static_cast<std::size_t>(k + 0 - s.cycles()), '0');
  for (auto [a, t] : s.parts) labels.append(static_cast<std::size_t>(t), labelChar(a));
  std::sort(labels.begin(), labels.end());
  std::vector<std::string> out;
  do {
    int credit = 0, zeros = 0;
    bool ok = true;
    for (char c : labels) {
      if (c == '0')
        ++zeros;
      else
        credit += labelValue(c) - 1;
      if (credit < zeros) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::map<std::vector<std::pair<int, int>>, BigInt> walkPolynomial(int k) {
  std::map<std::vector<std::pair<int, int>>, BigInt> table;
  for (const auto& s : enumeratePartitions(k)) {
    std::vector<std::pair<int, int>> key;
    for (auto p : s.parts)
      if (p.first != 2) key.push_back(p);
    table[key] += permutationCount(s);
  }
  return table;
}

std::string formatWalkPolynomial(int k) {
  auto table = walkPolynomial(k);
  std::vector<std::pair<std::vector<std::pair<int, int>>, BigInt>> terms(table.begin(), table.end());
  // Descending by parts, so c_k comes first and the constant last.
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::string out;
  for (const auto& [key, coef] : terms) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (auto [a, t] : key) {
      mono += "c_" + std::to_string(a);
      if (t > 1) mono += "^" + std::to_string(t);
    }
    if (mono.empty())
      out += coef.str();
    else
      out += (coef == 1 ? "" : coef.str()) + mono;
  }
  return out;
}

std::vector<Rational> cycleToWalk(const std::vector<Rational>& c, int k) {
  requireRange(k, 3, kMaxPartitionK, "cycleToWalk");
  if (c.size() < static_cast<std::size_t>(k - 2)) fail(ErrorKind::Argument, "cycle vector shorter than k - 2");
  std::vector<Rational> w;
  for (int j = 3; j <= k; ++j) w.push_back(transformEntry(c, enumeratePartitions(j)));
  return w;
}

std::vector<Rational> walkToCycle(const std::vector<Rational>& w, int k) {
  requireRange(k, 3, kMaxPartitionK, "walkToCycle");
  if (w.size() < static_cast<std::size_t>(k - 2)) fail(ErrorKind::Argument, "walk vector shorter than k - 2");
  std::vector<Rational> c(static_cast<std::size_t>(k - 2), Rational(0));
  for (int j = 3; j <= k; ++j) {
    // c_j enters w_j only through the single-cycle term, with coefficient 1.
    c[static_cast<std::size_t>(j - 3)] = at3(w, j) - transformEntry(c, enumeratePartitions(j));
  }
  return c;
}

}  // namespace roc
