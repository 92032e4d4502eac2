#pragma once

#include "roc/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace roc {

// A multiset of cycles: t copies of length a for each (a, t), with the
// lengths distinct and >= 2. Parts are kept in descending order of a.
struct CyclePartition {
  std::vector<std::pair<int, int>> parts;

  int k() const;       // sum a t
  int cycles() const;  // sum t
  std::string toString() const;  // "{(3,2),(2,1)}"
  friend bool operator==(const CyclePartition&, const CyclePartition&) = default;
};

// All partitions of k into cycle lengths >= 2, for 2 <= k <= 24, ordered by
// descending largest part, then lexicographically on the parts.
std::vector<CyclePartition> enumeratePartitions(int k);

// k! / ((prod t!) (k + 1 - sum t)!)
BigInt permutationCount(const CyclePartition& s);

// Label strings over the multiset {a x t} plus k - sum t zeros such that
// every prefix has sum (a - 1) over its nonzero labels >= its number of
// zeros. Labels 2..9 are digits, 10 and up are 'A', 'B', ... Brute force
// over distinct arrangements; k <= 14. Lexicographic order.
std::vector<std::string> enumerateCyclePermutations(const CyclePartition& s);

// The coefficient table of w_k as a polynomial in c_3, c_4, ... with c_2 = 1
// substituted: keys are partitions with the parts of length 2 removed.
std::map<std::vector<std::pair<int, int>>, BigInt> walkPolynomial(int k);

// "c_6 + 6c_4 + 3c_3^2 + 5", highest cycle length first.
std::string formatWalkPolynomial(int k);

// Vectors hold entries for indices 3, 4, ..., k (c_2 = 1 is implicit).
// Both maps need at least k - 2 entries; extra entries are ignored.
std::vector<Rational> cycleToWalk(const std::vector<Rational>& c, int k);
std::vector<Rational> walkToCycle(const std::vector<Rational>& w, int k);

// Entry j of an index-3 vector.
inline const Rational& at3(const std::vector<Rational>& v, int j) { return v[static_cast<std::size_t>(j - 3)]; }

}  // namespace roc
