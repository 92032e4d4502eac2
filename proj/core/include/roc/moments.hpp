#pragma once

#include "roc/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace roc {

struct Atom {
  double weight = 0.0;
  double position = 0.0;
};
using DiscreteMeasure = std::vector<Atom>;

struct ExactAtom {
  Rational weight;
  Rational position;
};

// mu_0 .. mu_{count-1}
std::vector<double> momentsOf(const DiscreteMeasure& atoms, int count);
std::vector<Rational> momentsOf(const std::vector<ExactAtom>& atoms, int count);

// det H^(0) and det H^(1) for every size r = 1, 2, ... the sequence allows:
// h0[r-1] uses mu_0..mu_{2r-2}, h1[r-1] uses mu_1..mu_{2r-1}.
template <class T>
struct HankelDeterminants {
  std::vector<T> h0;
  std::vector<T> h1;
};
HankelDeterminants<Rational> hankelDeterminants(const std::vector<Rational>& mu);
HankelDeterminants<double> hankelDeterminants(const std::vector<double>& mu);

// The conditions are checked in the order the entries appear: entry m of
// the sequence completes H^(0) of size m/2 + 1 (m even) or H^(1) of size
// (m+1)/2 (m odd). All must be >= 0, and once one vanishes all later ones
// must vanish too.
struct StieltjesDiagnostic {
  bool ok = true;
  std::vector<double> determinants;  // indexed by m, signs only for floats
  int firstZero = -1;
  int failedAt = -1;
  std::string reason;
};
StieltjesDiagnostic satisfiesStieltjes(const std::vector<Rational>& mu);
// Float variant: a determinant counts as zero when |det| <= tol * prod of
// the row norms, after rescaling mu_i by (mu_0 / mu_1)^i / mu_0.
StieltjesDiagnostic satisfiesStieltjes(const std::vector<double>& mu, double tol = 1e-9);

struct Extension {
  std::vector<Rational> mu;
  // The input already had a vanishing determinant; the tail was produced
  // by the linear recurrence that the singular Hankel matrix imposes.
  bool degenerate = false;
};
// Appends entries, each chosen to zero the determinant it completes, until
// the sequence has targetLen entries. Throws Argument if the input fails
// the Stieltjes condition.
Extension extendTruncated(const std::vector<Rational>& mu, std::size_t targetLen);

// Atoms reproducing mu. The support size is the first Hankel rank drop,
// otherwise half the sequence length (which then must be even). Uses the
// Chebyshev algorithm in extended precision and the eigen-decomposition of
// the resulting Jacobi matrix. Throws IllPosed when the data is not the
// moment sequence of positive atoms within 1e-9 relative error.
DiscreteMeasure recoverAtoms(const std::vector<Rational>& mu, int maxSupport = 16);
DiscreteMeasure recoverAtoms(const std::vector<double>& mu, int maxSupport = 16);

// s_x s_y < s_a s_b for all 1 <= a < x <= y < b with a + b = x + y; the
// input is s_1..s_k. On success s0 is a value making (s0, s_1, .., s_k)
// satisfy the Stieltjes condition with every determinant positive.
struct CharResult {
  bool ok = false;
  std::optional<Rational> s0;
  int a = 0, x = 0, y = 0, b = 0;  // first violated quadruple
};
CharResult charCriterion(const std::vector<Rational>& s);

// Smallest mu_0 such that (mu_0, tail...) satisfies the Stieltjes
// condition; empty when no mu_0 works. attained is false when every value
// above the infimum works but the infimum itself does not.
struct LeadingMoment {
  Rational infimum;
  bool attained = true;
};
std::optional<LeadingMoment> minimalLeadingMoment(const std::vector<Rational>& tail);

}  // namespace roc
