#include "roc/moments.hpp"

#include "roc/error.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace roc {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_100;

template <class T>
using Matrix = std::vector<std::vector<T>>;

// r x r Hankel matrix with entries mu[shift + i + j].
template <class T>
Matrix<T> hankel(const std::vector<T>& mu, std::size_t r, std::size_t shift) {
  Matrix<T> h(r, std::vector<T>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) h[i][j] = mu[shift + i + j];
  return h;
}

Rational det(Matrix<Rational> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

double det(const Matrix<double>& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  if (n == 0) return 1.0;
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a[i][j];
  return m.fullPivLu().determinant();
}

double rowNormProduct(const Matrix<double>& a) {
  double p = 1.0;
  for (const auto& row : a) {
    double s = 0.0;
    for (double v : row) s += v * v;
    p *= std::sqrt(s);
  }
  return p;
}

// Matrix completed by entry m of the sequence.
template <class T>
Matrix<T> conditionMatrix(const std::vector<T>& mu, std::size_t m) {
  return m % 2 == 0 ? hankel(mu, m / 2 + 1, 0) : hankel(mu, (m + 1) / 2, 1);
}

// Solves a x = b exactly; a nonsingular.
std::vector<Rational> solve(Matrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) fail(ErrorKind::IllPosed, "singular Hankel block");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

template <class T>
StieltjesDiagnostic checkSigns(const std::vector<T>& mu, const std::vector<int>& signs,
                               const std::vector<double>& values) {
  StieltjesDiagnostic d;
  d.determinants = values;
  for (std::size_t m = 0; m < signs.size(); ++m) {
    const int s = signs[m];
    if (d.firstZero < 0) {
      if (s < 0) {
        d.ok = false;
        d.failedAt = static_cast<int>(m);
        d.reason = "negative Hankel determinant completed by entry " + std::to_string(m);
        return d;
      }
      if (s == 0) d.firstZero = static_cast<int>(m);
    } else if (s != 0) {
      d.ok = false;
      d.failedAt = static_cast<int>(m);
      d.reason = "Hankel determinant completed by entry " + std::to_string(m) +
                 " is nonzero after the determinant of entry " + std::to_string(d.firstZero) + " vanished";
      return d;
    }
  }
  (void)mu;
  return d;
}

}  // namespace

std::vector<double> momentsOf(const DiscreteMeasure& atoms, int count) {
  std::vector<double> mu(static_cast<std::size_t>(std::max(count, 0)), 0.0);
  for (const auto& a : atoms) {
    long double p = 1.0L;
    for (auto& m : mu) {
      m += static_cast<double>(a.weight * p);
      p *= a.position;
    }
  }
  return mu;
}

std::vector<Rational> momentsOf(const std::vector<ExactAtom>& atoms, int count) {
  std::vector<Rational> mu(static_cast<std::size_t>(std::max(count, 0)), Rational(0));
  for (const auto& a : atoms) {
    Rational p = 1;
    for (auto& m : mu) {
      m += a.weight * p;
      p *= a.position;
    }
  }
  return mu;
}

HankelDeterminants<Rational> hankelDeterminants(const std::vector<Rational>& mu) {
  HankelDeterminants<Rational> out;
  for (std::size_t r = 1; 2 * r - 2 < mu.size(); ++r) out.h0.push_back(det(hankel(mu, r, 0)));
  for (std::size_t r = 1; 2 * r - 1 < mu.size(); ++r) out.h1.push_back(det(hankel(mu, r, 1)));
  return out;
}

HankelDeterminants<double> hankelDeterminants(const std::vector<double>& mu) {
  HankelDeterminants<double> out;
  for (std::size_t r = 1; 2 * r - 2 < mu.size(); ++r) out.h0.push_back(det(hankel(mu, r, 0)));
  for (std::size_t r = 1; 2 * r - 1 < mu.size(); ++r) out.h1.push_back(det(hankel(mu, r, 1)));
  return out;
}

StieltjesDiagnostic satisfiesStieltjes(const std::vector<Rational>& mu) {
  std::vector<int> signs;
  std::vector<double> values;
  for (std::size_t m = 0; m < mu.size(); ++m) {
    Rational d = det(conditionMatrix(mu, m));
    signs.push_back(d > 0 ? 1 : (d < 0 ? -1 : 0));
    values.push_back(toDouble(d));
  }
  return checkSigns(mu, signs, values);
}

StieltjesDiagnostic satisfiesStieltjes(const std::vector<double>& raw, double tol) {
  std::vector<double> mu = raw;
  if (mu.size() >= 2 && mu[0] > 0.0 && mu[1] > 0.0) {
    const double c = mu[0] / mu[1];
    double f = 1.0 / mu[0];
    for (auto& m : mu) {
      m *= f;
      f *= c;
    }
  }
  std::vector<int> signs;
  std::vector<double> values;
  for (std::size_t m = 0; m < mu.size(); ++m) {
    auto h = conditionMatrix(mu, m);
    double d = det(h);
    signs.push_back(std::abs(d) <= tol * rowNormProduct(h) ? 0 : (d > 0 ? 1 : -1));
    values.push_back(d);
  }
  return checkSigns(mu, signs, values);
}

Extension extendTruncated(const std::vector<Rational>& input, std::size_t targetLen) {
  if (input.empty()) fail(ErrorKind::Argument, "cannot extend an empty sequence");
  auto diag = satisfiesStieltjes(input);
  if (!diag.ok) fail(ErrorKind::Argument, "sequence fails the Stieltjes condition: " + diag.reason);
  Extension ext{input, diag.firstZero >= 0};
  auto& mu = ext.mu;

  int firstZero = diag.firstZero;
  while (mu.size() < targetLen && firstZero < 0) {
    // The new entry sits only in the corner, so the determinant is affine in it.
    const std::size_t m = mu.size();
    mu.push_back(0);
    Rational d0 = det(conditionMatrix(mu, m));
    mu.back() = 1;
    Rational slope = det(conditionMatrix(mu, m)) - d0;
    mu.back() = -d0 / slope;
    firstZero = static_cast<int>(m);
  }
  if (mu.size() >= targetLen) return ext;

  // A singular Hankel block of size r + 1 has a kernel vector p with
  // p_r = 1, and sum_i p_i mu_{i+j} = 0 extends to every later j.
  const auto m0 = static_cast<std::size_t>(firstZero);
  const std::size_t r = m0 % 2 == 0 ? m0 / 2 : (m0 - 1) / 2;
  const std::size_t shift = m0 % 2;
  std::vector<Rational> p;
  if (r > 0) {
    std::vector<Rational> rhs(r);
    for (std::size_t j = 0; j < r; ++j) rhs[j] = -mu[shift + r + j];
    p = solve(hankel(mu, r, shift), rhs);
  }
  while (mu.size() < targetLen) {
    const std::size_t m = mu.size();
    Rational v = 0;
    for (std::size_t i = 0; i < r; ++i) v -= p[i] * mu[m - r + i];
    mu.push_back(v);
  }
  return ext;
}

DiscreteMeasure recoverAtoms(const std::vector<Rational>& exact, int maxSupport) {
  const std::size_t len = exact.size();
  if (len == 0) fail(ErrorKind::Argument, "empty moment sequence");
  if (exact[0] < 0) fail(ErrorKind::IllPosed, "negative total mass");
  bool allZero = std::all_of(exact.begin(), exact.end(), [](const Rational& v) { return v == 0; });
  if (allZero) return {};
  if (exact[0] == 0) fail(ErrorKind::IllPosed, "zero mass with nonzero moments");

  std::vector<Wide> mu(len);
  for (std::size_t i = 0; i < len; ++i)
    mu[i] = Wide(numerator(exact[i])) / Wide(denominator(exact[i]));

  // Chebyshev algorithm: sigma_k(l) = <pi_k, x^l>.
  std::vector<Wide> alpha, beta;
  std::vector<Wide> prev(len, Wide(0)), cur = mu;
  Wide scale = 0;
  beta.push_back(mu[0]);
  std::size_t r = 0;
  for (std::size_t k = 0;; ++k) {
    // cur holds sigma_k; sigma_k(k) is defined when 2k < len.
    if (2 * k >= len) {
      r = k;
      break;
    }
    if (k > 0) {
      Wide bk = cur[k] / prev[k - 1];
      if (bk < 0) {
        if (-bk > Wide("1e-40") * scale * scale)
          fail(ErrorKind::IllPosed, "negative recurrence coefficient at step " + std::to_string(k) +
                                        ": Hankel matrix of size " + std::to_string(k + 1) + " is indefinite");
        r = k;
        break;
      }
      if (bk <= Wide("1e-40") * scale * scale) {
        r = k;
        break;
      }
      beta.push_back(bk);
    }
    if (2 * k + 1 >= len) {
      r = k;
      break;
    }
    Wide ak = cur[k + 1] / cur[k] - (k > 0 ? prev[k] / prev[k - 1] : Wide(0));
    alpha.push_back(ak);
    Wide spread = abs(ak) + (k > 0 ? sqrt(beta[k]) : Wide(0));
    scale = std::max(scale, spread);
    std::vector<Wide> next(len, Wide(0));
    for (std::size_t l = k + 1; l + k + 1 < len; ++l)
      next[l] = cur[l + 1] - ak * cur[l] - (k > 0 ? beta[k] * prev[l] : Wide(0));
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (r == 0) fail(ErrorKind::IllPosed, "moment sequence too short to recover atoms");
  if (static_cast<int>(r) > maxSupport)
    fail(ErrorKind::IllPosed, "support size " + std::to_string(r) + " exceeds the limit " + std::to_string(maxSupport));

  const auto n = static_cast<Eigen::Index>(r);
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    jacobi(i, i) = static_cast<double>(alpha[static_cast<std::size_t>(i)]);
    if (i + 1 < n) {
      double off = static_cast<double>(sqrt(beta[static_cast<std::size_t>(i + 1)]));
      jacobi(i, i + 1) = off;
      jacobi(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  const double mass = static_cast<double>(mu[0]);
  DiscreteMeasure atoms;
  for (Eigen::Index i = 0; i < n; ++i) {
    double v0 = solver.eigenvectors()(0, i);
    atoms.push_back({mass * v0 * v0, solver.eigenvalues()(i)});
  }

  const double spectral = std::max(std::abs(atoms.front().position), std::abs(atoms.back().position));
  for (const auto& a : atoms)
    if (!(a.position > 1e-12 * spectral))
      fail(ErrorKind::IllPosed, "recovered atom at non-positive position " + formatDouble(a.position));

  auto check = momentsOf(atoms, static_cast<int>(len));
  for (std::size_t i = 0; i < len; ++i) {
    double target = toDouble(exact[i]);
    double err = std::abs(check[i] - target);
    if (err > 1e-9 * std::max(std::abs(target), 1e-300))
      fail(ErrorKind::IllPosed, "recovered atoms miss moment " + std::to_string(i) + " (relative error " +
                                    formatDouble(err / std::max(std::abs(target), 1e-300)) + ")");
  }
  return atoms;
}

DiscreteMeasure recoverAtoms(const std::vector<double>& mu, int maxSupport) {
  std::vector<Rational> exact;
  exact.reserve(mu.size());
  for (double v : mu) exact.push_back(toRational(v));
  return recoverAtoms(exact, maxSupport);
}

CharResult charCriterion(const std::vector<Rational>& s) {
  CharResult res;
  const int k = static_cast<int>(s.size());
  if (k == 0 || s[0] <= 0) return res;
  auto at = [&](int i) -> const Rational& { return s[static_cast<std::size_t>(i - 1)]; };
  for (int a = 1; a <= k; ++a)
    for (int b = a + 2; b <= k; ++b)
      for (int x = a + 1; 2 * x <= a + b; ++x) {
        int y = a + b - x;
        if (!(at(x) * at(y) < at(a) * at(b))) {
          res.a = a, res.x = x, res.y = y, res.b = b;
          return res;
        }
      }
  res.ok = true;

  // Each H^(0) determinant of (s0, s_1, ...) is affine in s0 with slope
  // the determinant of the block without the first row and column.
  std::vector<Rational> mu{Rational(0)};
  mu.insert(mu.end(), s.begin(), s.end());
  Rational bound = 0;
  for (std::size_t r = 1; 2 * r - 2 < mu.size(); ++r) {
    mu[0] = 0;
    Rational d0 = det(hankel(mu, r, 0));
    Rational slope = r == 1 ? Rational(1) : det(hankel(mu, r - 1, 2));
    if (slope > 0) bound = std::max(bound, Rational(-d0 / slope));
  }
  Rational s0 = bound > 0 ? Rational(2 * bound) : Rational(1);
  mu[0] = s0;
  auto diag = satisfiesStieltjes(mu);
  if (diag.ok && diag.firstZero < 0 && s0 <= Rational(1000000000)) res.s0 = s0;
  return res;
}

std::optional<LeadingMoment> minimalLeadingMoment(const std::vector<Rational>& tail) {
  std::vector<Rational> mu{Rational(0)};
  mu.insert(mu.end(), tail.begin(), tail.end());
  Rational bound = 0;
  for (std::size_t r = 2; 2 * r - 2 < mu.size(); ++r) {
    mu[0] = 0;
    Rational d0 = det(hankel(mu, r, 0));
    Rational slope = det(hankel(mu, r - 1, 2));
    if (slope > 0) bound = std::max(bound, Rational(-d0 / slope));
  }
  mu[0] = bound;
  if (satisfiesStieltjes(mu).ok) return LeadingMoment{bound, true};
  for (Rational trial : {Rational(bound + (bound + 1) / 1000000), Rational(2 * bound + 1)}) {
    mu[0] = trial;
    if (satisfiesStieltjes(mu).ok) return LeadingMoment{bound, false};
  }
  return std::nullopt;
}

}  // namespace roc
