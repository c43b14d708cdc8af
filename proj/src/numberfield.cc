/*
 * Copyright 2026 The latticelab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "latticelab/numberfield.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "latticelab/error.h"
#include "latticelab/ring.h"
#include "latticelab/zq.h"

namespace latticelab {
namespace {

using LComplex = std::complex<long double>;

constexpr int kMaxEmbeddingDegree = 64;
constexpr int kMaxDiscriminantDegree = 32;
constexpr int kMaxSweeps = 10000;

mpz_class DeterminantBareiss(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

LComplex EvalLong(const IntPolynomial& f, LComplex z) {
  LComplex acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<long double>(*it);
  return acc;
}

long double EvalAbsScale(const IntPolynomial& f, long double r) {
  long double acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::fabs(static_cast<long double>(*it));
  return acc;
}

}  // namespace

mpz_class Resultant(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int k = g.degree();
  if (m == 0 && k == 0) return 1;
  if (k == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(g.leading()).get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  if (m == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(f.leading()).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
  }
  const size_t size = static_cast<size_t>(m + k);
  std::vector<std::vector<mpz_class>> syl(size, std::vector<mpz_class>(size, 0));
  for (int row = 0; row < k; ++row) {
    for (int i = 0; i <= m; ++i) syl[row][row + i] = mpz_class(static_cast<long>(f.coeff(m - i)));
  }
  for (int row = 0; row < m; ++row) {
    for (int i = 0; i <= k; ++i) syl[k + row][row + i] = mpz_class(static_cast<long>(g.coeff(k - i)));
  }
  return DeterminantBareiss(std::move(syl));
}

bool IsSquarefreeOverQ(const IntPolynomial& f) {
  if (f.degree() <= 1) return !f.is_zero();
  // Squarefree modulo a prime that keeps the degree certifies squarefree
  // over Q; failing that, decide exactly.
  int tried = 0;
  for (uint64_t p = 3; tried < 40; p = NextPrime(p + 1)) {
    if (f.leading() % static_cast<int64_t>(p) == 0) continue;
    ++tried;
    if (IsSquarefreeModP(f, Modulus(p))) return true;
  }
  return Resultant(f, f.Derivative()) != 0;
}

EmbeddingData ComplexRoots(const IntPolynomial& f, double precision) {
  const int n = f.degree();
  if (n < 1 || n > kMaxEmbeddingDegree) {
    throw Error(ErrorCode::kInvalidParams, "embedding degree must be in [1, 64]");
  }
  if (!IsSquarefreeOverQ(f)) {
    throw Error(ErrorCode::kNonSquarefree, "f has a repeated factor: " + f.ToString());
  }
  const long double lead = static_cast<long double>(f.leading());
  // Fujiwara-style radius bound for the starting circle.
  long double radius = 0;
  for (int i = 0; i < n; ++i) {
    long double a = std::fabs(static_cast<long double>(f.coeff(i)) / lead);
    if (a > 0) radius = std::max(radius, std::pow(a, 1.0L / (n - i)));
  }
  radius = std::max(1.0L, 2 * radius);

  std::vector<LComplex> z(static_cast<size_t>(n));
  const long double kTwoPi = 6.283185307179586476925286766559L;
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(radius, kTwoPi * k / n + 0.4L);
  }
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    long double max_step = 0;
    for (int k = 0; k < n; ++k) {
      LComplex denom = lead;
      for (int j = 0; j < n; ++j) {
        if (j != k) denom *= (z[k] - z[j]);
      }
      LComplex step = EvalLong(f, z[k]) / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step));
    }
    converged = max_step < precision;
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence, "root iteration did not converge for " + f.ToString());
  }

  std::vector<std::complex<double>> reals;
  std::vector<LComplex> upper;
  int lower_count = 0;
  for (const LComplex& r : z) {
    if (std::fabs(r.imag()) < precision) {
      reals.emplace_back(static_cast<double>(r.real()), 0.0);
    } else if (r.imag() > 0) {
      upper.push_back(r);
    } else {
      ++lower_count;
    }
  }
  if (lower_count != static_cast<int>(upper.size())) {
    throw Error(ErrorCode::kNoConvergence, "complex roots do not pair into conjugates");
  }
  std::sort(reals.begin(), reals.end(),
            [](const auto& a, const auto& b) { return a.real() < b.real(); });
  std::sort(upper.begin(), upper.end(), [](const LComplex& a, const LComplex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });

  EmbeddingData e;
  e.f = f;
  e.precision = precision;
  e.roots = reals;
  for (const LComplex& r : upper) {
    std::complex<double> d(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    e.roots.push_back(d);
    e.roots.push_back(std::conj(d));
  }
  e.signature = {static_cast<int>(reals.size()), static_cast<int>(upper.size())};

  for (const auto& r : e.roots) {
    LComplex lr(r.real(), r.imag());
    long double scale = std::max(1.0L, EvalAbsScale(f, std::abs(lr)));
    if (std::abs(EvalLong(f, lr)) >= precision * scale * 16) {
      throw Error(ErrorCode::kNoConvergence, "root residual above tolerance");
    }
  }
  for (size_t i = 0; i < e.roots.size(); ++i) {
    for (size_t j = i + 1; j < e.roots.size(); ++j) {
      if (std::abs(e.roots[i] - e.roots[j]) <= precision) {
        throw Error(ErrorCode::kNoConvergence, "roots failed to separate");
      }
    }
  }
  return e;
}

std::vector<std::complex<double>> CanonicalEmbed(std::span<const double> coeffs,
                                                 const EmbeddingData& e) {
  if (coeffs.size() != e.roots.size()) {
    throw Error(ErrorCode::kLengthMismatch, "element length differs from field degree");
  }
  std::vector<std::complex<double>> out;
  out.reserve(e.roots.size());
  for (const auto& root : e.roots) {
    LComplex acc = 0;
    LComplex r(root.real(), root.imag());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + static_cast<long double>(*it);
    out.emplace_back(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
  }
  return out;
}

std::vector<std::complex<double>> CanonicalEmbed(std::span<const mpq_class> coeffs,
                                                 const EmbeddingData& e) {
  std::vector<double> approx(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) approx[i] = coeffs[i].get_d();
  return CanonicalEmbed(approx, e);
}

mpz_class Discriminant(const IntPolynomial& f) {
  const int n = f.degree();
  if (!f.is_monic() || n < 1) throw Error(ErrorCode::kInvalidParams, "discriminant needs monic f");
  if (n > kMaxDiscriminantDegree) {
    throw Error(ErrorCode::kInvalidParams, "exact discriminant limited to degree 32");
  }
  mpz_class res = Resultant(f, f.Derivative());
  if (res == 0) throw Error(ErrorCode::kNonSquarefree, "f has a repeated factor: " + f.ToString());
  return ((n * (n - 1) / 2) % 2 == 0) ? res : mpz_class(-res);
}

std::complex<double> NumericDiscriminant(const EmbeddingData& e) {
  const Eigen::Index n = static_cast<Eigen::Index>(e.roots.size());
  Eigen::MatrixXcd v(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    std::complex<double> power = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      v(i, j) = power;
      power *= e.roots[static_cast<size_t>(i)];
    }
  }
  std::complex<double> det = v.partialPivLu().determinant();
  return det * det;
}

std::string QuadraticBasis::ToString() const {
  std::string root = "sqrt(" + std::to_string(d) + ")";
  return half_integral ? "{1, (1+" + root + ")/2}" : "{1, " + root + "}";
}

QuadraticBasis QuadraticRingBasis(int64_t d) {
  if (d == 0 || d == 1) throw Error(ErrorCode::kInvalidParams, "d must not be 0 or 1");
  uint64_t a = d < 0 ? static_cast<uint64_t>(-(d + 1)) + 1 : static_cast<uint64_t>(d);
  for (uint64_t p = 2; p <= 1000000 && p * p <= a; ++p) {
    if (a % (p * p) == 0) {
      throw Error(ErrorCode::kNotSquarefree, std::to_string(d) + " is divisible by " +
                                                 std::to_string(p) + "^2");
    }
  }
  QuadraticBasis basis;
  basis.d = d;
  int64_t r = ((d % 4) + 4) % 4;
  basis.half_integral = (r == 1);
  basis.field_discriminant = basis.half_integral ? d : 4 * d;
  return basis;
}

}  // namespace latticelab
