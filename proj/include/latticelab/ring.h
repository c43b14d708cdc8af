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
#ifndef LATTICELAB_RING_H_
#define LATTICELAB_RING_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "latticelab/polynomial.h"
#include "latticelab/zq.h"

namespace latticelab {

// R_q = F_q[x] / (f) for a monic f of degree n >= 1.
class RingParams {
 public:
  // Throws InvalidParams unless f is monic of degree >= 1.
  static std::shared_ptr<const RingParams> Create(IntPolynomial f, Modulus q);

  const IntPolynomial& f() const { return f_; }
  const Modulus& q() const { return q_; }
  int n() const { return f_.degree(); }
  bool negacyclic() const { return negacyclic_; }
  // f's coefficients reduced mod q, lowest first, length n + 1.
  const std::vector<uint64_t>& f_mod_q() const { return f_mod_q_; }
  // Products of residues that fit in a 128-bit accumulator.
  uint64_t lazy_terms() const { return lazy_terms_; }

  bool SameRing(const RingParams& other) const {
    return this == &other || (q_ == other.q_ && f_ == other.f_);
  }

 private:
  RingParams(IntPolynomial f, Modulus q);

  IntPolynomial f_;
  Modulus q_;
  bool negacyclic_;
  std::vector<uint64_t> f_mod_q_;
  uint64_t lazy_terms_;
};

using RingParamsPtr = std::shared_ptr<const RingParams>;

// Element of R_q as exactly n residues, lowest degree first.
class RingElement {
 public:
  static RingElement Zero(RingParamsPtr params);
  // Throws LengthMismatch / InvalidParams on bad input.
  static RingElement FromResidues(RingParamsPtr params, std::vector<uint64_t> coeffs);
  static RingElement FromSigned(RingParamsPtr params, std::span<const int64_t> coeffs);
  static RingElement Constant(RingParamsPtr params, uint64_t c);
  // x^k reduced into R_q.
  static RingElement Monomial(RingParamsPtr params, int k);

  const RingParamsPtr& params() const { return params_; }
  int n() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<uint64_t>& residues() const { return coeffs_; }
  uint64_t residue(int i) const { return coeffs_[static_cast<size_t>(i)]; }
  ZqElement coeff(int i) const { return ZqElement(coeffs_[static_cast<size_t>(i)], params_->q()); }

  // Centered representatives in (-q/2, q/2].
  std::vector<int64_t> Centered() const;
  // Max |centered coefficient|.
  int64_t InfNorm() const;
  bool IsZero() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement ScalarMul(uint64_t c) const;

  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingElement(RingParamsPtr params, std::vector<uint64_t> coeffs)
      : params_(std::move(params)), coeffs_(std::move(coeffs)) {}
  void CheckSameRing(const RingElement& o) const;

  RingParamsPtr params_;
  std::vector<uint64_t> coeffs_;
};

// a * b mod (f, q). Schoolbook; x^n + 1 takes the shift-and-negate path.
// Throws ParamMismatch if the rings differ.
RingElement RingMul(const RingElement& a, const RingElement& b);

// p(alpha) mod q by Horner.
ZqElement Evaluate(const RingElement& p, const ZqElement& alpha);

// All alpha in F_q with f(alpha) = 0, ascending, by exhaustive scan.
std::vector<ZqElement> RootsModQ(const IntPolynomial& f, const Modulus& q);

// Least r >= 1 with alpha^r = 1. Throws ZeroElement for alpha = 0.
uint64_t MultOrder(const ZqElement& alpha);

// gcd(f, f') = 1 over F_q.
bool IsSquarefreeModP(const IntPolynomial& f, const Modulus& q);

// f mod q squarefree and with deg f distinct roots in F_q.
bool IsTotallySplit(const IntPolynomial& f, const Modulus& q);

// Rabin's irreducibility test for monic f over F_p.
bool IsIrreducibleModP(const IntPolynomial& f, uint64_t p);

// Smallest prime p <= max_prime with f irreducible mod p, or 0. A nonzero
// result proves a monic f irreducible over Q; zero proves nothing.
uint64_t FindIrreducibilityWitness(const IntPolynomial& f, uint64_t max_prime);

}  // namespace latticelab

#endif  // LATTICELAB_RING_H_
