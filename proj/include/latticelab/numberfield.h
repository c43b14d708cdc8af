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
#ifndef LATTICELAB_NUMBERFIELD_H_
#define LATTICELAB_NUMBERFIELD_H_

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latticelab/polynomial.h"

namespace latticelab {

// Number of real embeddings and of complex-conjugate pairs; s1 + 2 s2 = n.
struct SignatureCount {
  int s1 = 0;
  int s2 = 0;
};

// The complex roots of f, i.e. the images of theta under the n embeddings.
// Roots are ordered: real roots ascending, then each root with positive
// imaginary part immediately followed by its conjugate.
struct EmbeddingData {
  IntPolynomial f;
  std::vector<std::complex<double>> roots;
  double precision = 1e-12;
  SignatureCount signature;
};

// Durand-Kerner iteration from a deterministic circle of starting points.
// Throws NonSquarefree if f has a repeated factor over Q, InvalidParams for
// degree outside [1, 64], NoConvergence after 10^4 sweeps.
EmbeddingData ComplexRoots(const IntPolynomial& f, double precision = 1e-12);

// sigma(a) for a = sum coeffs[j] theta^j. Throws LengthMismatch.
std::vector<std::complex<double>> CanonicalEmbed(std::span<const double> coeffs,
                                                 const EmbeddingData& e);
std::vector<std::complex<double>> CanonicalEmbed(std::span<const mpq_class> coeffs,
                                                 const EmbeddingData& e);

// Resultant via fraction-free elimination on the Sylvester matrix.
mpz_class Resultant(const IntPolynomial& f, const IntPolynomial& g);

bool IsSquarefreeOverQ(const IntPolynomial& f);

// Discriminant of the order Z[x]/(f): (-1)^{n(n-1)/2} Res(f, f') for monic
// f. This equals the field discriminant only when Z[theta] is the full ring
// of integers (e.g. cyclotomic fields). Throws NonSquarefree, InvalidParams
// for non-monic f or degree > 32.
mpz_class Discriminant(const IntPolynomial& f);

// det(sigma_i(theta^j))^2 computed in floating point.
std::complex<double> NumericDiscriminant(const EmbeddingData& e);

// Integral basis of the ring of integers of Q(sqrt(d)).
struct QuadraticBasis {
  int64_t d = 0;
  // Basis {1, (1 + sqrt d)/2} when true, {1, sqrt d} otherwise.
  bool half_integral = false;
  // d when d = 1 mod 4, else 4d.
  int64_t field_discriminant = 0;

  std::string ToString() const;
};

// Throws InvalidParams for d in {0, 1}, NotSquarefree when some p^2 | d
// with p <= 10^6.
QuadraticBasis QuadraticRingBasis(int64_t d);

}  // namespace latticelab

#endif  // LATTICELAB_NUMBERFIELD_H_
