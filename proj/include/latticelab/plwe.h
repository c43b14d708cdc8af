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
#ifndef LATTICELAB_PLWE_H_
#define LATTICELAB_PLWE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "latticelab/gaussian.h"
#include "latticelab/ring.h"
#include "latticelab/rng.h"
#include "latticelab/textio.h"

// PLWE samples over R_q = F_q[x]/(f) and the LPR public-key cryptosystem.
namespace latticelab::plwe {

inline constexpr char kFileHeader[] = "latticelab-plwe-v1";

struct Params {
  RingParamsPtr ring;
  // Spherical error parameter per coefficient; 0 gives zero errors.
  double sigma = 3.2;
  bool check_split = false;
  // Sampler for sigma > 0; shared between copies.
  std::shared_ptr<const DiscreteGaussian> chi;

  int n() const { return ring->n(); }
  const Modulus& q() const { return ring->q(); }
};

// Throws InvalidParams if sigma < 0, or if check_split is set and f does not
// split totally mod q.
Params MakeParams(RingParamsPtr ring, double sigma, bool check_split);

// Smallest prime q = 1 (mod 2n) with q > floor.
uint64_t SmallestSplittingPrime(int n, uint64_t floor);

// f = x^n + 1 with q = SmallestSplittingPrime(n, q_floor).
Params NegacyclicParams(int n, uint64_t q_floor = 4096, double sigma = 3.2,
                        bool check_split = false);

struct Sample {
  RingElement a;
  RingElement b;
};

struct PublicKey {
  RingElement a;
  RingElement b;
};

struct KeyPair {
  RingElement s;
  PublicKey public_key;
};

struct Ciphertext {
  RingElement u;
  RingElement v;
};

// Coefficient-wise draw from the folded Gaussian.
RingElement SampleError(const Params& p, SeededRng& rng);
RingElement SampleUniform(const Params& p, SeededRng& rng);

// (a, a s + e) with a uniform and e from the error sampler.
Sample OracleSample(const Params& p, const RingElement& s, SeededRng& rng);
// (a, b) both uniform and independent.
Sample UniformSamplePair(const Params& p, SeededRng& rng);

// s, e from the error sampler, a uniform, b = a s + e.
KeyPair KeyGen(const Params& p, SeededRng& rng);

// Exactly n bits. Throws LengthMismatch otherwise.
Ciphertext Encrypt(const PublicKey& pk, std::span<const uint8_t> bits, const Params& p,
                   SeededRng& rng);
// u = a r + e1, v = b r + e2 + floor(q/2) z with caller-supplied randomness.
Ciphertext EncryptWith(const PublicKey& pk, std::span<const uint8_t> bits,
                       const RingElement& r, const RingElement& e1, const RingElement& e2);

// Per coefficient of v - u s: 0 if the centered value lies in (-q/4, q/4].
std::vector<uint8_t> Decrypt(const RingElement& s, const Ciphertext& ct);

// Number of F_q values in a public key: 2n.
uint64_t PublicKeyResidueCount(const Params& p);

TextDocument ParamsToDocument(const Params& p);
TextDocument ToDocument(const Params& p, const PublicKey& pk);
TextDocument SecretToDocument(const Params& p, const RingElement& s);
TextDocument ToDocument(const Params& p, const std::vector<Ciphertext>& blocks, uint64_t bits);
TextDocument ToDocument(const Params& p, const std::vector<Sample>& samples);

// Any plwe document carries the ring and sigma fields.
Params ParamsFromDocument(const TextDocument& doc);
PublicKey PublicKeyFromDocument(const Params& p, const TextDocument& doc);
RingElement SecretFromDocument(const Params& p, const TextDocument& doc);
std::vector<Ciphertext> CiphertextsFromDocument(const Params& p, const TextDocument& doc,
                                                uint64_t* bits);
std::vector<Sample> SamplesFromDocument(const Params& p, const TextDocument& doc);

}  // namespace latticelab::plwe

#endif  // LATTICELAB_PLWE_H_
