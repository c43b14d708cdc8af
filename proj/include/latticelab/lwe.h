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
#ifndef LATTICELAB_LWE_H_
#define LATTICELAB_LWE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "latticelab/rng.h"
#include "latticelab/textio.h"
#include "latticelab/zq.h"

// Regev's LWE bit cipher over F_q^n.
namespace latticelab::lwe {

inline constexpr char kFileHeader[] = "latticelab-lwe-v1";

struct Params {
  int n;
  Modulus q;
  double alpha;
  int m;
  // Error parameter alpha*q/(2 pi). Zero selects noiseless samples.
  double sigma;
};

// q = smallest prime >= n^2, alpha = 1/(sqrt(n) log2(n)^2),
// m = ceil(1.1 n log2 q). Throws NTooSmall for n < 16 and InvalidParams for
// n not a power of two.
Params DeriveParams(int n);

struct SecretKey {
  std::vector<uint64_t> s;
};

struct PublicSample {
  std::vector<uint64_t> a;
  uint64_t b;
};

struct PublicKey {
  Params params;
  std::vector<PublicSample> samples;
};

struct KeyPair {
  SecretKey secret;
  PublicKey public_key;
};

struct Ciphertext {
  std::vector<uint64_t> u;
  uint64_t v;
};

// Number of F_q values in a public key: m (n + 1).
uint64_t PublicKeyResidueCount(const Params& p);

KeyPair KeyGen(const Params& p, SeededRng& rng);

// Each index joins the subset S independently with probability 1/2.
Ciphertext EncryptBit(const PublicKey& pk, int bit, SeededRng& rng);
// u = sum_{i in S} a_i, v = bit * floor(q/2) + sum_{i in S} b_i.
Ciphertext EncryptBitWithSubset(const PublicKey& pk, int bit, std::span<const size_t> subset);

// 0 iff the centered value of v - <u, s> lies in (-q/4, q/4].
int DecryptBit(const Params& p, const SecretKey& sk, const Ciphertext& ct);

TextDocument ToDocument(const PublicKey& pk);
TextDocument ToDocument(const Params& p, const SecretKey& sk);
TextDocument ToDocument(const Params& p, const std::vector<Ciphertext>& cts);
Params ParamsFromDocument(const TextDocument& doc);
PublicKey PublicKeyFromDocument(const TextDocument& doc);
SecretKey SecretKeyFromDocument(const TextDocument& doc);
std::vector<Ciphertext> CiphertextsFromDocument(const TextDocument& doc);

}  // namespace latticelab::lwe

#endif  // LATTICELAB_LWE_H_
