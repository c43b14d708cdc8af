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
#ifndef LATTICELAB_GLYPH_H_
#define LATTICELAB_GLYPH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latticelab/ring.h"
#include "latticelab/rng.h"
#include "latticelab/textio.h"

// GLYPH signatures over Z_q[x]/(x^n + 1).
namespace latticelab::glyph {

inline constexpr char kFileHeader[] = "latticelab-glyph-v1";
inline constexpr uint64_t kMaxIterations = 10000;

class Params {
 public:
  // n a power of two in [2, 65536]; q prime with q = 1 (mod 4); 0 < k < b
  // with k <= min(n, 64) and 2b < q; 0 <= secret_bound <= b.
  static Params Create(int n, uint64_t q, int64_t b, int k, int64_t secret_bound = 1);
  // n = 1024, q = 59393, b = 16383, k = 16, ternary keys.
  static Params Standard();

  int n() const { return n_; }
  const Modulus& q() const { return ring_->q(); }
  int64_t b() const { return b_; }
  int k() const { return k_; }
  int64_t beta() const { return b_ - k_; }
  // Key coefficients are uniform in [-secret_bound, secret_bound].
  int64_t secret_bound() const { return secret_bound_; }
  const RingParamsPtr& ring() const { return ring_; }

 private:
  Params(RingParamsPtr ring, int64_t b, int k, int64_t secret_bound)
      : ring_(std::move(ring)), n_(ring_->n()), b_(b), k_(k), secret_bound_(secret_bound) {}

  RingParamsPtr ring_;
  int n_;
  int64_t b_;
  int k_;
  int64_t secret_bound_;
};

struct SecretKey {
  RingElement s;
  RingElement e;
};

struct PublicKey {
  RingElement a;
  RingElement t;
};

struct KeyPair {
  SecretKey secret;
  PublicKey public_key;
};

struct Signature {
  RingElement c;
  RingElement z1;
  RingElement z2;
};

struct SignResult {
  Signature signature;
  uint64_t iterations = 0;
};

// One pass of the signing loop with fixed masks.
struct Attempt {
  Signature signature;
  RingElement w;
  bool accepted = false;
};

enum class RejectReason { kNone, kNorm, kChallenge };
const char* RejectReasonName(RejectReason reason);

struct VerifyResult {
  bool accepted = false;
  RejectReason reason = RejectReason::kNone;
};

// Weight-k challenge with +-1 coefficients derived from SHAKE256.
RingElement HashToSparse(std::span<const uint8_t> data, const Params& p);

// Each residue of w in the minimal number of bytes for q, little-endian.
std::vector<uint8_t> EncodeOmega(const RingElement& w);

// Uniform in [-bound, bound] per coefficient.
RingElement SampleBounded(const Params& p, int64_t bound, SeededRng& rng);

KeyPair KeyGen(const Params& p, SeededRng& rng);
KeyPair KeyGenWith(const Params& p, const RingElement& a, const RingElement& s,
                   const RingElement& e);

Attempt SignAttempt(const SecretKey& sk, const PublicKey& pk, std::span<const uint8_t> message,
                    const Params& p, const RingElement& y1, const RingElement& y2);

// Throws RejectionOverflow after max_iterations rejected attempts.
SignResult Sign(const SecretKey& sk, const PublicKey& pk, std::span<const uint8_t> message,
                const Params& p, SeededRng& rng, uint64_t max_iterations = kMaxIterations);

VerifyResult Verify(const PublicKey& pk, std::span<const uint8_t> message,
                    const Signature& sig, const Params& p);

// Product with a sparse +-1 polynomial in the negacyclic ring.
RingElement SparseMul(const RingElement& x, const RingElement& c);

TextDocument ToDocument(const Params& p, const PublicKey& pk);
TextDocument ToDocument(const Params& p, const SecretKey& sk);
TextDocument ToDocument(const Params& p, const Signature& sig);
Params ParamsFromDocument(const TextDocument& doc);
PublicKey PublicKeyFromDocument(const Params& p, const TextDocument& doc);
SecretKey SecretKeyFromDocument(const Params& p, const TextDocument& doc);
Signature SignatureFromDocument(const Params& p, const TextDocument& doc);

// "index:sign" pairs, ascending index.
std::string EncodeSparse(const RingElement& c);
RingElement DecodeSparse(const Params& p, std::string_view text);

}  // namespace latticelab::glyph

#endif  // LATTICELAB_GLYPH_H_
