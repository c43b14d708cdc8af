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
#ifndef LATTICELAB_BGV_H_
#define LATTICELAB_BGV_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "latticelab/polynomial.h"
#include "latticelab/ring.h"
#include "latticelab/rng.h"
#include "latticelab/textio.h"

// Leveled BGV over Z[x]/(Phi_m) with a decreasing modulus chain.
//
// Levels count operations: a fresh ciphertext is level 0 on the top modulus
// q_L and every homomorphic operation moves one step down, so level i lives
// on chain[L - i].
namespace latticelab::bgv {

inline constexpr char kFileHeader[] = "latticelab-bgv-v1";
inline constexpr uint64_t kChainLimit = uint64_t{1} << 62;

class Params {
 public:
  // chain[0] = q_0 < ... < chain[L] = q_L. Throws InvalidParams unless every
  // q_i is prime, q_i <= min(sqrt(q_{i+1}), q_{i+1} / 2), gcd(p, q_i) = 1 and
  // q_i = 1 (mod p^r).
  static Params Create(int m, uint64_t p, int r, std::vector<uint64_t> chain,
                       double secret_sigma = 0.5, double error_sigma = 3.2);

  int m() const { return m_; }
  int n() const { return f_.degree(); }
  uint64_t p() const { return p_; }
  int r() const { return r_; }
  // Plaintext modulus p^r.
  uint64_t t() const { return t_; }
  int max_level() const { return static_cast<int>(chain_.size()) - 1; }
  const std::vector<uint64_t>& chain() const { return chain_; }
  const IntPolynomial& f() const { return f_; }
  // Ring for chain[index].
  const RingParamsPtr& ring(int index) const { return rings_[static_cast<size_t>(index)]; }
  int ModIndexForLevel(int level) const { return max_level() - level; }
  // Worst-case growth of the infinity norm under one product in Z[x]/(f).
  double expansion() const { return expansion_; }
  double secret_sigma() const { return secret_sigma_; }
  double error_sigma() const { return error_sigma_; }

 private:
  Params() = default;

  int m_ = 0;
  uint64_t p_ = 0;
  int r_ = 0;
  uint64_t t_ = 0;
  std::vector<uint64_t> chain_;
  IntPolynomial f_;
  std::vector<RingParamsPtr> rings_;
  double expansion_ = 0;
  double secret_sigma_ = 0;
  double error_sigma_ = 0;
};

// q_0 = smallest suitable prime >= base, q_{i+1} = smallest suitable prime
// >= max(q_i^2, 2 q_i) * growth. Suitable means q = 1 (mod p^r). Throws
// ChainOverflow once q_L would pass 2^62.
Params Setup(int m, uint64_t p, int r, int levels, double growth = 1.0, uint64_t base = 128);

// Checks the chain invariants without building rings.
void ValidateChain(const std::vector<uint64_t>& chain, uint64_t p, uint64_t t);

struct SecretKey {
  // Coefficients in {-1, 0, 1}.
  std::vector<int64_t> s;
};

struct Ciphertext {
  std::vector<RingElement> parts;
  int level = 0;
  int mod_index = 0;
  // Upper bound on the centered infinity norm of sum_j parts_j s^j.
  double noise_bound = 0;
};

using Plaintext = std::vector<uint64_t>;

// Ternary key from a clamped narrow Gaussian; never all zero.
SecretKey KeyGen(const Params& params, SeededRng& rng);

// Throws InvalidParams unless pt has n coefficients below p^r.
Ciphertext Encrypt(const Plaintext& pt, const SecretKey& sk, const Params& params,
                   SeededRng& rng, int level = 0);
// p_1 and e supplied by the caller.
Ciphertext EncryptWith(const Plaintext& pt, const SecretKey& sk, const Params& params,
                       const RingElement& p1, std::span<const int64_t> e, int level = 0);

// Throws LevelExceeded for a level above L and DecryptFail when the noise
// bound reaches q_i / 2.
Plaintext Decrypt(const Ciphertext& ct, const SecretKey& sk, const Params& params);

// Centered sum_j parts_j s^j; exposes the actual noise for tests.
std::vector<int64_t> RawNoise(const Ciphertext& ct, const SecretKey& sk, const Params& params);

// Scale-and-round to the next smaller modulus, preserving the plaintext.
Ciphertext ModSwitch(const Ciphertext& ct, const Params& params);

// Both inputs at level i < L; output at level i + 1.
Ciphertext HeAdd(const Ciphertext& a, const Ciphertext& b, const Params& params);
Ciphertext HeMul(const Ciphertext& a, const Ciphertext& b, const Params& params);

// Adds p^r * eps to part 0 and widens the noise bound accordingly.
Ciphertext AddNoise(const Ciphertext& ct, std::span<const int64_t> eps, const Params& params);

// Cleartext ring operations in Z_{p^r}[x]/(Phi_m).
Plaintext PlainAdd(const Plaintext& a, const Plaintext& b, const Params& params);
Plaintext PlainMul(const Plaintext& a, const Plaintext& b, const Params& params);

struct Gate {
  enum class Op { kAdd, kMul } op;
  std::string out;
  std::string lhs;
  std::string rhs;
};

// Lines "ADD t a b" or "MUL t a b"; '#' starts a comment.
std::vector<Gate> ParseCircuit(std::string_view text);

// Inputs at different levels are brought to the deeper one by ModSwitch.
std::map<std::string, Ciphertext> EvalCircuit(const std::vector<Gate>& gates,
                                              std::map<std::string, Ciphertext> wires,
                                              const Params& params);
std::map<std::string, Plaintext> EvalCircuitClear(const std::vector<Gate>& gates,
                                                  std::map<std::string, Plaintext> wires,
                                                  const Params& params);

TextDocument ToDocument(const Params& params, const SecretKey& sk);
TextDocument ToDocument(const Params& params, const Ciphertext& ct);
Params ParamsFromDocument(const TextDocument& doc);
SecretKey SecretKeyFromDocument(const Params& params, const TextDocument& doc);
Ciphertext CiphertextFromDocument(const Params& params, const TextDocument& doc);

}  // namespace latticelab::bgv

#endif  // LATTICELAB_BGV_H_
