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
#ifndef LATTICELAB_ZQ_H_
#define LATTICELAB_ZQ_H_

#include <cstdint>
#include <vector>

namespace latticelab {

class SeededRng;

// Deterministic Miller-Rabin; exact for every 64-bit input.
bool IsPrime(uint64_t n);

// Smallest prime >= n.
uint64_t NextPrime(uint64_t n);

// Distinct prime factors of n, ascending, by trial division.
std::vector<uint64_t> PrimeFactors(uint64_t n);

inline uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m);

// A prime modulus 3 <= q < 2^63.
class Modulus {
 public:
  // Throws InvalidParams unless q is a prime in [3, 2^63).
  explicit Modulus(uint64_t q);

  uint64_t value() const { return q_; }

  uint64_t Add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint64_t Sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  uint64_t Neg(uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  uint64_t Mul(uint64_t a, uint64_t b) const { return MulMod(a, b, q_); }

  // Residue of an arbitrary signed integer.
  uint64_t FromSigned(int64_t x) const;
  uint64_t FromWide(__int128 x) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  uint64_t q_;
};

// Element of F_q with value in [0, q).
class ZqElement {
 public:
  ZqElement(uint64_t value, Modulus q);
  static ZqElement FromSigned(int64_t value, Modulus q) {
    return ZqElement(q.FromSigned(value), q);
  }

  uint64_t value() const { return value_; }
  const Modulus& modulus() const { return q_; }

  ZqElement operator+(const ZqElement& o) const;
  ZqElement operator-(const ZqElement& o) const;
  ZqElement operator*(const ZqElement& o) const;
  ZqElement operator-() const { return ZqElement(q_.Neg(value_), q_); }
  ZqElement Pow(uint64_t e) const {
    return ZqElement(PowMod(value_, e, q_.value()), q_);
  }

  friend bool operator==(const ZqElement&, const ZqElement&) = default;

 private:
  uint64_t value_;
  Modulus q_;
};

// Representative of x mod q in (-q/2, q/2].
int64_t ReduceCentered(__int128 x, const Modulus& q);
int64_t ReduceCentered(const ZqElement& x);

// Throws ZeroInverse for x == 0.
ZqElement InvMod(const ZqElement& x);

// Uniform over {0, ..., q-1} by rejection below the next power of two.
ZqElement UniformSample(const Modulus& q, SeededRng& rng);

}  // namespace latticelab

#endif  // LATTICELAB_ZQ_H_
