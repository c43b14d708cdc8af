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
#include "latticelab/zq.h"

#include <array>
#include <string>

#include "latticelab/error.h"
#include "latticelab/rng.h"

namespace latticelab {

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<uint64_t, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};
  for (uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kBases) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t NextPrime(uint64_t n) {
  if (n <= 2) return 2;
  uint64_t c = n | 1;
  while (!IsPrime(c)) c += 2;
  return c;
}

std::vector<uint64_t> PrimeFactors(uint64_t n) {
  std::vector<uint64_t> factors;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      factors.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

Modulus::Modulus(uint64_t q) : q_(q) {
  if (q < 3 || q >= (uint64_t{1} << 63) || !IsPrime(q)) {
    throw Error(ErrorCode::kInvalidParams,
                "modulus must be a prime in [3, 2^63), got " +
                    std::to_string(q));
  }
}

uint64_t Modulus::FromSigned(int64_t x) const {
  int64_t q = static_cast<int64_t>(q_);
  int64_t r = x % q;
  return static_cast<uint64_t>(r < 0 ? r + q : r);
}

uint64_t Modulus::FromWide(__int128 x) const {
  __int128 q = q_;
  __int128 r = x % q;
  return static_cast<uint64_t>(r < 0 ? r + q : r);
}

ZqElement::ZqElement(uint64_t value, Modulus q) : value_(value), q_(q) {
  if (value >= q.value()) {
    throw Error(ErrorCode::kInvalidParams, "residue out of range");
  }
}

ZqElement ZqElement::operator+(const ZqElement& o) const {
  if (!(q_ == o.q_)) throw Error(ErrorCode::kParamMismatch, "moduli differ");
  return ZqElement(q_.Add(value_, o.value_), q_);
}

ZqElement ZqElement::operator-(const ZqElement& o) const {
  if (!(q_ == o.q_)) throw Error(ErrorCode::kParamMismatch, "moduli differ");
  return ZqElement(q_.Sub(value_, o.value_), q_);
}

ZqElement ZqElement::operator*(const ZqElement& o) const {
  if (!(q_ == o.q_)) throw Error(ErrorCode::kParamMismatch, "moduli differ");
  return ZqElement(q_.Mul(value_, o.value_), q_);
}

int64_t ReduceCentered(__int128 x, const Modulus& q) {
  uint64_t r = q.FromWide(x);
  // q is odd, so (-q/2, q/2] is [-(q-1)/2, (q-1)/2].
  if (r > q.value() / 2) return static_cast<int64_t>(r) - static_cast<int64_t>(q.value());
  return static_cast<int64_t>(r);
}

int64_t ReduceCentered(const ZqElement& x) {
  return ReduceCentered(x.value(), x.modulus());
}

ZqElement InvMod(const ZqElement& x) {
  if (x.value() == 0) {
    throw Error(ErrorCode::kZeroInverse, "zero has no inverse");
  }
  // Extended Euclid over signed 128-bit to stay clear of overflow.
  __int128 r0 = x.modulus().value(), r1 = x.value();
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    __int128 quot = r0 / r1;
    __int128 tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  return ZqElement(x.modulus().FromWide(t0), x.modulus());
}

ZqElement UniformSample(const Modulus& q, SeededRng& rng) {
  return ZqElement(rng.UniformBelow(q.value()), q);
}

}  // namespace latticelab
