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
#include "latticelab/lwe.h"

#include <gtest/gtest.h>

#include <cmath>

#include "latticelab/error.h"
#include "test_util.h"

namespace latticelab::lwe {
namespace {

TEST(DeriveParamsTest, Examples) {
  Params p64 = DeriveParams(64);
  EXPECT_EQ(p64.q.value(), 4099u);
  EXPECT_EQ(p64.m, 845);
  EXPECT_NEAR(p64.alpha, 1.0 / (8.0 * 36.0), 1e-15);
  EXPECT_NEAR(p64.sigma, p64.alpha * 4099 / (2 * M_PI), 1e-12);
  EXPECT_EQ(DeriveParams(16).q.value(), 257u);
  try {
    DeriveParams(10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNTooSmall);
  }
  EXPECT_THROW(DeriveParams(48), Error);
}

TEST(DeriveParamsTest, Invariants) {
  for (int n : {16, 32, 64, 128, 256}) {
    Params p = DeriveParams(n);
    const uint64_t q = p.q.value();
    EXPECT_GE(q, static_cast<uint64_t>(n) * n);
    EXPECT_LE(q, 2 * static_cast<uint64_t>(n) * n);
    EXPECT_EQ(p.m, static_cast<int>(std::ceil(1.1 * n * std::log2(static_cast<double>(q)))));
  }
}

TEST(KeyGenTest, ReproducibleAndNoiselessHook) {
  Params p = DeriveParams(16);
  SeededRng a = testing::TestRng("lwe/keygen"), b = testing::TestRng("lwe/keygen");
  KeyPair k1 = KeyGen(p, a), k2 = KeyGen(p, b);
  EXPECT_EQ(k1.secret.s, k2.secret.s);
  EXPECT_EQ(k1.public_key.samples[3].b, k2.public_key.samples[3].b);

  p.sigma = 0;
  SeededRng c = testing::TestRng("lwe/noiseless");
  KeyPair k = KeyGen(p, c);
  const uint64_t q = p.q.value();
  for (const auto& s : k.public_key.samples) {
    uint64_t dot = 0;
    for (int i = 0; i < p.n; ++i) dot = (dot + s.a[static_cast<size_t>(i)] * k.secret.s[static_cast<size_t>(i)]) % q;
    ASSERT_EQ(s.b, dot);
  }
}

TEST(KeyGenTest, ErrorsWithinGaussianSupport) {
  Params p = DeriveParams(64);
  SeededRng rng = testing::TestRng("lwe/support");
  KeyPair k = KeyGen(p, rng);
  const int64_t limit = static_cast<int64_t>(std::floor(12 * p.sigma));
  for (const auto& s : k.public_key.samples) {
    __int128 dot = 0;
    for (int i = 0; i < p.n; ++i) dot += static_cast<__int128>(s.a[static_cast<size_t>(i)]) * k.secret.s[static_cast<size_t>(i)];
    const int64_t e = ReduceCentered(static_cast<__int128>(s.b) - dot, p.q);
    ASSERT_LE(std::abs(e), limit);
  }
  EXPECT_EQ(PublicKeyResidueCount(p), 845u * 65u);
}

TEST(EncryptTest, EmptySubsetHook) {
  Params p = DeriveParams(16);
  SeededRng rng = testing::TestRng("lwe/empty");
  KeyPair k = KeyGen(p, rng);
  Ciphertext c0 = EncryptBitWithSubset(k.public_key, 0, {});
  Ciphertext c1 = EncryptBitWithSubset(k.public_key, 1, {});
  EXPECT_EQ(c0.u, std::vector<uint64_t>(16, 0));
  EXPECT_EQ(c0.v, 0u);
  EXPECT_EQ(c1.v, 257u / 2);
}

TEST(DecryptTest, NoiselessBoundaryConvention) {
  Params p = DeriveParams(16);
  SecretKey sk{std::vector<uint64_t>(16, 5)};
  const uint64_t q = p.q.value();
  std::vector<uint64_t> zero(16, 0);
  EXPECT_EQ(DecryptBit(p, sk, {zero, q / 2}), 1);
  EXPECT_EQ(DecryptBit(p, sk, {zero, 0}), 0);
  EXPECT_EQ(DecryptBit(p, sk, {zero, q / 4}), 0);
  EXPECT_EQ(DecryptBit(p, sk, {zero, q - q / 4}), 0);
  EXPECT_EQ(DecryptBit(p, sk, {zero, q / 4 + 1}), 1);
}

TEST(RoundTripTest, NoiselessIsExact) {
  Params p = DeriveParams(32);
  p.sigma = 0;
  SeededRng rng = testing::TestRng("lwe/rt0");
  KeyPair k = KeyGen(p, rng);
  for (int i = 0; i < 500; ++i) {
    const int bit = static_cast<int>(rng.NextBit());
    ASSERT_EQ(DecryptBit(p, k.secret, EncryptBit(k.public_key, bit, rng)), bit);
  }
}

TEST(RoundTripTest, DerivedParamsFailureRate) {
  Params p = DeriveParams(64);
  SeededRng rng = testing::TestRng("lwe/rt");
  KeyPair k = KeyGen(p, rng);
  int failures = 0;
  for (int i = 0; i < 2000; ++i) {
    const int bit = static_cast<int>(rng.NextBit());
    failures += DecryptBit(p, k.secret, EncryptBit(k.public_key, bit, rng)) != bit;
  }
  EXPECT_LE(failures, 20);
}

TEST(SerializationTest, RoundTrip) {
  Params p = DeriveParams(16);
  SeededRng rng = testing::TestRng("lwe/io");
  KeyPair k = KeyGen(p, rng);
  PublicKey pk = PublicKeyFromDocument(TextDocument::Parse(ToDocument(k.public_key).ToString(), kFileHeader));
  ASSERT_EQ(pk.samples.size(), k.public_key.samples.size());
  EXPECT_EQ(pk.samples[7].a, k.public_key.samples[7].a);
  SecretKey sk = SecretKeyFromDocument(TextDocument::Parse(ToDocument(p, k.secret).ToString(), kFileHeader));
  EXPECT_EQ(sk.s, k.secret.s);
  std::vector<Ciphertext> cts{EncryptBit(k.public_key, 1, rng), EncryptBit(k.public_key, 0, rng)};
  auto back = CiphertextsFromDocument(TextDocument::Parse(ToDocument(p, cts).ToString(), kFileHeader));
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0].u, cts[0].u);
  EXPECT_EQ(back[1].v, cts[1].v);
  EXPECT_THROW(PublicKeyFromDocument(TextDocument::Parse(ToDocument(p, k.secret).ToString(), kFileHeader)), Error);
}

}  // namespace
}  // namespace latticelab::lwe
