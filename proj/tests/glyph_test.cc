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
#include "latticelab/glyph.h"

#include <openssl/evp.h>
#include <gtest/gtest.h>

#include <set>
#include <string>

#include "latticelab/error.h"
#include "test_util.h"

namespace latticelab::glyph {
namespace {

std::vector<uint8_t> Bytes(std::string_view s) { return {s.begin(), s.end()}; }

TextDocument RoundTrip(const TextDocument& doc) {
  return TextDocument::Parse(doc.ToString(), kFileHeader);
}

Params Toy() { return Params::Create(16, 257, 100, 4); }

// Straight reading of the challenge encoding over one long SHAKE256 output.
std::vector<int> OracleChallenge(std::span<const uint8_t> data, int n, int k) {
  const std::string domain = "latticelab-glyph-H";
  std::vector<uint8_t> out(1 << 16);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_shake256(), nullptr);
  EVP_DigestUpdate(ctx, domain.data(), domain.size());
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinalXOF(ctx, out.data(), out.size());
  EVP_MD_CTX_free(ctx);
  std::vector<int> c(static_cast<size_t>(n), 0);
  int placed = 0;
  for (size_t off = 8; placed < k; off += 2) {
    const unsigned v = out[off] + 256u * out[off + 1];
    if (v >= 65536u - 65536u % static_cast<unsigned>(n)) continue;
    const int pos = static_cast<int>(v % static_cast<unsigned>(n));
    if (c[pos] != 0) continue;
    const int bit = (out[placed / 8] >> (placed % 8)) & 1;
    c[pos] = bit ? -1 : 1;
    ++placed;
  }
  return c;
}

TEST(GlyphParamsTest, Validation) {
  Params s = Params::Standard();
  EXPECT_EQ(s.n(), 1024);
  EXPECT_EQ(s.q().value(), 59393u);
  EXPECT_EQ(s.beta(), 16367);
  EXPECT_THROW(Params::Create(12, 257, 100, 4), Error);
  EXPECT_THROW(Params::Create(16, 263, 100, 4), Error);   // 3 mod 4
  EXPECT_THROW(Params::Create(16, 257, 200, 4), Error);   // 2b >= q
  EXPECT_THROW(Params::Create(16, 257, 100, 17), Error);  // k > n
  EXPECT_THROW(Params::Create(16, 257, 4, 4), Error);     // k >= b
  EXPECT_THROW(Params::Create(16, 257, 100, 4, 101), Error);
}

TEST(HashToSparseTest, MatchesOracle) {
  for (const Params& p : {Toy(), Params::Standard(), Params::Create(64, 257, 100, 64)}) {
    for (int i = 0; i < 50; ++i) {
      std::vector<uint8_t> msg = Bytes("msg-" + std::to_string(i));
      RingElement c = HashToSparse(msg, p);
      std::vector<int> want = OracleChallenge(msg, p.n(), p.k());
      std::vector<int64_t> got = c.Centered();
      ASSERT_EQ(got.size(), want.size());
      for (size_t j = 0; j < got.size(); ++j) ASSERT_EQ(got[j], want[j]) << p.n() << " " << i;
    }
  }
}

TEST(HashToSparseTest, WeightDeterminismAndSpread) {
  Params p = Params::Standard();
  std::set<std::string> seen;
  for (int i = 0; i < 1000; ++i) {
    std::vector<uint8_t> msg = Bytes(std::to_string(i));
    RingElement c = HashToSparse(msg, p);
    int weight = 0;
    for (int64_t x : c.Centered()) {
      ASSERT_LE(std::abs(x), 1);
      weight += x != 0;
    }
    ASSERT_EQ(weight, p.k());
    ASSERT_EQ(c, HashToSparse(msg, p));
    seen.insert(EncodeSparse(c));
  }
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(EncodeOmegaTest, MinimalLittleEndian) {
  Params p = Params::Standard();  // q - 1 needs two bytes
  std::vector<uint64_t> r(1024, 0);
  r[0] = 0x1234;
  r[1] = 59392;
  std::vector<uint8_t> enc = EncodeOmega(RingElement::FromResidues(p.ring(), r));
  ASSERT_EQ(enc.size(), 2048u);
  EXPECT_EQ(enc[0], 0x34);
  EXPECT_EQ(enc[1], 0x12);
  EXPECT_EQ(enc[2], 59392 & 0xff);
  EXPECT_EQ(enc[3], 59392 >> 8);
  Params t = Toy();  // q - 1 = 256 needs two bytes too
  EXPECT_EQ(EncodeOmega(RingElement::Zero(t.ring())).size(), 32u);
  Params small = Params::Create(16, 101, 40, 4);
  EXPECT_EQ(EncodeOmega(RingElement::Zero(small.ring())).size(), 16u);
}

TEST(SparseMulTest, MatchesRingProduct) {
  Params p = Toy();
  SeededRng rng = testing::TestRng("glyph/sparse");
  for (int i = 0; i < 200; ++i) {
    RingElement x = SampleBounded(p, 100, rng);
    std::vector<uint8_t> msg = Bytes(std::to_string(i));
    RingElement c = HashToSparse(msg, p);
    ASSERT_EQ(SparseMul(x, c), x * c);
  }
}

TEST(GlyphKeyGenTest, Bounds) {
  Params p = Params::Standard();
  SeededRng rng = testing::TestRng("glyph/keygen");
  KeyPair kp = KeyGen(p, rng);
  EXPECT_LE(kp.secret.s.InfNorm(), 1);
  EXPECT_LE(kp.secret.e.InfNorm(), 1);
  EXPECT_EQ(kp.public_key.t, kp.public_key.a * kp.secret.s + kp.secret.e);
}

TEST(GlyphSignTest, ZeroKeyAcceptsFirstTry) {
  Params p = Params::Standard();
  SeededRng rng = testing::TestRng("glyph/zero");
  RingElement a = SampleBounded(p, 100, rng);
  RingElement zero = RingElement::Zero(p.ring());
  KeyPair kp = KeyGenWith(p, a, zero, zero);
  std::vector<uint8_t> msg = Bytes("hello");
  // y within beta so z = y passes.
  RingElement y1 = SampleBounded(p, p.beta(), rng), y2 = SampleBounded(p, p.beta(), rng);
  Attempt at = SignAttempt(kp.secret, kp.public_key, msg, p, y1, y2);
  EXPECT_TRUE(at.accepted);
  EXPECT_TRUE(Verify(kp.public_key, msg, at.signature, p).accepted);
}

TEST(GlyphSignTest, CommitmentIdentity) {
  Params p = Toy();
  SeededRng rng = testing::TestRng("glyph/identity");
  KeyPair kp = KeyGen(p, rng);
  for (int i = 0; i < 1000; ++i) {
    RingElement y1 = SampleBounded(p, p.b(), rng), y2 = SampleBounded(p, p.b(), rng);
    std::vector<uint8_t> msg = Bytes(std::to_string(i));
    Attempt at = SignAttempt(kp.secret, kp.public_key, msg, p, y1, y2);
    const Signature& s = at.signature;
    ASSERT_EQ(kp.public_key.a * s.z1 + s.z2 - kp.public_key.t * s.c, kp.public_key.a * y1 + y2);
    ASSERT_EQ(at.w, kp.public_key.a * y1 + y2);
  }
}

TEST(GlyphSignTest, AcceptTamperAndNorm) {
  Params p = Params::Standard();
  SeededRng rng = testing::TestRng("glyph/verify");
  KeyPair kp = KeyGen(p, rng);
  for (int i = 0; i < 10; ++i) {
    std::vector<uint8_t> msg = Bytes("message " + std::to_string(i));
    SignResult r = Sign(kp.secret, kp.public_key, msg, p, rng);
    EXPECT_GE(r.iterations, 1u);
    EXPECT_LE(r.signature.z1.InfNorm(), p.beta());
    EXPECT_TRUE(Verify(kp.public_key, msg, r.signature, p).accepted);

    std::vector<uint8_t> other = msg;
    other[0] ^= 1;
    VerifyResult bad = Verify(kp.public_key, other, r.signature, p);
    EXPECT_FALSE(bad.accepted);
    EXPECT_EQ(bad.reason, RejectReason::kChallenge);

    Signature big = r.signature;
    std::vector<int64_t> z = big.z2.Centered();
    z[static_cast<size_t>(i)] = p.beta() + 1;
    big.z2 = RingElement::FromSigned(p.ring(), z);
    EXPECT_EQ(Verify(kp.public_key, msg, big, p).reason, RejectReason::kNorm);
  }
  EXPECT_STREQ(RejectReasonName(RejectReason::kChallenge), "challenge mismatch");
}

TEST(GlyphSignTest, IterationCap) {
  // A secret far outside the mask range can never pass the norm check.
  Params p = Params::Create(16, 257, 100, 4, 100);
  SeededRng rng = testing::TestRng("glyph/cap");
  RingElement a = SampleBounded(p, 100, rng);
  std::vector<int64_t> big(16, 100);
  RingElement s = RingElement::FromSigned(p.ring(), big);
  KeyPair kp = KeyGenWith(p, a, s, s);
  std::vector<uint8_t> msg = Bytes("x");
  try {
    Sign(kp.secret, kp.public_key, msg, p, rng, 50);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRejectionOverflow);
  }
}

TEST(GlyphFilesTest, RoundTrip) {
  Params p = Toy();
  SeededRng rng = testing::TestRng("glyph/files");
  KeyPair kp = KeyGen(p, rng);
  std::vector<uint8_t> msg = Bytes("file");
  Signature sig = Sign(kp.secret, kp.public_key, msg, p, rng).signature;

  TextDocument pub = RoundTrip(ToDocument(p, kp.public_key));
  Params p2 = ParamsFromDocument(pub);
  EXPECT_EQ(p2.b(), p.b());
  EXPECT_EQ(p2.k(), p.k());
  PublicKey pk = PublicKeyFromDocument(p2, pub);
  SecretKey sk = SecretKeyFromDocument(p2, RoundTrip(ToDocument(p, kp.secret)));
  Signature sig2 =
      SignatureFromDocument(p2, RoundTrip(ToDocument(p, sig)));
  EXPECT_EQ(sk.s.Centered(), kp.secret.s.Centered());
  EXPECT_EQ(sig2.c.Centered(), sig.c.Centered());
  EXPECT_EQ(sig2.z1.Centered(), sig.z1.Centered());
  EXPECT_TRUE(Verify(pk, msg, sig2, p2).accepted);
  EXPECT_THROW(SignatureFromDocument(p2, pub), Error);
  EXPECT_EQ(DecodeSparse(p, EncodeSparse(sig.c)), sig.c);
  EXPECT_THROW(DecodeSparse(p, "99:1"), Error);
}

}  // namespace
}  // namespace latticelab::glyph
