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
#include "latticelab/bgv.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "latticelab/error.h"
#include "test_util.h"

namespace latticelab::bgv {
namespace {

std::optional<ErrorCode> CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Plaintext RandomPlain(const Params& params, SeededRng& rng) {
  Plaintext pt(static_cast<size_t>(params.n()));
  for (auto& x : pt) x = rng.UniformBelow(params.t());
  return pt;
}

// Schoolbook product reduced by a monic modulus, coefficients mod t.
Plaintext OracleMul(const Plaintext& a, const Plaintext& b, const std::vector<int64_t>& f,
                    int64_t t) {
  const size_t n = f.size() - 1;
  std::vector<int64_t> prod(2 * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      prod[i + j] = (prod[i + j] + static_cast<int64_t>(a[i] * b[j])) % t;
    }
  }
  for (size_t d = 2 * n - 1; d >= n; --d) {
    const int64_t lead = prod[d];
    for (size_t k = 0; k <= n; ++k) prod[d - n + k] -= lead * f[k];
    for (auto& x : prod) x = ((x % t) + t) % t;
  }
  return Plaintext(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n));
}

TEST(BgvSetupTest, ChainInvariants) {
  Params params = bgv::Setup(32, 2, 1, 3);
  ASSERT_EQ(params.max_level(), 3);
  EXPECT_EQ(params.n(), 16);
  const auto& c = params.chain();
  for (size_t i = 0; i < c.size(); ++i) {
    EXPECT_TRUE(IsPrime(c[i]));
    EXPECT_EQ(c[i] % 2, 1u);
    if (i + 1 < c.size()) {
      EXPECT_LE(static_cast<__int128>(c[i]) * c[i], c[i + 1]);
      EXPECT_LE(2 * c[i], c[i + 1]);
    }
  }
  EXPECT_EQ(bgv::Setup(32, 2, 1, 1).max_level(), 1);
  Params t16 = bgv::Setup(16, 17, 1, 2);
  for (uint64_t q : t16.chain()) EXPECT_EQ(q % 17, 1u);
}

TEST(BgvSetupTest, RejectsBadChains) {
  EXPECT_EQ(CodeOf([] { ValidateChain({131, 257}, 2, 2); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { ValidateChain({131, 17161}, 2, 2); }), ErrorCode::kInvalidParams);  // not prime
  EXPECT_EQ(CodeOf([] { ValidateChain({137, 17167}, 17, 17); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { Params::Create(32, 2, 1, {131, 257}); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(CodeOf([] { bgv::Setup(32, 2, 1, 8); }), ErrorCode::kChainOverflow);
  EXPECT_NO_THROW(ValidateChain({131, 17167}, 2, 2));
}

TEST(BgvKeyTest, TernaryAndSymmetric) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/key");
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 200; ++i) {
    for (int64_t x : KeyGen(params, rng).s) {
      ASSERT_LE(std::abs(x), 1);
      ++counts[static_cast<size_t>(x + 1)];
    }
  }
  const double total = 200.0 * 16;
  EXPECT_NEAR(counts[0] / total, counts[2] / total, 0.03);
  EXPECT_GT(counts[1], counts[0]);

  // At m = 8 a zero key is likely from the sampler; KeyGen must redraw.
  Params small = bgv::Setup(8, 2, 1, 2);
  for (int i = 0; i < 200; ++i) {
    std::vector<int64_t> s = KeyGen(small, rng).s;
    ASSERT_TRUE(std::any_of(s.begin(), s.end(), [](int64_t x) { return x != 0; }));
  }
}

TEST(BgvEncryptTest, DeterministicHook) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/hook");
  SecretKey sk = KeyGen(params, rng);
  Plaintext pt = RandomPlain(params, rng);
  std::vector<int64_t> e(16, 0);
  Ciphertext ct = EncryptWith(pt, sk, params, RingElement::Zero(params.ring(3)), e);
  std::vector<int64_t> raw = RawNoise(ct, sk, params);
  for (size_t i = 0; i < pt.size(); ++i) EXPECT_EQ(raw[i], static_cast<int64_t>(pt[i]));
  EXPECT_EQ(Decrypt(ct, sk, params), pt);
}

TEST(BgvEncryptTest, RoundTripAndOperations) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/ops");
  SecretKey sk = KeyGen(params, rng);
  std::vector<int64_t> phi32(17, 0);
  phi32[0] = phi32[16] = 1;
  for (int i = 0; i < 100; ++i) {
    Plaintext a = RandomPlain(params, rng), b = RandomPlain(params, rng);
    Ciphertext ca = Encrypt(a, sk, params, rng), cb = Encrypt(b, sk, params, rng);
    ASSERT_EQ(Decrypt(ca, sk, params), a);
    Ciphertext sum = HeAdd(ca, cb, params);
    Ciphertext prod = HeMul(ca, cb, params);
    EXPECT_EQ(sum.level, 1);
    EXPECT_EQ(sum.mod_index, 2);
    ASSERT_EQ(Decrypt(sum, sk, params), PlainAdd(a, b, params));
    ASSERT_EQ(Decrypt(prod, sk, params), PlainMul(a, b, params));
    ASSERT_EQ(PlainMul(a, b, params), OracleMul(a, b, phi32, 2));
    for (const Ciphertext* c : {&ca, &sum, &prod}) {
      std::vector<int64_t> raw = RawNoise(*c, sk, params);
      for (int64_t x : raw) ASSERT_LE(std::abs(x), c->noise_bound);
    }
  }
}

TEST(BgvEncryptTest, GeneralCyclotomicProduct) {
  Params params = bgv::Setup(9, 3, 1, 2);  // Phi_9 = x^6 + x^3 + 1
  SeededRng rng = testing::TestRng("bgv/phi9");
  std::vector<int64_t> phi9{1, 0, 0, 1, 0, 0, 1};
  SecretKey sk = KeyGen(params, rng);
  for (int i = 0; i < 50; ++i) {
    Plaintext a = RandomPlain(params, rng), b = RandomPlain(params, rng);
    ASSERT_EQ(PlainMul(a, b, params), OracleMul(a, b, phi9, 3));
    Ciphertext prod = HeMul(Encrypt(a, sk, params, rng), Encrypt(b, sk, params, rng), params);
    ASSERT_EQ(Decrypt(prod, sk, params), PlainMul(a, b, params));
  }
}

TEST(BgvCircuitTest, MulThenAdd) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/circuit");
  SecretKey sk = KeyGen(params, rng);
  std::vector<Gate> gates = ParseCircuit("# (a*b)+c\nMUL ab a b\nADD out ab c  # tail\n\n");
  ASSERT_EQ(gates.size(), 2u);
  EXPECT_EQ(gates[0].op, Gate::Op::kMul);
  EXPECT_EQ(gates[1].lhs, "ab");
  for (int i = 0; i < 20; ++i) {
    std::map<std::string, Plaintext> clear;
    std::map<std::string, Ciphertext> enc;
    for (const char* w : {"a", "b", "c"}) {
      clear[w] = RandomPlain(params, rng);
      enc.emplace(w, Encrypt(clear[w], sk, params, rng));
    }
    auto out = EvalCircuit(gates, enc, params);
    auto want = EvalCircuitClear(gates, clear, params);
    EXPECT_EQ(out.at("out").level, 2);
    ASSERT_EQ(Decrypt(out.at("out"), sk, params), want.at("out"));
  }
  EXPECT_THROW(ParseCircuit("XOR a b c"), Error);
  EXPECT_THROW(ParseCircuit("ADD a b"), Error);
  std::map<std::string, Ciphertext> none;
  EXPECT_THROW(EvalCircuit(gates, none, params), Error);
}

TEST(BgvLevelTest, LevelExceededAndDecryptFail) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/level");
  SecretKey sk = KeyGen(params, rng);
  Plaintext a = RandomPlain(params, rng);
  Ciphertext c = Encrypt(a, sk, params, rng, 3);
  EXPECT_EQ(c.mod_index, 0);
  EXPECT_EQ(Decrypt(c, sk, params), a);
  EXPECT_EQ(CodeOf([&] { HeMul(c, c, params); }), ErrorCode::kLevelExceeded);
  EXPECT_EQ(CodeOf([&] { ModSwitch(c, params); }), ErrorCode::kLevelExceeded);
  EXPECT_EQ(CodeOf([&] { Encrypt(a, sk, params, rng, 4); }), ErrorCode::kLevelExceeded);

  std::vector<int64_t> eps(16, 0);
  eps[0] = static_cast<int64_t>(params.chain()[0]);
  EXPECT_EQ(CodeOf([&] { Decrypt(AddNoise(c, eps, params), sk, params); }),
            ErrorCode::kDecryptFail);
}

TEST(BgvModSwitchTest, PreservesPlaintext) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/switch");
  SecretKey sk = KeyGen(params, rng);
  for (int i = 0; i < 1000; ++i) {
    Plaintext a = RandomPlain(params, rng);
    Ciphertext c = Encrypt(a, sk, params, rng, static_cast<int>(i % 3));
    Ciphertext d = ModSwitch(c, params);
    ASSERT_EQ(d.level, c.level + 1);
    ASSERT_EQ(Decrypt(d, sk, params), a);
    for (int64_t x : RawNoise(d, sk, params)) ASSERT_LE(std::abs(x), d.noise_bound);
  }
}

TEST(BgvFilesTest, RoundTrip) {
  Params params = bgv::Setup(32, 2, 1, 3);
  SeededRng rng = testing::TestRng("bgv/files");
  SecretKey sk = KeyGen(params, rng);
  Plaintext a = RandomPlain(params, rng);
  Ciphertext c = HeMul(Encrypt(a, sk, params, rng), Encrypt(a, sk, params, rng), params);
  auto rt = [](const TextDocument& d) { return TextDocument::Parse(d.ToString(), kFileHeader); };
  TextDocument sdoc = rt(ToDocument(params, sk));
  Params p2 = ParamsFromDocument(sdoc);
  EXPECT_EQ(p2.chain(), params.chain());
  SecretKey sk2 = SecretKeyFromDocument(p2, sdoc);
  EXPECT_EQ(sk2.s, sk.s);
  Ciphertext c2 = CiphertextFromDocument(p2, rt(ToDocument(params, c)));
  EXPECT_EQ(c2.level, c.level);
  EXPECT_EQ(c2.parts.size(), 3u);
  EXPECT_EQ(Decrypt(c2, sk2, p2), PlainMul(a, a, params));
  EXPECT_THROW(CiphertextFromDocument(p2, sdoc), Error);
}

}  // namespace
}  // namespace latticelab::bgv
