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
#include "latticelab/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.h"

namespace latticelab::cli {
namespace {

namespace fs = std::filesystem;

const std::string kSeed = testing::kSeedHex;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = Main(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFilesTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latticelab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  std::string Slurp(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST(ParseArgsTest, Examples) {
  Command c = ParseArgs({"keygen", "--scheme", "plwe", "--n", "16", "--pk", "a", "--sk", "b"});
  EXPECT_EQ(c.verb, "keygen");
  EXPECT_EQ(c.scheme, "plwe");
  EXPECT_EQ(c.Get("n"), "16");
  EXPECT_EQ(ParseArgs({"sign", "--sk", "x"}).scheme, "glyph");
  EXPECT_EQ(ParseArgs({"bench"}).scheme, "lwe");
  Command neg = ParseArgs({"scan", "--f", "-2,0,0,1", "--q", "17"});
  EXPECT_EQ(neg.Get("f"), "-2,0,0,1");
  Command rep = ParseArgs({"bgv-eval", "--input", "a=x", "--input", "b=y", "--circuit", "c"});
  EXPECT_EQ(rep.options.at("input").size(), 2u);
  EXPECT_TRUE(ParseArgs({"keygen", "--scheme", "plwe", "--check-split", "--sk", "s"}).Has("check-split"));
}

TEST(ParseArgsTest, Rejections) {
  EXPECT_THROW(ParseArgs({"encrypt", "--scheme", "glyph"}), UsageError);
  EXPECT_THROW(ParseArgs({"encrypt"}), UsageError);  // scheme is mandatory
  EXPECT_THROW(ParseArgs({"keygen", "--scheme", "lwe", "--bogus", "1"}), UsageError);
  EXPECT_THROW(ParseArgs({"scan", "--alg", "1"}), UsageError);  // flag not accepted by verb
  EXPECT_THROW(ParseArgs({"frobnicate"}), UsageError);
  EXPECT_THROW(ParseArgs({}), UsageError);
  EXPECT_THROW(ParseArgs({"keygen", "--scheme"}), UsageError);
}

TEST(MainTest, ExitCodes) {
  Result help = Call({"help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("bgv-eval"), std::string::npos);
  EXPECT_EQ(Call({"encrypt", "--scheme", "glyph"}).code, kExitUsage);
  Result bad_seed = Call({"bench", "--seed", "zz"});
  EXPECT_EQ(bad_seed.code, kExitUsage);
  Result bad_f = Call({"scan", "--f", "1,1", "--q", "17"});  // degree 1
  EXPECT_EQ(bad_f.code, kExitDomain);
  EXPECT_EQ(bad_f.err.rfind("error: ", 0), 0u);
}

TEST(MainTest, ScanTable) {
  Result r = Call({"scan", "--f", "1,0,0,0,1", "--q", "17"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("root_one"), std::string::npos);
  Result kv = Call({"scan", "--f", "255,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1", "--q", "257", "--format", "kv"});
  ASSERT_EQ(kv.code, kExitOk) << kv.err;
  EXPECT_NE(kv.out.find("root_one=true"), std::string::npos);
}

TEST(MainTest, BenchColumnsAndSeed) {
  Result r = Call({"bench", "--n", "64", "--seed", kSeed});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(r.out.rfind("metric", 0), 0u);
  EXPECT_NE(r.out.find("pk_residues"), std::string::npos);
  EXPECT_NE(r.out.find("pk_ratio"), std::string::npos);
  Result unseeded = Call({"bench", "--n", "16"});
  ASSERT_EQ(unseeded.code, kExitOk);
  EXPECT_EQ(unseeded.err.rfind("seed: ", 0), 0u);
  EXPECT_EQ(unseeded.err.size(), 6u + 64u + 1u);
}

TEST_F(CliFilesTest, PlwePipeline) {
  ASSERT_EQ(Call({"keygen", "--scheme", "plwe", "--n", "16", "--seed", kSeed, "--pk", Path("pk"),
                  "--sk", Path("sk")}).code, kExitOk);
  Write("msg", "lattice message, longer than one block");
  Result enc = Call({"encrypt", "--scheme", "plwe", "--pk", Path("pk"), "--in", Path("msg"),
                     "--seed", kSeed, "--out", Path("ct")});
  ASSERT_EQ(enc.code, kExitOk) << enc.err;
  Result dec = Call({"decrypt", "--scheme", "plwe", "--sk", Path("sk"), "--in", Path("ct")});
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  EXPECT_EQ(dec.out, Slurp("msg"));

  // Same seed, same ciphertext.
  ASSERT_EQ(Call({"encrypt", "--scheme", "plwe", "--pk", Path("pk"), "--in", Path("msg"), "--seed",
                  kSeed, "--out", Path("ct2")}).code, kExitOk);
  EXPECT_EQ(Slurp("ct"), Slurp("ct2"));
  // Secret file of the wrong scheme.
  EXPECT_EQ(Call({"decrypt", "--scheme", "lwe", "--sk", Path("sk"), "--in", Path("ct")}).code,
            kExitDomain);
}

TEST_F(CliFilesTest, LwePipeline) {
  ASSERT_EQ(Call({"keygen", "--scheme", "lwe", "--n", "16", "--seed", kSeed, "--pk", Path("pk"),
                  "--sk", Path("sk")}).code, kExitOk);
  Result enc = Call({"encrypt", "--scheme", "lwe", "--pk", Path("pk"), "--message", "hi",
                     "--seed", kSeed, "--out", Path("ct")});
  ASSERT_EQ(enc.code, kExitOk) << enc.err;
  Result dec = Call({"decrypt", "--scheme", "lwe", "--sk", Path("sk"), "--in", Path("ct")});
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  EXPECT_EQ(dec.out, "hi");
}

TEST_F(CliFilesTest, GlyphSignVerify) {
  ASSERT_EQ(Call({"keygen", "--scheme", "glyph", "--seed", kSeed, "--pk", Path("pk"), "--sk",
                  Path("sk")}).code, kExitOk);
  ASSERT_EQ(Call({"sign", "--pk", Path("pk"), "--sk", Path("sk"), "--message", "pay 10",
                  "--seed", kSeed, "--out", Path("sig")}).code, kExitOk);
  Result ok = Call({"verify", "--pk", Path("pk"), "--sig", Path("sig"), "--message", "pay 10"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "accept\n");
  Result bad = Call({"verify", "--pk", Path("pk"), "--sig", Path("sig"), "--message", "pay 99"});
  EXPECT_EQ(bad.code, kExitDomain);
  EXPECT_EQ(bad.err, "reject: challenge mismatch\n");
}

TEST_F(CliFilesTest, AttackOnSampleFiles) {
  const std::string f = "255,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1";
  ASSERT_EQ(Call({"sample", "--f", f, "--q", "257", "--sigma", "1.5", "--count", "20", "--kind",
                  "oracle", "--seed", kSeed, "--out", Path("oracle"), "--sk", Path("s")}).code,
            kExitOk);
  Result a = Call({"attack", "--alg", "1", "--samples", Path("oracle")});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_NE(a.out.find("random="), std::string::npos);
  Result a2 = Call({"attack", "--alg", "2", "--alpha", "1", "--samples", Path("oracle")});
  ASSERT_EQ(a2.code, kExitOk) << a2.err;
  EXPECT_EQ(a.out, a2.out);
  EXPECT_EQ(Call({"attack", "--alg", "3", "--samples", Path("oracle")}).code, kExitUsage);
  EXPECT_EQ(Call({"attack", "--alg", "2", "--alpha", "5", "--samples", Path("oracle")}).code,
            kExitDomain);
  Result sm = Call({"smear", "--params", Path("oracle"), "--trials", "1000", "--seed", kSeed});
  ASSERT_EQ(sm.code, kExitOk) << sm.err;
  EXPECT_EQ(sm.out.rfind("estimate=", 0), 0u);
}

TEST_F(CliFilesTest, BgvPipeline) {
  Result kg = Call({"keygen", "--scheme", "bgv", "--seed", kSeed, "--sk", Path("sk")});
  ASSERT_EQ(kg.code, kExitOk) << kg.err;
  EXPECT_EQ(kg.out.rfind("chain ", 0), 0u);
  for (const auto& [name, text] : std::vector<std::pair<std::string, std::string>>{
           {"a", "1,1"}, {"b", "0,1"}, {"c", "1"}}) {
    ASSERT_EQ(Call({"encrypt", "--scheme", "bgv", "--sk", Path("sk"), "--message", text,
                    "--seed", kSeed, "--out", Path(name)}).code, kExitOk);
  }
  Write("circuit", "MUL ab a b\nADD out ab c\n");
  Result ev = Call({"bgv-eval", "--circuit", Path("circuit"), "--input", "a=" + Path("a"),
                    "--input", "b=" + Path("b"), "--input", "c=" + Path("c"), "--out", Path("out")});
  ASSERT_EQ(ev.code, kExitOk) << ev.err;
  Result dec = Call({"decrypt", "--scheme", "bgv", "--sk", Path("sk"), "--in", Path("out")});
  ASSERT_EQ(dec.code, kExitOk) << dec.err;
  // (1 + x) x + 1 = 1 + x + x^2 over Z_2.
  EXPECT_EQ(dec.out, "1,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0\n");
  EXPECT_EQ(Call({"keygen", "--scheme", "bgv", "--pk", Path("pk"), "--sk", Path("sk2")}).code,
            kExitUsage);
}

}  // namespace
}  // namespace latticelab::cli
