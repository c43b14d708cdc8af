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

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "latticelab/attacks.h"
#include "latticelab/bgv.h"
#include "latticelab/error.h"
#include "latticelab/glyph.h"
#include "latticelab/lwe.h"
#include "latticelab/plwe.h"
#include "latticelab/rng.h"
#include "latticelab/textio.h"

namespace latticelab::cli {
namespace {

struct FlagSpec {
  const char* name;
  bool boolean;
  const char* help;
};

constexpr FlagSpec kFlags[] = {
    {"scheme", false, "lwe | plwe | glyph | bgv"},
    {"seed", false, "64 hex digits; drawn from the system when absent"},
    {"out", false, "output file (stdout when absent)"},
    {"n", false, "ring degree or LWE dimension"},
    {"q", false, "modulus"},
    {"f", false, "defining polynomial as CSV, lowest degree first"},
    {"sigma", false, "error parameter"},
    {"check-split", true, "require f to split totally mod q"},
    {"pk", false, "public key file"},
    {"sk", false, "secret key file"},
    {"in", false, "input file"},
    {"message", false, "literal message"},
    {"sig", false, "signature file"},
    {"b", false, "GLYPH coefficient bound"},
    {"k", false, "GLYPH challenge weight"},
    {"secret-bound", false, "GLYPH key coefficient bound"},
    {"m", false, "BGV cyclotomic index"},
    {"p", false, "BGV plaintext prime"},
    {"r", false, "BGV plaintext exponent"},
    {"levels", false, "BGV number of levels L"},
    {"growth", false, "BGV chain growth factor"},
    {"base", false, "BGV lower bound for q_0"},
    {"level", false, "BGV encryption level"},
    {"circuit", false, "BGV circuit file"},
    {"input", false, "BGV circuit input name=file (repeatable)"},
    {"wire", false, "BGV circuit output wire"},
    {"alg", false, "attack algorithm: 1 or 2"},
    {"params", false, "PLWE parameter file (any PLWE file works)"},
    {"samples", false, "PLWE samples file"},
    {"t", false, "attack threshold multiplier"},
    {"alpha", false, "root of f mod q"},
    {"r-max", false, "largest root order considered small"},
    {"trials", false, "smearing trials"},
    {"count", false, "number of samples"},
    {"kind", false, "oracle | uniform"},
    {"format", false, "table | kv"},
};

struct VerbSpec {
  const char* verb;
  std::set<std::string> schemes;
  // Empty when --scheme is mandatory.
  const char* default_scheme;
  std::set<std::string> flags;
};

const std::vector<VerbSpec>& Verbs() {
  static const std::vector<VerbSpec> verbs = {
      {"keygen", {"lwe", "plwe", "glyph", "bgv"}, "",
       {"scheme", "seed", "n", "q", "f", "sigma", "check-split", "pk", "sk", "b", "k",
        "secret-bound", "m", "p", "r", "levels", "growth", "base"}},
      {"encrypt", {"lwe", "plwe", "bgv"}, "", {"scheme", "seed", "pk", "sk", "in", "message", "out", "level"}},
      {"decrypt", {"lwe", "plwe", "bgv"}, "", {"scheme", "sk", "in", "out"}},
      {"sign", {"glyph"}, "glyph", {"scheme", "seed", "sk", "pk", "in", "message", "out"}},
      {"verify", {"glyph"}, "glyph", {"scheme", "pk", "in", "message", "sig"}},
      {"scan", {"plwe"}, "plwe", {"scheme", "f", "q", "r-max", "format"}},
      {"attack", {"plwe"}, "plwe", {"scheme", "alg", "params", "samples", "t", "alpha", "r-max"}},
      {"smear", {"plwe"}, "plwe",
       {"scheme", "seed", "params", "f", "q", "sigma", "alpha", "trials", "t"}},
      {"bgv-eval", {"bgv"}, "bgv", {"scheme", "circuit", "input", "wire", "out"}},
      {"sample", {"plwe"}, "plwe",
       {"scheme", "seed", "params", "f", "q", "n", "sigma", "count", "kind", "out", "sk"}},
      {"bench", {"lwe", "plwe"}, "lwe", {"scheme", "seed", "n"}},
  };
  return verbs;
}

const VerbSpec* FindVerb(const std::string& verb) {
  for (const auto& v : Verbs()) {
    if (verb == v.verb) return &v;
  }
  return nullptr;
}

int64_t IntOpt(const Command& cmd, const std::string& name, int64_t fallback) {
  if (!cmd.Has(name)) return fallback;
  try {
    return ParseInt(cmd.Get(name));
  } catch (const Error&) {
    throw UsageError("--" + name + " expects an integer");
  }
}

uint64_t UintOpt(const Command& cmd, const std::string& name, uint64_t fallback) {
  if (!cmd.Has(name)) return fallback;
  try {
    return ParseUint(cmd.Get(name));
  } catch (const Error&) {
    throw UsageError("--" + name + " expects a non-negative integer");
  }
}

double DoubleOpt(const Command& cmd, const std::string& name, double fallback) {
  if (!cmd.Has(name)) return fallback;
  try {
    return ParseDouble(cmd.Get(name));
  } catch (const Error&) {
    throw UsageError("--" + name + " expects a number");
  }
}

SeededRng MakeRng(const Command& cmd, std::ostream& err, std::string_view label) {
  SeededRng::Seed seed;
  if (cmd.Has("seed")) {
    try {
      seed = SeededRng::ParseSeedHex(cmd.Get("seed"));
    } catch (const Error&) {
      throw UsageError("--seed expects 64 hex digits");
    }
  } else {
    seed = SeededRng::EntropySeed();
    err << "seed: " << SeededRng::SeedToHex(seed) << "\n";
  }
  return SeededRng(seed).Derive(std::string(cmd.verb) + "/" + cmd.scheme + "/" + std::string(label));
}

std::string ReadMessage(const Command& cmd) {
  if (cmd.Has("message")) return cmd.Get("message");
  if (cmd.Has("in")) return ReadFileToString(cmd.Get("in"));
  throw UsageError("need --message or --in");
}

void Emit(const Command& cmd, std::ostream& out, const std::string& text) {
  if (cmd.Has("out")) {
    WriteStringToFile(cmd.Get("out"), text);
  } else {
    out << text;
  }
}

std::vector<uint8_t> BytesToBits(std::string_view bytes) {
  std::vector<uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (unsigned char c : bytes) {
    for (int i = 0; i < 8; ++i) bits.push_back((c >> i) & 1);
  }
  return bits;
}

std::string BitsToBytes(std::span<const uint8_t> bits) {
  std::string out(bits.size() / 8, '\0');
  for (size_t byte = 0; byte < out.size(); ++byte) {
    unsigned char c = 0;
    for (size_t j = 0; j < 8; ++j) c |= static_cast<unsigned char>(bits[8 * byte + j] << j);
    out[byte] = static_cast<char>(c);
  }
  return out;
}

TextDocument ReadDoc(const std::string& path, std::string_view header) {
  return TextDocument::Parse(ReadFileToString(path), header);
}

plwe::Params PlweParamsFromFlags(const Command& cmd, int default_n) {
  const double sigma = DoubleOpt(cmd, "sigma", 3.2);
  const bool split = cmd.Has("check-split");
  if (cmd.Has("f")) {
    if (!cmd.Has("q")) throw UsageError("--f needs --q");
    IntPolynomial f = IntPolynomial::ParseCsv(cmd.Get("f"));
    return plwe::MakeParams(RingParams::Create(std::move(f), Modulus(UintOpt(cmd, "q", 0))), sigma,
                            split);
  }
  const int n = static_cast<int>(IntOpt(cmd, "n", default_n));
  if (n < 1) throw UsageError("--n must be positive");
  if (cmd.Has("q")) {
    return plwe::MakeParams(
        RingParams::Create(IntPolynomial::XnPlusOne(n), Modulus(UintOpt(cmd, "q", 0))), sigma,
        split);
  }
  return plwe::NegacyclicParams(n, 4096, sigma, split);
}

plwe::Params PlweParamsFromFileOrFlags(const Command& cmd) {
  if (cmd.Has("params")) return plwe::ParamsFromDocument(ReadDoc(cmd.Get("params"), plwe::kFileHeader));
  return PlweParamsFromFlags(cmd, 256);
}

std::string Fixed(double v, int digits) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  os << v;
  return os.str();
}

std::string Pad(const std::string& s, size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// keygen ---------------------------------------------------------------------

int Keygen(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.Has("sk")) throw UsageError("keygen needs --sk");
  SeededRng rng = MakeRng(cmd, err, "keys");
  if (cmd.scheme == "bgv") {
    if (cmd.Has("pk")) throw UsageError("bgv is symmetric-key; omit --pk");
    bgv::Params p = bgv::Setup(static_cast<int>(IntOpt(cmd, "m", 32)), UintOpt(cmd, "p", 2),
                               static_cast<int>(IntOpt(cmd, "r", 1)),
                               static_cast<int>(IntOpt(cmd, "levels", 3)),
                               DoubleOpt(cmd, "growth", 1.0), UintOpt(cmd, "base", 128));
    bgv::SecretKey sk = bgv::KeyGen(p, rng);
    bgv::ToDocument(p, sk).WriteFile(cmd.Get("sk"));
    out << "chain " << JoinCsv(p.chain()) << "\n";
    return kExitOk;
  }
  if (!cmd.Has("pk")) throw UsageError("keygen needs --pk");
  if (cmd.scheme == "lwe") {
    lwe::Params p = lwe::DeriveParams(static_cast<int>(IntOpt(cmd, "n", 64)));
    p.sigma = DoubleOpt(cmd, "sigma", p.sigma);
    lwe::KeyPair kp = lwe::KeyGen(p, rng);
    lwe::ToDocument(kp.public_key).WriteFile(cmd.Get("pk"));
    lwe::ToDocument(p, kp.secret).WriteFile(cmd.Get("sk"));
  } else if (cmd.scheme == "plwe") {
    plwe::Params p = PlweParamsFromFlags(cmd, 256);
    plwe::KeyPair kp = plwe::KeyGen(p, rng);
    plwe::ToDocument(p, kp.public_key).WriteFile(cmd.Get("pk"));
    plwe::SecretToDocument(p, kp.s).WriteFile(cmd.Get("sk"));
  } else {
    glyph::Params p = glyph::Params::Create(
        static_cast<int>(IntOpt(cmd, "n", 1024)), UintOpt(cmd, "q", 59393), IntOpt(cmd, "b", 16383),
        static_cast<int>(IntOpt(cmd, "k", 16)), IntOpt(cmd, "secret-bound", 1));
    glyph::KeyPair kp = glyph::KeyGen(p, rng);
    glyph::ToDocument(p, kp.public_key).WriteFile(cmd.Get("pk"));
    glyph::ToDocument(p, kp.secret).WriteFile(cmd.Get("sk"));
  }
  return kExitOk;
}

// encrypt / decrypt ------------------------------------------------------------

bgv::Plaintext ParseBgvPlaintext(const std::string& text, const bgv::Params& p) {
  std::vector<uint64_t> v = ParseUintCsv(text);
  if (static_cast<int>(v.size()) > p.n()) {
    throw Error(ErrorCode::kLengthMismatch, "plaintext longer than n");
  }
  v.resize(static_cast<size_t>(p.n()), 0);
  return v;
}

int Encrypt(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (cmd.scheme == "bgv") {
    if (!cmd.Has("sk")) throw UsageError("bgv encrypt needs --sk");
    TextDocument skdoc = ReadDoc(cmd.Get("sk"), bgv::kFileHeader);
    bgv::Params p = bgv::ParamsFromDocument(skdoc);
    bgv::SecretKey sk = bgv::SecretKeyFromDocument(p, skdoc);
    SeededRng rng = MakeRng(cmd, err, "encrypt");
    bgv::Ciphertext ct = bgv::Encrypt(ParseBgvPlaintext(ReadMessage(cmd), p), sk, p, rng,
                                      static_cast<int>(IntOpt(cmd, "level", 0)));
    Emit(cmd, out, bgv::ToDocument(p, ct).ToString());
    return kExitOk;
  }
  if (cmd.Has("level")) throw UsageError("--level applies to bgv only");
  if (!cmd.Has("pk")) throw UsageError("encrypt needs --pk");
  const std::vector<uint8_t> bits = BytesToBits(ReadMessage(cmd));
  SeededRng rng = MakeRng(cmd, err, "encrypt");
  if (cmd.scheme == "lwe") {
    lwe::PublicKey pk = lwe::PublicKeyFromDocument(ReadDoc(cmd.Get("pk"), lwe::kFileHeader));
    std::vector<lwe::Ciphertext> cts;
    for (uint8_t bit : bits) cts.push_back(lwe::EncryptBit(pk, bit, rng));
    Emit(cmd, out, lwe::ToDocument(pk.params, cts).ToString());
  } else {
    TextDocument pkdoc = ReadDoc(cmd.Get("pk"), plwe::kFileHeader);
    plwe::Params p = plwe::ParamsFromDocument(pkdoc);
    plwe::PublicKey pk = plwe::PublicKeyFromDocument(p, pkdoc);
    const size_t n = static_cast<size_t>(p.n());
    std::vector<plwe::Ciphertext> blocks;
    for (size_t off = 0; off < bits.size(); off += n) {
      std::vector<uint8_t> block(n, 0);
      std::copy(bits.begin() + static_cast<std::ptrdiff_t>(off),
                bits.begin() + static_cast<std::ptrdiff_t>(std::min(bits.size(), off + n)),
                block.begin());
      blocks.push_back(plwe::Encrypt(pk, block, p, rng));
    }
    Emit(cmd, out, plwe::ToDocument(p, blocks, bits.size()).ToString());
  }
  return kExitOk;
}

int Decrypt(const Command& cmd, std::ostream& out, std::ostream&) {
  if (!cmd.Has("sk")) throw UsageError("decrypt needs --sk");
  if (!cmd.Has("in")) throw UsageError("decrypt needs --in");
  if (cmd.scheme == "bgv") {
    TextDocument skdoc = ReadDoc(cmd.Get("sk"), bgv::kFileHeader);
    bgv::Params p = bgv::ParamsFromDocument(skdoc);
    bgv::SecretKey sk = bgv::SecretKeyFromDocument(p, skdoc);
    bgv::Ciphertext ct = bgv::CiphertextFromDocument(p, ReadDoc(cmd.Get("in"), bgv::kFileHeader));
    Emit(cmd, out, JoinCsv(bgv::Decrypt(ct, sk, p)) + "\n");
    return kExitOk;
  }
  std::vector<uint8_t> bits;
  if (cmd.scheme == "lwe") {
    TextDocument skdoc = ReadDoc(cmd.Get("sk"), lwe::kFileHeader);
    lwe::Params p = lwe::ParamsFromDocument(skdoc);
    lwe::SecretKey sk = lwe::SecretKeyFromDocument(skdoc);
    for (const auto& ct : lwe::CiphertextsFromDocument(ReadDoc(cmd.Get("in"), lwe::kFileHeader))) {
      bits.push_back(static_cast<uint8_t>(lwe::DecryptBit(p, sk, ct)));
    }
  } else {
    TextDocument skdoc = ReadDoc(cmd.Get("sk"), plwe::kFileHeader);
    plwe::Params p = plwe::ParamsFromDocument(skdoc);
    RingElement s = plwe::SecretFromDocument(p, skdoc);
    uint64_t count = 0;
    for (const auto& ct : plwe::CiphertextsFromDocument(p, ReadDoc(cmd.Get("in"), plwe::kFileHeader),
                                                        &count)) {
      std::vector<uint8_t> block = plwe::Decrypt(s, ct);
      bits.insert(bits.end(), block.begin(), block.end());
    }
    bits.resize(count);
  }
  Emit(cmd, out, BitsToBytes(bits));
  return kExitOk;
}

// sign / verify ----------------------------------------------------------------

int Sign(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.Has("sk") || !cmd.Has("pk")) throw UsageError("sign needs --sk and --pk");
  TextDocument pkdoc = ReadDoc(cmd.Get("pk"), glyph::kFileHeader);
  glyph::Params p = glyph::ParamsFromDocument(pkdoc);
  glyph::PublicKey pk = glyph::PublicKeyFromDocument(p, pkdoc);
  glyph::SecretKey sk = glyph::SecretKeyFromDocument(p, ReadDoc(cmd.Get("sk"), glyph::kFileHeader));
  const std::string msg = ReadMessage(cmd);
  SeededRng rng = MakeRng(cmd, err, "sign");
  glyph::SignResult res = glyph::Sign(
      sk, pk, std::span(reinterpret_cast<const uint8_t*>(msg.data()), msg.size()), p, rng);
  TextDocument doc = glyph::ToDocument(p, res.signature);
  doc.Set("iterations", std::to_string(res.iterations));
  Emit(cmd, out, doc.ToString());
  return kExitOk;
}

int Verify(const Command& cmd, std::ostream& out, std::ostream& err) {
  if (!cmd.Has("pk") || !cmd.Has("sig")) throw UsageError("verify needs --pk and --sig");
  TextDocument pkdoc = ReadDoc(cmd.Get("pk"), glyph::kFileHeader);
  glyph::Params p = glyph::ParamsFromDocument(pkdoc);
  glyph::PublicKey pk = glyph::PublicKeyFromDocument(p, pkdoc);
  glyph::Signature sig = glyph::SignatureFromDocument(p, ReadDoc(cmd.Get("sig"), glyph::kFileHeader));
  const std::string msg = ReadMessage(cmd);
  glyph::VerifyResult res = glyph::Verify(
      pk, std::span(reinterpret_cast<const uint8_t*>(msg.data()), msg.size()), sig, p);
  if (!res.accepted) {
    err << "reject: " << glyph::RejectReasonName(res.reason) << "\n";
    return kExitDomain;
  }
  out << "accept\n";
  return kExitOk;
}

// attacks ------------------------------------------------------------------------

int Scan(const Command& cmd, std::ostream& out, std::ostream&) {
  if (!cmd.Has("f") || !cmd.Has("q")) throw UsageError("scan needs --f and --q");
  const std::string format = cmd.GetOr("format", "table");
  if (format != "table" && format != "kv") throw UsageError("--format is table or kv");
  attacks::WeaknessReport rep =
      attacks::WeaknessScan(IntPolynomial::ParseCsv(cmd.Get("f")), Modulus(UintOpt(cmd, "q", 0)),
                            static_cast<int>(IntOpt(cmd, "r-max", attacks::kDefaultMaxOrder)));
  out << (format == "table" ? attacks::RenderTable(rep) : attacks::ToDocument(rep).ToString());
  return kExitOk;
}

int Attack(const Command& cmd, std::ostream& out, std::ostream&) {
  if (!cmd.Has("samples")) throw UsageError("attack needs --samples");
  const std::string alg = cmd.GetOr("alg", "");
  if (alg != "1" && alg != "2") throw UsageError("--alg is 1 or 2");
  TextDocument sdoc = ReadDoc(cmd.Get("samples"), plwe::kFileHeader);
  plwe::Params p = cmd.Has("params")
                       ? plwe::ParamsFromDocument(ReadDoc(cmd.Get("params"), plwe::kFileHeader))
                       : plwe::ParamsFromDocument(sdoc);
  std::vector<plwe::Sample> samples = plwe::SamplesFromDocument(p, sdoc);
  const double t = DoubleOpt(cmd, "t", attacks::kDefaultThreshold);
  attacks::Decision d;
  if (alg == "1") {
    if (cmd.Has("alpha") || cmd.Has("r-max")) throw UsageError("--alpha/--r-max need --alg 2");
    d = attacks::DecideAlg1(samples, p, t);
  } else {
    if (!cmd.Has("alpha")) throw UsageError("--alg 2 needs --alpha");
    d = attacks::DecideAlg2(samples, p, UintOpt(cmd, "alpha", 0), t,
                            static_cast<int>(IntOpt(cmd, "r-max", attacks::kDefaultMaxOrder)));
  }
  out << "sample  label   survivors\n";
  size_t valid = 0;
  for (size_t i = 0; i < d.verdicts.size(); ++i) {
    const auto& v = d.verdicts[i];
    valid += v.label == attacks::Label::kValid;
    out << Pad(std::to_string(i), 8) << Pad(attacks::LabelName(v.label), 8) << v.surviving_secrets
        << "\n";
  }
  out << "valid=" << valid << " random=" << d.verdicts.size() - valid
      << " survivors=" << d.survivors.size() << "\n";
  return kExitOk;
}

int Smear(const Command& cmd, std::ostream& out, std::ostream& err) {
  plwe::Params p = PlweParamsFromFileOrFlags(cmd);
  SeededRng rng = MakeRng(cmd, err, "smear");
  const double est = attacks::SmearingEstimate(p, UintOpt(cmd, "alpha", 1), UintOpt(cmd, "trials", 10000),
                                               DoubleOpt(cmd, "t", attacks::kDefaultThreshold), rng);
  out << "estimate=" << FormatDouble(est) << "\n";
  return kExitOk;
}

int Sample(const Command& cmd, std::ostream& out, std::ostream& err) {
  plwe::Params p = PlweParamsFromFileOrFlags(cmd);
  const std::string kind = cmd.GetOr("kind", "oracle");
  if (kind != "oracle" && kind != "uniform") throw UsageError("--kind is oracle or uniform");
  const uint64_t count = UintOpt(cmd, "count", 100);
  SeededRng rng = MakeRng(cmd, err, "samples");
  RingElement s = plwe::SampleError(p, rng);
  std::vector<plwe::Sample> samples;
  for (uint64_t i = 0; i < count; ++i) {
    samples.push_back(kind == "oracle" ? plwe::OracleSample(p, s, rng)
                                       : plwe::UniformSamplePair(p, rng));
  }
  if (cmd.Has("sk")) plwe::SecretToDocument(p, s).WriteFile(cmd.Get("sk"));
  Emit(cmd, out, plwe::ToDocument(p, samples).ToString());
  return kExitOk;
}

// bgv-eval -------------------------------------------------------------------------

int BgvEval(const Command& cmd, std::ostream& out, std::ostream&) {
  if (!cmd.Has("circuit")) throw UsageError("bgv-eval needs --circuit");
  if (!cmd.Has("input")) throw UsageError("bgv-eval needs at least one --input name=file");
  std::vector<bgv::Gate> gates = bgv::ParseCircuit(ReadFileToString(cmd.Get("circuit")));
  std::optional<bgv::Params> p;
  std::map<std::string, bgv::Ciphertext> wires;
  for (const std::string& spec : cmd.options.at("input")) {
    const size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--input expects name=file");
    TextDocument doc = ReadDoc(spec.substr(eq + 1), bgv::kFileHeader);
    if (!p) p = bgv::ParamsFromDocument(doc);
    wires.insert_or_assign(spec.substr(0, eq), bgv::CiphertextFromDocument(*p, doc));
  }
  if (gates.empty() && !cmd.Has("wire")) throw UsageError("empty circuit needs --wire");
  const std::string wire = cmd.GetOr("wire", gates.empty() ? "" : gates.back().out);
  auto result = bgv::EvalCircuit(gates, std::move(wires), *p);
  auto it = result.find(wire);
  if (it == result.end()) throw Error(ErrorCode::kParse, "undefined wire " + wire);
  Emit(cmd, out, bgv::ToDocument(*p, it->second).ToString());
  return kExitOk;
}

// bench ----------------------------------------------------------------------------

template <typename F>
double TimeMs(F&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int Bench(const Command& cmd, std::ostream& out, std::ostream& err) {
  const int n = static_cast<int>(IntOpt(cmd, "n", 64));
  SeededRng rng = MakeRng(cmd, err, "bench");
  lwe::Params lp = lwe::DeriveParams(n);
  plwe::Params pp = plwe::NegacyclicParams(n);

  std::optional<lwe::KeyPair> lkp;
  std::optional<plwe::KeyPair> pkp;
  const double lwe_keygen = TimeMs([&] { lkp = lwe::KeyGen(lp, rng); });
  const double plwe_keygen = TimeMs([&] { pkp = plwe::KeyGen(pp, rng); });
  std::vector<uint8_t> block(static_cast<size_t>(n));
  for (auto& b : block) b = rng.NextBit();
  // n bits with each scheme.
  const double lwe_enc = TimeMs([&] {
    for (uint8_t b : block) lwe::EncryptBit(lkp->public_key, b, rng);
  });
  const double plwe_enc = TimeMs([&] { plwe::Encrypt(pkp->public_key, block, pp, rng); });

  const uint64_t lwe_pk = lwe::PublicKeyResidueCount(lp);
  const uint64_t plwe_pk = plwe::PublicKeyResidueCount(pp);
  const uint64_t lwe_ct = static_cast<uint64_t>(n) * static_cast<uint64_t>(n + 1);
  const uint64_t plwe_ct = 2 * static_cast<uint64_t>(n);

  auto line = [&](const std::string& metric, const std::string& scheme, const std::string& dim,
                  const std::string& value) {
    out << Pad(metric, 24) << Pad(scheme, 10) << Pad(dim, 6) << value << "\n";
  };
  auto row = [&](const std::string& metric, const std::string& scheme, const std::string& value) {
    line(metric, scheme, std::to_string(n), value);
  };
  line("metric", "scheme", "n", "value");
  row("modulus", "lwe", std::to_string(lp.q.value()));
  row("modulus", "plwe", std::to_string(pp.q().value()));
  row("keygen_ms", "lwe", Fixed(lwe_keygen, 3));
  row("keygen_ms", "plwe", Fixed(plwe_keygen, 3));
  row("encrypt_n_bits_ms", "lwe", Fixed(lwe_enc, 3));
  row("encrypt_n_bits_ms", "plwe", Fixed(plwe_enc, 3));
  row("pk_residues", "lwe", std::to_string(lwe_pk));
  row("pk_residues", "plwe", std::to_string(plwe_pk));
  row("ct_residues_n_bits", "lwe", std::to_string(lwe_ct));
  row("ct_residues_n_bits", "plwe", std::to_string(plwe_ct));
  row("pk_ratio", "lwe/plwe",
      Fixed(static_cast<double>(lwe_pk) / static_cast<double>(plwe_pk), 2));
  return kExitOk;
}

}  // namespace

const std::string& Command::Get(const std::string& name) const {
  auto it = options.find(name);
  if (it == options.end() || it->second.empty()) throw UsageError("missing --" + name);
  return it->second.back();
}

std::string Command::GetOr(const std::string& name, const std::string& fallback) const {
  return Has(name) ? Get(name) : fallback;
}

std::string UsageText() {
  std::ostringstream os;
  os << "usage: latticelab <verb> [--flag value ...]\n\nverbs:\n";
  for (const auto& v : Verbs()) {
    os << "  " << Pad(v.verb, 10) << " schemes:";
    for (const auto& s : v.schemes) os << " " << s;
    os << "\n";
  }
  os << "\nflags:\n";
  for (const auto& f : kFlags) os << "  --" << Pad(f.name, 14) << f.help << "\n";
  os << "\nexit codes: 0 success, 1 domain failure, 2 usage error\n";
  return os.str();
}

Command ParseArgs(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("missing verb");
  const VerbSpec* spec = FindVerb(args[0]);
  if (!spec) throw UsageError("unknown verb '" + args[0] + "'");

  CLI::App app{"latticelab"};
  app.set_help_flag();
  app.allow_extras(false);
  std::map<std::string, std::vector<std::string>> values;
  std::vector<std::pair<std::string, CLI::Option*>> opts;
  for (const auto& f : kFlags) {
    const std::string name = std::string("--") + f.name;
    if (f.boolean) {
      opts.emplace_back(f.name, app.add_flag(name, f.help));
    } else {
      opts.emplace_back(f.name, app.add_option(name, values[f.name], f.help)
                                    ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
                                    ->expected(1));
    }
  }
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  cmd.verb = spec->verb;
  for (const auto& [name, opt] : opts) {
    if (opt->count() == 0) continue;
    if (!spec->flags.count(name)) {
      throw UsageError("--" + name + " is not accepted by " + cmd.verb);
    }
    auto v = values.find(name);
    cmd.options[name] = v == values.end() ? std::vector<std::string>{"true"} : v->second;
  }
  cmd.scheme = cmd.GetOr("scheme", spec->default_scheme);
  if (cmd.scheme.empty()) throw UsageError(cmd.verb + " needs --scheme");
  if (!spec->schemes.count(cmd.scheme)) {
    throw UsageError(cmd.verb + " does not support scheme '" + cmd.scheme + "'");
  }
  return cmd;
}

int Run(const Command& cmd, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const Command&, std::ostream&, std::ostream&)>>
      handlers = {
          {"keygen", Keygen}, {"encrypt", Encrypt}, {"decrypt", Decrypt}, {"sign", Sign},
          {"verify", Verify}, {"scan", Scan},       {"attack", Attack},   {"smear", Smear},
          {"bgv-eval", BgvEval}, {"sample", Sample}, {"bench", Bench},
      };
  try {
    auto it = handlers.find(cmd.verb);
    if (it == handlers.end()) throw UsageError("unknown verb '" + cmd.verb + "'");
    return it->second(cmd, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

int Main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && (args[0] == "help" || args[0] == "--help" || args[0] == "-h")) {
    out << UsageText();
    return kExitOk;
  }
  Command cmd;
  try {
    cmd = ParseArgs(args);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return Run(cmd, out, err);
}

}  // namespace latticelab::cli
