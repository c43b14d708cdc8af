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

#include <bit>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "latticelab/error.h"
#include "latticelab/gaussian.h"

namespace latticelab::lwe {
namespace {

void RequireKind(const TextDocument& doc, std::string_view kind) {
  if (doc.Get("kind") != kind) {
    throw Error(ErrorCode::kParse, "expected an LWE " + std::string(kind) + " file");
  }
}

void WriteParams(TextDocument& doc, const Params& p) {
  doc.Set("n", std::to_string(p.n));
  doc.Set("q", std::to_string(p.q.value()));
  doc.Set("alpha", FormatDouble(p.alpha));
  doc.Set("m", std::to_string(p.m));
}

}  // namespace

Params DeriveParams(int n) {
  if (n < 16) throw Error(ErrorCode::kNTooSmall, "LWE dimension must be >= 16");
  if (!std::has_single_bit(static_cast<unsigned>(n))) {
    throw Error(ErrorCode::kInvalidParams, "LWE dimension must be a power of two");
  }
  const uint64_t nn = static_cast<uint64_t>(n) * static_cast<uint64_t>(n);
  Modulus q(NextPrime(nn));
  const double log_n = std::log2(static_cast<double>(n));
  const double alpha = 1.0 / (std::sqrt(static_cast<double>(n)) * log_n * log_n);
  const int m = static_cast<int>(std::ceil(1.1 * n * std::log2(static_cast<double>(q.value()))));
  const double sigma = alpha * static_cast<double>(q.value()) / (2 * std::numbers::pi);
  return Params{n, q, alpha, m, sigma};
}

uint64_t PublicKeyResidueCount(const Params& p) {
  return static_cast<uint64_t>(p.m) * static_cast<uint64_t>(p.n + 1);
}

KeyPair KeyGen(const Params& p, SeededRng& rng) {
  const Modulus& q = p.q;
  KeyPair kp{SecretKey{}, PublicKey{p, {}}};
  kp.secret.s.resize(static_cast<size_t>(p.n));
  for (auto& si : kp.secret.s) si = UniformSample(q, rng).value();

  const bool noiseless = p.sigma == 0.0;
  std::optional<DiscreteGaussian> chi;
  if (!noiseless) chi.emplace(GaussianParams{p.sigma, 0.0, 12.0});

  kp.public_key.samples.resize(static_cast<size_t>(p.m));
  for (auto& sample : kp.public_key.samples) {
    sample.a.resize(static_cast<size_t>(p.n));
    uint64_t dot = 0;
    for (size_t j = 0; j < sample.a.size(); ++j) {
      sample.a[j] = UniformSample(q, rng).value();
      dot = q.Add(dot, q.Mul(sample.a[j], kp.secret.s[j]));
    }
    uint64_t e = noiseless ? 0 : chi->SampleZq(q, rng).value();
    sample.b = q.Add(dot, e);
  }
  return kp;
}

Ciphertext EncryptBitWithSubset(const PublicKey& pk, int bit, std::span<const size_t> subset) {
  const Modulus& q = pk.params.q;
  Ciphertext ct{std::vector<uint64_t>(static_cast<size_t>(pk.params.n), 0), 0};
  for (size_t i : subset) {
    const PublicSample& s = pk.samples.at(i);
    for (size_t j = 0; j < ct.u.size(); ++j) ct.u[j] = q.Add(ct.u[j], s.a[j]);
    ct.v = q.Add(ct.v, s.b);
  }
  if (bit) ct.v = q.Add(ct.v, q.value() / 2);
  return ct;
}

Ciphertext EncryptBit(const PublicKey& pk, int bit, SeededRng& rng) {
  std::vector<size_t> subset;
  for (size_t i = 0; i < pk.samples.size(); ++i) {
    if (rng.NextBit()) subset.push_back(i);
  }
  return EncryptBitWithSubset(pk, bit, subset);
}

int DecryptBit(const Params& p, const SecretKey& sk, const Ciphertext& ct) {
  const Modulus& q = p.q;
  if (ct.u.size() != sk.s.size()) {
    throw Error(ErrorCode::kLengthMismatch, "ciphertext and key dimensions differ");
  }
  uint64_t dot = 0;
  for (size_t j = 0; j < ct.u.size(); ++j) dot = q.Add(dot, q.Mul(ct.u[j], sk.s[j]));
  const __int128 d = ReduceCentered(q.Sub(ct.v, dot), q);
  const __int128 qv = q.value();
  // d in (-q/4, q/4]  <=>  -q < 4d <= q.
  return (4 * d > -qv && 4 * d <= qv) ? 0 : 1;
}

TextDocument ToDocument(const PublicKey& pk) {
  TextDocument doc(kFileHeader);
  doc.Set("kind", "public");
  WriteParams(doc, pk.params);
  for (const auto& s : pk.samples) {
    std::vector<uint64_t> row = s.a;
    row.push_back(s.b);
    doc.AddLine(JoinCsv(row));
  }
  return doc;
}

TextDocument ToDocument(const Params& p, const SecretKey& sk) {
  TextDocument doc(kFileHeader);
  doc.Set("kind", "secret");
  WriteParams(doc, p);
  doc.AddLine(JoinCsv(sk.s));
  return doc;
}

TextDocument ToDocument(const Params& p, const std::vector<Ciphertext>& cts) {
  TextDocument doc(kFileHeader);
  doc.Set("kind", "ciphertext");
  WriteParams(doc, p);
  doc.Set("bits", std::to_string(cts.size()));
  for (const auto& ct : cts) {
    std::vector<uint64_t> row = ct.u;
    row.push_back(ct.v);
    doc.AddLine(JoinCsv(row));
  }
  return doc;
}

Params ParamsFromDocument(const TextDocument& doc) {
  const int n = static_cast<int>(ParseInt(doc.Get("n")));
  Modulus q(ParseUint(doc.Get("q")));
  const double alpha = ParseDouble(doc.Get("alpha"));
  const int m = static_cast<int>(ParseInt(doc.Get("m")));
  if (n < 1 || m < 1 || !(alpha > 0)) {
    throw Error(ErrorCode::kParse, "LWE parameters out of range");
  }
  return Params{n, q, alpha, m, alpha * static_cast<double>(q.value()) / (2 * std::numbers::pi)};
}

namespace {

std::vector<uint64_t> ParseRow(const std::string& line, size_t expected, const Modulus& q) {
  std::vector<uint64_t> row = ParseUintCsv(line);
  if (row.size() != expected) {
    throw Error(ErrorCode::kLengthMismatch, "row has " + std::to_string(row.size()) +
                                                " values, expected " + std::to_string(expected));
  }
  for (uint64_t v : row) {
    if (v >= q.value()) throw Error(ErrorCode::kParse, "residue not reduced mod q");
  }
  return row;
}

}  // namespace

PublicKey PublicKeyFromDocument(const TextDocument& doc) {
  RequireKind(doc, "public");
  PublicKey pk{ParamsFromDocument(doc), {}};
  if (doc.lines().size() != static_cast<size_t>(pk.params.m)) {
    throw Error(ErrorCode::kLengthMismatch, "public key must hold m samples");
  }
  for (const auto& line : doc.lines()) {
    std::vector<uint64_t> row = ParseRow(line, static_cast<size_t>(pk.params.n) + 1, pk.params.q);
    uint64_t b = row.back();
    row.pop_back();
    pk.samples.push_back({std::move(row), b});
  }
  return pk;
}

SecretKey SecretKeyFromDocument(const TextDocument& doc) {
  RequireKind(doc, "secret");
  Params p = ParamsFromDocument(doc);
  if (doc.lines().size() != 1) throw Error(ErrorCode::kParse, "secret key must be one line");
  return SecretKey{ParseRow(doc.lines()[0], static_cast<size_t>(p.n), p.q)};
}

std::vector<Ciphertext> CiphertextsFromDocument(const TextDocument& doc) {
  RequireKind(doc, "ciphertext");
  Params p = ParamsFromDocument(doc);
  std::vector<Ciphertext> cts;
  for (const auto& line : doc.lines()) {
    std::vector<uint64_t> row = ParseRow(line, static_cast<size_t>(p.n) + 1, p.q);
    uint64_t v = row.back();
    row.pop_back();
    cts.push_back({std::move(row), v});
  }
  if (doc.Has("bits") && ParseUint(doc.Get("bits")) != cts.size()) {
    throw Error(ErrorCode::kLengthMismatch, "bit count does not match ciphertext rows");
  }
  return cts;
}

}  // namespace latticelab::lwe
