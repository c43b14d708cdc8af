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
#include "latticelab/plwe.h"

#include <string>

#include "latticelab/error.h"

namespace latticelab::plwe {
namespace {

void RequireKind(const TextDocument& doc, std::string_view kind) {
  if (doc.Get("kind") != kind) {
    throw Error(ErrorCode::kParse, "expected a PLWE " + std::string(kind) + " file");
  }
}

TextDocument Header(const Params& p, std::string_view kind) {
  TextDocument doc(kFileHeader);
  doc.Set("kind", std::string(kind));
  doc.Set("n", std::to_string(p.n()));
  doc.Set("q", std::to_string(p.q().value()));
  doc.Set("f", p.ring->f().ToCsv());
  doc.Set("sigma", FormatDouble(p.sigma));
  return doc;
}

RingElement ParseElement(const Params& p, const std::string& csv) {
  return RingElement::FromResidues(p.ring, ParseUintCsv(csv));
}

}  // namespace

Params MakeParams(RingParamsPtr ring, double sigma, bool check_split) {
  if (!(sigma >= 0)) throw Error(ErrorCode::kInvalidParams, "sigma must be non-negative");
  if (check_split && !IsTotallySplit(ring->f(), ring->q())) {
    throw Error(ErrorCode::kInvalidParams,
                "f does not split totally mod " + std::to_string(ring->q().value()));
  }
  Params p;
  p.ring = std::move(ring);
  p.sigma = sigma;
  p.check_split = check_split;
  if (sigma > 0) p.chi = std::make_shared<const DiscreteGaussian>(GaussianParams{sigma, 0.0, 12.0});
  return p;
}

uint64_t SmallestSplittingPrime(int n, uint64_t floor) {
  const uint64_t step = 2 * static_cast<uint64_t>(n);
  uint64_t q = (floor / step + 1) * step + 1;
  while (!IsPrime(q)) q += step;
  return q;
}

Params NegacyclicParams(int n, uint64_t q_floor, double sigma, bool check_split) {
  Modulus q(SmallestSplittingPrime(n, q_floor));
  return MakeParams(RingParams::Create(IntPolynomial::XnPlusOne(n), q), sigma, check_split);
}

RingElement SampleError(const Params& p, SeededRng& rng) {
  if (!p.chi) return RingElement::Zero(p.ring);
  std::vector<uint64_t> c(static_cast<size_t>(p.n()));
  for (auto& ci : c) ci = p.chi->SampleZq(p.q(), rng).value();
  return RingElement::FromResidues(p.ring, std::move(c));
}

RingElement SampleUniform(const Params& p, SeededRng& rng) {
  std::vector<uint64_t> c(static_cast<size_t>(p.n()));
  for (auto& ci : c) ci = rng.UniformBelow(p.q().value());
  return RingElement::FromResidues(p.ring, std::move(c));
}

Sample OracleSample(const Params& p, const RingElement& s, SeededRng& rng) {
  RingElement a = SampleUniform(p, rng);
  RingElement e = SampleError(p, rng);
  RingElement b = a * s + e;
  return {std::move(a), std::move(b)};
}

Sample UniformSamplePair(const Params& p, SeededRng& rng) {
  RingElement a = SampleUniform(p, rng);
  RingElement b = SampleUniform(p, rng);
  return {std::move(a), std::move(b)};
}

KeyPair KeyGen(const Params& p, SeededRng& rng) {
  RingElement a = SampleUniform(p, rng);
  RingElement s = SampleError(p, rng);
  RingElement e = SampleError(p, rng);
  RingElement b = a * s + e;
  return {std::move(s), {std::move(a), std::move(b)}};
}

Ciphertext EncryptWith(const PublicKey& pk, std::span<const uint8_t> bits,
                       const RingElement& r, const RingElement& e1, const RingElement& e2) {
  const RingParamsPtr& ring = pk.a.params();
  if (static_cast<int>(bits.size()) != ring->n()) {
    throw Error(ErrorCode::kLengthMismatch, "message block must have exactly n bits");
  }
  const uint64_t half = ring->q().value() / 2;
  std::vector<uint64_t> z(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) z[i] = bits[i] ? half : 0;
  RingElement u = pk.a * r + e1;
  RingElement v = pk.b * r + e2 + RingElement::FromResidues(ring, std::move(z));
  return {std::move(u), std::move(v)};
}

Ciphertext Encrypt(const PublicKey& pk, std::span<const uint8_t> bits, const Params& p,
                   SeededRng& rng) {
  if (static_cast<int>(bits.size()) != p.n()) {
    throw Error(ErrorCode::kLengthMismatch, "message block must have exactly n bits");
  }
  RingElement r = SampleError(p, rng);
  RingElement e1 = SampleError(p, rng);
  RingElement e2 = SampleError(p, rng);
  return EncryptWith(pk, bits, r, e1, e2);
}

std::vector<uint8_t> Decrypt(const RingElement& s, const Ciphertext& ct) {
  RingElement d = ct.v - ct.u * s;
  const __int128 q = s.params()->q().value();
  std::vector<uint8_t> bits(static_cast<size_t>(d.n()));
  std::vector<int64_t> centered = d.Centered();
  for (size_t i = 0; i < bits.size(); ++i) {
    __int128 c4 = 4 * static_cast<__int128>(centered[i]);
    bits[i] = (c4 > -q && c4 <= q) ? 0 : 1;
  }
  return bits;
}

uint64_t PublicKeyResidueCount(const Params& p) { return 2 * static_cast<uint64_t>(p.n()); }

TextDocument ParamsToDocument(const Params& p) { return Header(p, "params"); }

TextDocument ToDocument(const Params& p, const PublicKey& pk) {
  TextDocument doc = Header(p, "public");
  doc.Set("a", JoinCsv(pk.a.residues()));
  doc.Set("b", JoinCsv(pk.b.residues()));
  return doc;
}

TextDocument SecretToDocument(const Params& p, const RingElement& s) {
  TextDocument doc = Header(p, "secret");
  doc.Set("s", JoinCsv(s.residues()));
  return doc;
}

TextDocument ToDocument(const Params& p, const std::vector<Ciphertext>& blocks, uint64_t bits) {
  TextDocument doc = Header(p, "ciphertext");
  doc.Set("bits", std::to_string(bits));
  for (const auto& ct : blocks) {
    doc.Set("u", JoinCsv(ct.u.residues()));
    doc.Set("v", JoinCsv(ct.v.residues()));
  }
  return doc;
}

TextDocument ToDocument(const Params& p, const std::vector<Sample>& samples) {
  TextDocument doc = Header(p, "samples");
  for (const auto& s : samples) {
    doc.Set("a", JoinCsv(s.a.residues()));
    doc.Set("b", JoinCsv(s.b.residues()));
  }
  return doc;
}

Params ParamsFromDocument(const TextDocument& doc) {
  IntPolynomial f = IntPolynomial::ParseCsv(doc.Get("f"));
  Modulus q(ParseUint(doc.Get("q")));
  if (ParseInt(doc.Get("n")) != f.degree()) {
    throw Error(ErrorCode::kParse, "n does not match deg f");
  }
  bool check_split = doc.Has("check_split") && doc.Get("check_split") == "1";
  return MakeParams(RingParams::Create(std::move(f), q), ParseDouble(doc.Get("sigma")), check_split);
}

PublicKey PublicKeyFromDocument(const Params& p, const TextDocument& doc) {
  RequireKind(doc, "public");
  return {ParseElement(p, doc.Get("a")), ParseElement(p, doc.Get("b"))};
}

RingElement SecretFromDocument(const Params& p, const TextDocument& doc) {
  RequireKind(doc, "secret");
  return ParseElement(p, doc.Get("s"));
}

std::vector<Ciphertext> CiphertextsFromDocument(const Params& p, const TextDocument& doc,
                                                uint64_t* bits) {
  RequireKind(doc, "ciphertext");
  std::vector<std::string> us = doc.GetAll("u");
  std::vector<std::string> vs = doc.GetAll("v");
  if (us.size() != vs.size()) throw Error(ErrorCode::kParse, "unpaired ciphertext blocks");
  std::vector<Ciphertext> out;
  for (size_t i = 0; i < us.size(); ++i) {
    out.push_back({ParseElement(p, us[i]), ParseElement(p, vs[i])});
  }
  uint64_t count = ParseUint(doc.Get("bits"));
  if (count > out.size() * static_cast<uint64_t>(p.n())) {
    throw Error(ErrorCode::kParse, "bit count exceeds ciphertext capacity");
  }
  if (bits) *bits = count;
  return out;
}

std::vector<Sample> SamplesFromDocument(const Params& p, const TextDocument& doc) {
  RequireKind(doc, "samples");
  std::vector<std::string> as = doc.GetAll("a");
  std::vector<std::string> bs = doc.GetAll("b");
  if (as.size() != bs.size()) throw Error(ErrorCode::kParse, "unpaired samples");
  std::vector<Sample> out;
  for (size_t i = 0; i < as.size(); ++i) {
    out.push_back({ParseElement(p, as[i]), ParseElement(p, bs[i])});
  }
  return out;
}

}  // namespace latticelab::plwe
