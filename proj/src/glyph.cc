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

#include <bit>
#include <memory>

#include "latticelab/error.h"

namespace latticelab::glyph {
namespace {

constexpr char kHashDomain[] = "latticelab-glyph-H";

std::vector<uint8_t> Shake256(std::span<const uint8_t> data, size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                               &EVP_MD_CTX_free);
  std::vector<uint8_t> out(out_len);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), kHashDomain, sizeof(kHashDomain) - 1) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinalXOF(ctx.get(), out.data(), out.size()) != 1) {
    throw Error(ErrorCode::kInvalidParams, "SHAKE256 unavailable");
  }
  return out;
}

std::string KindOf(const TextDocument& doc) { return doc.Get("kind"); }

void RequireKind(const TextDocument& doc, std::string_view kind) {
  if (KindOf(doc) != kind) {
    throw Error(ErrorCode::kParse, "expected a GLYPH " + std::string(kind) + " file");
  }
}

TextDocument Header(const Params& p, std::string_view kind) {
  TextDocument doc(kFileHeader);
  doc.Set("kind", std::string(kind));
  doc.Set("n", std::to_string(p.n()));
  doc.Set("q", std::to_string(p.q().value()));
  doc.Set("b", std::to_string(p.b()));
  doc.Set("k", std::to_string(p.k()));
  doc.Set("secret_bound", std::to_string(p.secret_bound()));
  return doc;
}

RingElement ParseSigned(const Params& p, const std::string& csv) {
  std::vector<int64_t> v = ParseIntCsv(csv);
  return RingElement::FromSigned(p.ring(), v);
}

std::string SignedCsv(const RingElement& x) { return JoinCsv(x.Centered()); }

bool WithinBeta(const Params& p, const RingElement& x) { return x.InfNorm() <= p.beta(); }

}  // namespace

Params Params::Create(int n, uint64_t q, int64_t b, int k, int64_t secret_bound) {
  if (n < 2 || n > 65536 || !std::has_single_bit(static_cast<unsigned>(n))) {
    throw Error(ErrorCode::kInvalidParams, "n must be a power of two in [2, 65536]");
  }
  if (q % 4 != 1) throw Error(ErrorCode::kInvalidParams, "q must be 1 mod 4");
  Modulus mod(q);
  if (k <= 0 || k > n || k > 64 || b <= k) {
    throw Error(ErrorCode::kInvalidParams, "need 0 < k < b and k <= min(n, 64)");
  }
  if (static_cast<uint64_t>(2 * b) >= q) throw Error(ErrorCode::kInvalidParams, "need 2b < q");
  if (secret_bound < 0 || secret_bound > b) {
    throw Error(ErrorCode::kInvalidParams, "secret_bound must lie in [0, b]");
  }
  return Params(RingParams::Create(IntPolynomial::XnPlusOne(n), mod), b, k, secret_bound);
}

Params Params::Standard() { return Create(1024, 59393, 16383, 16, 1); }

const char* RejectReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone: return "none";
    case RejectReason::kNorm: return "norm";
    case RejectReason::kChallenge: return "challenge mismatch";
  }
  return "unknown";
}

RingElement HashToSparse(std::span<const uint8_t> data, const Params& p) {
  const uint64_t n = static_cast<uint64_t>(p.n());
  const uint64_t limit = 65536 - 65536 % n;
  std::vector<uint64_t> coeffs(n, 0);
  const uint64_t minus_one = p.q().value() - 1;
  // The XOF output is a prefix-stable stream, so a longer request only
  // extends the positions already read.
  size_t len = 8 + 2 * (4 * static_cast<size_t>(p.k()) + 64);
  while (true) {
    std::vector<uint8_t> stream = Shake256(data, len);
    uint64_t signs = 0;
    for (int i = 7; i >= 0; --i) signs = (signs << 8) | stream[static_cast<size_t>(i)];
    std::fill(coeffs.begin(), coeffs.end(), 0);
    int placed = 0;
    for (size_t off = 8; off + 1 < stream.size() && placed < p.k(); off += 2) {
      const uint64_t v = stream[off] | (static_cast<uint64_t>(stream[off + 1]) << 8);
      if (v >= limit) continue;
      const uint64_t pos = v % n;
      if (coeffs[pos] != 0) continue;
      coeffs[pos] = ((signs >> placed) & 1) ? minus_one : 1;
      ++placed;
    }
    if (placed == p.k()) break;
    len *= 2;
  }
  return RingElement::FromResidues(p.ring(), std::move(coeffs));
}

std::vector<uint8_t> EncodeOmega(const RingElement& w) {
  const uint64_t q = w.params()->q().value();
  const int width = (std::bit_width(q - 1) + 7) / 8;
  std::vector<uint8_t> out;
  out.reserve(w.residues().size() * static_cast<size_t>(width));
  for (uint64_t r : w.residues()) {
    for (int i = 0; i < width; ++i) out.push_back(static_cast<uint8_t>(r >> (8 * i)));
  }
  return out;
}

RingElement SampleBounded(const Params& p, int64_t bound, SeededRng& rng) {
  std::vector<int64_t> v(static_cast<size_t>(p.n()));
  for (auto& x : v) x = rng.UniformInRange(-bound, bound);
  return RingElement::FromSigned(p.ring(), v);
}

RingElement SparseMul(const RingElement& x, const RingElement& c) {
  const RingParamsPtr& ring = x.params();
  if (!ring->negacyclic()) {
    throw Error(ErrorCode::kInvalidParams, "sparse product needs x^n + 1");
  }
  if (!ring->SameRing(*c.params())) throw Error(ErrorCode::kParamMismatch, "ring mismatch");
  const Modulus& q = ring->q();
  const size_t n = x.residues().size();
  std::vector<uint64_t> out(n, 0);
  const auto& xs = x.residues();
  const auto& cs = c.residues();
  for (size_t j = 0; j < n; ++j) {
    if (cs[j] == 0) continue;
    const bool negate_c = cs[j] != 1;
    const uint64_t cj = cs[j];
    for (size_t i = 0; i < n; ++i) {
      if (xs[i] == 0) continue;
      size_t d = i + j;
      bool neg = false;
      if (d >= n) {
        d -= n;
        neg = true;
      }
      uint64_t term = negate_c ? (cj == q.value() - 1 ? q.Neg(xs[i]) : q.Mul(cj, xs[i])) : xs[i];
      out[d] = neg ? q.Sub(out[d], term) : q.Add(out[d], term);
    }
  }
  return RingElement::FromResidues(ring, std::move(out));
}

KeyPair KeyGenWith(const Params& /*p*/, const RingElement& a, const RingElement& s,
                   const RingElement& e) {
  RingElement t = a * s + e;
  return {{s, e}, {a, std::move(t)}};
}

KeyPair KeyGen(const Params& p, SeededRng& rng) {
  std::vector<uint64_t> av(static_cast<size_t>(p.n()));
  for (auto& x : av) x = rng.UniformBelow(p.q().value());
  RingElement a = RingElement::FromResidues(p.ring(), std::move(av));
  RingElement s = SampleBounded(p, p.secret_bound(), rng);
  RingElement e = SampleBounded(p, p.secret_bound(), rng);
  return KeyGenWith(p, a, s, e);
}

Attempt SignAttempt(const SecretKey& sk, const PublicKey& pk, std::span<const uint8_t> message,
                    const Params& p, const RingElement& y1, const RingElement& y2) {
  RingElement w = pk.a * y1 + y2;
  std::vector<uint8_t> data = EncodeOmega(w);
  data.insert(data.end(), message.begin(), message.end());
  RingElement c = HashToSparse(data, p);
  RingElement z1 = SparseMul(sk.s, c) + y1;
  RingElement z2 = SparseMul(sk.e, c) + y2;
  const bool ok = WithinBeta(p, z1) && WithinBeta(p, z2);
  return {{std::move(c), std::move(z1), std::move(z2)}, std::move(w), ok};
}

SignResult Sign(const SecretKey& sk, const PublicKey& pk, std::span<const uint8_t> message,
                const Params& p, SeededRng& rng, uint64_t max_iterations) {
  for (uint64_t it = 1; it <= max_iterations; ++it) {
    RingElement y1 = SampleBounded(p, p.b(), rng);
    RingElement y2 = SampleBounded(p, p.b(), rng);
    Attempt at = SignAttempt(sk, pk, message, p, y1, y2);
    if (at.accepted) return {std::move(at.signature), it};
  }
  throw Error(ErrorCode::kRejectionOverflow,
              "no acceptable signature after " + std::to_string(max_iterations) + " attempts");
}

VerifyResult Verify(const PublicKey& pk, std::span<const uint8_t> message, const Signature& sig,
                    const Params& p) {
  if (!WithinBeta(p, sig.z1) || !WithinBeta(p, sig.z2)) {
    return {false, RejectReason::kNorm};
  }
  RingElement w = pk.a * sig.z1 + sig.z2 - SparseMul(pk.t, sig.c);
  std::vector<uint8_t> data = EncodeOmega(w);
  data.insert(data.end(), message.begin(), message.end());
  if (!(HashToSparse(data, p) == sig.c)) return {false, RejectReason::kChallenge};
  return {true, RejectReason::kNone};
}

std::string EncodeSparse(const RingElement& c) {
  std::string out;
  const auto& r = c.residues();
  const uint64_t q = c.params()->q().value();
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(i);
    out += r[i] == 1 ? ":1" : (r[i] == q - 1 ? ":-1" : ":" + std::to_string(r[i]));
  }
  return out;
}

RingElement DecodeSparse(const Params& p, std::string_view text) {
  std::vector<int64_t> coeffs(static_cast<size_t>(p.n()), 0);
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    const size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::kParse, "bad sparse entry");
    const int64_t idx = ParseInt(item.substr(0, colon));
    const int64_t val = ParseInt(item.substr(colon + 1));
    if (idx < 0 || idx >= p.n()) throw Error(ErrorCode::kParse, "sparse index out of range");
    coeffs[static_cast<size_t>(idx)] = val;
    start = end + 1;
  }
  return RingElement::FromSigned(p.ring(), coeffs);
}

TextDocument ToDocument(const Params& p, const PublicKey& pk) {
  TextDocument doc = Header(p, "public");
  doc.Set("a", JoinCsv(pk.a.residues()));
  doc.Set("t", JoinCsv(pk.t.residues()));
  return doc;
}

TextDocument ToDocument(const Params& p, const SecretKey& sk) {
  TextDocument doc = Header(p, "secret");
  doc.Set("s", SignedCsv(sk.s));
  doc.Set("e", SignedCsv(sk.e));
  return doc;
}

TextDocument ToDocument(const Params& p, const Signature& sig) {
  TextDocument doc = Header(p, "signature");
  doc.Set("c", EncodeSparse(sig.c));
  doc.Set("z1", SignedCsv(sig.z1));
  doc.Set("z2", SignedCsv(sig.z2));
  return doc;
}

Params ParamsFromDocument(const TextDocument& doc) {
  const int64_t sb = doc.Has("secret_bound") ? ParseInt(doc.Get("secret_bound")) : 1;
  return Params::Create(static_cast<int>(ParseInt(doc.Get("n"))), ParseUint(doc.Get("q")),
                        ParseInt(doc.Get("b")), static_cast<int>(ParseInt(doc.Get("k"))), sb);
}

PublicKey PublicKeyFromDocument(const Params& p, const TextDocument& doc) {
  RequireKind(doc, "public");
  return {RingElement::FromResidues(p.ring(), ParseUintCsv(doc.Get("a"))),
          RingElement::FromResidues(p.ring(), ParseUintCsv(doc.Get("t")))};
}

SecretKey SecretKeyFromDocument(const Params& p, const TextDocument& doc) {
  RequireKind(doc, "secret");
  return {ParseSigned(p, doc.Get("s")), ParseSigned(p, doc.Get("e"))};
}

Signature SignatureFromDocument(const Params& p, const TextDocument& doc) {
  RequireKind(doc, "signature");
  return {DecodeSparse(p, doc.Get("c")), ParseSigned(p, doc.Get("z1")),
          ParseSigned(p, doc.Get("z2"))};
}

}  // namespace latticelab::glyph
