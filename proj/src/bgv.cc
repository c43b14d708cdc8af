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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "latticelab/error.h"
#include "latticelab/gaussian.h"
#include "latticelab/zq.h"

namespace latticelab::bgv {
namespace {

constexpr uint64_t kMaxPlainModulus = uint64_t{1} << 20;

uint64_t PlainModulus(uint64_t p, int r) {
  if (!IsPrime(p)) throw Error(ErrorCode::kInvalidParams, "p must be prime");
  if (r < 1) throw Error(ErrorCode::kInvalidParams, "r must be positive");
  uint64_t t = 1;
  for (int i = 0; i < r; ++i) {
    if (t > kMaxPlainModulus / p) throw Error(ErrorCode::kInvalidParams, "p^r too large");
    t *= p;
  }
  return t;
}

// Smallest prime q >= lower with q = 1 (mod t).
uint64_t NextChainPrime(unsigned __int128 lower, uint64_t t) {
  if (lower < 3) lower = 3;
  unsigned __int128 q = lower + (t - (lower - 1) % t) % t;
  for (; q <= kChainLimit; q += t) {
    if (IsPrime(static_cast<uint64_t>(q))) return static_cast<uint64_t>(q);
  }
  throw Error(ErrorCode::kChainOverflow, "modulus chain exceeds 2^62");
}

// max_i sum_k |(x^k mod f)_i| * #{(a, b) : a + b = k, a, b < n}.
double ExpansionFactor(const IntPolynomial& f) {
  const int n = f.degree();
  std::vector<double> row_sum(static_cast<size_t>(n), 0.0);
  std::vector<int64_t> red(static_cast<size_t>(n), 0);
  red[0] = 1;
  for (int k = 0; k <= 2 * n - 2; ++k) {
    const double mult = std::min(k + 1, 2 * n - 1 - k);
    for (int i = 0; i < n; ++i) {
      row_sum[static_cast<size_t>(i)] += std::abs(static_cast<double>(red[static_cast<size_t>(i)])) * mult;
    }
    // red <- x * red mod f.
    const int64_t top = red[static_cast<size_t>(n - 1)];
    for (int i = n - 1; i > 0; --i) {
      red[static_cast<size_t>(i)] = red[static_cast<size_t>(i - 1)] - top * f.coeff(i);
    }
    red[0] = -top * f.coeff(0);
  }
  return *std::max_element(row_sum.begin(), row_sum.end());
}

void CheckPlaintext(const Plaintext& pt, const Params& params) {
  if (static_cast<int>(pt.size()) != params.n()) {
    throw Error(ErrorCode::kLengthMismatch, "plaintext needs n coefficients");
  }
  for (uint64_t c : pt) {
    if (c >= params.t()) throw Error(ErrorCode::kInvalidParams, "plaintext not reduced mod p^r");
  }
}

void CheckLevel(const Ciphertext& ct, const Params& params) {
  if (ct.level > params.max_level()) {
    throw Error(ErrorCode::kLevelExceeded, "level " + std::to_string(ct.level) + " above L");
  }
  if (ct.level < 0 || ct.mod_index != params.ModIndexForLevel(ct.level) || ct.parts.empty()) {
    throw Error(ErrorCode::kParamMismatch, "ciphertext level and modulus disagree");
  }
}

RingElement Lift(const std::vector<int64_t>& v, const RingParamsPtr& ring) {
  return RingElement::FromSigned(ring, v);
}

double SumPowers(double base, size_t count) {
  double sum = 0, term = 1;
  for (size_t j = 0; j < count; ++j) {
    sum += term;
    term *= base;
  }
  return sum;
}

void CheckBinaryInputs(const Ciphertext& a, const Ciphertext& b, const Params& params) {
  CheckLevel(a, params);
  CheckLevel(b, params);
  if (a.level != b.level) throw Error(ErrorCode::kParamMismatch, "operands at different levels");
  if (a.level >= params.max_level()) {
    throw Error(ErrorCode::kLevelExceeded, "no operations on level-L ciphertexts");
  }
}

TextDocument Header(const Params& params, std::string_view kind) {
  TextDocument doc(kFileHeader);
  doc.Set("kind", std::string(kind));
  doc.Set("m", std::to_string(params.m()));
  doc.Set("p", std::to_string(params.p()));
  doc.Set("r", std::to_string(params.r()));
  doc.Set("chain", JoinCsv(params.chain()));
  doc.Set("secret_sigma", FormatDouble(params.secret_sigma()));
  doc.Set("error_sigma", FormatDouble(params.error_sigma()));
  return doc;
}

}  // namespace

void ValidateChain(const std::vector<uint64_t>& chain, uint64_t p, uint64_t t) {
  if (chain.size() < 2) throw Error(ErrorCode::kInvalidParams, "chain needs L >= 1");
  for (size_t i = 0; i < chain.size(); ++i) {
    const uint64_t q = chain[i];
    if (q > kChainLimit || !IsPrime(q)) {
      throw Error(ErrorCode::kInvalidParams, "chain modulus " + std::to_string(q) + " invalid");
    }
    if (std::gcd(p, q) != 1 || q % t != 1) {
      throw Error(ErrorCode::kInvalidParams, "chain modulus " + std::to_string(q) +
                                                 " not 1 mod p^r");
    }
    if (i + 1 < chain.size()) {
      const unsigned __int128 qi = q, next = chain[i + 1];
      if (qi * qi > next || 2 * qi > next) {
        throw Error(ErrorCode::kInvalidParams,
                    "q_" + std::to_string(i) + " > min(sqrt(q_" + std::to_string(i + 1) +
                        "), q_" + std::to_string(i + 1) + "/2)");
      }
    }
  }
}

Params Params::Create(int m, uint64_t p, int r, std::vector<uint64_t> chain,
                      double secret_sigma, double error_sigma) {
  if (m < 3 || m > 4096) throw Error(ErrorCode::kInvalidParams, "m must lie in [3, 4096]");
  if (!(secret_sigma > 0) || !(error_sigma > 0)) {
    throw Error(ErrorCode::kInvalidParams, "sigmas must be positive");
  }
  Params out;
  out.m_ = m;
  out.p_ = p;
  out.r_ = r;
  out.t_ = PlainModulus(p, r);
  ValidateChain(chain, p, out.t_);
  out.chain_ = std::move(chain);
  out.f_ = CyclotomicPoly(m);
  for (uint64_t q : out.chain_) out.rings_.push_back(RingParams::Create(out.f_, Modulus(q)));
  out.expansion_ = ExpansionFactor(out.f_);
  out.secret_sigma_ = secret_sigma;
  out.error_sigma_ = error_sigma;
  return out;
}

Params Setup(int m, uint64_t p, int r, int levels, double growth, uint64_t base) {
  if (levels < 1) throw Error(ErrorCode::kInvalidParams, "L must be at least 1");
  if (!(growth >= 1.0)) throw Error(ErrorCode::kInvalidParams, "growth must be >= 1");
  const uint64_t t = PlainModulus(p, r);
  std::vector<uint64_t> chain{NextChainPrime(base, t)};
  for (int i = 0; i < levels; ++i) {
    const long double q = static_cast<long double>(chain.back());
    const long double lower = std::ceil(std::max(q * q, 2 * q) * growth);
    if (lower > static_cast<long double>(kChainLimit)) {
      throw Error(ErrorCode::kChainOverflow, "modulus chain exceeds 2^62");
    }
    chain.push_back(NextChainPrime(static_cast<unsigned __int128>(lower), t));
  }
  return Params::Create(m, p, r, std::move(chain));
}

SecretKey KeyGen(const Params& params, SeededRng& rng) {
  DiscreteGaussian chi(GaussianParams{params.secret_sigma(), 0.0, 12.0});
  SecretKey sk;
  sk.s.resize(static_cast<size_t>(params.n()));
  // A zero key would decrypt anything as p_0; draw again.
  do {
    for (auto& c : sk.s) c = std::clamp<int64_t>(chi.Sample(rng), -1, 1);
  } while (std::all_of(sk.s.begin(), sk.s.end(), [](int64_t c) { return c == 0; }));
  return sk;
}

Ciphertext EncryptWith(const Plaintext& pt, const SecretKey& sk, const Params& params,
                       const RingElement& p1, std::span<const int64_t> e, int level) {
  CheckPlaintext(pt, params);
  if (level < 0 || level > params.max_level()) {
    throw Error(ErrorCode::kLevelExceeded, "encryption level out of range");
  }
  if (static_cast<int>(e.size()) != params.n()) {
    throw Error(ErrorCode::kLengthMismatch, "error needs n coefficients");
  }
  const int idx = params.ModIndexForLevel(level);
  const RingParamsPtr& ring = params.ring(idx);
  std::vector<int64_t> noise(pt.size());
  double norm = 0;
  for (size_t i = 0; i < pt.size(); ++i) {
    noise[i] = static_cast<int64_t>(pt[i]) + static_cast<int64_t>(params.t()) * e[i];
    norm = std::max(norm, std::abs(static_cast<double>(noise[i])));
  }
  RingElement p0 = Lift(noise, ring) - p1 * Lift(sk.s, ring);
  Ciphertext ct;
  ct.parts = {std::move(p0), p1};
  ct.level = level;
  ct.mod_index = idx;
  ct.noise_bound = norm;
  return ct;
}

Ciphertext Encrypt(const Plaintext& pt, const SecretKey& sk, const Params& params,
                   SeededRng& rng, int level) {
  if (level < 0 || level > params.max_level()) {
    throw Error(ErrorCode::kLevelExceeded, "encryption level out of range");
  }
  const RingParamsPtr& ring = params.ring(params.ModIndexForLevel(level));
  std::vector<uint64_t> a(static_cast<size_t>(params.n()));
  for (auto& c : a) c = rng.UniformBelow(ring->q().value());
  DiscreteGaussian chi(GaussianParams{params.error_sigma(), 0.0, 12.0});
  std::vector<int64_t> e(static_cast<size_t>(params.n()));
  for (auto& c : e) c = chi.Sample(rng);
  return EncryptWith(pt, sk, params, RingElement::FromResidues(ring, std::move(a)), e, level);
}

std::vector<int64_t> RawNoise(const Ciphertext& ct, const SecretKey& sk, const Params& params) {
  CheckLevel(ct, params);
  const RingParamsPtr& ring = params.ring(ct.mod_index);
  RingElement s = Lift(sk.s, ring);
  RingElement acc = ct.parts.back();
  for (size_t j = ct.parts.size() - 1; j-- > 0;) acc = acc * s + ct.parts[j];
  return acc.Centered();
}

Plaintext Decrypt(const Ciphertext& ct, const SecretKey& sk, const Params& params) {
  CheckLevel(ct, params);
  const uint64_t q = params.chain()[static_cast<size_t>(ct.mod_index)];
  if (ct.noise_bound >= static_cast<double>(q) / 2) {
    throw Error(ErrorCode::kDecryptFail, "noise bound exceeds q_i / 2");
  }
  const int64_t t = static_cast<int64_t>(params.t());
  Plaintext out;
  for (int64_t v : RawNoise(ct, sk, params)) out.push_back(static_cast<uint64_t>(((v % t) + t) % t));
  return out;
}

Ciphertext ModSwitch(const Ciphertext& ct, const Params& params) {
  CheckLevel(ct, params);
  if (ct.level >= params.max_level()) {
    throw Error(ErrorCode::kLevelExceeded, "no modulus below q_0");
  }
  const int idx = ct.mod_index - 1;
  const RingParamsPtr& ring = params.ring(idx);
  const __int128 big = params.chain()[static_cast<size_t>(ct.mod_index)];
  const __int128 small = params.chain()[static_cast<size_t>(idx)];
  const __int128 t = params.t();
  Ciphertext out;
  for (const RingElement& part : ct.parts) {
    std::vector<uint64_t> coeffs;
    coeffs.reserve(part.residues().size());
    for (uint64_t c : part.residues()) {
      const __int128 scaled = small * static_cast<__int128>(c);
      // delta = -scaled (mod big), delta = 0 (mod t), |delta| minimal.
      const __int128 x = (big - scaled % big) % big;
      const __int128 k0 = (t - x % t) % t;
      const __int128 d0 = x + big * k0;
      const __int128 d1 = x + big * (k0 - t);
      const __int128 delta = (d0 < -d1) ? d0 : d1;
      __int128 v = (scaled + delta) / big;
      v %= small;
      if (v < 0) v += small;
      coeffs.push_back(static_cast<uint64_t>(v));
    }
    out.parts.push_back(RingElement::FromResidues(ring, std::move(coeffs)));
  }
  out.level = ct.level + 1;
  out.mod_index = idx;
  const double rounding = (static_cast<double>(params.t()) + 1) / 2 *
                          SumPowers(params.expansion(), ct.parts.size());
  out.noise_bound = static_cast<double>(small) / static_cast<double>(big) * ct.noise_bound +
                    rounding;
  return out;
}

Ciphertext HeAdd(const Ciphertext& a, const Ciphertext& b, const Params& params) {
  CheckBinaryInputs(a, b, params);
  Ciphertext sum;
  sum.level = a.level;
  sum.mod_index = a.mod_index;
  const size_t len = std::max(a.parts.size(), b.parts.size());
  for (size_t j = 0; j < len; ++j) {
    if (j < a.parts.size() && j < b.parts.size()) {
      sum.parts.push_back(a.parts[j] + b.parts[j]);
    } else {
      sum.parts.push_back(j < a.parts.size() ? a.parts[j] : b.parts[j]);
    }
  }
  sum.noise_bound = a.noise_bound + b.noise_bound;
  return ModSwitch(sum, params);
}

Ciphertext HeMul(const Ciphertext& a, const Ciphertext& b, const Params& params) {
  CheckBinaryInputs(a, b, params);
  Ciphertext prod;
  prod.level = a.level;
  prod.mod_index = a.mod_index;
  const RingParamsPtr& ring = params.ring(a.mod_index);
  prod.parts.assign(a.parts.size() + b.parts.size() - 1, RingElement::Zero(ring));
  for (size_t j = 0; j < a.parts.size(); ++j) {
    for (size_t k = 0; k < b.parts.size(); ++k) {
      prod.parts[j + k] = prod.parts[j + k] + a.parts[j] * b.parts[k];
    }
  }
  prod.noise_bound = params.expansion() * a.noise_bound * b.noise_bound;
  return ModSwitch(prod, params);
}

Ciphertext AddNoise(const Ciphertext& ct, std::span<const int64_t> eps, const Params& params) {
  CheckLevel(ct, params);
  if (static_cast<int>(eps.size()) != params.n()) {
    throw Error(ErrorCode::kLengthMismatch, "noise needs n coefficients");
  }
  const RingParamsPtr& ring = params.ring(ct.mod_index);
  Ciphertext out = ct;
  const uint64_t t_mod_q = params.t() % ring->q().value();
  out.parts[0] = out.parts[0] + RingElement::FromSigned(ring, eps).ScalarMul(t_mod_q);
  double norm = 0;
  for (int64_t e : eps) norm = std::max(norm, std::abs(static_cast<double>(e)));
  out.noise_bound += static_cast<double>(params.t()) * norm;
  return out;
}

Plaintext PlainAdd(const Plaintext& a, const Plaintext& b, const Params& params) {
  CheckPlaintext(a, params);
  CheckPlaintext(b, params);
  Plaintext out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % params.t();
  return out;
}

Plaintext PlainMul(const Plaintext& a, const Plaintext& b, const Params& params) {
  CheckPlaintext(a, params);
  CheckPlaintext(b, params);
  const uint64_t t = params.t();
  const size_t n = a.size();
  std::vector<uint64_t> full(2 * n - 1, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) full[i + j] = (full[i + j] + a[i] * b[j]) % t;
  }
  const IntPolynomial& f = params.f();
  for (size_t k = full.size(); k-- > n;) {
    const uint64_t c = full[k];
    if (c == 0) continue;
    full[k] = 0;
    for (size_t i = 0; i < n; ++i) {
      const int64_t fi = f.coeff(static_cast<int>(i));
      const uint64_t fi_mod = static_cast<uint64_t>(((fi % static_cast<int64_t>(t)) +
                                                     static_cast<int64_t>(t)) %
                                                    static_cast<int64_t>(t));
      const size_t pos = k - n + i;
      full[pos] = (full[pos] + (t - fi_mod) % t * c) % t;
    }
  }
  full.resize(n);
  return full;
}

std::vector<Gate> ParseCircuit(std::string_view text) {
  std::vector<Gate> gates;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string op, out, lhs, rhs, extra;
    if (!(words >> op)) continue;
    if (!(words >> out >> lhs >> rhs) || (words >> extra)) {
      throw Error(ErrorCode::kParse, "circuit line " + std::to_string(lineno) +
                                         ": expected OP out lhs rhs");
    }
    Gate g;
    if (op == "ADD") {
      g.op = Gate::Op::kAdd;
    } else if (op == "MUL") {
      g.op = Gate::Op::kMul;
    } else {
      throw Error(ErrorCode::kParse, "circuit line " + std::to_string(lineno) +
                                         ": unknown op " + op);
    }
    g.out = out;
    g.lhs = lhs;
    g.rhs = rhs;
    gates.push_back(std::move(g));
  }
  return gates;
}

namespace {

template <typename T>
const T& Wire(const std::map<std::string, T>& wires, const std::string& name) {
  auto it = wires.find(name);
  if (it == wires.end()) throw Error(ErrorCode::kParse, "undefined wire " + name);
  return it->second;
}

}  // namespace

std::map<std::string, Ciphertext> EvalCircuit(const std::vector<Gate>& gates,
                                              std::map<std::string, Ciphertext> wires,
                                              const Params& params) {
  for (const Gate& g : gates) {
    Ciphertext a = Wire(wires, g.lhs);
    Ciphertext b = Wire(wires, g.rhs);
    while (a.level < b.level) a = ModSwitch(a, params);
    while (b.level < a.level) b = ModSwitch(b, params);
    wires.insert_or_assign(g.out, g.op == Gate::Op::kAdd ? HeAdd(a, b, params)
                                                         : HeMul(a, b, params));
  }
  return wires;
}

std::map<std::string, Plaintext> EvalCircuitClear(const std::vector<Gate>& gates,
                                                  std::map<std::string, Plaintext> wires,
                                                  const Params& params) {
  for (const Gate& g : gates) {
    const Plaintext& a = Wire(wires, g.lhs);
    const Plaintext& b = Wire(wires, g.rhs);
    Plaintext v = g.op == Gate::Op::kAdd ? PlainAdd(a, b, params) : PlainMul(a, b, params);
    wires.insert_or_assign(g.out, std::move(v));
  }
  return wires;
}

TextDocument ToDocument(const Params& params, const SecretKey& sk) {
  TextDocument doc = Header(params, "secret");
  doc.Set("s", JoinCsv(sk.s));
  return doc;
}

TextDocument ToDocument(const Params& params, const Ciphertext& ct) {
  TextDocument doc = Header(params, "ciphertext");
  doc.Set("level", std::to_string(ct.level));
  doc.Set("mod_index", std::to_string(ct.mod_index));
  doc.Set("noise_bound", FormatDouble(ct.noise_bound));
  for (const auto& part : ct.parts) doc.Set("parts", JoinCsv(part.residues()));
  return doc;
}

Params ParamsFromDocument(const TextDocument& doc) {
  return Params::Create(static_cast<int>(ParseInt(doc.Get("m"))), ParseUint(doc.Get("p")),
                        static_cast<int>(ParseInt(doc.Get("r"))), ParseUintCsv(doc.Get("chain")),
                        ParseDouble(doc.Get("secret_sigma")), ParseDouble(doc.Get("error_sigma")));
}

SecretKey SecretKeyFromDocument(const Params& params, const TextDocument& doc) {
  if (doc.Get("kind") != "secret") throw Error(ErrorCode::kParse, "expected a BGV secret file");
  SecretKey sk{ParseIntCsv(doc.Get("s"))};
  if (static_cast<int>(sk.s.size()) != params.n()) {
    throw Error(ErrorCode::kParse, "secret has wrong length");
  }
  for (int64_t c : sk.s) {
    if (c < -1 || c > 1) throw Error(ErrorCode::kParse, "secret not ternary");
  }
  return sk;
}

Ciphertext CiphertextFromDocument(const Params& params, const TextDocument& doc) {
  if (doc.Get("kind") != "ciphertext") {
    throw Error(ErrorCode::kParse, "expected a BGV ciphertext file");
  }
  Ciphertext ct;
  ct.level = static_cast<int>(ParseInt(doc.Get("level")));
  ct.mod_index = static_cast<int>(ParseInt(doc.Get("mod_index")));
  ct.noise_bound = ParseDouble(doc.Get("noise_bound"));
  if (ct.level > params.max_level()) {
    throw Error(ErrorCode::kLevelExceeded, "level " + std::to_string(ct.level) + " above L");
  }
  if (ct.level < 0 || ct.mod_index != params.ModIndexForLevel(ct.level)) {
    throw Error(ErrorCode::kParse, "level and mod_index disagree");
  }
  const RingParamsPtr& ring = params.ring(ct.mod_index);
  for (const auto& csv : doc.GetAll("parts")) {
    ct.parts.push_back(RingElement::FromResidues(ring, ParseUintCsv(csv)));
  }
  if (ct.parts.empty()) throw Error(ErrorCode::kParse, "ciphertext has no parts");
  return ct;
}

}  // namespace latticelab::bgv
