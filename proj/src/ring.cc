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
#include "latticelab/ring.h"

#include <algorithm>
#include <string>

#include "latticelab/error.h"

namespace latticelab {
namespace {

using u128 = unsigned __int128;

// Dense polynomials over F_p, lowest degree first, trimmed.
using ModPoly = std::vector<uint64_t>;

void TrimPoly(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly ReduceIntPoly(const IntPolynomial& f, uint64_t p) {
  ModPoly out(f.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    int64_t c = f.coeffs()[i] % static_cast<int64_t>(p);
    out[i] = static_cast<uint64_t>(c < 0 ? c + static_cast<int64_t>(p) : c);
  }
  TrimPoly(out);
  return out;
}

// a mod b over F_p; b nonzero.
ModPoly PolyRem(ModPoly a, const ModPoly& b, uint64_t p) {
  uint64_t lead_inv = PowMod(b.back(), p - 2, p);
  size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    uint64_t c = MulMod(a.back(), lead_inv, p);
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - MulMod(c, b[j], p)) % p;
    }
    TrimPoly(a);
  }
  return a;
}

ModPoly PolyGcd(ModPoly a, ModPoly b, uint64_t p) {
  while (!b.empty()) {
    ModPoly r = PolyRem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly PolyMulMod(const ModPoly& a, const ModPoly& b, const ModPoly& f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + MulMod(a[i], b[j], p)) % p;
    }
  }
  TrimPoly(prod);
  return PolyRem(std::move(prod), f, p);
}

ModPoly PolyPowMod(ModPoly base, uint64_t e, const ModPoly& f, uint64_t p) {
  ModPoly result = PolyRem({1}, f, p);
  base = PolyRem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = PolyMulMod(result, base, f, p);
    base = PolyMulMod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

ModPoly PolySub(ModPoly a, const ModPoly& b, uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  TrimPoly(a);
  return a;
}

ModPoly Derivative(const ModPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  ModPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = MulMod(a[i], i % p, p);
  TrimPoly(d);
  return d;
}

}  // namespace

RingParams::RingParams(IntPolynomial f, Modulus q)
    : f_(std::move(f)), q_(q), negacyclic_(f_.IsXnPlusOne()) {
  f_mod_q_.resize(static_cast<size_t>(f_.degree()) + 1);
  for (size_t i = 0; i < f_mod_q_.size(); ++i) f_mod_q_[i] = q_.FromSigned(f_.coeffs()[i]);
  u128 qm1 = q_.value() - 1;
  u128 limit = ~u128{0} / (qm1 * qm1);
  lazy_terms_ = limit > u128{1} << 62 ? uint64_t{1} << 62 : static_cast<uint64_t>(limit);
}

std::shared_ptr<const RingParams> RingParams::Create(IntPolynomial f, Modulus q) {
  if (f.degree() < 1 || !f.is_monic()) {
    throw Error(ErrorCode::kInvalidParams, "ring modulus must be monic of degree >= 1");
  }
  return std::shared_ptr<const RingParams>(new RingParams(std::move(f), q));
}

RingElement RingElement::Zero(RingParamsPtr params) {
  size_t n = static_cast<size_t>(params->n());
  return RingElement(std::move(params), std::vector<uint64_t>(n, 0));
}

RingElement RingElement::FromResidues(RingParamsPtr params, std::vector<uint64_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != params->n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(params->n()) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  }
  for (uint64_t c : coeffs) {
    if (c >= params->q().value()) {
      throw Error(ErrorCode::kInvalidParams, "coefficient not reduced mod q");
    }
  }
  return RingElement(std::move(params), std::move(coeffs));
}

RingElement RingElement::FromSigned(RingParamsPtr params, std::span<const int64_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != params->n()) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(params->n()) + " coefficients, got " +
                    std::to_string(coeffs.size()));
  }
  std::vector<uint64_t> c(coeffs.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = params->q().FromSigned(coeffs[i]);
  return RingElement(std::move(params), std::move(c));
}

RingElement RingElement::Constant(RingParamsPtr params, uint64_t c) {
  RingElement out = Zero(std::move(params));
  out.coeffs_[0] = c % out.params_->q().value();
  return out;
}

RingElement RingElement::Monomial(RingParamsPtr params, int k) {
  RingElement x = Zero(params);
  if (params->n() == 1) {
    // R_q = F_q, x is -f_0.
    x.coeffs_[0] = params->q().Neg(params->f_mod_q()[0]);
  } else {
    x.coeffs_[1] = 1;
  }
  RingElement out = Constant(std::move(params), 1);
  for (int i = 0; i < k; ++i) out = out * x;
  return out;
}

std::vector<int64_t> RingElement::Centered() const {
  std::vector<int64_t> out(coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = ReduceCentered(coeffs_[i], params_->q());
  return out;
}

int64_t RingElement::InfNorm() const {
  int64_t norm = 0;
  for (uint64_t c : coeffs_) {
    int64_t v = ReduceCentered(c, params_->q());
    norm = std::max(norm, v < 0 ? -v : v);
  }
  return norm;
}

bool RingElement::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](uint64_t c) { return c == 0; });
}

void RingElement::CheckSameRing(const RingElement& o) const {
  if (!params_->SameRing(*o.params_)) {
    throw Error(ErrorCode::kParamMismatch, "ring elements from different rings");
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  CheckSameRing(o);
  std::vector<uint64_t> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = params_->q().Add(coeffs_[i], o.coeffs_[i]);
  return RingElement(params_, std::move(c));
}

RingElement RingElement::operator-(const RingElement& o) const {
  CheckSameRing(o);
  std::vector<uint64_t> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = params_->q().Sub(coeffs_[i], o.coeffs_[i]);
  return RingElement(params_, std::move(c));
}

RingElement RingElement::operator-() const {
  std::vector<uint64_t> c(coeffs_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = params_->q().Neg(coeffs_[i]);
  return RingElement(params_, std::move(c));
}

RingElement RingElement::operator*(const RingElement& o) const { return RingMul(*this, o); }

RingElement RingElement::ScalarMul(uint64_t c) const {
  c %= params_->q().value();
  std::vector<uint64_t> out(coeffs_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = params_->q().Mul(coeffs_[i], c);
  return RingElement(params_, std::move(out));
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.params_->SameRing(*b.params_) && a.coeffs_ == b.coeffs_;
}

RingElement RingMul(const RingElement& a, const RingElement& b) {
  if (!a.params()->SameRing(*b.params())) {
    throw Error(ErrorCode::kParamMismatch, "ring elements from different rings");
  }
  const RingParams& ring = *a.params();
  const Modulus& q = ring.q();
  const uint64_t qv = q.value();
  const size_t n = static_cast<size_t>(ring.n());
  const auto& x = a.residues();
  const auto& y = b.residues();
  // Each output coefficient collects at most n products, so one final
  // reduction suffices whenever n products fit in the accumulator.
  const bool lazy = n <= ring.lazy_terms();

  if (ring.negacyclic()) {
    // x^n = -1: wrapped products are subtracted.
    std::vector<u128> pos(n, 0), neg(n, 0);
    for (size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      u128 xi = x[i];
      for (size_t j = 0; j < n - i; ++j) {
        u128 t = xi * y[j];
        pos[i + j] += lazy ? t : t % qv;
      }
      for (size_t j = n - i; j < n; ++j) {
        u128 t = xi * y[j];
        neg[i + j - n] += lazy ? t : t % qv;
      }
    }
    std::vector<uint64_t> out(n);
    for (size_t k = 0; k < n; ++k) {
      out[k] = q.Sub(static_cast<uint64_t>(pos[k] % qv), static_cast<uint64_t>(neg[k] % qv));
    }
    return RingElement::FromResidues(a.params(), std::move(out));
  }

  std::vector<u128> acc(2 * n - 1, 0);
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    u128 xi = x[i];
    for (size_t j = 0; j < n; ++j) {
      u128 t = xi * y[j];
      acc[i + j] += lazy ? t : t % qv;
    }
  }
  std::vector<uint64_t> prod(2 * n - 1);
  for (size_t k = 0; k < prod.size(); ++k) prod[k] = static_cast<uint64_t>(acc[k] % qv);
  // Top-down division by monic f: x^n = -(f_0 + ... + f_{n-1} x^{n-1}).
  const auto& f = ring.f_mod_q();
  for (size_t k = prod.size() - 1; k >= n; --k) {
    uint64_t c = prod[k];
    if (c == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      prod[k - n + j] = q.Sub(prod[k - n + j], q.Mul(c, f[j]));
    }
  }
  prod.resize(n);
  return RingElement::FromResidues(a.params(), std::move(prod));
}

ZqElement Evaluate(const RingElement& p, const ZqElement& alpha) {
  const Modulus& q = p.params()->q();
  if (!(alpha.modulus() == q)) {
    throw Error(ErrorCode::kParamMismatch, "evaluation point from a different field");
  }
  uint64_t acc = 0;
  const auto& c = p.residues();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = q.Add(q.Mul(acc, alpha.value()), *it);
  return ZqElement(acc, q);
}

std::vector<ZqElement> RootsModQ(const IntPolynomial& f, const Modulus& q) {
  if (f.degree() < 1) throw Error(ErrorCode::kInvalidParams, "degree must be >= 1");
  ModPoly fm = ReduceIntPoly(f, q.value());
  std::vector<ZqElement> roots;
  for (uint64_t a = 0; a < q.value(); ++a) {
    uint64_t acc = 0;
    for (auto it = fm.rbegin(); it != fm.rend(); ++it) acc = q.Add(q.Mul(acc, a), *it);
    if (acc == 0) roots.emplace_back(a, q);
  }
  return roots;
}

uint64_t MultOrder(const ZqElement& alpha) {
  if (alpha.value() == 0) throw Error(ErrorCode::kZeroElement, "zero has no multiplicative order");
  uint64_t qv = alpha.modulus().value();
  uint64_t order = qv - 1;
  for (uint64_t pf : PrimeFactors(qv - 1)) {
    while (order % pf == 0 && PowMod(alpha.value(), order / pf, qv) == 1) order /= pf;
  }
  return order;
}

bool IsSquarefreeModP(const IntPolynomial& f, const Modulus& q) {
  uint64_t p = q.value();
  ModPoly fm = ReduceIntPoly(f, p);
  if (fm.empty()) return false;
  return PolyGcd(fm, Derivative(fm, p), p).size() == 1;
}

bool IsTotallySplit(const IntPolynomial& f, const Modulus& q) {
  if (!f.is_monic() || f.degree() < 1) {
    throw Error(ErrorCode::kInvalidParams, "f must be monic of degree >= 1");
  }
  if (!IsSquarefreeModP(f, q)) return false;
  return static_cast<int>(RootsModQ(f, q).size()) == f.degree();
}

bool IsIrreducibleModP(const IntPolynomial& f, uint64_t p) {
  if (!f.is_monic() || f.degree() < 1) {
    throw Error(ErrorCode::kInvalidParams, "f must be monic of degree >= 1");
  }
  if (!IsPrime(p)) throw Error(ErrorCode::kInvalidParams, "p must be prime");
  const int n = f.degree();
  if (n == 1) return true;
  ModPoly fm = ReduceIntPoly(f, p);
  const ModPoly x = PolyRem({0, 1}, fm, p);
  // frob[i] = x^{p^i} mod f.
  std::vector<ModPoly> frob(static_cast<size_t>(n) + 1);
  frob[0] = x;
  for (int i = 1; i <= n; ++i) frob[i] = PolyPowMod(frob[i - 1], p, fm, p);
  if (PolySub(frob[n], x, p) != ModPoly{}) return false;
  for (uint64_t r : PrimeFactors(static_cast<uint64_t>(n))) {
    ModPoly g = PolyGcd(fm, PolySub(frob[n / static_cast<int>(r)], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

uint64_t FindIrreducibilityWitness(const IntPolynomial& f, uint64_t max_prime) {
  for (uint64_t p = 2; p <= max_prime; p = NextPrime(p + 1)) {
    if (IsIrreducibleModP(f, p)) return p;
  }
  return 0;
}

}  // namespace latticelab
