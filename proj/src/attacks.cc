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
#include "latticelab/attacks.h"

#include <cmath>
#include <sstream>
#include <unordered_set>

#include "latticelab/error.h"
#include "latticelab/ring.h"

namespace latticelab::attacks {
namespace {

void RequireRoot(const plwe::Params& p, uint64_t alpha) {
  const Modulus& q = p.q();
  if (alpha >= q.value() || p.ring->f().EvaluateMod(alpha, q.value()) != 0) {
    throw Error(ErrorCode::kPreconditionFailed,
                std::to_string(alpha) + " is not a root of f mod " + std::to_string(q.value()));
  }
}

void RequireSmallField(const plwe::Params& p) {
  if (p.q().value() > kMaxFieldSize) {
    throw Error(ErrorCode::kInvalidParams, "q too large for an exhaustive candidate loop");
  }
}

// Shared candidate loop. `inside` tests membership of e(alpha) in the region.
template <typename Inside>
Decision RunCandidateLoop(std::span<const plwe::Sample> samples, const plwe::Params& p,
                          uint64_t alpha, Inside inside) {
  const Modulus& q = p.q();
  ZqElement a_pt(alpha, q);
  std::vector<uint64_t> alive(q.value());
  for (uint64_t s = 0; s < q.value(); ++s) alive[s] = s;
  Decision out;
  for (const auto& sample : samples) {
    const uint64_t a = Evaluate(sample.a, a_pt).value();
    const uint64_t b = Evaluate(sample.b, a_pt).value();
    std::vector<uint64_t> next;
    for (uint64_t s : alive) {
      if (inside(q.Sub(b, q.Mul(s, a)))) next.push_back(s);
    }
    alive = std::move(next);
    Verdict v;
    v.surviving_secrets = alive.size();
    v.label = alive.empty() ? Label::kRandom : Label::kValid;
    out.verdicts.push_back(v);
  }
  out.survivors = std::move(alive);
  return out;
}

}  // namespace

bool InReductionFamily(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1 || !f.is_monic()) return false;
  const int64_t r = -f.coeff(0);
  if (r < 2 || !IsPrime(static_cast<uint64_t>(r))) return false;
  // x p(x) occupies degrees 1..n-1; deg p < n/2 means deg(x p) <= ceil(n/2).
  const int top = (n + 1) / 2;
  __int128 norm1 = 0;
  for (int i = 1; i < n; ++i) {
    const int64_t c = f.coeff(i);
    if (c == 0) continue;
    if (i > top) return false;
    norm1 += c < 0 ? -static_cast<__int128>(c) : c;
  }
  return 25 * norm1 * norm1 <= r;
}

WeaknessReport WeaknessScan(const IntPolynomial& f, const Modulus& q, int max_order) {
  if (!f.is_monic() || f.degree() < 2) {
    throw Error(ErrorCode::kInvalidParams, "weakness scan needs monic f of degree >= 2");
  }
  WeaknessReport rep;
  rep.q = q.value();
  rep.n = f.degree();
  rep.max_order = max_order;
  for (const ZqElement& root : RootsModQ(f, q)) {
    RootInfo info{root.value(), root.value() == 0 ? 0 : MultOrder(root)};
    rep.roots.push_back(info);
    if (info.order != 0 && info.order <= static_cast<uint64_t>(max_order)) {
      rep.small_order_roots.push_back(info);
    }
    if (info.alpha == 1) rep.root_one = true;
  }
  rep.totally_split = static_cast<int>(rep.roots.size()) == rep.n && IsSquarefreeModP(f, q);
  rep.family_xn_xpx_r = InReductionFamily(f);
  rep.notes.push_back("galois: not decided");
  rep.notes.push_back("monogenic: not decided");
  rep.notes.push_back("orthogonal transformation: not decided");
  rep.notes.push_back("q size: reported only, no threshold asserted");
  if (rep.root_one) rep.notes.push_back("root 1 present: evaluation attack at 1 applies");
  if (!rep.small_order_roots.empty()) {
    rep.notes.push_back("small-order roots present: region attack applies");
  }
  return rep;
}

std::string RenderTable(const WeaknessReport& rep) {
  std::ostringstream os;
  os << "condition                 value\n";
  os << "n                         " << rep.n << "\n";
  os << "q                         " << rep.q << "\n";
  os << "totally_split             " << (rep.totally_split ? "yes" : "no") << "\n";
  os << "root_one                  " << (rep.root_one ? "yes" : "no") << "\n";
  os << "roots                     " << rep.roots.size() << "\n";
  const std::string small = "small_order_roots(r<=" + std::to_string(rep.max_order) + ")";
  os << small << std::string(small.size() < 26 ? 26 - small.size() : 1, ' ')
     << rep.small_order_roots.size() << "\n";
  os << "family_xn_xpx_r           " << (rep.family_xn_xpx_r ? "yes" : "no") << "\n";
  if (!rep.roots.empty()) {
    os << "\nalpha        order\n";
    for (const auto& r : rep.roots) {
      std::string a = std::to_string(r.alpha);
      os << a << std::string(a.size() < 13 ? 13 - a.size() : 1, ' ') << r.order << "\n";
    }
  }
  os << "\n";
  for (const auto& note : rep.notes) os << "note: " << note << "\n";
  return os.str();
}

TextDocument ToDocument(const WeaknessReport& rep) {
  TextDocument doc("latticelab-scan-v1");
  doc.Set("n", std::to_string(rep.n));
  doc.Set("q", std::to_string(rep.q));
  doc.Set("max_order", std::to_string(rep.max_order));
  doc.Set("totally_split", rep.totally_split ? "true" : "false");
  doc.Set("root_one", rep.root_one ? "true" : "false");
  doc.Set("family_xn_xpx_r", rep.family_xn_xpx_r ? "true" : "false");
  for (const auto& r : rep.roots) {
    doc.Set("root", std::to_string(r.alpha) + ":" + std::to_string(r.order));
  }
  for (const auto& r : rep.small_order_roots) {
    doc.Set("small_order_root", std::to_string(r.alpha) + ":" + std::to_string(r.order));
  }
  for (const auto& note : rep.notes) doc.Set("note", note);
  return doc;
}

const char* LabelName(Label label) { return label == Label::kValid ? "valid" : "random"; }

SmallnessRegion BuildRegion(const plwe::Params& p, uint64_t alpha, double t, int max_order) {
  RequireRoot(p, alpha);
  RequireSmallField(p);
  const Modulus& q = p.q();
  if (alpha == 0) {
    throw Error(ErrorCode::kPreconditionFailed, "root 0 has no multiplicative order");
  }
  const uint64_t r = MultOrder(ZqElement(alpha, q));
  if (r > static_cast<uint64_t>(max_order)) {
    throw Error(ErrorCode::kOrderTooLarge,
                "order " + std::to_string(r) + " exceeds " + std::to_string(max_order));
  }
  const uint64_t n = static_cast<uint64_t>(p.n());
  const uint64_t block = (n + r - 1) / r;
  SmallnessRegion reg;
  reg.alpha = alpha;
  reg.order = r;
  reg.per_component_bound = t * std::sqrt(static_cast<double>(block)) * p.sigma;
  const int64_t bound = static_cast<int64_t>(std::floor(reg.per_component_bound));
  const double predicted = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(r));
  if (predicted > static_cast<double>(kMaxRegionSize)) {
    throw Error(ErrorCode::kOrderTooLarge, "smallness region too large");
  }
  std::vector<uint64_t> powers(r);
  powers[0] = 1;
  for (uint64_t i = 1; i < r; ++i) powers[i] = q.Mul(powers[i - 1], alpha);
  reg.members.assign(q.value(), 0);
  // Odometer over (c_0, ..., c_{r-1}) in [-bound, bound]^r.
  std::vector<int64_t> c(r, -bound);
  while (true) {
    uint64_t v = 0;
    for (uint64_t i = 0; i < r; ++i) v = q.Add(v, q.Mul(q.FromSigned(c[i]), powers[i]));
    reg.members[v] = 1;
    uint64_t i = 0;
    while (i < r && c[i] == bound) c[i++] = -bound;
    if (i == r) break;
    ++c[i];
  }
  for (uint8_t m : reg.members) reg.size += m;
  return reg;
}

Decision DecideAlg1(std::span<const plwe::Sample> samples, const plwe::Params& p, double t) {
  RequireRoot(p, 1);
  RequireSmallField(p);
  const double limit = t * std::sqrt(static_cast<double>(p.n())) * p.sigma;
  const int64_t bound = static_cast<int64_t>(std::floor(limit));
  const Modulus& q = p.q();
  return RunCandidateLoop(samples, p, 1, [&](uint64_t e) {
    const int64_t c = static_cast<int64_t>(ReduceCentered(static_cast<__int128>(e), q));
    return c <= bound && c >= -bound;
  });
}

Decision DecideAlg2(std::span<const plwe::Sample> samples, const plwe::Params& p,
                    uint64_t alpha, double t, int max_order) {
  SmallnessRegion reg = BuildRegion(p, alpha, t, max_order);
  return RunCandidateLoop(samples, p, alpha, [&](uint64_t e) { return reg.Contains(e); });
}

double SmearingEstimate(const plwe::Params& p, uint64_t alpha, uint64_t trials, double t,
                        SeededRng& rng) {
  RequireRoot(p, alpha);
  if (trials == 0) return 0.0;
  const Modulus& q = p.q();
  const ZqElement pt(alpha, q);
  const double coeff_limit = t * p.sigma;
  std::unordered_set<uint64_t> hit;
  for (uint64_t i = 0; i < trials; ++i) {
    RingElement e = plwe::SampleError(p, rng);
    bool in_support = true;
    for (int64_t c : e.Centered()) {
      if (std::abs(static_cast<double>(c)) > coeff_limit) {
        in_support = false;
        break;
      }
    }
    if (in_support) hit.insert(Evaluate(e, pt).value());
  }
  return static_cast<double>(hit.size()) / static_cast<double>(q.value());
}

}  // namespace latticelab::attacks
