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
#ifndef LATTICELAB_ATTACKS_H_
#define LATTICELAB_ATTACKS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latticelab/plwe.h"
#include "latticelab/polynomial.h"
#include "latticelab/rng.h"
#include "latticelab/textio.h"
#include "latticelab/zq.h"

// Evaluation attacks on decision PLWE through roots of f modulo q.
namespace latticelab::attacks {

inline constexpr int kDefaultMaxOrder = 8;
inline constexpr double kDefaultThreshold = 3.0;
// Largest region the small-order attack will materialize.
inline constexpr uint64_t kMaxRegionSize = 1000000;
// The candidate loop runs over all of F_q, so q is capped.
inline constexpr uint64_t kMaxFieldSize = uint64_t{1} << 26;

struct RootInfo {
  uint64_t alpha = 0;
  // Multiplicative order of alpha; 0 for the root alpha = 0.
  uint64_t order = 0;
};

struct WeaknessReport {
  uint64_t q = 0;
  int n = 0;
  int max_order = kDefaultMaxOrder;
  bool totally_split = false;
  bool root_one = false;
  std::vector<RootInfo> roots;
  std::vector<RootInfo> small_order_roots;
  bool family_xn_xpx_r = false;
  std::vector<std::string> notes;
};

// Throws InvalidParams if f is not monic of degree >= 2.
WeaknessReport WeaknessScan(const IntPolynomial& f, const Modulus& q,
                            int max_order = kDefaultMaxOrder);

// f = x^n + x p(x) - r with r prime, deg p < n/2 and 25 |p|_1^2 <= r.
bool InReductionFamily(const IntPolynomial& f);

std::string RenderTable(const WeaknessReport& report);
TextDocument ToDocument(const WeaknessReport& report);

enum class Label { kValid, kRandom };
const char* LabelName(Label label);

struct Verdict {
  Label label = Label::kValid;
  // Candidates for s(alpha) still alive after this sample.
  uint64_t surviving_secrets = 0;
};

struct SmallnessRegion {
  uint64_t alpha = 0;
  uint64_t order = 0;
  // Bound on each c_i in sum c_i alpha^i.
  double per_component_bound = 0;
  // Membership flags indexed by F_q value.
  std::vector<uint8_t> members;
  uint64_t size = 0;

  bool Contains(uint64_t v) const { return members[v] != 0; }
};

struct Decision {
  std::vector<Verdict> verdicts;
  // Candidate values of s(alpha) alive after the last sample, ascending.
  std::vector<uint64_t> survivors;
};

// Region for the root alpha of order r: all sum_{i<r} c_i alpha^i with
// |c_i| <= t sqrt(ceil(n/r)) sigma. Throws OrderTooLarge when r exceeds
// max_order or the region would exceed kMaxRegionSize.
SmallnessRegion BuildRegion(const plwe::Params& p, uint64_t alpha, double t,
                            int max_order = kDefaultMaxOrder);

// Candidates s in F_q survive a sample while b(1) - s a(1) stays within
// t sqrt(n) sigma. A candidate must survive every sample seen so far; a
// sample is labeled random once no candidate is left.
Decision DecideAlg1(std::span<const plwe::Sample> samples, const plwe::Params& p,
                    double t = kDefaultThreshold);

// Same loop at a root alpha of small order, against the smallness region.
Decision DecideAlg2(std::span<const plwe::Sample> samples, const plwe::Params& p,
                    uint64_t alpha, double t = kDefaultThreshold,
                    int max_order = kDefaultMaxOrder);

// Fraction of F_q hit by e(alpha) over `trials` error draws whose
// coefficients lie within t sigma.
double SmearingEstimate(const plwe::Params& p, uint64_t alpha, uint64_t trials, double t,
                        SeededRng& rng);

}  // namespace latticelab::attacks

#endif  // LATTICELAB_ATTACKS_H_
