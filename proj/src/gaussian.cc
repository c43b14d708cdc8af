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
#include "latticelab/gaussian.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "latticelab/error.h"

namespace latticelab {

void GaussianParams::Validate() const {
  if (!(sigma > 0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::kInvalidParams, "sigma must be positive");
  }
  if (!(tail_cut >= 6)) {
    throw Error(ErrorCode::kInvalidParams, "tail_cut must be at least 6");
  }
  if (!std::isfinite(center)) {
    throw Error(ErrorCode::kInvalidParams, "center must be finite");
  }
}

double Rho(double x, const GaussianParams& p) {
  double d = x - p.center;
  return std::exp(-d * d / (2 * p.sigma * p.sigma));
}

DiscreteGaussian::DiscreteGaussian(const GaussianParams& params)
    : params_(params) {
  params_.Validate();
  double radius = params_.tail_cut * params_.sigma;
  lo_ = static_cast<int64_t>(std::ceil(params_.center - radius));
  int64_t hi = static_cast<int64_t>(std::floor(params_.center + radius));
  if (hi - lo_ > (int64_t{1} << 26)) {
    throw Error(ErrorCode::kInvalidParams, "Gaussian support too wide to tabulate");
  }
  size_t size = static_cast<size_t>(hi - lo_ + 1);
  pmf_.resize(size);
  // Sum smallest terms first (from both tails inward) in long double.
  long double total = 0;
  std::vector<long double> weights(size);
  for (size_t i = 0; i < size; ++i) {
    weights[i] = std::exp(-std::pow(static_cast<long double>(lo_ + static_cast<int64_t>(i)) -
                                        params_.center, 2) /
                          (2.0L * params_.sigma * params_.sigma));
  }
  std::vector<long double> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  for (long double w : sorted) total += w;

  cdf_.resize(size);
  long double running = 0;
  for (size_t i = 0; i < size; ++i) {
    pmf_[i] = static_cast<double>(weights[i] / total);
    running += weights[i] / total;
    cdf_[i] = static_cast<double>(running);
  }
  cdf_.back() = 1.0;
}

double DiscreteGaussian::Pmf(int64_t k) const {
  if (k < lo_ || k > support_max()) return 0.0;
  return pmf_[static_cast<size_t>(k - lo_)];
}

int64_t DiscreteGaussian::Sample(SeededRng& rng) const {
  double u = rng.UniformUnit();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return lo_ + static_cast<int64_t>(it - cdf_.begin());
}

ZqElement DiscreteGaussian::SampleZq(const Modulus& q, SeededRng& rng) const {
  if (params_.center != 0.0) {
    throw Error(ErrorCode::kInvalidParams, "folding to F_q requires center 0");
  }
  return ZqElement::FromSigned(Sample(rng), q);
}

namespace {

// Table for the most recent parameters, rebuilt on change.
const DiscreteGaussian& CachedSampler(const GaussianParams& p) {
  thread_local std::optional<DiscreteGaussian> cached;
  if (!cached || cached->params().sigma != p.sigma || cached->params().center != p.center ||
      cached->params().tail_cut != p.tail_cut) {
    cached.emplace(p);
  }
  return *cached;
}

}  // namespace

double PmfInt(int64_t k, const GaussianParams& p) { return CachedSampler(p).Pmf(k); }

int64_t SampleInt(const GaussianParams& p, SeededRng& rng) { return CachedSampler(p).Sample(rng); }

ZqElement FoldToZq(const GaussianParams& p, const Modulus& q, SeededRng& rng) {
  return CachedSampler(p).SampleZq(q, rng);
}

EllipticGaussianParams EllipticGaussianParams::FromAlpha(double alpha,
                                                         std::vector<double> diag) {
  EllipticGaussianParams p;
  p.bound = alpha * std::pow(static_cast<double>(diag.size()), 0.25);
  p.diag = std::move(diag);
  return p;
}

std::vector<ZqElement> SampleErrorVector(const EllipticGaussianParams& p,
                                         const Modulus& q, SeededRng& rng) {
  for (size_t i = 0; i < p.diag.size(); ++i) {
    if (!(p.diag[i] > 0) || p.diag[i] > p.bound) {
      throw Error(ErrorCode::kInvalidParams,
                  "diagonal entry " + std::to_string(i) + " outside (0, bound]");
    }
  }
  thread_local std::map<std::pair<double, double>, DiscreteGaussian> samplers;
  if (samplers.size() > 256) samplers.clear();
  std::vector<ZqElement> out;
  out.reserve(p.diag.size());
  for (double d : p.diag) {
    const std::pair<double, double> key{d, p.tail_cut};
    auto it = samplers.find(key);
    if (it == samplers.end()) {
      it = samplers.emplace(key, DiscreteGaussian({d, 0.0, p.tail_cut})).first;
    }
    out.push_back(it->second.SampleZq(q, rng));
  }
  return out;
}

}  // namespace latticelab
