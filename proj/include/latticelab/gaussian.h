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
#ifndef LATTICELAB_GAUSSIAN_H_
#define LATTICELAB_GAUSSIAN_H_

#include <cstdint>
#include <vector>

#include "latticelab/rng.h"
#include "latticelab/zq.h"

namespace latticelab {

// Parameters of the discrete Gaussian D_{sigma,c} on Z. `sigma` is the width
// parameter in exp(-(x-c)^2 / (2 sigma^2)), not the standard deviation.
// Support is truncated to [c - tail_cut*sigma, c + tail_cut*sigma].
struct GaussianParams {
  double sigma = 1.0;
  double center = 0.0;
  double tail_cut = 12.0;

  // Throws InvalidParams unless sigma > 0 and tail_cut >= 6.
  void Validate() const;
};

// rho_{sigma,c}(x).
double Rho(double x, const GaussianParams& p);

// Inverse-CDF sampler over the precomputed truncated table.
class DiscreteGaussian {
 public:
  explicit DiscreteGaussian(const GaussianParams& params);

  const GaussianParams& params() const { return params_; }
  int64_t support_min() const { return lo_; }
  int64_t support_max() const { return lo_ + static_cast<int64_t>(pmf_.size()) - 1; }

  // rho(k) / S over the truncated support; 0 outside it.
  double Pmf(int64_t k) const;
  int64_t Sample(SeededRng& rng) const;
  // Sample reduced into [0, q). Requires center == 0.
  ZqElement SampleZq(const Modulus& q, SeededRng& rng) const;

 private:
  GaussianParams params_;
  int64_t lo_ = 0;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

double PmfInt(int64_t k, const GaussianParams& p);
int64_t SampleInt(const GaussianParams& p, SeededRng& rng);
// The folded distribution chi on F_q. Throws InvalidParams if center != 0.
ZqElement FoldToZq(const GaussianParams& p, const Modulus& q, SeededRng& rng);

// Per-coordinate (diagonal) Gaussian parameters, each bounded by `bound`.
struct EllipticGaussianParams {
  std::vector<double> diag;
  double bound = 0.0;
  double tail_cut = 12.0;

  // bound = alpha * n^{1/4}.
  static EllipticGaussianParams FromAlpha(double alpha, std::vector<double> diag);
};

// Coordinate i drawn by FoldToZq with parameter diag[i]. Throws
// InvalidParams if some diag[i] is non-positive or exceeds the bound.
std::vector<ZqElement> SampleErrorVector(const EllipticGaussianParams& p,
                                         const Modulus& q, SeededRng& rng);

}  // namespace latticelab

#endif  // LATTICELAB_GAUSSIAN_H_
