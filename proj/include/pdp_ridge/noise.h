//
// Copyright 2026 The PDP Ridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef PDP_RIDGE_NOISE_H_
#define PDP_RIDGE_NOISE_H_

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "pdp_ridge/rng.h"

namespace pdp_ridge {

// Parameters of the output-perturbation noise law with density proportional
// to exp(-eta ||b||_2) on R^d. Only constructible with eta > 0 and d >= 1.
class NoiseParams {
 public:
  static absl::StatusOr<NoiseParams> Create(double eta, int dimension);

  double eta() const { return eta_; }
  int dimension() const { return dimension_; }

 private:
  NoiseParams(double eta, int dimension) : eta_(eta), dimension_(dimension) {}

  double eta_;
  int dimension_;
};

// Gamma(shape, rate) draw by the Marsaglia-Tsang squeeze method. Requires
// shape >= 1 and rate > 0.
double SampleGamma(double shape, double rate, Rng& rng);

// ||Z||_2 ~ Gamma(d, eta): mean d / eta, variance d / eta^2.
double SampleRadius(const NoiseParams& params, Rng& rng);

// Uniform point on the unit sphere in R^d (normalized i.i.d. Gaussians).
// Requires d >= 1; for d = 1 the result is +1 or -1.
Eigen::VectorXd SampleUnitSphere(int dimension, Rng& rng);

// Z = R * Y with R from SampleRadius and Y from SampleUnitSphere, drawn in
// that order from `rng`.
Eigen::VectorXd SampleNoise(const NoiseParams& params, Rng& rng);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_NOISE_H_
