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

#include "pdp_ridge/noise.h"

#include <cassert>
#include <cmath>

#include "absl/strings/str_format.h"

namespace pdp_ridge {

absl::StatusOr<NoiseParams> NoiseParams::Create(double eta, int dimension) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("noise rate eta must be positive, got %g", eta));
  }
  if (dimension < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("noise dimension must be >= 1, got %d", dimension));
  }
  return NoiseParams(eta, dimension);
}

double SampleGamma(double shape, double rate, Rng& rng) {
  assert(shape >= 1.0 && rate > 0.0);
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double x = rng.StandardNormal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = rng.Uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
      return d * v / rate;
    }
  }
}

double SampleRadius(const NoiseParams& params, Rng& rng) {
  return SampleGamma(static_cast<double>(params.dimension()), params.eta(),
                     rng);
}

Eigen::VectorXd SampleUnitSphere(int dimension, Rng& rng) {
  assert(dimension >= 1);
  Eigen::VectorXd y(dimension);
  double norm = 0.0;
  // A zero vector has probability zero but would be undefined to normalize.
  while (norm == 0.0) {
    for (int k = 0; k < dimension; ++k) y[k] = rng.StandardNormal();
    norm = y.norm();
  }
  return y / norm;
}

Eigen::VectorXd SampleNoise(const NoiseParams& params, Rng& rng) {
  const double radius = SampleRadius(params, rng);
  return radius * SampleUnitSphere(params.dimension(), rng);
}

}  // namespace pdp_ridge
