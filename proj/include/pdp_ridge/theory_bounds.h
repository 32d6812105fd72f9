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

#ifndef PDP_RIDGE_THEORY_BOUNDS_H_
#define PDP_RIDGE_THEORY_BOUNDS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "pdp_ridge/ridge.h"

namespace pdp_ridge {

// Inputs of the high-probability accuracy bound on ||theta* - theta_hat||.
// The bound is only claimed for eta produced by Calibrate(); any positive eta
// is accepted for evaluation.
struct AccuracyBoundInput {
  double theta_star_norm = 0.0;
  // Smallest eigenvalue of sum_i w_i x_i x_i^T.
  double lambda_min_gram = 0.0;
  double lambda = 1.0;
  double eta = 1.0;
  int dimension = 1;
  double delta = 0.5;  // failure probability, in (0, 1)
  double sigma = 0.0;  // label-noise standard deviation
  double weight_norm = 0.0;  // ||w||_2

  absl::Status Validate() const;
};

struct AccuracyBoundTerms {
  double bias;         // ||theta*|| / (1 + lambda_min_gram / lambda)
  double privacy;      // (d + sqrt(2d / delta)) / eta
  double label_noise;  // (sigma / lambda) sqrt(2d / delta) ||w||
  double total;
};

absl::StatusOr<AccuracyBoundTerms> AccuracyBoundBreakdown(
    const AccuracyBoundInput& input);

// Sum of the three terms above.
absl::StatusOr<double> AccuracyBound(const AccuracyBoundInput& input);

// Eigenvalues within this distance below zero are rounding and read as 0.
inline constexpr double kGramEigenvalueClampTolerance = 1e-10;

absl::StatusOr<double> MinGramEigenvalue(const Dataset& data,
                                         const WeightVector& weights);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_THEORY_BOUNDS_H_
