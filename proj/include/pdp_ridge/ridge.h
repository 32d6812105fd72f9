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

#ifndef PDP_RIDGE_RIDGE_H_
#define PDP_RIDGE_RIDGE_H_

#include <optional>
#include <span>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace pdp_ridge {

// Absolute tolerance on |sum(w) - 1| accepted by WeightVector.
inline constexpr double kWeightSumTolerance = 1e-9;

// A labelled regression sample: n rows of features in [0,1]^d with labels in
// [-1,1]. The privacy calibration downstream is only valid on this domain, so
// out-of-range values are rejected rather than clamped.
class Dataset {
 public:
  // Validates shapes (n >= 1, d >= 1, one label per row) and ranges.
  static absl::StatusOr<Dataset> Create(Eigen::MatrixXd features,
                                        Eigen::VectorXd labels);

  int num_points() const { return static_cast<int>(features_.rows()); }
  int dimension() const { return static_cast<int>(features_.cols()); }
  const Eigen::MatrixXd& features() const { return features_; }
  const Eigen::VectorXd& labels() const { return labels_; }

  // Rows selected by `indices`, in the given order. Indices must be valid.
  absl::StatusOr<Dataset> Subset(std::span<const int> indices) const;

  // Copy with row `index` replaced by (x, y); the i-neighbour of this dataset.
  absl::StatusOr<Dataset> WithReplacedPoint(int index,
                                            const Eigen::VectorXd& x,
                                            double y) const;

 private:
  Dataset(Eigen::MatrixXd features, Eigen::VectorXd labels)
      : features_(std::move(features)), labels_(std::move(labels)) {}

  Eigen::MatrixXd features_;
  Eigen::VectorXd labels_;
};

// Non-negative per-point weights summing to one.
class WeightVector {
 public:
  static absl::StatusOr<WeightVector> Create(Eigen::VectorXd weights);
  static WeightVector Uniform(int n);

  int size() const { return static_cast<int>(weights_.size()); }
  const Eigen::VectorXd& values() const { return weights_; }
  double operator[](int i) const { return weights_[i]; }

 private:
  explicit WeightVector(Eigen::VectorXd weights)
      : weights_(std::move(weights)) {}

  Eigen::VectorXd weights_;
};

struct RidgeConfig {
  double lambda = 1.0;
  int dimension = 1;
  // Known bound B on the norm of the unregularized minimizer, if any.
  std::optional<double> theta_bound;

  absl::Status Validate() const;
};

// sum_i w_i x_i x_i^T, accumulated in long double.
absl::StatusOr<Eigen::MatrixXd> WeightedGram(const Dataset& data,
                                             const WeightVector& weights);

// Minimizer of sum_i w_i (y_i - theta^T x_i)^2 + lambda ||theta||^2, obtained
// by a Cholesky solve of (sum_i w_i x_i x_i^T + lambda I) theta =
// sum_i w_i x_i y_i.
absl::StatusOr<Eigen::VectorXd> SolveWeightedRidge(const Dataset& data,
                                                   const WeightVector& weights,
                                                   const RidgeConfig& config);

absl::StatusOr<double> WeightedRidgeLoss(const Dataset& data,
                                         const WeightVector& weights,
                                         const Eigen::VectorXd& theta,
                                         double lambda);

// Gradient of WeightedRidgeLoss with respect to theta:
// -2 sum_i w_i x_i (y_i - theta^T x_i) + 2 lambda theta.
absl::StatusOr<Eigen::VectorXd> WeightedRidgeGradient(
    const Dataset& data, const WeightVector& weights,
    const Eigen::VectorXd& theta, double lambda);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_RIDGE_H_
