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

#include "pdp_ridge/ridge.h"

#include <cmath>

#include "Eigen/Cholesky"
#include "absl/strings/str_format.h"
#include "pdp_ridge/errors.h"

namespace pdp_ridge {
namespace {

absl::Status CheckWeights(const Dataset& data, const WeightVector& weights) {
  if (weights.size() != data.num_points()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("%d weights for %d data points",
                                     weights.size(), data.num_points()));
  }
  return absl::OkStatus();
}

absl::Status CheckTheta(const Dataset& data, const Eigen::VectorXd& theta) {
  if (theta.size() != data.dimension()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("theta has %d entries, data has d = %d",
                                     theta.size(), data.dimension()));
  }
  return absl::OkStatus();
}

// sum_i w_i y_i x_i, accumulated in long double.
Eigen::VectorXd WeightedMoment(const Dataset& data,
                               const WeightVector& weights) {
  const int d = data.dimension();
  Eigen::Matrix<long double, Eigen::Dynamic, 1> acc =
      Eigen::Matrix<long double, Eigen::Dynamic, 1>::Zero(d);
  for (int i = 0; i < data.num_points(); ++i) {
    const long double scale =
        static_cast<long double>(weights[i]) * data.labels()[i];
    for (int k = 0; k < d; ++k) acc[k] += scale * data.features()(i, k);
  }
  return acc.cast<double>();
}

}  // namespace

absl::StatusOr<Dataset> Dataset::Create(Eigen::MatrixXd features,
                                        Eigen::VectorXd labels) {
  if (features.rows() < 1 || features.cols() < 1) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     "dataset needs at least one point and one feature");
  }
  if (labels.size() != features.rows()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("%d labels for %d feature rows",
                                     labels.size(), features.rows()));
  }
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    for (Eigen::Index k = 0; k < features.cols(); ++k) {
      const double v = features(i, k);
      if (!(v >= 0.0 && v <= 1.0)) {
        return MakeError(
            ErrorKind::kInvalidData,
            absl::StrFormat("feature at row %d, column %d is %g; must be in "
                            "[0, 1]",
                            i, k, v));
      }
    }
    const double y = labels[i];
    if (!(y >= -1.0 && y <= 1.0)) {
      return MakeError(
          ErrorKind::kInvalidData,
          absl::StrFormat("label at row %d is %g; must be in [-1, 1]", i, y));
    }
  }
  return Dataset(std::move(features), std::move(labels));
}

absl::StatusOr<Dataset> Dataset::Subset(std::span<const int> indices) const {
  if (indices.empty()) {
    return MakeError(ErrorKind::kDimensionMismatch, "empty subset");
  }
  Eigen::MatrixXd x(indices.size(), dimension());
  Eigen::VectorXd y(indices.size());
  for (size_t r = 0; r < indices.size(); ++r) {
    const int i = indices[r];
    if (i < 0 || i >= num_points()) {
      return MakeError(ErrorKind::kDimensionMismatch,
                       absl::StrFormat("subset index %d outside [0, %d)", i,
                                       num_points()));
    }
    x.row(r) = features_.row(i);
    y[r] = labels_[i];
  }
  return Dataset(std::move(x), std::move(y));
}

absl::StatusOr<Dataset> Dataset::WithReplacedPoint(int index,
                                                   const Eigen::VectorXd& x,
                                                   double y) const {
  if (index < 0 || index >= num_points() || x.size() != dimension()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     "replacement point does not fit the dataset");
  }
  Eigen::MatrixXd features = features_;
  Eigen::VectorXd labels = labels_;
  features.row(index) = x.transpose();
  labels[index] = y;
  return Create(std::move(features), std::move(labels));
}

absl::StatusOr<WeightVector> WeightVector::Create(Eigen::VectorXd weights) {
  if (weights.size() < 1) {
    return MakeError(ErrorKind::kDimensionMismatch, "empty weight vector");
  }
  long double sum = 0.0L;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) {
      return absl::InvalidArgumentError(
          absl::StrFormat("weight %d is %g; weights must be finite and >= 0",
                          i, weights[i]));
    }
    sum += weights[i];
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > kWeightSumTolerance) {
    return absl::InvalidArgumentError(
        absl::StrFormat("weights sum to %.17g, expected 1",
                        static_cast<double>(sum)));
  }
  return WeightVector(std::move(weights));
}

WeightVector WeightVector::Uniform(int n) {
  return WeightVector(Eigen::VectorXd::Constant(n, 1.0 / n));
}

absl::Status RidgeConfig::Validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda must be positive and finite, got %g", lambda));
  }
  if (dimension < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension must be >= 1, got %d", dimension));
  }
  if (theta_bound.has_value() && !(*theta_bound > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("theta bound must be positive, got %g", *theta_bound));
  }
  return absl::OkStatus();
}

absl::StatusOr<Eigen::MatrixXd> WeightedGram(const Dataset& data,
                                             const WeightVector& weights) {
  PDP_RETURN_IF_ERROR(CheckWeights(data, weights));
  const int d = data.dimension();
  Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> acc =
      Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>::Zero(d, d);
  const Eigen::MatrixXd& x = data.features();
  for (int i = 0; i < data.num_points(); ++i) {
    const long double w = weights[i];
    if (w == 0.0L) continue;
    for (int a = 0; a < d; ++a) {
      const long double wa = w * x(i, a);
      for (int b = a; b < d; ++b) acc(a, b) += wa * x(i, b);
    }
  }
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < a; ++b) acc(a, b) = acc(b, a);
  }
  return acc.cast<double>();
}

absl::StatusOr<Eigen::VectorXd> SolveWeightedRidge(
    const Dataset& data, const WeightVector& weights,
    const RidgeConfig& config) {
  PDP_RETURN_IF_ERROR(config.Validate());
  if (config.dimension != data.dimension()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("config dimension %d, data dimension %d",
                                     config.dimension, data.dimension()));
  }
  PDP_ASSIGN_OR_RETURN(Eigen::MatrixXd system, WeightedGram(data, weights));
  system.diagonal().array() += config.lambda;
  const Eigen::VectorXd rhs = WeightedMoment(data, weights);

  Eigen::LLT<Eigen::MatrixXd> cholesky(system);
  if (cholesky.info() != Eigen::Success) {
    return MakeError(ErrorKind::kNumericalFailure,
                     "Cholesky factorization of the ridge system failed");
  }
  Eigen::VectorXd theta = cholesky.solve(rhs);
  if (!theta.allFinite()) {
    return MakeError(ErrorKind::kNumericalFailure,
                     "ridge solve produced non-finite coefficients");
  }
  return theta;
}

absl::StatusOr<double> WeightedRidgeLoss(const Dataset& data,
                                         const WeightVector& weights,
                                         const Eigen::VectorXd& theta,
                                         double lambda) {
  PDP_RETURN_IF_ERROR(CheckWeights(data, weights));
  PDP_RETURN_IF_ERROR(CheckTheta(data, theta));
  const Eigen::VectorXd residual = data.labels() - data.features() * theta;
  return weights.values().dot(residual.cwiseAbs2()) +
         lambda * theta.squaredNorm();
}

absl::StatusOr<Eigen::VectorXd> WeightedRidgeGradient(
    const Dataset& data, const WeightVector& weights,
    const Eigen::VectorXd& theta, double lambda) {
  PDP_RETURN_IF_ERROR(CheckWeights(data, weights));
  PDP_RETURN_IF_ERROR(CheckTheta(data, theta));
  const Eigen::VectorXd residual = data.labels() - data.features() * theta;
  return -2.0 * data.features().transpose() *
             weights.values().cwiseProduct(residual) +
         2.0 * lambda * theta;
}

}  // namespace pdp_ridge
