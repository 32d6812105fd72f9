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

#ifndef PDP_RIDGE_PDP_OP_H_
#define PDP_RIDGE_PDP_OP_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pdp_ridge/ridge.h"
#include "pdp_ridge/rng.h"

namespace pdp_ridge {

// Budgets above this are rejected as probable unit errors.
inline constexpr double kMaxEpsilon = 1e6;

// Per-point privacy budgets epsilon_i, each in (0, kMaxEpsilon].
class PrivacyProfile {
 public:
  static absl::StatusOr<PrivacyProfile> Create(std::vector<double> epsilons);
  static absl::StatusOr<PrivacyProfile> Constant(int n, double epsilon);

  int size() const { return static_cast<int>(epsilons_.size()); }
  std::span<const double> epsilons() const { return epsilons_; }
  double operator[](int i) const { return epsilons_[i]; }

  double Sum() const;
  double Min() const;
  double Max() const;
  double Mean() const;

 private:
  explicit PrivacyProfile(std::vector<double> epsilons)
      : epsilons_(std::move(epsilons)) {}

  std::vector<double> epsilons_;
};

// Which a-priori bound on ||theta_bar|| drives the noise calibration.
enum class Regime {
  kUnassumed,     // B(lambda) = min(1/sqrt(lambda), sqrt(d)/lambda)
  kBoundedTheta,  // user-supplied B bounding the unregularized minimizer
};

absl::string_view RegimeName(Regime regime);

struct Calibration {
  WeightVector weights;
  double eta;
  Regime regime;
  // The norm bound actually used: B(lambda) or the supplied B.
  double b_lambda;
  double epsilon_sum;
  // Set when a supplied bound exceeds B(lambda), so the bounded-theta noise
  // is larger than the unassumed calibration would give.
  std::optional<std::string> warning;
};

// min(1/sqrt(lambda), sqrt(d)/lambda).
double BLambda(double lambda, int dimension);

// lambda / (2 sqrt(d) (1 + sqrt(d) b)) * epsilon_sum. Shared by both regimes.
double NoiseRate(double lambda, int dimension, double b, double epsilon_sum);

// Weights w_i = eps_i / sum_j eps_j and the noise rate for the regime chosen
// by the presence of `theta_bound`.
absl::StatusOr<Calibration> Calibrate(const PrivacyProfile& profile,
                                      double lambda, int dimension,
                                      std::optional<double> theta_bound);

// Upper bound on ||theta_bar(D) - theta_bar(D')|| for datasets differing in
// point i: 2 sqrt(d) w_i (sqrt(d) b + 1) / lambda.
double SensitivityBound(double weight, double lambda, int dimension, double b);

class PrivateModel {
 public:
  PrivateModel(Eigen::VectorXd theta_hat, Eigen::VectorXd theta_bar,
               Calibration calibration, double lambda)
      : theta_hat_(std::move(theta_hat)),
        theta_bar_(std::move(theta_bar)),
        calibration_(std::move(calibration)),
        lambda_(lambda) {}

  // The releasable private estimate theta_bar + Z.
  const Eigen::VectorXd& theta_hat() const { return theta_hat_; }

  // The unperturbed estimate. NOT releasable: exposing it voids the privacy
  // guarantee. Kept for tests and diagnostics only and never serialized.
  const Eigen::VectorXd& non_releasable_theta_bar() const {
    return theta_bar_;
  }

  const Calibration& calibration() const { return calibration_; }
  double lambda() const { return lambda_; }

 private:
  Eigen::VectorXd theta_hat_;
  Eigen::VectorXd theta_bar_;
  Calibration calibration_;
  double lambda_;
};

// Weighted ridge with the calibration's weights, plus noise at its rate.
absl::StatusOr<PrivateModel> FitCalibrated(const Dataset& data,
                                           Calibration calibration,
                                           double lambda, Rng& rng);

// Personalized output perturbation: Calibrate() then FitCalibrated().
absl::StatusOr<PrivateModel> Fit(const Dataset& data,
                                 const PrivacyProfile& profile, double lambda,
                                 std::optional<double> theta_bound, Rng& rng);

// The releasable part of a fitted model as written to disk.
struct ModelRecord {
  std::string method;
  Regime regime = Regime::kUnassumed;
  int num_points = 0;
  double lambda = 0.0;
  double eta = 0.0;
  double b_lambda = 0.0;
  double epsilon_sum = 0.0;
  Eigen::VectorXd theta_hat;
};

ModelRecord ToRecord(const PrivateModel& model, absl::string_view method);

// Flat `key=value` lines, fixed key order, doubles at 17 significant digits.
// theta_hat entries are keyed theta_hat.0 ... theta_hat.<d-1>.
std::string SerializeModelRecord(const ModelRecord& record);
absl::StatusOr<ModelRecord> ParseModelRecord(absl::string_view text);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_PDP_OP_H_
