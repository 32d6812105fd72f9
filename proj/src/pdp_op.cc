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

#include "pdp_ridge/pdp_op.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "pdp_ridge/errors.h"
#include "pdp_ridge/noise.h"

namespace pdp_ridge {

absl::StatusOr<PrivacyProfile> PrivacyProfile::Create(
    std::vector<double> epsilons) {
  if (epsilons.empty()) {
    return MakeError(ErrorKind::kInvalidBudget, "empty privacy profile");
  }
  for (size_t i = 0; i < epsilons.size(); ++i) {
    const double eps = epsilons[i];
    if (!(eps > 0.0)) {
      return MakeError(
          ErrorKind::kInvalidBudget,
          absl::StrFormat("epsilon at row %d is %g; must be > 0", i, eps));
    }
    if (!(eps <= kMaxEpsilon)) {
      return MakeError(
          ErrorKind::kInvalidBudget,
          absl::StrFormat("epsilon at row %d is %g; budgets above %g are "
                          "rejected",
                          i, eps, kMaxEpsilon));
    }
  }
  return PrivacyProfile(std::move(epsilons));
}

absl::StatusOr<PrivacyProfile> PrivacyProfile::Constant(int n,
                                                        double epsilon) {
  if (n < 1) {
    return MakeError(ErrorKind::kInvalidBudget, "empty privacy profile");
  }
  return Create(std::vector<double>(n, epsilon));
}

double PrivacyProfile::Sum() const {
  long double sum = 0.0L;
  for (double eps : epsilons_) sum += eps;
  return static_cast<double>(sum);
}

double PrivacyProfile::Min() const {
  return *std::min_element(epsilons_.begin(), epsilons_.end());
}

double PrivacyProfile::Max() const {
  return *std::max_element(epsilons_.begin(), epsilons_.end());
}

double PrivacyProfile::Mean() const { return Sum() / size(); }

absl::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kUnassumed:
      return "unassumed";
    case Regime::kBoundedTheta:
      return "bounded-theta";
  }
  return "unknown";
}

double BLambda(double lambda, int dimension) {
  return std::min(1.0 / std::sqrt(lambda),
                  std::sqrt(static_cast<double>(dimension)) / lambda);
}

double NoiseRate(double lambda, int dimension, double b, double epsilon_sum) {
  const double sqrt_d = std::sqrt(static_cast<double>(dimension));
  return lambda / (2.0 * sqrt_d * (1.0 + sqrt_d * b)) * epsilon_sum;
}

absl::StatusOr<Calibration> Calibrate(const PrivacyProfile& profile,
                                      double lambda, int dimension,
                                      std::optional<double> theta_bound) {
  RidgeConfig config{lambda, dimension, theta_bound};
  PDP_RETURN_IF_ERROR(config.Validate());

  const double epsilon_sum = profile.Sum();
  Eigen::VectorXd w(profile.size());
  for (int i = 0; i < profile.size(); ++i) w[i] = profile[i] / epsilon_sum;
  PDP_ASSIGN_OR_RETURN(WeightVector weights, WeightVector::Create(w));

  const double unassumed_bound = BLambda(lambda, dimension);
  Calibration calibration{std::move(weights), 0.0, Regime::kUnassumed,
                          unassumed_bound, epsilon_sum, std::nullopt};
  if (theta_bound.has_value()) {
    calibration.regime = Regime::kBoundedTheta;
    calibration.b_lambda = *theta_bound;
    if (*theta_bound > unassumed_bound) {
      calibration.warning = absl::StrFormat(
          "theta bound %g exceeds B(lambda) = %g; the bounded-theta "
          "calibration adds more noise than the unassumed one",
          *theta_bound, unassumed_bound);
    }
  }
  calibration.eta =
      NoiseRate(lambda, dimension, calibration.b_lambda, epsilon_sum);
  return calibration;
}

double SensitivityBound(double weight, double lambda, int dimension,
                        double b) {
  const double sqrt_d = std::sqrt(static_cast<double>(dimension));
  return 2.0 * sqrt_d * weight * (sqrt_d * b + 1.0) / lambda;
}

absl::StatusOr<PrivateModel> FitCalibrated(const Dataset& data,
                                           Calibration calibration,
                                           double lambda, Rng& rng) {
  const int d = data.dimension();
  RidgeConfig config{lambda, d, std::nullopt};
  if (calibration.regime == Regime::kBoundedTheta) {
    config.theta_bound = calibration.b_lambda;
  }
  PDP_ASSIGN_OR_RETURN(
      Eigen::VectorXd theta_bar,
      SolveWeightedRidge(data, calibration.weights, config));
  // Without a norm bound the solution already satisfies norm <= B(lambda).
  assert(calibration.regime != Regime::kUnassumed ||
         theta_bar.norm() <= calibration.b_lambda * (1.0 + 1e-9) + 1e-9);

  PDP_ASSIGN_OR_RETURN(NoiseParams noise,
                       NoiseParams::Create(calibration.eta, d));
  Eigen::VectorXd theta_hat = theta_bar + SampleNoise(noise, rng);
  return PrivateModel(std::move(theta_hat), std::move(theta_bar),
                      std::move(calibration), lambda);
}

absl::StatusOr<PrivateModel> Fit(const Dataset& data,
                                 const PrivacyProfile& profile, double lambda,
                                 std::optional<double> theta_bound, Rng& rng) {
  if (profile.size() != data.num_points()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("%d budgets for %d data points",
                                     profile.size(), data.num_points()));
  }
  PDP_ASSIGN_OR_RETURN(
      Calibration calibration,
      Calibrate(profile, lambda, data.dimension(), theta_bound));
  return FitCalibrated(data, std::move(calibration), lambda, rng);
}

ModelRecord ToRecord(const PrivateModel& model, absl::string_view method) {
  const Calibration& c = model.calibration();
  return ModelRecord{std::string(method), c.regime, c.weights.size(),
                     model.lambda(),      c.eta,    c.b_lambda,
                     c.epsilon_sum,       model.theta_hat()};
}

std::string SerializeModelRecord(const ModelRecord& record) {
  std::string out;
  absl::StrAppend(&out, "method=", record.method, "\n");
  absl::StrAppend(&out, "regime=", RegimeName(record.regime), "\n");
  absl::StrAppend(&out, "dimension=", record.theta_hat.size(), "\n");
  absl::StrAppend(&out, "num_points=", record.num_points, "\n");
  absl::StrAppend(&out, absl::StrFormat("lambda=%.17g\n", record.lambda));
  absl::StrAppend(&out, absl::StrFormat("eta=%.17g\n", record.eta));
  absl::StrAppend(&out, absl::StrFormat("b_lambda=%.17g\n", record.b_lambda));
  absl::StrAppend(&out,
                  absl::StrFormat("epsilon_sum=%.17g\n", record.epsilon_sum));
  for (Eigen::Index k = 0; k < record.theta_hat.size(); ++k) {
    absl::StrAppend(&out, absl::StrFormat("theta_hat.%d=%.17g\n", k,
                                          record.theta_hat[k]));
  }
  return out;
}

absl::StatusOr<ModelRecord> ParseModelRecord(absl::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    std::pair<absl::string_view, absl::string_view> kv =
        absl::StrSplit(line, absl::MaxSplits('=', 1));
    fields[std::string(kv.first)] = std::string(kv.second);
  }
  auto get = [&](absl::string_view key) -> absl::StatusOr<std::string> {
    auto it = fields.find(key);
    if (it == fields.end()) {
      return absl::InvalidArgumentError(
          absl::StrCat("model record is missing key '", key, "'"));
    }
    return it->second;
  };
  auto get_double = [&](absl::string_view key) -> absl::StatusOr<double> {
    PDP_ASSIGN_OR_RETURN(std::string raw, get(key));
    double value;
    if (!absl::SimpleAtod(raw, &value)) {
      return absl::InvalidArgumentError(
          absl::StrCat("model record key '", key, "' is not a number"));
    }
    return value;
  };

  ModelRecord record;
  PDP_ASSIGN_OR_RETURN(record.method, get("method"));
  PDP_ASSIGN_OR_RETURN(std::string regime, get("regime"));
  if (regime == RegimeName(Regime::kUnassumed)) {
    record.regime = Regime::kUnassumed;
  } else if (regime == RegimeName(Regime::kBoundedTheta)) {
    record.regime = Regime::kBoundedTheta;
  } else {
    return absl::InvalidArgumentError(
        absl::StrCat("unknown regime '", regime, "'"));
  }
  PDP_ASSIGN_OR_RETURN(double dimension, get_double("dimension"));
  PDP_ASSIGN_OR_RETURN(double num_points, get_double("num_points"));
  record.num_points = static_cast<int>(num_points);
  PDP_ASSIGN_OR_RETURN(record.lambda, get_double("lambda"));
  PDP_ASSIGN_OR_RETURN(record.eta, get_double("eta"));
  PDP_ASSIGN_OR_RETURN(record.b_lambda, get_double("b_lambda"));
  PDP_ASSIGN_OR_RETURN(record.epsilon_sum, get_double("epsilon_sum"));
  if (dimension < 1) {
    return absl::InvalidArgumentError("model record dimension must be >= 1");
  }
  record.theta_hat.resize(static_cast<int>(dimension));
  for (int k = 0; k < record.theta_hat.size(); ++k) {
    PDP_ASSIGN_OR_RETURN(record.theta_hat[k],
                         get_double(absl::StrCat("theta_hat.", k)));
  }
  return record;
}

}  // namespace pdp_ridge
