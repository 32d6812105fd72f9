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

#include "pdp_ridge/theory_bounds.h"

#include <cmath>

#include "Eigen/Eigenvalues"
#include "absl/strings/str_format.h"
#include "pdp_ridge/errors.h"

namespace pdp_ridge {

absl::Status AccuracyBoundInput::Validate() const {
  auto non_negative = [](double v) { return v >= 0.0 && std::isfinite(v); };
  if (!non_negative(theta_star_norm) || !non_negative(lambda_min_gram) ||
      !non_negative(sigma) || !non_negative(weight_norm)) {
    return absl::InvalidArgumentError(
        "theta_star_norm, lambda_min_gram, sigma and weight_norm must be "
        "finite and non-negative");
  }
  if (!(lambda > 0.0) || !(eta > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "lambda and eta must be positive (lambda=%g, eta=%g)", lambda, eta));
  }
  if (dimension < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension must be >= 1, got %d", dimension));
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("delta must lie in (0, 1), got %g", delta));
  }
  return absl::OkStatus();
}

absl::StatusOr<AccuracyBoundTerms> AccuracyBoundBreakdown(
    const AccuracyBoundInput& input) {
  PDP_RETURN_IF_ERROR(input.Validate());
  const double d = input.dimension;
  const double tail = std::sqrt(2.0 * d / input.delta);
  AccuracyBoundTerms terms;
  terms.bias = input.theta_star_norm /
               (1.0 + input.lambda_min_gram / input.lambda);
  terms.privacy = (d + tail) / input.eta;
  terms.label_noise = input.sigma / input.lambda * tail * input.weight_norm;
  terms.total = terms.bias + terms.privacy + terms.label_noise;
  return terms;
}

absl::StatusOr<double> AccuracyBound(const AccuracyBoundInput& input) {
  PDP_ASSIGN_OR_RETURN(AccuracyBoundTerms terms,
                       AccuracyBoundBreakdown(input));
  return terms.total;
}

absl::StatusOr<double> MinGramEigenvalue(const Dataset& data,
                                         const WeightVector& weights) {
  PDP_ASSIGN_OR_RETURN(Eigen::MatrixXd gram, WeightedGram(data, weights));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    return MakeError(ErrorKind::kNumericalFailure,
                     "symmetric eigensolver did not converge");
  }
  const double smallest = solver.eigenvalues()[0];
  if (smallest < -kGramEigenvalueClampTolerance) {
    return MakeError(
        ErrorKind::kNumericalFailure,
        absl::StrFormat("Gram matrix has eigenvalue %g < 0", smallest));
  }
  return smallest < 0.0 ? 0.0 : smallest;
}

}  // namespace pdp_ridge
