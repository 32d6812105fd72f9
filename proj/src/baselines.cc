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

#include "pdp_ridge/baselines.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "pdp_ridge/errors.h"

namespace pdp_ridge {
namespace {

absl::Status CheckProfileSize(const Dataset& data,
                              const PrivacyProfile& profile) {
  if (profile.size() != data.num_points()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("%d budgets for %d data points",
                                     profile.size(), data.num_points()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<PrivateModel> FitNonPersonalized(
    const Dataset& data, const PrivacyProfile& profile, double lambda,
    std::optional<double> theta_bound, Rng& rng) {
  PDP_RETURN_IF_ERROR(CheckProfileSize(data, profile));
  PDP_ASSIGN_OR_RETURN(PrivacyProfile uniform,
                       PrivacyProfile::Constant(profile.size(), profile.Min()));
  return Fit(data, uniform, lambda, theta_bound, rng);
}

absl::StatusOr<JorgensenConfig> JorgensenConfig::Explicit(double threshold) {
  if (!(threshold > 0.0) || !std::isfinite(threshold)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("explicit threshold must be positive, got %g",
                        threshold));
  }
  return JorgensenConfig(Rule::kExplicit, threshold);
}

double JorgensenThreshold(const PrivacyProfile& profile,
                          const JorgensenConfig& config) {
  switch (config.rule()) {
    case JorgensenConfig::Rule::kMaxEpsilon:
      return profile.Max();
    case JorgensenConfig::Rule::kMeanEpsilon:
      return profile.Mean();
    case JorgensenConfig::Rule::kExplicit:
      return config.explicit_threshold();
  }
  return config.explicit_threshold();
}

double JorgensenInclusionProbability(double epsilon, double threshold) {
  if (epsilon >= threshold) return 1.0;
  return std::expm1(epsilon) / std::expm1(threshold);
}

SubsampleOutcome JorgensenSubsample(const PrivacyProfile& profile,
                                    double threshold, Rng& rng) {
  SubsampleOutcome outcome;
  outcome.threshold = threshold;
  outcome.inclusion_probs.reserve(profile.size());
  for (int i = 0; i < profile.size(); ++i) {
    const double p = JorgensenInclusionProbability(profile[i], threshold);
    outcome.inclusion_probs.push_back(p);
    if (p >= 1.0 || rng.Uniform() < p) outcome.kept_indices.push_back(i);
  }
  return outcome;
}

absl::StatusOr<PrivateModel> FitJorgensen(const Dataset& data,
                                          const PrivacyProfile& profile,
                                          double lambda,
                                          const JorgensenConfig& config,
                                          std::optional<double> theta_bound,
                                          Rng& rng) {
  PDP_RETURN_IF_ERROR(CheckProfileSize(data, profile));
  const double threshold = JorgensenThreshold(profile, config);
  SubsampleOutcome sample = JorgensenSubsample(profile, threshold, rng);
  if (sample.kept_indices.empty()) {
    return MakeError(
        ErrorKind::kEmptySubsample,
        absl::StrFormat("no point kept at threshold %g out of %d points",
                        threshold, profile.size()));
  }
  PDP_ASSIGN_OR_RETURN(Dataset kept, data.Subset(sample.kept_indices));
  const int m = static_cast<int>(sample.kept_indices.size());
  PDP_ASSIGN_OR_RETURN(PrivacyProfile inner,
                       PrivacyProfile::Constant(m, threshold));
  return Fit(kept, inner, lambda, theta_bound, rng);
}

}  // namespace pdp_ridge
