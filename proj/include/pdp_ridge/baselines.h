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

#ifndef PDP_RIDGE_BASELINES_H_
#define PDP_RIDGE_BASELINES_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "pdp_ridge/pdp_op.h"
#include "pdp_ridge/ridge.h"
#include "pdp_ridge/rng.h"

namespace pdp_ridge {

// Output perturbation at the most stringent budget: every point is treated
// as having min_i eps_i, so weights are uniform and eta scales with
// n * min_i eps_i.
absl::StatusOr<PrivateModel> FitNonPersonalized(
    const Dataset& data, const PrivacyProfile& profile, double lambda,
    std::optional<double> theta_bound, Rng& rng);

// Threshold rule for the sample-then-privatize baseline.
class JorgensenConfig {
 public:
  enum class Rule { kMaxEpsilon, kMeanEpsilon, kExplicit };

  static JorgensenConfig MaxEpsilon() { return JorgensenConfig(Rule::kMaxEpsilon, 0.0); }
  static JorgensenConfig MeanEpsilon() { return JorgensenConfig(Rule::kMeanEpsilon, 0.0); }
  static absl::StatusOr<JorgensenConfig> Explicit(double threshold);

  Rule rule() const { return rule_; }
  double explicit_threshold() const { return threshold_; }

 private:
  JorgensenConfig(Rule rule, double threshold)
      : rule_(rule), threshold_(threshold) {}

  Rule rule_;
  double threshold_;
};

double JorgensenThreshold(const PrivacyProfile& profile,
                          const JorgensenConfig& config);

// min(1, (e^eps - 1) / (e^t - 1)); exactly 1 whenever eps >= t.
double JorgensenInclusionProbability(double epsilon, double threshold);

struct SubsampleOutcome {
  std::vector<int> kept_indices;  // ascending
  double threshold;
  std::vector<double> inclusion_probs;
};

// One independent Bernoulli draw per point, in index order. Points whose
// probability is 1 consume no randomness.
SubsampleOutcome JorgensenSubsample(const PrivacyProfile& profile,
                                    double threshold, Rng& rng);

// Subsample, then run uniform-budget output perturbation on the m kept points
// with weights 1/m and epsilon_sum = m * t. Fails with EmptySubsample when no
// point is kept.
absl::StatusOr<PrivateModel> FitJorgensen(const Dataset& data,
                                          const PrivacyProfile& profile,
                                          double lambda,
                                          const JorgensenConfig& config,
                                          std::optional<double> theta_bound,
                                          Rng& rng);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_BASELINES_H_
