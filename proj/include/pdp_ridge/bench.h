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

#ifndef PDP_RIDGE_BENCH_H_
#define PDP_RIDGE_BENCH_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pdp_ridge/data.h"
#include "pdp_ridge/ridge.h"

namespace pdp_ridge {

enum class Method { kPdpOp, kNonPersonalized, kJorgensenMax, kJorgensenMean };

// "pdp-op", "non-personalized", "jorgensen-max", "jorgensen-mean".
absl::string_view MethodName(Method method);
// PlanInvalid (listing the valid names) for anything else.
absl::StatusOr<Method> ParseMethod(absl::string_view name);
const std::vector<Method>& AllMethods();

enum class SweepParameter { kLambda, kEpsC, kEpsM, kFc, kTrainFraction };

// "lambda", "eps_c", "eps_m", "f_c", "train_fraction".
absl::string_view SweepParameterName(SweepParameter parameter);
absl::StatusOr<SweepParameter> ParseSweepParameter(absl::string_view name);

struct SyntheticSource {
  int dimension = 30;
  int num_points = 100;  // training points
  double sigma = 0.0;
  int test_size = 1000;
};

struct MedicalCostSource {
  std::string path;
  double test_fraction = 0.2;
  ScalingMode scaling = ScalingMode::kTrainOnly;
};

struct ExperimentPlan {
  std::variant<SyntheticSource, MedicalCostSource> dataset = SyntheticSource{};
  // The seed field is ignored; profiles are reseeded per trial.
  PrivacySegmentSpec privacy;
  SweepParameter sweep_parameter = SweepParameter::kLambda;
  std::vector<double> sweep_values;
  // Values used for every parameter that is not being swept.
  double lambda = 100.0;
  double train_fraction = 1.0;
  std::optional<double> theta_bound;
  std::vector<Method> methods = AllMethods();
  int trials = 1000;
  uint64_t master_seed = 0;
  // false: one dataset (and split) for the whole run, fresh noise and profile
  // per trial. true: the dataset is redrawn (synthetic) or resplit (Medical
  // Cost) for every trial too.
  bool resample_data = false;
  int threads = 1;

  absl::Status Validate() const;
};

// Parses the `key = value` plan format ('#' starts a comment):
//
//   dataset = synthetic | medical_cost
//   synthetic.d, synthetic.n, synthetic.sigma, synthetic.test_size
//   medical_cost.path, medical_cost.test_fraction,
//   medical_cost.scaling = train | global
//   privacy.f_c, privacy.f_m, privacy.eps_c, privacy.eps_m, privacy.eps_l
//   sweep.parameter = lambda | eps_c | eps_m | f_c | train_fraction
//   sweep.values = v1, v2, ...
//   lambda, train_fraction, theta_bound
//   methods = pdp-op, non-personalized, jorgensen-max, jorgensen-mean
//   trials, seed, resample_data = true | false, threads
//
// Unknown keys, bad values and invalid plans are PlanInvalid errors.
absl::StatusOr<ExperimentPlan> ParsePlan(absl::string_view text);

// (1 / N_test) sum_i (y_i - x_i^T theta)^2.
absl::StatusOr<double> UnregularizedTestLoss(const Eigen::VectorXd& theta,
                                             const Dataset& test);

// UnregularizedTestLoss + lambda ||theta||^2, lambda >= 0.
absl::StatusOr<double> RegularizedTestLoss(const Eigen::VectorXd& theta,
                                           const Dataset& test, double lambda);

struct LossSummary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
};

struct CellResult {
  Method method;
  LossSummary unregularized;
  LossSummary regularized;
  int trials = 0;     // trials that produced a model
  int discarded = 0;  // Jorgensen trials with an empty subsample
};

struct SweepRow {
  double value;
  std::vector<CellResult> cells;  // in report.methods order
};

struct ExperimentReport {
  SweepParameter parameter = SweepParameter::kLambda;
  std::vector<Method> methods;
  std::vector<SweepRow> rows;
};

// Seed derivation (all via DeriveSeed(master_seed, path)):
//   dataset / split        {1}            or {1, sweep, trial} when resampling
//   privacy profile        {2, sweep, trial}  (shared across methods)
//   mechanism randomness   {3, sweep, method, trial}
// Trials may run on `threads` workers; results are reduced in trial order so
// the report does not depend on the thread count.
using ProgressCallback = std::function<void(absl::string_view)>;
absl::StatusOr<ExperimentReport> RunExperiment(
    const ExperimentPlan& plan, const ProgressCallback& progress = nullptr);

enum class ReportFormat { kCsv, kMarkdown };

// One row per sweep value. Columns: the swept parameter, then (mean, std)
// per method for the unregularized loss, the same for the regularized loss,
// and in CSV only, per-method trial and discard counts. CSV values carry 12
// significant digits.
std::string EmitReport(const ExperimentReport& report, ReportFormat format);

// Inverse of the CSV form of EmitReport.
absl::StatusOr<ExperimentReport> ParseReportCsv(absl::string_view csv);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_BENCH_H_
