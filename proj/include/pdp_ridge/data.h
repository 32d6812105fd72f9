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

#ifndef PDP_RIDGE_DATA_H_
#define PDP_RIDGE_DATA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "Eigen/Core"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "pdp_ridge/pdp_op.h"
#include "pdp_ridge/ridge.h"

namespace pdp_ridge {

// ---------------------------------------------------------------------------
// Synthetic linear data.
// ---------------------------------------------------------------------------

struct SyntheticSpec {
  int dimension = 1;
  int num_points = 1;
  // Gaussian label noise. Noisy labels are clamped back into [-1, 1].
  double sigma = 0.0;
  uint64_t seed = 0;

  absl::Status Validate() const;
};

struct SyntheticData {
  Dataset data;
  // Unit-norm direction; labels are x^T theta_star / sqrt(d) (+ noise), so
  // the regression coefficient is theta_star / sqrt(d).
  Eigen::VectorXd theta_star;
  int clamped_labels = 0;
};

// theta_star uniform on the unit sphere, features uniform on [0,1]^d. Draw
// order from Rng(seed): theta_star, then per point its d features followed
// by its noise variate (only when sigma > 0).
absl::StatusOr<SyntheticData> GenerateSynthetic(const SyntheticSpec& spec);

// ---------------------------------------------------------------------------
// Three-tier privacy profiles.
// ---------------------------------------------------------------------------

struct PrivacySegmentSpec {
  double f_c = 0.34;
  double f_m = 0.43;
  double eps_c = 0.01;
  double eps_m = 0.2;
  double eps_l = 1.0;
  uint64_t seed = 0;

  double f_l() const { return 1.0 - f_c - f_m; }
  absl::Status Validate() const;
};

enum class Segment { kConservative, kMedium, kLiberal };

struct SegmentedProfile {
  PrivacyProfile profile;
  std::vector<Segment> segments;  // aligned with profile
};

// floor(f_c n) conservatives with eps ~ U[eps_c, eps_m], floor(f_m n) mediums
// with eps ~ U[eps_m, eps_l], the remainder liberals at eps_l; the resulting
// list is then shuffled against the data indices.
absl::StatusOr<SegmentedProfile> AssignPrivacySegments(
    int n, const PrivacySegmentSpec& spec);

absl::StatusOr<PrivacyProfile> AssignPrivacyProfile(
    int n, const PrivacySegmentSpec& spec);

// ---------------------------------------------------------------------------
// Splits and the Medical Cost table.
// ---------------------------------------------------------------------------

struct LabeledSplit {
  Dataset train;
  Dataset test;
  std::optional<Eigen::VectorXd> theta_star;
  std::vector<int> train_indices;
  std::vector<int> test_indices;
};

// Uniformly random partition with round(test_fraction * n) test rows.
absl::StatusOr<LabeledSplit> TrainTestSplit(const Dataset& data,
                                            double test_fraction,
                                            uint64_t seed);

// Where the min-max statistics of the Medical Cost numeric columns and label
// come from. kTrainOnly clamps test values that fall outside [0, 1].
enum class ScalingMode { kTrainOnly, kGlobal };

// Reads the Medical Cost CSV (age,sex,bmi,children,smoker,region,charges).
// Feature layout: age, bmi, children (min-max scaled), then one-hot columns
// for sex, smoker and region with categories in sorted order, then a constant
// intercept column. The label is min-max scaled charges.
absl::StatusOr<LabeledSplit> LoadMedicalCost(
    const std::string& path, double test_fraction, uint64_t seed,
    ScalingMode scaling = ScalingMode::kTrainOnly);

// Same, from CSV text already in memory.
absl::StatusOr<LabeledSplit> ParseMedicalCost(
    absl::string_view csv, double test_fraction, uint64_t seed,
    ScalingMode scaling = ScalingMode::kTrainOnly);

// ---------------------------------------------------------------------------
// Canonical interchange files.
// ---------------------------------------------------------------------------

absl::StatusOr<std::string> ReadTextFile(const std::string& path);
absl::Status WriteTextFile(const std::string& path, absl::string_view text);

// Header f0,...,f{d-1},y then one row per point, values at 17 significant
// digits.
std::string DatasetToCsv(const Dataset& data);
absl::StatusOr<Dataset> DatasetFromCsv(absl::string_view csv);

// Single column `epsilon`, one row per data point.
std::string ProfileToCsv(const PrivacyProfile& profile);
absl::StatusOr<PrivacyProfile> ProfileFromCsv(absl::string_view csv);

// Single column `theta_star`.
std::string VectorToCsv(absl::string_view column, const Eigen::VectorXd& v);

}  // namespace pdp_ridge

#endif  // PDP_RIDGE_DATA_H_
