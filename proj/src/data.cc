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

#include "pdp_ridge/data.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "pdp_ridge/errors.h"
#include "pdp_ridge/noise.h"
#include "pdp_ridge/rng.h"

namespace pdp_ridge {
namespace {

// floor(f * n), tolerant of products like 0.29 * 100 = 28.999999999999996.
int SegmentCount(double fraction, int n) {
  return static_cast<int>(std::floor(fraction * n + 1e-9));
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Comma-separated, header row required, no quoting. Blank lines are skipped.
absl::StatusOr<CsvTable> ParseCsv(absl::string_view text) {
  CsvTable table;
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    std::vector<std::string> cells;
    for (absl::string_view cell : absl::StrSplit(line, ',')) {
      cells.emplace_back(absl::StripAsciiWhitespace(cell));
    }
    if (table.header.empty()) {
      table.header = std::move(cells);
      continue;
    }
    if (cells.size() != table.header.size()) {
      return MakeError(
          ErrorKind::kMalformedCsv,
          absl::StrFormat("row %d (line %d) has %d fields, header has %d",
                          table.rows.size() + 1, line_number, cells.size(),
                          table.header.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (table.header.empty()) {
    return MakeError(ErrorKind::kMalformedCsv, "missing header row");
  }
  return table;
}

absl::StatusOr<double> ParseNumber(const CsvTable& table, size_t row,
                                   size_t column) {
  double value;
  if (!absl::SimpleAtod(table.rows[row][column], &value) ||
      !std::isfinite(value)) {
    return MakeError(ErrorKind::kMalformedCsv,
                     absl::StrFormat("row %d, column '%s': '%s' is not a "
                                     "finite number",
                                     row + 1, table.header[column],
                                     table.rows[row][column]));
  }
  return value;
}

absl::StatusOr<size_t> FindColumn(const CsvTable& table,
                                  absl::string_view name) {
  auto it = std::find(table.header.begin(), table.header.end(), name);
  if (it == table.header.end()) {
    return MakeError(ErrorKind::kMalformedCsv,
                     absl::StrCat("missing column '", name, "'"));
  }
  return static_cast<size_t>(it - table.header.begin());
}

absl::StatusOr<std::vector<int>> PartitionIndices(int n, double test_fraction,
                                                  uint64_t seed,
                                                  int* num_test) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    return MakeError(ErrorKind::kEmptySplit,
                     absl::StrFormat("test fraction must lie in (0, 1), got %g",
                                     test_fraction));
  }
  *num_test = static_cast<int>(std::lround(test_fraction * n));
  if (*num_test < 1 || *num_test > n - 1) {
    return MakeError(
        ErrorKind::kEmptySplit,
        absl::StrFormat("test fraction %g of %d rows leaves an empty side",
                        test_fraction, n));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  Shuffle(order, rng);
  return order;
}

}  // namespace

absl::Status SyntheticSpec::Validate() const {
  if (dimension < 1 || num_points < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("synthetic data needs d >= 1 and n >= 1 (d=%d, n=%d)",
                        dimension, num_points));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sigma must be finite and >= 0, got %g", sigma));
  }
  return absl::OkStatus();
}

absl::StatusOr<SyntheticData> GenerateSynthetic(const SyntheticSpec& spec) {
  PDP_RETURN_IF_ERROR(spec.Validate());
  Rng rng(spec.seed);
  const int d = spec.dimension;
  const int n = spec.num_points;
  Eigen::VectorXd theta_star = SampleUnitSphere(d, rng);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));

  Eigen::MatrixXd x(n, d);
  Eigen::VectorXd y(n);
  int clamped = 0;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) x(i, k) = rng.Uniform();
    double label = x.row(i).dot(theta_star) * scale;
    if (spec.sigma > 0.0) {
      label += spec.sigma * rng.StandardNormal();
      if (label > 1.0 || label < -1.0) {
        label = std::clamp(label, -1.0, 1.0);
        ++clamped;
      }
    }
    y[i] = label;
  }
  PDP_ASSIGN_OR_RETURN(Dataset data, Dataset::Create(std::move(x), std::move(y)));
  return SyntheticData{std::move(data), std::move(theta_star), clamped};
}

absl::Status PrivacySegmentSpec::Validate() const {
  if (!(f_c >= 0.0 && f_c <= 1.0) || !(f_m >= 0.0 && f_m <= 1.0) ||
      f_c + f_m > 1.0 + 1e-12) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "segment fractions must lie in [0, 1] with f_c + f_m <= 1 "
        "(f_c=%g, f_m=%g)",
        f_c, f_m));
  }
  if (!(eps_c > 0.0) || !(eps_c < eps_m) || !(eps_m < eps_l)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "budgets must satisfy 0 < eps_c < eps_m < eps_l (got %g, %g, %g)",
        eps_c, eps_m, eps_l));
  }
  return absl::OkStatus();
}

absl::StatusOr<SegmentedProfile> AssignPrivacySegments(
    int n, const PrivacySegmentSpec& spec) {
  PDP_RETURN_IF_ERROR(spec.Validate());
  if (n < 1) {
    return absl::InvalidArgumentError("profile size must be >= 1");
  }
  const int num_conservative = SegmentCount(spec.f_c, n);
  const int num_medium = std::min(SegmentCount(spec.f_m, n),
                                  n - num_conservative);
  Rng rng(spec.seed);

  std::vector<double> budgets(n);
  std::vector<Segment> segments(n);
  for (int i = 0; i < n; ++i) {
    if (i < num_conservative) {
      budgets[i] = spec.eps_c + (spec.eps_m - spec.eps_c) * rng.Uniform();
      segments[i] = Segment::kConservative;
    } else if (i < num_conservative + num_medium) {
      budgets[i] = spec.eps_m + (spec.eps_l - spec.eps_m) * rng.Uniform();
      segments[i] = Segment::kMedium;
    } else {
      budgets[i] = spec.eps_l;
      segments[i] = Segment::kLiberal;
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Shuffle(order, rng);

  std::vector<double> shuffled_budgets(n);
  std::vector<Segment> shuffled_segments(n);
  for (int i = 0; i < n; ++i) {
    shuffled_budgets[i] = budgets[order[i]];
    shuffled_segments[i] = segments[order[i]];
  }
  PDP_ASSIGN_OR_RETURN(PrivacyProfile profile,
                       PrivacyProfile::Create(std::move(shuffled_budgets)));
  return SegmentedProfile{std::move(profile), std::move(shuffled_segments)};
}

absl::StatusOr<PrivacyProfile> AssignPrivacyProfile(
    int n, const PrivacySegmentSpec& spec) {
  PDP_ASSIGN_OR_RETURN(SegmentedProfile segmented,
                       AssignPrivacySegments(n, spec));
  return std::move(segmented.profile);
}

absl::StatusOr<LabeledSplit> TrainTestSplit(const Dataset& data,
                                            double test_fraction,
                                            uint64_t seed) {
  int num_test = 0;
  PDP_ASSIGN_OR_RETURN(
      std::vector<int> order,
      PartitionIndices(data.num_points(), test_fraction, seed, &num_test));
  std::vector<int> test_indices(order.begin(), order.begin() + num_test);
  std::vector<int> train_indices(order.begin() + num_test, order.end());
  PDP_ASSIGN_OR_RETURN(Dataset train, data.Subset(train_indices));
  PDP_ASSIGN_OR_RETURN(Dataset test, data.Subset(test_indices));
  return LabeledSplit{std::move(train), std::move(test), std::nullopt,
                      std::move(train_indices), std::move(test_indices)};
}

absl::StatusOr<LabeledSplit> ParseMedicalCost(absl::string_view csv,
                                              double test_fraction,
                                              uint64_t seed,
                                              ScalingMode scaling) {
  PDP_ASSIGN_OR_RETURN(CsvTable table, ParseCsv(csv));
  const int n = static_cast<int>(table.rows.size());
  if (n < 2) {
    return MakeError(ErrorKind::kMalformedCsv,
                     absl::StrFormat("need at least 2 data rows, found %d", n));
  }

  constexpr absl::string_view kNumeric[] = {"age", "bmi", "children"};
  constexpr absl::string_view kCategorical[] = {"sex", "smoker", "region"};
  std::vector<size_t> numeric_columns;
  for (absl::string_view name : kNumeric) {
    PDP_ASSIGN_OR_RETURN(size_t c, FindColumn(table, name));
    numeric_columns.push_back(c);
  }
  std::vector<size_t> categorical_columns;
  for (absl::string_view name : kCategorical) {
    PDP_ASSIGN_OR_RETURN(size_t c, FindColumn(table, name));
    categorical_columns.push_back(c);
  }
  PDP_ASSIGN_OR_RETURN(size_t label_column, FindColumn(table, "charges"));

  // Raw numeric values: three features then the label.
  Eigen::MatrixXd raw(n, 4);
  for (int r = 0; r < n; ++r) {
    for (int j = 0; j < 3; ++j) {
      PDP_ASSIGN_OR_RETURN(raw(r, j), ParseNumber(table, r, numeric_columns[j]));
    }
    PDP_ASSIGN_OR_RETURN(raw(r, 3), ParseNumber(table, r, label_column));
  }

  std::vector<std::vector<std::string>> vocabularies;
  for (size_t c : categorical_columns) {
    std::set<std::string> values;
    for (int r = 0; r < n; ++r) {
      if (table.rows[r][c].empty()) {
        return MakeError(ErrorKind::kMalformedCsv,
                         absl::StrFormat("row %d, column '%s' is empty", r + 1,
                                         table.header[c]));
      }
      values.insert(table.rows[r][c]);
    }
    vocabularies.emplace_back(values.begin(), values.end());
  }

  int num_test = 0;
  PDP_ASSIGN_OR_RETURN(std::vector<int> order,
                       PartitionIndices(n, test_fraction, seed, &num_test));
  std::vector<int> test_indices(order.begin(), order.begin() + num_test);
  std::vector<int> train_indices(order.begin() + num_test, order.end());

  // Min-max statistics from the train rows, or from every row.
  const std::vector<int>& stat_rows =
      scaling == ScalingMode::kTrainOnly ? train_indices : order;
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(4, INFINITY);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(4, -INFINITY);
  for (int r : stat_rows) {
    lo = lo.cwiseMin(raw.row(r).transpose());
    hi = hi.cwiseMax(raw.row(r).transpose());
  }
  constexpr absl::string_view kScaledNames[] = {"age", "bmi", "children",
                                               "charges"};
  for (int j = 0; j < 4; ++j) {
    if (!(hi[j] > lo[j])) {
      return MakeError(ErrorKind::kDegenerateColumn,
                       absl::StrCat("column '", kScaledNames[j],
                                    "' is constant on the scaling rows"));
    }
  }

  int d = 3 + 1;
  for (const auto& vocabulary : vocabularies) d += vocabulary.size();

  auto build = [&](const std::vector<int>& rows) -> absl::StatusOr<Dataset> {
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(rows.size(), d);
    Eigen::VectorXd y(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
      const int r = rows[i];
      for (int j = 0; j < 3; ++j) {
        x(i, j) = std::clamp((raw(r, j) - lo[j]) / (hi[j] - lo[j]), 0.0, 1.0);
      }
      int offset = 3;
      for (size_t c = 0; c < categorical_columns.size(); ++c) {
        const auto& vocabulary = vocabularies[c];
        const auto it = std::lower_bound(vocabulary.begin(), vocabulary.end(),
                                         table.rows[r][categorical_columns[c]]);
        x(i, offset + (it - vocabulary.begin())) = 1.0;
        offset += vocabulary.size();
      }
      x(i, d - 1) = 1.0;
      y[i] = std::clamp((raw(r, 3) - lo[3]) / (hi[3] - lo[3]), 0.0, 1.0);
    }
    return Dataset::Create(std::move(x), std::move(y));
  };
  PDP_ASSIGN_OR_RETURN(Dataset train, build(train_indices));
  PDP_ASSIGN_OR_RETURN(Dataset test, build(test_indices));
  return LabeledSplit{std::move(train), std::move(test), std::nullopt,
                      std::move(train_indices), std::move(test_indices)};
}

absl::StatusOr<LabeledSplit> LoadMedicalCost(const std::string& path,
                                             double test_fraction,
                                             uint64_t seed,
                                             ScalingMode scaling) {
  PDP_ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  return ParseMedicalCost(text, test_fraction, seed, scaling);
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kFileNotFound,
                     absl::StrCat("cannot open '", path, "'"));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteTextFile(const std::string& path, absl::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(absl::StrCat("cannot write '", path, "'"));
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    return absl::UnavailableError(absl::StrCat("write to '", path, "' failed"));
  }
  return absl::OkStatus();
}

std::string DatasetToCsv(const Dataset& data) {
  std::string out;
  for (int k = 0; k < data.dimension(); ++k) absl::StrAppend(&out, "f", k, ",");
  absl::StrAppend(&out, "y\n");
  for (int i = 0; i < data.num_points(); ++i) {
    for (int k = 0; k < data.dimension(); ++k) {
      absl::StrAppend(&out, absl::StrFormat("%.17g,", data.features()(i, k)));
    }
    absl::StrAppend(&out, absl::StrFormat("%.17g\n", data.labels()[i]));
  }
  return out;
}

absl::StatusOr<Dataset> DatasetFromCsv(absl::string_view csv) {
  PDP_ASSIGN_OR_RETURN(CsvTable table, ParseCsv(csv));
  const size_t columns = table.header.size();
  if (columns < 2 || table.header.back() != "y") {
    return MakeError(ErrorKind::kMalformedCsv,
                     "dataset header must be f0,...,f{d-1},y");
  }
  for (size_t k = 0; k + 1 < columns; ++k) {
    if (table.header[k] != absl::StrCat("f", k)) {
      return MakeError(ErrorKind::kMalformedCsv,
                       absl::StrFormat("column %d is '%s', expected 'f%d'", k,
                                       table.header[k], k));
    }
  }
  if (table.rows.empty()) {
    return MakeError(ErrorKind::kMalformedCsv, "dataset has no rows");
  }
  const int n = static_cast<int>(table.rows.size());
  const int d = static_cast<int>(columns) - 1;
  Eigen::MatrixXd x(n, d);
  Eigen::VectorXd y(n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < d; ++k) {
      PDP_ASSIGN_OR_RETURN(x(r, k), ParseNumber(table, r, k));
      if (!(x(r, k) >= 0.0 && x(r, k) <= 1.0)) {
        return MakeError(ErrorKind::kInvalidData,
                         absl::StrFormat("row %d, column 'f%d': %g is outside "
                                         "[0, 1]",
                                         r + 1, k, x(r, k)));
      }
    }
    PDP_ASSIGN_OR_RETURN(y[r], ParseNumber(table, r, d));
    if (!(y[r] >= -1.0 && y[r] <= 1.0)) {
      return MakeError(
          ErrorKind::kInvalidData,
          absl::StrFormat("row %d, column 'y': %g is outside [-1, 1]", r + 1,
                          y[r]));
    }
  }
  return Dataset::Create(std::move(x), std::move(y));
}

std::string ProfileToCsv(const PrivacyProfile& profile) {
  std::string out = "epsilon\n";
  for (double eps : profile.epsilons()) {
    absl::StrAppend(&out, absl::StrFormat("%.17g\n", eps));
  }
  return out;
}

absl::StatusOr<PrivacyProfile> ProfileFromCsv(absl::string_view csv) {
  PDP_ASSIGN_OR_RETURN(CsvTable table, ParseCsv(csv));
  if (table.header.size() != 1 || table.header[0] != "epsilon") {
    return MakeError(ErrorKind::kMalformedCsv,
                     "profile header must be the single column 'epsilon'");
  }
  if (table.rows.empty()) {
    return MakeError(ErrorKind::kMalformedCsv, "profile has no rows");
  }
  std::vector<double> budgets;
  budgets.reserve(table.rows.size());
  for (size_t r = 0; r < table.rows.size(); ++r) {
    PDP_ASSIGN_OR_RETURN(double eps, ParseNumber(table, r, 0));
    if (!(eps > 0.0) || eps > kMaxEpsilon) {
      return MakeError(ErrorKind::kInvalidBudget,
                       absl::StrFormat("row %d, column 'epsilon': %g must lie "
                                       "in (0, %g]",
                                       r + 1, eps, kMaxEpsilon));
    }
    budgets.push_back(eps);
  }
  return PrivacyProfile::Create(std::move(budgets));
}

std::string VectorToCsv(absl::string_view column, const Eigen::VectorXd& v) {
  std::string out = absl::StrCat(column, "\n");
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    absl::StrAppend(&out, absl::StrFormat("%.17g\n", v[k]));
  }
  return out;
}

}  // namespace pdp_ridge
