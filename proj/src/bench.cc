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

#include "pdp_ridge/bench.h"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "pdp_ridge/baselines.h"
#include "pdp_ridge/errors.h"
#include "pdp_ridge/pdp_op.h"
#include "pdp_ridge/rng.h"

namespace pdp_ridge {
namespace {

constexpr uint64_t kDataStream = 1;
constexpr uint64_t kProfileStream = 2;
constexpr uint64_t kMechanismStream = 3;

absl::Status PlanError(absl::string_view message) {
  return MakeError(ErrorKind::kPlanInvalid, message);
}

std::string ValidMethodList() {
  std::vector<absl::string_view> names;
  for (Method m : AllMethods()) names.push_back(MethodName(m));
  return absl::StrJoin(names, ", ");
}

// Everything a trial needs that is fixed before its own randomness is drawn.
struct TrialSetup {
  double lambda;
  double train_fraction;
  PrivacySegmentSpec privacy;
};

absl::StatusOr<TrialSetup> SetupForValue(const ExperimentPlan& plan,
                                         double value) {
  TrialSetup setup{plan.lambda, plan.train_fraction, plan.privacy};
  switch (plan.sweep_parameter) {
    case SweepParameter::kLambda:
      setup.lambda = value;
      break;
    case SweepParameter::kEpsC:
      setup.privacy.eps_c = value;
      break;
    case SweepParameter::kEpsM:
      setup.privacy.eps_m = value;
      break;
    case SweepParameter::kFc:
      setup.privacy.f_c = value;
      break;
    case SweepParameter::kTrainFraction:
      setup.train_fraction = value;
      break;
  }
  if (!(setup.lambda > 0.0) || !std::isfinite(setup.lambda)) {
    return PlanError(absl::StrFormat("lambda must be positive, got %g",
                                     setup.lambda));
  }
  if (!(setup.train_fraction > 0.0 && setup.train_fraction <= 1.0)) {
    return PlanError(absl::StrFormat("train_fraction must lie in (0, 1], got %g",
                                     setup.train_fraction));
  }
  if (absl::Status s = setup.privacy.Validate(); !s.ok()) {
    return PlanError(s.message());
  }
  return setup;
}

absl::StatusOr<LabeledSplit> LoadData(const ExperimentPlan& plan,
                                      uint64_t seed) {
  if (const auto* synthetic = std::get_if<SyntheticSource>(&plan.dataset)) {
    SyntheticSpec spec{synthetic->dimension,
                       synthetic->num_points + synthetic->test_size,
                       synthetic->sigma, seed};
    PDP_ASSIGN_OR_RETURN(SyntheticData generated, GenerateSynthetic(spec));
    std::vector<int> train(synthetic->num_points);
    std::vector<int> test(synthetic->test_size);
    for (int i = 0; i < synthetic->num_points; ++i) train[i] = i;
    for (int i = 0; i < synthetic->test_size; ++i) {
      test[i] = synthetic->num_points + i;
    }
    PDP_ASSIGN_OR_RETURN(Dataset train_data, generated.data.Subset(train));
    PDP_ASSIGN_OR_RETURN(Dataset test_data, generated.data.Subset(test));
    return LabeledSplit{std::move(train_data), std::move(test_data),
                        std::move(generated.theta_star), std::move(train),
                        std::move(test)};
  }
  const auto& medical = std::get<MedicalCostSource>(plan.dataset);
  return LoadMedicalCost(medical.path, medical.test_fraction, seed,
                         medical.scaling);
}

// The first floor(fraction * n) training rows (at least one).
absl::StatusOr<Dataset> TrainingPrefix(const Dataset& train, double fraction) {
  if (fraction >= 1.0) return train;
  const int m = std::max(
      1, static_cast<int>(std::floor(fraction * train.num_points() + 1e-9)));
  std::vector<int> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = i;
  return train.Subset(rows);
}

absl::StatusOr<PrivateModel> FitMethod(Method method, const Dataset& train,
                                       const PrivacyProfile& profile,
                                       double lambda,
                                       std::optional<double> theta_bound,
                                       Rng& rng) {
  switch (method) {
    case Method::kPdpOp:
      return Fit(train, profile, lambda, theta_bound, rng);
    case Method::kNonPersonalized:
      return FitNonPersonalized(train, profile, lambda, theta_bound, rng);
    case Method::kJorgensenMax:
      return FitJorgensen(train, profile, lambda, JorgensenConfig::MaxEpsilon(),
                          theta_bound, rng);
    case Method::kJorgensenMean:
      return FitJorgensen(train, profile, lambda,
                          JorgensenConfig::MeanEpsilon(), theta_bound, rng);
  }
  return absl::InternalError("unhandled method");
}

struct TrialOutcome {
  bool discarded = false;
  double unregularized = 0.0;
  double regularized = 0.0;
};

LossSummary Summarize(const std::vector<double>& values) {
  LossSummary summary;
  if (values.empty()) {
    summary.mean = summary.stddev = std::nan("");
    return summary;
  }
  long double sum = 0.0L;
  for (double v : values) sum += v;
  const long double mean = sum / values.size();
  long double squares = 0.0L;
  for (double v : values) squares += (v - mean) * (v - mean);
  summary.mean = static_cast<double>(mean);
  summary.stddev =
      values.size() > 1
          ? static_cast<double>(std::sqrt(squares / (values.size() - 1)))
          : 0.0;
  return summary;
}

// Runs `count` independent jobs on up to `threads` workers. The first error
// (by job index) wins.
absl::Status ParallelFor(int count, int threads,
                         const std::function<absl::Status(int)>& job) {
  std::vector<absl::Status> statuses(count);
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) {
      statuses[i] = job(i);
      if (!statuses[i].ok()) return statuses[i];
    }
    return absl::OkStatus();
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  const int num_workers = std::min(threads, count);
  for (int w = 0; w < num_workers; ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < count; i = next++) statuses[i] = job(i);
    });
  }
  for (std::thread& worker : workers) worker.join();
  for (const absl::Status& status : statuses) {
    if (!status.ok()) return status;
  }
  return absl::OkStatus();
}

absl::StatusOr<double> ParseDouble(absl::string_view key,
                                   absl::string_view value) {
  double out;
  if (!absl::SimpleAtod(value, &out) || !std::isfinite(out)) {
    return PlanError(absl::StrCat("'", key, "' expects a number, got '", value,
                                  "'"));
  }
  return out;
}

absl::StatusOr<int> ParseInt(absl::string_view key, absl::string_view value) {
  int out;
  if (!absl::SimpleAtoi(value, &out)) {
    return PlanError(absl::StrCat("'", key, "' expects an integer, got '",
                                  value, "'"));
  }
  return out;
}

}  // namespace

absl::string_view MethodName(Method method) {
  switch (method) {
    case Method::kPdpOp:
      return "pdp-op";
    case Method::kNonPersonalized:
      return "non-personalized";
    case Method::kJorgensenMax:
      return "jorgensen-max";
    case Method::kJorgensenMean:
      return "jorgensen-mean";
  }
  return "unknown";
}

const std::vector<Method>& AllMethods() {
  static const std::vector<Method> kAll = {
      Method::kPdpOp, Method::kNonPersonalized, Method::kJorgensenMax,
      Method::kJorgensenMean};
  return kAll;
}

absl::StatusOr<Method> ParseMethod(absl::string_view name) {
  for (Method m : AllMethods()) {
    if (MethodName(m) == name) return m;
  }
  return PlanError(absl::StrCat("unknown method '", name,
                                "'; valid methods: ", ValidMethodList()));
}

absl::string_view SweepParameterName(SweepParameter parameter) {
  switch (parameter) {
    case SweepParameter::kLambda:
      return "lambda";
    case SweepParameter::kEpsC:
      return "eps_c";
    case SweepParameter::kEpsM:
      return "eps_m";
    case SweepParameter::kFc:
      return "f_c";
    case SweepParameter::kTrainFraction:
      return "train_fraction";
  }
  return "unknown";
}

absl::StatusOr<SweepParameter> ParseSweepParameter(absl::string_view name) {
  for (SweepParameter p :
       {SweepParameter::kLambda, SweepParameter::kEpsC, SweepParameter::kEpsM,
        SweepParameter::kFc, SweepParameter::kTrainFraction}) {
    if (SweepParameterName(p) == name) return p;
  }
  return PlanError(absl::StrCat(
      "unknown sweep parameter '", name,
      "'; valid: lambda, eps_c, eps_m, f_c, train_fraction"));
}

absl::Status ExperimentPlan::Validate() const {
  if (const auto* synthetic = std::get_if<SyntheticSource>(&dataset)) {
    if (synthetic->dimension < 1 || synthetic->num_points < 1 ||
        synthetic->test_size < 1 || !(synthetic->sigma >= 0.0)) {
      return PlanError(
          "synthetic source needs d >= 1, n >= 1, test_size >= 1, sigma >= 0");
    }
  } else {
    const auto& medical = std::get<MedicalCostSource>(dataset);
    if (medical.path.empty()) return PlanError("medical_cost.path is empty");
    if (!(medical.test_fraction > 0.0 && medical.test_fraction < 1.0)) {
      return PlanError("medical_cost.test_fraction must lie in (0, 1)");
    }
  }
  if (trials < 1) return PlanError("trials must be >= 1");
  if (threads < 1) return PlanError("threads must be >= 1");
  if (methods.empty()) return PlanError("at least one method is required");
  for (size_t i = 0; i < methods.size(); ++i) {
    for (size_t j = i + 1; j < methods.size(); ++j) {
      if (methods[i] == methods[j]) {
        return PlanError(absl::StrCat("method '", MethodName(methods[i]),
                                      "' listed twice"));
      }
    }
  }
  if (theta_bound.has_value() && !(*theta_bound > 0.0)) {
    return PlanError("theta_bound must be positive");
  }
  for (double value : sweep_values) {
    PDP_RETURN_IF_ERROR(SetupForValue(*this, value).status());
  }
  return absl::OkStatus();
}

absl::StatusOr<ExperimentPlan> ParsePlan(absl::string_view text) {
  ExperimentPlan plan;
  SyntheticSource synthetic;
  MedicalCostSource medical;
  std::string dataset = "synthetic";
  int line_number = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_number;
    if (size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == absl::string_view::npos) {
      return PlanError(
          absl::StrFormat("line %d: expected 'key = value'", line_number));
    }
    const std::string key(absl::StripAsciiWhitespace(line.substr(0, eq)));
    const std::string value(absl::StripAsciiWhitespace(line.substr(eq + 1)));

    if (key == "dataset") {
      if (value != "synthetic" && value != "medical_cost") {
        return PlanError(absl::StrCat("dataset must be synthetic or "
                                      "medical_cost, got '", value, "'"));
      }
      dataset = value;
    } else if (key == "synthetic.d") {
      PDP_ASSIGN_OR_RETURN(synthetic.dimension, ParseInt(key, value));
    } else if (key == "synthetic.n") {
      PDP_ASSIGN_OR_RETURN(synthetic.num_points, ParseInt(key, value));
    } else if (key == "synthetic.sigma") {
      PDP_ASSIGN_OR_RETURN(synthetic.sigma, ParseDouble(key, value));
    } else if (key == "synthetic.test_size") {
      PDP_ASSIGN_OR_RETURN(synthetic.test_size, ParseInt(key, value));
    } else if (key == "medical_cost.path") {
      medical.path = value;
    } else if (key == "medical_cost.test_fraction") {
      PDP_ASSIGN_OR_RETURN(medical.test_fraction, ParseDouble(key, value));
    } else if (key == "medical_cost.scaling") {
      if (value == "train") {
        medical.scaling = ScalingMode::kTrainOnly;
      } else if (value == "global") {
        medical.scaling = ScalingMode::kGlobal;
      } else {
        return PlanError("medical_cost.scaling must be train or global");
      }
    } else if (key == "privacy.f_c") {
      PDP_ASSIGN_OR_RETURN(plan.privacy.f_c, ParseDouble(key, value));
    } else if (key == "privacy.f_m") {
      PDP_ASSIGN_OR_RETURN(plan.privacy.f_m, ParseDouble(key, value));
    } else if (key == "privacy.eps_c") {
      PDP_ASSIGN_OR_RETURN(plan.privacy.eps_c, ParseDouble(key, value));
    } else if (key == "privacy.eps_m") {
      PDP_ASSIGN_OR_RETURN(plan.privacy.eps_m, ParseDouble(key, value));
    } else if (key == "privacy.eps_l") {
      PDP_ASSIGN_OR_RETURN(plan.privacy.eps_l, ParseDouble(key, value));
    } else if (key == "sweep.parameter") {
      PDP_ASSIGN_OR_RETURN(plan.sweep_parameter, ParseSweepParameter(value));
    } else if (key == "sweep.values") {
      plan.sweep_values.clear();
      for (absl::string_view item : absl::StrSplit(value, ',')) {
        item = absl::StripAsciiWhitespace(item);
        if (item.empty()) continue;
        PDP_ASSIGN_OR_RETURN(double v, ParseDouble(key, item));
        plan.sweep_values.push_back(v);
      }
    } else if (key == "lambda") {
      PDP_ASSIGN_OR_RETURN(plan.lambda, ParseDouble(key, value));
    } else if (key == "train_fraction") {
      PDP_ASSIGN_OR_RETURN(plan.train_fraction, ParseDouble(key, value));
    } else if (key == "theta_bound") {
      if (value == "none" || value.empty()) {
        plan.theta_bound.reset();
      } else {
        PDP_ASSIGN_OR_RETURN(plan.theta_bound, ParseDouble(key, value));
      }
    } else if (key == "methods") {
      plan.methods.clear();
      for (absl::string_view item : absl::StrSplit(value, ',')) {
        item = absl::StripAsciiWhitespace(item);
        if (item.empty()) continue;
        PDP_ASSIGN_OR_RETURN(Method m, ParseMethod(item));
        plan.methods.push_back(m);
      }
    } else if (key == "trials") {
      PDP_ASSIGN_OR_RETURN(plan.trials, ParseInt(key, value));
    } else if (key == "seed") {
      if (!absl::SimpleAtoi(value, &plan.master_seed)) {
        return PlanError(absl::StrCat("seed expects an unsigned integer, got '",
                                      value, "'"));
      }
    } else if (key == "resample_data") {
      if (value == "true") {
        plan.resample_data = true;
      } else if (value == "false") {
        plan.resample_data = false;
      } else {
        return PlanError("resample_data must be true or false");
      }
    } else if (key == "threads") {
      PDP_ASSIGN_OR_RETURN(plan.threads, ParseInt(key, value));
    } else {
      return PlanError(absl::StrFormat("line %d: unknown key '%s'",
                                       line_number, key));
    }
  }
  if (dataset == "synthetic") {
    plan.dataset = synthetic;
  } else {
    plan.dataset = medical;
  }
  PDP_RETURN_IF_ERROR(plan.Validate());
  return plan;
}

absl::StatusOr<double> UnregularizedTestLoss(const Eigen::VectorXd& theta,
                                             const Dataset& test) {
  if (theta.size() != test.dimension()) {
    return MakeError(ErrorKind::kDimensionMismatch,
                     absl::StrFormat("theta has %d entries, test data d = %d",
                                     theta.size(), test.dimension()));
  }
  const Eigen::VectorXd residual = test.labels() - test.features() * theta;
  return residual.squaredNorm() / test.num_points();
}

absl::StatusOr<double> RegularizedTestLoss(const Eigen::VectorXd& theta,
                                           const Dataset& test,
                                           double lambda) {
  if (!(lambda >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda must be >= 0, got %g", lambda));
  }
  PDP_ASSIGN_OR_RETURN(double loss, UnregularizedTestLoss(theta, test));
  return loss + lambda * theta.squaredNorm();
}

absl::StatusOr<ExperimentReport> RunExperiment(
    const ExperimentPlan& plan, const ProgressCallback& progress) {
  PDP_RETURN_IF_ERROR(plan.Validate());
  const uint64_t master = plan.master_seed;

  std::optional<LabeledSplit> shared;
  if (!plan.resample_data) {
    PDP_ASSIGN_OR_RETURN(shared, LoadData(plan, DeriveSeed(master, {kDataStream})));
  }

  ExperimentReport report;
  report.parameter = plan.sweep_parameter;
  report.methods = plan.methods;
  for (size_t s = 0; s < plan.sweep_values.size(); ++s) {
    const double value = plan.sweep_values[s];
    PDP_ASSIGN_OR_RETURN(TrialSetup setup, SetupForValue(plan, value));
    SweepRow row{value, {}};
    for (Method method : plan.methods) {
      std::vector<TrialOutcome> outcomes(plan.trials);
      auto run_trial = [&](int t) -> absl::Status {
        std::optional<LabeledSplit> own;
        if (plan.resample_data) {
          PDP_ASSIGN_OR_RETURN(
              own, LoadData(plan, DeriveSeed(master, {kDataStream, s,
                                                      static_cast<uint64_t>(t)})));
        }
        const LabeledSplit& split = plan.resample_data ? *own : *shared;
        PDP_ASSIGN_OR_RETURN(Dataset train,
                             TrainingPrefix(split.train, setup.train_fraction));

        PrivacySegmentSpec privacy = setup.privacy;
        privacy.seed = DeriveSeed(master, {kProfileStream, s,
                                           static_cast<uint64_t>(t)});
        PDP_ASSIGN_OR_RETURN(PrivacyProfile profile,
                             AssignPrivacyProfile(train.num_points(), privacy));

        Rng rng(DeriveSeed(master, {kMechanismStream, s,
                                    static_cast<uint64_t>(method),
                                    static_cast<uint64_t>(t)}));
        absl::StatusOr<PrivateModel> model = FitMethod(
            method, train, profile, setup.lambda, plan.theta_bound, rng);
        if (!model.ok()) {
          if (IsErrorKind(model.status(), ErrorKind::kEmptySubsample)) {
            outcomes[t].discarded = true;
            return absl::OkStatus();
          }
          return model.status();
        }
        PDP_ASSIGN_OR_RETURN(outcomes[t].unregularized,
                             UnregularizedTestLoss(model->theta_hat(), split.test));
        PDP_ASSIGN_OR_RETURN(
            outcomes[t].regularized,
            RegularizedTestLoss(model->theta_hat(), split.test, setup.lambda));
        return absl::OkStatus();
      };
      PDP_RETURN_IF_ERROR(ParallelFor(plan.trials, plan.threads, run_trial));

      std::vector<double> unregularized, regularized;
      CellResult cell{method, {}, {}, 0, 0};
      for (const TrialOutcome& outcome : outcomes) {
        if (outcome.discarded) {
          ++cell.discarded;
          continue;
        }
        unregularized.push_back(outcome.unregularized);
        regularized.push_back(outcome.regularized);
      }
      cell.trials = static_cast<int>(unregularized.size());
      cell.unregularized = Summarize(unregularized);
      cell.regularized = Summarize(regularized);
      if (progress) {
        progress(absl::StrFormat(
            "%s=%g %s: %d trials, %d discarded, mean unregularized loss %.4g",
            SweepParameterName(plan.sweep_parameter), value, MethodName(method),
            cell.trials, cell.discarded, cell.unregularized.mean));
      }
      row.cells.push_back(cell);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string EmitReport(const ExperimentReport& report, ReportFormat format) {
  const absl::string_view parameter = SweepParameterName(report.parameter);
  std::vector<std::string> header = {std::string(parameter)};
  for (absl::string_view metric : {"unregularized", "regularized"}) {
    for (Method m : report.methods) {
      header.push_back(absl::StrCat(MethodName(m), ".", metric, ".mean"));
      header.push_back(absl::StrCat(MethodName(m), ".", metric, ".std"));
    }
  }
  if (format == ReportFormat::kCsv) {
    for (Method m : report.methods) {
      header.push_back(absl::StrCat(MethodName(m), ".trials"));
      header.push_back(absl::StrCat(MethodName(m), ".discarded"));
    }
    std::string out = absl::StrCat(absl::StrJoin(header, ","), "\n");
    for (const SweepRow& row : report.rows) {
      std::vector<std::string> cells = {absl::StrFormat("%.12g", row.value)};
      for (bool regularized : {false, true}) {
        for (const CellResult& cell : row.cells) {
          const LossSummary& s =
              regularized ? cell.regularized : cell.unregularized;
          cells.push_back(absl::StrFormat("%.12g", s.mean));
          cells.push_back(absl::StrFormat("%.12g", s.stddev));
        }
      }
      for (const CellResult& cell : row.cells) {
        cells.push_back(absl::StrCat(cell.trials));
        cells.push_back(absl::StrCat(cell.discarded));
      }
      absl::StrAppend(&out, absl::StrJoin(cells, ","), "\n");
    }
    return out;
  }

  std::string out = absl::StrCat("| ", absl::StrJoin(header, " | "), " |\n|");
  for (size_t i = 0; i < header.size(); ++i) absl::StrAppend(&out, "---|");
  absl::StrAppend(&out, "\n");
  std::vector<std::string> notes;
  for (const SweepRow& row : report.rows) {
    std::vector<std::string> cells = {absl::StrFormat("%.4g", row.value)};
    for (bool regularized : {false, true}) {
      for (const CellResult& cell : row.cells) {
        const LossSummary& s =
            regularized ? cell.regularized : cell.unregularized;
        cells.push_back(absl::StrFormat("%.3e", s.mean));
        cells.push_back(absl::StrFormat("%.3e", s.stddev));
      }
    }
    for (const CellResult& cell : row.cells) {
      if (cell.discarded > 0) {
        notes.push_back(absl::StrFormat(
            "- %s at %s=%g: %d of %d trials discarded (empty subsample)",
            MethodName(cell.method), parameter, row.value, cell.discarded,
            cell.discarded + cell.trials));
      }
    }
    absl::StrAppend(&out, "| ", absl::StrJoin(cells, " | "), " |\n");
  }
  if (!notes.empty()) {
    absl::StrAppend(&out, "\n", absl::StrJoin(notes, "\n"), "\n");
  }
  return out;
}

absl::StatusOr<ExperimentReport> ParseReportCsv(absl::string_view csv) {
  std::vector<absl::string_view> lines;
  for (absl::string_view line : absl::StrSplit(csv, '\n')) {
    line = absl::StripAsciiWhitespace(line);
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) return absl::InvalidArgumentError("empty report");
  std::vector<absl::string_view> header = absl::StrSplit(lines[0], ',');
  ExperimentReport report;
  PDP_ASSIGN_OR_RETURN(report.parameter, ParseSweepParameter(header[0]));
  if ((header.size() - 1) % 6 != 0) {
    return absl::InvalidArgumentError("report header has an unexpected width");
  }
  const size_t num_methods = (header.size() - 1) / 6;
  for (size_t j = 0; j < num_methods; ++j) {
    absl::string_view column = header[1 + 2 * j];
    PDP_ASSIGN_OR_RETURN(Method m,
                         ParseMethod(column.substr(0, column.find('.'))));
    report.methods.push_back(m);
  }
  for (size_t r = 1; r < lines.size(); ++r) {
    std::vector<absl::string_view> cells = absl::StrSplit(lines[r], ',');
    if (cells.size() != header.size()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("report row %d has %d cells", r, cells.size()));
    }
    std::vector<double> values(cells.size());
    for (size_t c = 0; c < cells.size(); ++c) {
      if (!absl::SimpleAtod(cells[c], &values[c])) {
        return absl::InvalidArgumentError(
            absl::StrFormat("report row %d cell %d is not numeric", r, c));
      }
    }
    SweepRow row{values[0], {}};
    const size_t reg_offset = 1 + 2 * num_methods;
    const size_t count_offset = 1 + 4 * num_methods;
    for (size_t j = 0; j < num_methods; ++j) {
      CellResult cell{report.methods[j], {}, {}, 0, 0};
      cell.unregularized = {values[1 + 2 * j], values[2 + 2 * j]};
      cell.regularized = {values[reg_offset + 2 * j],
                          values[reg_offset + 2 * j + 1]};
      cell.trials = static_cast<int>(values[count_offset + 2 * j]);
      cell.discarded = static_cast<int>(values[count_offset + 2 * j + 1]);
      row.cells.push_back(cell);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace pdp_ridge
