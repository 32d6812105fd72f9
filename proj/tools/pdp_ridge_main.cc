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

// Command-line driver: synthetic data generation, privacy profiles, single
// fits, bound evaluation and experiment sweeps.
//
// Exit codes: 0 success, 1 data or validation error, 2 usage or plan error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "pdp_ridge/baselines.h"
#include "pdp_ridge/bench.h"
#include "pdp_ridge/data.h"
#include "pdp_ridge/errors.h"
#include "pdp_ridge/pdp_op.h"
#include "pdp_ridge/rng.h"
#include "pdp_ridge/theory_bounds.h"

namespace pdp_ridge {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsageError = 2;

int Report(const absl::Status& status, int code) {
  std::cerr << "error: " << status.message() << "\n";
  return code;
}

int ExitCodeFor(const absl::Status& status) {
  if (IsErrorKind(status, ErrorKind::kPlanInvalid)) {
    return Report(status, kExitUsageError);
  }
  return Report(status, kExitDataError);
}

absl::Status WriteOutput(const std::optional<std::string>& path,
                         absl::string_view text) {
  if (!path.has_value()) {
    std::cout << text;
    return absl::OkStatus();
  }
  return WriteTextFile(*path, text);
}

struct SynthFlags {
  int dimension = 0;
  int num_points = 0;
  double sigma = 0.0;
  uint64_t seed = 0;
  std::string out;
};

int RunSynth(const SynthFlags& flags) {
  SyntheticSpec spec{flags.dimension, flags.num_points, flags.sigma,
                     flags.seed};
  if (absl::Status s = spec.Validate(); !s.ok()) {
    return Report(s, kExitUsageError);
  }
  absl::StatusOr<SyntheticData> data = GenerateSynthetic(spec);
  if (!data.ok()) return ExitCodeFor(data.status());
  if (absl::Status s = WriteTextFile(flags.out, DatasetToCsv(data->data));
      !s.ok()) {
    return ExitCodeFor(s);
  }
  if (absl::Status s =
          WriteTextFile(flags.out + ".theta_star.csv",
                        VectorToCsv("theta_star", data->theta_star));
      !s.ok()) {
    return ExitCodeFor(s);
  }
  if (data->clamped_labels > 0) {
    std::cerr << "note: " << data->clamped_labels
              << " noisy labels clamped into [-1, 1]\n";
  }
  return kExitOk;
}

struct ProfileFlags {
  int num_points = 0;
  PrivacySegmentSpec spec;
  std::optional<std::string> out;
};

int RunProfile(const ProfileFlags& flags) {
  if (absl::Status s = flags.spec.Validate(); !s.ok()) {
    return Report(s, kExitUsageError);
  }
  absl::StatusOr<PrivacyProfile> profile =
      AssignPrivacyProfile(flags.num_points, flags.spec);
  if (!profile.ok()) return ExitCodeFor(profile.status());
  if (absl::Status s = WriteOutput(flags.out, ProfileToCsv(*profile));
      !s.ok()) {
    return ExitCodeFor(s);
  }
  return kExitOk;
}

struct FitFlags {
  std::string data_path;
  std::string profile_path;
  double lambda = 0.0;
  std::string method = "pdp-op";
  std::optional<double> theta_bound;
  uint64_t seed = 0;
  std::optional<std::string> out;
};

int RunFit(const FitFlags& flags) {
  absl::StatusOr<Method> method = ParseMethod(flags.method);
  if (!method.ok()) return Report(method.status(), kExitUsageError);

  absl::StatusOr<std::string> data_text = ReadTextFile(flags.data_path);
  if (!data_text.ok()) return ExitCodeFor(data_text.status());
  absl::StatusOr<Dataset> data = DatasetFromCsv(*data_text);
  if (!data.ok()) {
    return Report(absl::Status(data.status().code(),
                               absl::StrCat(flags.data_path, ": ",
                                            data.status().message())),
                  kExitDataError);
  }
  absl::StatusOr<std::string> profile_text = ReadTextFile(flags.profile_path);
  if (!profile_text.ok()) return ExitCodeFor(profile_text.status());
  absl::StatusOr<PrivacyProfile> profile = ProfileFromCsv(*profile_text);
  if (!profile.ok()) {
    return Report(absl::Status(profile.status().code(),
                               absl::StrCat(flags.profile_path, ": ",
                                            profile.status().message())),
                  kExitDataError);
  }

  Rng rng(flags.seed);
  absl::StatusOr<PrivateModel> model;
  switch (*method) {
    case Method::kPdpOp:
      model = Fit(*data, *profile, flags.lambda, flags.theta_bound, rng);
      break;
    case Method::kNonPersonalized:
      model = FitNonPersonalized(*data, *profile, flags.lambda,
                                 flags.theta_bound, rng);
      break;
    case Method::kJorgensenMax:
      model = FitJorgensen(*data, *profile, flags.lambda,
                           JorgensenConfig::MaxEpsilon(), flags.theta_bound,
                           rng);
      break;
    case Method::kJorgensenMean:
      model = FitJorgensen(*data, *profile, flags.lambda,
                           JorgensenConfig::MeanEpsilon(), flags.theta_bound,
                           rng);
      break;
  }
  if (!model.ok()) return ExitCodeFor(model.status());
  if (model->calibration().warning.has_value()) {
    std::cerr << "warning: " << *model->calibration().warning << "\n";
  }
  const std::string record =
      SerializeModelRecord(ToRecord(*model, MethodName(*method)));
  if (absl::Status s = WriteOutput(flags.out, record); !s.ok()) {
    return ExitCodeFor(s);
  }
  return kExitOk;
}

int RunBound(const AccuracyBoundInput& input) {
  absl::StatusOr<AccuracyBoundTerms> terms = AccuracyBoundBreakdown(input);
  if (!terms.ok()) return Report(terms.status(), kExitUsageError);
  std::cout << absl::StrFormat("total %.6g\n", terms->total)
            << absl::StrFormat("bias %.6g\n", terms->bias)
            << absl::StrFormat("privacy %.6g\n", terms->privacy)
            << absl::StrFormat("label_noise %.6g\n", terms->label_noise);
  return kExitOk;
}

struct ExperimentFlags {
  std::string plan_path;
  std::optional<int> trials;
  std::optional<uint64_t> seed;
  std::optional<int> threads;
  std::string format = "csv";
  std::optional<std::string> out;
};

int RunExperimentCommand(const ExperimentFlags& flags) {
  absl::StatusOr<std::string> text = ReadTextFile(flags.plan_path);
  if (!text.ok()) return ExitCodeFor(text.status());
  absl::StatusOr<ExperimentPlan> plan = ParsePlan(*text);
  if (!plan.ok()) return ExitCodeFor(plan.status());
  if (flags.trials.has_value()) plan->trials = *flags.trials;
  if (flags.seed.has_value()) plan->master_seed = *flags.seed;
  if (flags.threads.has_value()) plan->threads = *flags.threads;
  if (absl::Status s = plan->Validate(); !s.ok()) return ExitCodeFor(s);

  absl::StatusOr<ExperimentReport> report =
      RunExperiment(*plan, [](absl::string_view line) {
        std::cerr << line << "\n";
      });
  if (!report.ok()) return ExitCodeFor(report.status());
  const ReportFormat format =
      flags.format == "markdown" ? ReportFormat::kMarkdown : ReportFormat::kCsv;
  if (absl::Status s = WriteOutput(flags.out, EmitReport(*report, format));
      !s.ok()) {
    return ExitCodeFor(s);
  }
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Ridge regression with personalized differential privacy"};
  app.require_subcommand(1);

  SynthFlags synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic regression dataset");
  synth_cmd->add_option("--d", synth.dimension, "Feature dimension")
      ->required();
  synth_cmd->add_option("--n", synth.num_points, "Number of points")
      ->required();
  synth_cmd->add_option("--sigma", synth.sigma, "Label noise std");
  synth_cmd->add_option("--seed", synth.seed, "Random seed");
  synth_cmd->add_option("--out", synth.out,
                        "Dataset CSV path; theta* goes to <out>.theta_star.csv")
      ->required();

  ProfileFlags profile;
  CLI::App* profile_cmd = app.add_subcommand(
      "profile", "Assign conservative/medium/liberal privacy budgets");
  profile_cmd->add_option("--n", profile.num_points, "Number of points")
      ->required();
  profile_cmd->add_option("--f-c", profile.spec.f_c, "Conservative fraction");
  profile_cmd->add_option("--f-m", profile.spec.f_m, "Medium fraction");
  profile_cmd->add_option("--eps-c", profile.spec.eps_c,
                          "Conservative budget");
  profile_cmd->add_option("--eps-m", profile.spec.eps_m, "Medium budget");
  profile_cmd->add_option("--eps-l", profile.spec.eps_l, "Liberal budget");
  profile_cmd->add_option("--seed", profile.spec.seed, "Random seed");
  profile_cmd->add_option("--out", profile.out, "Output path (default stdout)");

  FitFlags fit;
  CLI::App* fit_cmd =
      app.add_subcommand("fit", "Fit one private ridge regression model");
  fit_cmd->add_option("--data", fit.data_path, "Dataset CSV (f0..,y)")
      ->required();
  fit_cmd->add_option("--profile", fit.profile_path, "Profile CSV (epsilon)")
      ->required();
  fit_cmd->add_option("--lambda", fit.lambda, "Regularization strength")
      ->required();
  fit_cmd->add_option("--method", fit.method,
                      "pdp-op, non-personalized, jorgensen-max or "
                      "jorgensen-mean");
  fit_cmd->add_option("--theta-bound", fit.theta_bound,
                      "Known bound B on the non-private optimum's norm");
  fit_cmd->add_option("--seed", fit.seed, "Random seed");
  fit_cmd->add_option("--out", fit.out, "Model record path (default stdout)");

  AccuracyBoundInput bound;
  CLI::App* bound_cmd =
      app.add_subcommand("bound", "Evaluate the accuracy bound");
  bound_cmd->add_option("--theta-star-norm", bound.theta_star_norm,
                        "||theta*||")
      ->required();
  bound_cmd->add_option("--lambda-min", bound.lambda_min_gram,
                        "Smallest eigenvalue of the weighted Gram matrix")
      ->required();
  bound_cmd->add_option("--lambda", bound.lambda, "Regularization strength")
      ->required();
  bound_cmd->add_option("--eta", bound.eta, "Noise rate")->required();
  bound_cmd->add_option("--d", bound.dimension, "Dimension")->required();
  bound_cmd->add_option("--delta", bound.delta, "Failure probability")
      ->required();
  bound_cmd->add_option("--sigma", bound.sigma, "Label noise std");
  bound_cmd->add_option("--weight-norm", bound.weight_norm, "||w||_2");

  ExperimentFlags experiment;
  CLI::App* experiment_cmd =
      app.add_subcommand("experiment", "Run a parameter sweep from a plan");
  experiment_cmd->add_option("--plan", experiment.plan_path, "Plan file")
      ->required();
  experiment_cmd->add_option("--trials", experiment.trials,
                             "Override the plan's trial count");
  experiment_cmd->add_option("--seed", experiment.seed,
                             "Override the plan's master seed");
  experiment_cmd->add_option("--threads", experiment.threads,
                             "Override the plan's worker count");
  experiment_cmd
      ->add_option("--format", experiment.format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));
  experiment_cmd->add_option("--out", experiment.out,
                             "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsageError;
  }

  if (*synth_cmd) return RunSynth(synth);
  if (*profile_cmd) return RunProfile(profile);
  if (*fit_cmd) return RunFit(fit);
  if (*bound_cmd) return RunBound(bound);
  return RunExperimentCommand(experiment);
}

}  // namespace
}  // namespace pdp_ridge

int main(int argc, char** argv) { return pdp_ridge::Main(argc, argv); }
