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

// Drives the pdp_ridge_cli binary end to end through the shell.

#include <sys/wait.h>

#include <cstdlib>
#include <string>
#include <vector>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "gtest/gtest.h"
#include "pdp_ridge/data.h"

namespace pdp_ridge {
namespace {

struct Result {
  int exit_code;
  std::string out;
  std::string err;
};

std::string Scratch(absl::string_view name) {
  return absl::StrCat(::testing::TempDir(), "/cli_test_", name);
}

Result RunCli(const std::vector<std::string>& args) {
  static int counter = 0;
  const std::string out = Scratch(absl::StrCat("stdout_", counter));
  const std::string err = Scratch(absl::StrCat("stderr_", counter));
  ++counter;
  const std::string command =
      absl::StrCat("'", PDP_RIDGE_CLI_PATH, "' ", absl::StrJoin(args, " "),
                   " > '", out, "' 2> '", err, "'");
  const int status = std::system(command.c_str());
  return Result{WIFEXITED(status) ? WEXITSTATUS(status) : -1,
                ReadTextFile(out).value_or(""), ReadTextFile(err).value_or("")};
}

std::string Slurp(const std::string& path) {
  return ReadTextFile(path).value_or("<missing>");
}

std::vector<std::string> Lines(absl::string_view text) {
  return absl::StrSplit(text, '\n', absl::SkipEmpty());
}

TEST(CliSynthTest, WritesDatasetAndThetaSidecar) {
  const std::string path = Scratch("synth.csv");
  Result r = RunCli({"synth", "--d", "30", "--n", "100", "--seed", "7", "--out",
                  path});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::vector<std::string> lines = Lines(Slurp(path));
  ASSERT_EQ(lines.size(), 101u);
  std::vector<std::string> header = absl::StrSplit(lines[0], ',');
  EXPECT_EQ(header.size(), 31u);
  EXPECT_EQ(header.front(), "f0");
  EXPECT_EQ(header.back(), "y");
  std::vector<std::string> theta = Lines(Slurp(path + ".theta_star.csv"));
  EXPECT_EQ(theta.size(), 31u);
  EXPECT_EQ(theta[0], "theta_star");
}

TEST(CliSynthTest, SameFlagsSameFiles) {
  const std::string a = Scratch("synth_a.csv"), b = Scratch("synth_b.csv");
  ASSERT_EQ(RunCli({"synth", "--d", "4", "--n", "20", "--sigma", "0.1", "--seed",
                 "3", "--out", a})
                .exit_code,
            0);
  ASSERT_EQ(RunCli({"synth", "--d", "4", "--n", "20", "--sigma", "0.1", "--seed",
                 "3", "--out", b})
                .exit_code,
            0);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(Slurp(a + ".theta_star.csv"), Slurp(b + ".theta_star.csv"));
}

TEST(CliSynthTest, MissingDimensionIsUsageError) {
  Result r = RunCli({"synth", "--n", "100", "--out", Scratch("nod.csv")});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(absl::StrContains(r.err, "--d"));
}

TEST(CliTest, NoSubcommandIsUsageError) {
  EXPECT_EQ(RunCli({}).exit_code, 2);
  EXPECT_EQ(RunCli({"frobnicate"}).exit_code, 2);
}

class CliFitTest : public ::testing::Test {
 protected:
  void SetUp() override {
    data_ = Scratch("fit_data.csv");
    profile_ = Scratch("fit_profile.csv");
    ASSERT_EQ(RunCli({"synth", "--d", "5", "--n", "40", "--seed", "1", "--out",
                   data_})
                  .exit_code,
              0);
    ASSERT_EQ(RunCli({"profile", "--n", "40", "--seed", "2", "--out", profile_})
                  .exit_code,
              0);
  }

  std::string data_;
  std::string profile_;
};

TEST_F(CliFitTest, RecordHasDimensionEntriesAndNoNonPrivateEstimate) {
  Result r = RunCli({"fit", "--data", data_, "--profile", profile_, "--lambda",
                  "10", "--method", "pdp-op", "--seed", "4"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  int theta_entries = 0;
  for (const std::string& line : Lines(r.out)) {
    theta_entries += absl::StartsWith(line, "theta_hat.");
  }
  EXPECT_EQ(theta_entries, 5);
  for (const char* key : {"method=pdp-op", "regime=unassumed", "eta=",
                          "epsilon_sum=", "b_lambda=", "lambda=10"}) {
    EXPECT_TRUE(absl::StrContains(r.out, key)) << key;
  }
  EXPECT_FALSE(absl::StrContains(r.out, "theta_bar"));
  EXPECT_FALSE(absl::StrContains(r.out, "epsilon_0"));
}

TEST_F(CliFitTest, EveryMethodRuns) {
  for (const char* method :
       {"pdp-op", "non-personalized", "jorgensen-max", "jorgensen-mean"}) {
    Result r = RunCli({"fit", "--data", data_, "--profile", profile_, "--lambda",
                    "10", "--method", method});
    EXPECT_EQ(r.exit_code, 0) << method << ": " << r.err;
    EXPECT_TRUE(absl::StrContains(r.out, absl::StrCat("method=", method)));
  }
  EXPECT_EQ(RunCli({"fit", "--data", data_, "--profile", profile_, "--lambda",
                 "10", "--method", "lasso"})
                .exit_code,
            2);
}

TEST_F(CliFitTest, NonPersonalizedMatchesPdpOpOnConstantProfile) {
  const std::string constant = Scratch("constant_profile.csv");
  std::string text = "epsilon\n";
  for (int i = 0; i < 40; ++i) absl::StrAppend(&text, "0.25\n");
  ASSERT_TRUE(WriteTextFile(constant, text).ok());
  auto theta_lines = [&](const char* method) {
    Result r = RunCli({"fit", "--data", data_, "--profile", constant, "--lambda",
                    "5", "--method", method, "--seed", "9"});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    std::vector<std::string> out;
    for (const std::string& line : Lines(r.out)) {
      if (absl::StartsWith(line, "theta_hat.") ||
          absl::StartsWith(line, "eta=")) {
        out.push_back(line);
      }
    }
    return out;
  };
  EXPECT_EQ(theta_lines("pdp-op"), theta_lines("non-personalized"));
}

TEST_F(CliFitTest, NegativeBudgetIsDataErrorCitingRow) {
  const std::string bad = Scratch("bad_profile.csv");
  std::string text = "epsilon\n";
  for (int i = 0; i < 40; ++i) absl::StrAppend(&text, i == 6 ? "-0.5\n" : "1\n");
  ASSERT_TRUE(WriteTextFile(bad, text).ok());
  Result r = RunCli({"fit", "--data", data_, "--profile", bad, "--lambda", "1"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(absl::StrContains(r.err, "row 7")) << r.err;
}

TEST_F(CliFitTest, MalformedDatasetIsDataErrorCitingRowAndColumn) {
  const std::string bad = Scratch("bad_data.csv");
  ASSERT_TRUE(WriteTextFile(bad, "f0,y\n0.5,0.1\n2.5,0.2\n").ok());
  const std::string profile = Scratch("two_profile.csv");
  ASSERT_TRUE(WriteTextFile(profile, "epsilon\n1\n1\n").ok());
  Result r = RunCli({"fit", "--data", bad, "--profile", profile, "--lambda", "1"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(absl::StrContains(r.err, "row 2")) << r.err;
  EXPECT_TRUE(absl::StrContains(r.err, "f0")) << r.err;
}

TEST_F(CliFitTest, MissingFileIsDataError) {
  EXPECT_EQ(RunCli({"fit", "--data", Scratch("nope.csv"), "--profile", profile_,
                 "--lambda", "1"})
                .exit_code,
            1);
}

TEST_F(CliFitTest, LooseThetaBoundWarnsOnStderr) {
  Result r = RunCli({"fit", "--data", data_, "--profile", profile_, "--lambda",
                  "100", "--theta-bound", "5"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(absl::StrContains(r.out, "regime=bounded-theta"));
  EXPECT_TRUE(absl::StrContains(r.err, "warning"));
}

TEST(CliBoundTest, SubstitutionExample) {
  Result r = RunCli({"bound", "--theta-star-norm", "1", "--lambda-min", "0",
                  "--lambda", "1", "--eta", "1", "--d", "1", "--delta", "0.5",
                  "--sigma", "0", "--weight-norm", "1"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out, "total 4\nbias 1\nprivacy 3\nlabel_noise 0\n");
}

TEST(CliBoundTest, SixSignificantDigits) {
  Result r = RunCli({"bound", "--theta-star-norm", "0.5", "--lambda-min", "0.2",
                  "--lambda", "3", "--eta", "7", "--d", "3", "--delta", "0.1",
                  "--sigma", "0.1", "--weight-norm", "0.3"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(absl::StrContains(r.out, "bias 0.46875\n"));
  EXPECT_TRUE(absl::StrContains(r.out, "privacy 1.53514\n"));
}

TEST(CliBoundTest, DeltaOutOfRangeIsUsageError) {
  EXPECT_EQ(RunCli({"bound", "--theta-star-norm", "1", "--lambda-min", "0",
                 "--lambda", "1", "--eta", "1", "--d", "1", "--delta", "1.5"})
                .exit_code,
            2);
}

TEST(CliExperimentTest, ShippedSyntheticPlanHasFifteenLambdaRows) {
  const std::string out = Scratch("shipped.csv");
  Result r = RunCli({"experiment", "--plan",
                  absl::StrCat(PDP_RIDGE_SOURCE_DIR,
                               "/configs/synthetic_lambda_sweep.plan"),
                  "--trials", "1", "--seed", "0", "--out", out});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::vector<std::string> lines = Lines(Slurp(out));
  ASSERT_EQ(lines.size(), 16u);
  std::vector<std::string> lambdas;
  for (size_t i = 1; i < lines.size(); ++i) {
    lambdas.push_back(lines[i].substr(0, lines[i].find(',')));
  }
  EXPECT_EQ(absl::StrJoin(lambdas, " "),
            "1 3 5 7 10 15 20 25 50 75 100 125 150 175 200");
  EXPECT_EQ(std::vector<std::string>(absl::StrSplit(lines[0], ',')).size(),
            1u + 4 * 4 + 2 * 4);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliExperimentTest, RepeatRunsAreByteIdentical) {
  const std::string plan = absl::StrCat(PDP_RIDGE_SOURCE_DIR,
                                        "/configs/synthetic_lambda_sweep.plan");
  const std::string a = Scratch("exp_a.md"), b = Scratch("exp_b.md");
  ASSERT_EQ(RunCli({"experiment", "--plan", plan, "--trials", "1", "--seed", "0",
                 "--format", "markdown", "--out", a})
                .exit_code,
            0);
  ASSERT_EQ(RunCli({"experiment", "--plan", plan, "--trials", "1", "--seed", "0",
                 "--format", "markdown", "--out", b})
                .exit_code,
            0);
  EXPECT_EQ(Slurp(a), Slurp(b));
}

TEST(CliExperimentTest, UnknownMethodIsPlanError) {
  const std::string plan = Scratch("bad.plan");
  ASSERT_TRUE(
      WriteTextFile(plan, "sweep.values = 1\nmethods = pdp-op, lasso\n").ok());
  Result r = RunCli({"experiment", "--plan", plan});
  EXPECT_EQ(r.exit_code, 2);
  for (const char* name :
       {"pdp-op", "non-personalized", "jorgensen-max", "jorgensen-mean"}) {
    EXPECT_TRUE(absl::StrContains(r.err, name)) << r.err;
  }
}

TEST(CliExperimentTest, BadOverrideIsPlanError) {
  const std::string plan = Scratch("ok.plan");
  ASSERT_TRUE(WriteTextFile(plan, "sweep.values = 1\n").ok());
  EXPECT_EQ(RunCli({"experiment", "--plan", plan, "--trials", "0"}).exit_code, 2);
  EXPECT_EQ(RunCli({"experiment", "--plan", plan, "--format", "html"}).exit_code,
            2);
}

TEST(CliProfileTest, WritesEpsilonColumn) {
  Result r = RunCli({"profile", "--n", "10", "--f-c", "0", "--f-m", "0",
                  "--eps-l", "0.7"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::vector<std::string> lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 11u);
  EXPECT_EQ(lines[0], "epsilon");
  for (size_t i = 1; i < lines.size(); ++i) EXPECT_EQ(lines[i], "0.69999999999999996");
  EXPECT_EQ(RunCli({"profile", "--n", "10", "--eps-c", "0.5"}).exit_code, 2);
}

}  // namespace
}  // namespace pdp_ridge
