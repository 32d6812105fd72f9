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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "pdp_ridge/baselines.h"
#include "pdp_ridge/errors.h"
#include "pdp_ridge/noise.h"
#include "pdp_ridge/rng.h"
#include "tests/oracles.h"
#include "tests/test_util.h"

namespace pdp_ridge {
namespace {

using ::pdp_ridge::testing::MakeDataset;

PrivacyProfile Profile(std::vector<double> eps) {
  return *PrivacyProfile::Create(std::move(eps));
}

Dataset ThreePointsOneDim() {
  return MakeDataset({{0.2}, {0.9}, {0.5}}, {0.1, -0.4, 0.7});
}

TEST(PrivacyProfileTest, RejectsNonPositiveBudgetAndCitesRow) {
  absl::StatusOr<PrivacyProfile> p = PrivacyProfile::Create({1.0, -1.0, 2.0});
  EXPECT_TRUE(IsErrorKind(p.status(), ErrorKind::kInvalidBudget));
  EXPECT_NE(p.status().message().find("1"), absl::string_view::npos);
  EXPECT_TRUE(IsErrorKind(PrivacyProfile::Create({0.0}).status(),
                          ErrorKind::kInvalidBudget));
  EXPECT_TRUE(IsErrorKind(PrivacyProfile::Create({}).status(),
                          ErrorKind::kInvalidBudget));
}

TEST(PrivacyProfileTest, BudgetCapIsOneMillion) {
  EXPECT_TRUE(PrivacyProfile::Create({1e6}).ok());
  EXPECT_TRUE(IsErrorKind(PrivacyProfile::Create({1e6 * (1 + 1e-12)}).status(),
                          ErrorKind::kInvalidBudget));
  EXPECT_FALSE(PrivacyProfile::Create({std::nan("")}).ok());
}

TEST(PrivacyProfileTest, Summaries) {
  PrivacyProfile p = Profile({0.01, 0.2, 1.0});
  EXPECT_DOUBLE_EQ(p.Min(), 0.01);
  EXPECT_DOUBLE_EQ(p.Max(), 1.0);
  EXPECT_NEAR(p.Sum(), 1.21, 1e-15);
  EXPECT_NEAR(p.Mean(), 1.21 / 3, 1e-15);
}

TEST(BLambdaTest, Examples) {
  EXPECT_DOUBLE_EQ(BLambda(1.0, 1), 1.0);
  EXPECT_NEAR(BLambda(100.0, 30), 0.054772255750516612, 1e-15);
  EXPECT_DOUBLE_EQ(BLambda(0.25, 4), 2.0);
}

TEST(CalibrateTest, UnassumedExample) {
  Calibration c = *Calibrate(Profile({1, 1, 2}), 1.0, 1, std::nullopt);
  EXPECT_EQ(c.regime, Regime::kUnassumed);
  EXPECT_DOUBLE_EQ(c.weights[0], 0.25);
  EXPECT_DOUBLE_EQ(c.weights[1], 0.25);
  EXPECT_DOUBLE_EQ(c.weights[2], 0.5);
  EXPECT_DOUBLE_EQ(c.b_lambda, 1.0);
  EXPECT_DOUBLE_EQ(c.epsilon_sum, 4.0);
  EXPECT_NEAR(c.eta, 1.0, 1e-15);
  EXPECT_FALSE(c.warning.has_value());
}

TEST(CalibrateTest, BoundedThetaExample) {
  Calibration c = *Calibrate(Profile({1, 1, 2}), 1.0, 1, 0.5);
  EXPECT_EQ(c.regime, Regime::kBoundedTheta);
  EXPECT_DOUBLE_EQ(c.b_lambda, 0.5);
  EXPECT_NEAR(c.eta, 4.0 / 3.0, 1e-15);
  EXPECT_GT(c.eta, 1.0);
  EXPECT_FALSE(c.warning.has_value());
}

TEST(CalibrateTest, WarnsWhenBoundExceedsBLambda) {
  Calibration c = *Calibrate(Profile({1, 1, 2}), 1.0, 1, 3.0);
  EXPECT_EQ(c.regime, Regime::kBoundedTheta);
  EXPECT_DOUBLE_EQ(c.b_lambda, 3.0);
  EXPECT_TRUE(c.warning.has_value());
  EXPECT_LT(c.eta, 1.0);
}

TEST(CalibrateTest, UniformBudgetsGiveUniformWeights) {
  Calibration c =
      *Calibrate(*PrivacyProfile::Constant(7, 0.3), 2.0, 3, std::nullopt);
  for (int i = 0; i < 7; ++i) EXPECT_NEAR(c.weights[i], 1.0 / 7, 1e-16);
}

TEST(CalibrateTest, RejectsBadLambdaAndBound) {
  EXPECT_FALSE(Calibrate(Profile({1}), 0.0, 1, std::nullopt).ok());
  EXPECT_FALSE(Calibrate(Profile({1}), 1.0, 1, -1.0).ok());
}

TEST(CalibrateTest, EtaMatchesFormulaToRelativePrecision) {
  std::mt19937_64 engine(31);
  std::uniform_real_distribution<double> eps(0.01, 5.0), lam(0.01, 300.0);
  std::uniform_int_distribution<int> dim(1, 40), size(1, 200);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> budgets(size(engine));
    long double sum = 0.0L;
    for (double& e : budgets) sum += (e = eps(engine));
    const double lambda = lam(engine);
    const int d = dim(engine);
    const double b = std::min(1.0 / std::sqrt(lambda), std::sqrt(d) / lambda);
    const double expected = lambda * static_cast<double>(sum) /
                            (2.0 * std::sqrt(d) * (1.0 + std::sqrt(d) * b));
    Calibration c = *Calibrate(Profile(budgets), lambda, d, std::nullopt);
    EXPECT_NEAR(c.eta / expected, 1.0, 1e-12);
    EXPECT_NEAR(c.weights.values().sum(), 1.0, 1e-9);
  }
}

TEST(CalibrateTest, ScaleCovariance) {
  std::mt19937_64 engine(32);
  std::uniform_real_distribution<double> eps(0.01, 1.0);
  for (double scale : {0.5, 3.0, 10.0}) {
    std::vector<double> budgets(25), scaled(25);
    for (int i = 0; i < 25; ++i) {
      budgets[i] = eps(engine);
      scaled[i] = scale * budgets[i];
    }
    Calibration a = *Calibrate(Profile(budgets), 5.0, 4, std::nullopt);
    Calibration b = *Calibrate(Profile(scaled), 5.0, 4, std::nullopt);
    EXPECT_NEAR(b.eta / a.eta, scale, scale * 1e-14);
    for (int i = 0; i < 25; ++i) {
      EXPECT_NEAR(a.weights[i], b.weights[i], 1e-15);
    }
  }
}

TEST(CalibrateTest, RaisingOneBudgetShiftsWeightTowardIt) {
  std::vector<double> budgets = {0.1, 0.4, 0.2, 0.9};
  Calibration before = *Calibrate(Profile(budgets), 1.0, 2, std::nullopt);
  budgets[2] = 0.35;
  Calibration after = *Calibrate(Profile(budgets), 1.0, 2, std::nullopt);
  EXPECT_GT(after.weights[2], before.weights[2]);
  for (int j : {0, 1, 3}) EXPECT_LT(after.weights[j], before.weights[j]);
}

TEST(CalibrateTest, BoundedThetaDominatesWhenBoundIsTighter) {
  std::mt19937_64 engine(33);
  std::uniform_real_distribution<double> lam(0.01, 500.0), frac(0.0, 1.0);
  std::uniform_int_distribution<int> dim(1, 50);
  for (int trial = 0; trial < 1000; ++trial) {
    const double lambda = lam(engine);
    const int d = dim(engine);
    const double b = frac(engine) * BLambda(lambda, d) + 1e-12;
    PrivacyProfile p = Profile({0.3, 0.7, 0.01});
    EXPECT_GE(Calibrate(p, lambda, d, b)->eta,
              Calibrate(p, lambda, d, std::nullopt)->eta);
  }
}

TEST(CalibrateTest, ConstantProfileMatchesNonPersonalizedCalibration) {
  PrivacyProfile constant = *PrivacyProfile::Constant(6, 0.25);
  Calibration direct = *Calibrate(constant, 10.0, 3, std::nullopt);
  Rng a(5), b(5);
  Dataset data = MakeDataset(
      {{0.1, 0.2, 0.3}, {0.4, 0.5, 0.6}, {0.7, 0.8, 0.9}, {0.2, 0.2, 0.2},
       {1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}},
      {0.1, -0.2, 0.3, 0.4, -0.5, 0.6});
  PrivateModel personalized = *Fit(data, constant, 10.0, std::nullopt, a);
  PrivateModel baseline =
      *FitNonPersonalized(data, constant, 10.0, std::nullopt, b);
  EXPECT_EQ(personalized.calibration().eta, direct.eta);
  EXPECT_EQ(baseline.calibration().eta, direct.eta);
  EXPECT_EQ(baseline.calibration().weights.values(), direct.weights.values());
  EXPECT_EQ(personalized.theta_hat(), baseline.theta_hat());
}

TEST(SensitivityBoundTest, Examples) {
  EXPECT_DOUBLE_EQ(SensitivityBound(1.0, 1.0, 1, 1.0), 4.0);
  EXPECT_DOUBLE_EQ(SensitivityBound(0.0, 3.0, 5, 0.2), 0.0);
  EXPECT_DOUBLE_EQ(SensitivityBound(0.5, 2.0, 4, 0.25), 1.5);
}

TEST(SensitivityBoundTest, HoldsOnRandomNeighbours) {
  struct Case {
    int d, n;
    double lambda;
  };
  std::mt19937_64 engine(34);
  std::uniform_real_distribution<double> eps(0.01, 1.0);
  for (const Case& c : {Case{1, 10, 1.0}, Case{5, 50, 10.0},
                        Case{30, 100, 100.0}}) {
    for (int pair = 0; pair < 200; ++pair) {
      const oracles::Matrix x = oracles::RandomFeatures(c.n, c.d, engine);
      const oracles::Vector y = oracles::RandomLabels(c.n, engine);
      std::vector<double> budgets(c.n);
      for (double& e : budgets) e = eps(engine);
      Calibration cal =
          *Calibrate(Profile(budgets), c.lambda, c.d, std::nullopt);
      const Dataset data = MakeDataset(x, y);
      const int i = pair % c.n;
      const Dataset neighbour = *data.WithReplacedPoint(
          i,
          testing::MakeDataset(oracles::RandomFeatures(1, c.d, engine), {0.0})
              .features()
              .row(0)
              .transpose(),
          oracles::RandomLabels(1, engine)[0]);
      RidgeConfig config{c.lambda, c.d, std::nullopt};
      const Eigen::VectorXd a =
          *SolveWeightedRidge(data, cal.weights, config);
      const Eigen::VectorXd b =
          *SolveWeightedRidge(neighbour, cal.weights, config);
      EXPECT_LE((a - b).norm(), SensitivityBound(cal.weights[i], c.lambda,
                                                 c.d, cal.b_lambda) +
                                    1e-9);
    }
  }
}

TEST(FitTest, HugeBudgetsGiveNearlyNonPrivateEstimate) {
  Rng rng(35);
  PrivateModel model =
      *Fit(ThreePointsOneDim(), *PrivacyProfile::Constant(3, 1e6), 1.0,
           std::nullopt, rng);
  EXPECT_LT((model.theta_hat() - model.non_releasable_theta_bar()).norm(),
            1e-3);
}

TEST(FitTest, DeterministicForFixedSeed) {
  Rng a(36), b(36);
  PrivacyProfile p = Profile({1, 1, 2});
  EXPECT_EQ(Fit(ThreePointsOneDim(), p, 1.0, std::nullopt, a)->theta_hat(),
            Fit(ThreePointsOneDim(), p, 1.0, std::nullopt, b)->theta_hat());
}

TEST(FitTest, PerturbationIsExactlyTheDrawnNoise) {
  Rng a(37), b(37);
  PrivateModel model =
      *Fit(ThreePointsOneDim(), Profile({1, 1, 2}), 1.0, std::nullopt, a);
  const Eigen::VectorXd z = SampleNoise(*NoiseParams::Create(1.0, 1), b);
  EXPECT_NEAR((model.theta_hat() - model.non_releasable_theta_bar() - z).norm(),
              0.0, 1e-15);
  EXPECT_EQ(model.non_releasable_theta_bar(),
            *SolveWeightedRidge(ThreePointsOneDim(),
                                model.calibration().weights, {1.0, 1}));
}

TEST(FitTest, MeanNoiseRadiusIsDimensionOverEta) {
  Rng rng(38);
  const int fits = 100000;
  double sum = 0.0;
  PrivacyProfile p = Profile({1, 1, 2});
  for (int k = 0; k < fits; ++k) {
    PrivateModel model = *Fit(ThreePointsOneDim(), p, 1.0, std::nullopt, rng);
    sum += (model.theta_hat() - model.non_releasable_theta_bar()).norm();
  }
  EXPECT_NEAR(sum / fits, 1.0, 0.02);
}

TEST(FitTest, RejectsProfileSizeMismatch) {
  Rng rng(39);
  EXPECT_TRUE(IsErrorKind(
      Fit(ThreePointsOneDim(), Profile({1, 1}), 1.0, std::nullopt, rng)
          .status(),
      ErrorKind::kDimensionMismatch));
}

TEST(ModelRecordTest, RoundTripsAndOmitsTheNonPrivateEstimate) {
  Rng rng(40);
  Dataset data = MakeDataset({{0.1, 0.9}, {0.5, 0.5}}, {0.3, -0.3});
  PrivateModel model = *Fit(data, Profile({0.5, 2.0}), 3.0, 0.2, rng);
  const std::string text = SerializeModelRecord(ToRecord(model, "pdp-op"));
  EXPECT_EQ(text.find("theta_bar"), std::string::npos);
  EXPECT_NE(text.find("regime=bounded-theta"), std::string::npos);
  ModelRecord parsed = *ParseModelRecord(text);
  EXPECT_EQ(parsed.method, "pdp-op");
  EXPECT_EQ(parsed.regime, Regime::kBoundedTheta);
  EXPECT_EQ(parsed.num_points, 2);
  EXPECT_EQ(parsed.lambda, 3.0);
  EXPECT_EQ(parsed.eta, model.calibration().eta);
  EXPECT_EQ(parsed.b_lambda, 0.2);
  EXPECT_EQ(parsed.epsilon_sum, 2.5);
  EXPECT_EQ(parsed.theta_hat, model.theta_hat());
}

TEST(ModelRecordTest, ParseRejectsMissingKeys) {
  EXPECT_FALSE(ParseModelRecord("method=pdp-op\n").ok());
}

}  // namespace
}  // namespace pdp_ridge
