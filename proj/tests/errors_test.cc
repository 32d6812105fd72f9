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

#include "pdp_ridge/errors.h"

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "gtest/gtest.h"

namespace pdp_ridge {
namespace {

absl::StatusOr<int> Half(int x) {
  if (x % 2 != 0) return MakeError(ErrorKind::kInvalidData, "odd");
  return x / 2;
}

absl::StatusOr<int> Quarter(int x) {
  PDP_ASSIGN_OR_RETURN(int half, Half(x));
  PDP_ASSIGN_OR_RETURN(int quarter, Half(half));
  return quarter;
}

absl::Status CheckEven(int x) {
  PDP_RETURN_IF_ERROR(Half(x).status());
  return absl::OkStatus();
}

TEST(ErrorsTest, KindSurvivesAsPayload) {
  absl::Status s = MakeError(ErrorKind::kEmptySubsample, "nothing kept");
  EXPECT_EQ(s.code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_EQ(GetErrorKind(s), ErrorKind::kEmptySubsample);
  EXPECT_TRUE(IsErrorKind(s, ErrorKind::kEmptySubsample));
  EXPECT_FALSE(IsErrorKind(s, ErrorKind::kPlanInvalid));
  EXPECT_NE(s.message().find("EmptySubsample"), absl::string_view::npos);
  EXPECT_NE(s.message().find("nothing kept"), absl::string_view::npos);
}

TEST(ErrorsTest, PlainStatusHasNoKind) {
  EXPECT_FALSE(GetErrorKind(absl::InvalidArgumentError("x")).has_value());
  EXPECT_FALSE(GetErrorKind(absl::OkStatus()).has_value());
}

TEST(ErrorsTest, EveryKindHasADistinctName) {
  const ErrorKind kinds[] = {
      ErrorKind::kDimensionMismatch, ErrorKind::kInvalidData,
      ErrorKind::kInvalidBudget,     ErrorKind::kNumericalFailure,
      ErrorKind::kEmptySubsample,    ErrorKind::kFileNotFound,
      ErrorKind::kMalformedCsv,      ErrorKind::kDegenerateColumn,
      ErrorKind::kEmptySplit,        ErrorKind::kPlanInvalid};
  for (ErrorKind a : kinds) {
    EXPECT_EQ(GetErrorKind(MakeError(a, "m")), a);
    for (ErrorKind b : kinds) {
      if (a != b) EXPECT_NE(ErrorKindName(a), ErrorKindName(b));
    }
  }
}

TEST(ErrorsTest, Macros) {
  EXPECT_EQ(*Quarter(8), 2);
  EXPECT_TRUE(IsErrorKind(Quarter(6).status(), ErrorKind::kInvalidData));
  EXPECT_TRUE(CheckEven(4).ok());
  EXPECT_TRUE(IsErrorKind(CheckEven(3), ErrorKind::kInvalidData));
}

}  // namespace
}  // namespace pdp_ridge
