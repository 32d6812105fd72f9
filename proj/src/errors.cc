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

#include <array>
#include <string>

#include "absl/strings/cord.h"

namespace pdp_ridge {
namespace {

constexpr char kErrorKindUrl[] = "type.pdp_ridge/ErrorKind";

constexpr std::array<ErrorKind, 10> kAllKinds = {
    ErrorKind::kDimensionMismatch, ErrorKind::kInvalidData,
    ErrorKind::kInvalidBudget,     ErrorKind::kNumericalFailure,
    ErrorKind::kEmptySubsample,    ErrorKind::kFileNotFound,
    ErrorKind::kMalformedCsv,      ErrorKind::kDegenerateColumn,
    ErrorKind::kEmptySplit,        ErrorKind::kPlanInvalid,
};

absl::StatusCode CodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidData:
      return absl::StatusCode::kOutOfRange;
    case ErrorKind::kNumericalFailure:
      return absl::StatusCode::kInternal;
    case ErrorKind::kEmptySubsample:
    case ErrorKind::kDegenerateColumn:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorKind::kFileNotFound:
      return absl::StatusCode::kNotFound;
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kInvalidBudget:
    case ErrorKind::kMalformedCsv:
    case ErrorKind::kEmptySplit:
    case ErrorKind::kPlanInvalid:
      return absl::StatusCode::kInvalidArgument;
  }
  return absl::StatusCode::kUnknown;
}

}  // namespace

absl::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorKind::kInvalidData:
      return "InvalidData";
    case ErrorKind::kInvalidBudget:
      return "InvalidBudget";
    case ErrorKind::kNumericalFailure:
      return "NumericalFailure";
    case ErrorKind::kEmptySubsample:
      return "EmptySubsample";
    case ErrorKind::kFileNotFound:
      return "FileNotFound";
    case ErrorKind::kMalformedCsv:
      return "MalformedCsv";
    case ErrorKind::kDegenerateColumn:
      return "DegenerateColumn";
    case ErrorKind::kEmptySplit:
      return "EmptySplit";
    case ErrorKind::kPlanInvalid:
      return "PlanInvalid";
  }
  return "Unknown";
}

absl::Status MakeError(ErrorKind kind, absl::string_view message) {
  absl::Status status(CodeFor(kind),
                      std::string(ErrorKindName(kind)) + ": " +
                          std::string(message));
  status.SetPayload(kErrorKindUrl, absl::Cord(std::string(ErrorKindName(kind))));
  return status;
}

std::optional<ErrorKind> GetErrorKind(const absl::Status& status) {
  auto payload = status.GetPayload(kErrorKindUrl);
  if (!payload.has_value()) return std::nullopt;
  for (ErrorKind kind : kAllKinds) {
    if (std::string(*payload) == ErrorKindName(kind)) return kind;
  }
  return std::nullopt;
}

}  // namespace pdp_ridge
