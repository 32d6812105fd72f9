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

#ifndef PDP_RIDGE_ERRORS_H_
#define PDP_RIDGE_ERRORS_H_

#include <optional>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace pdp_ridge {

// Failure categories surfaced by the library. Each is carried on an
// absl::Status as a payload so callers can branch on the category without
// parsing messages; the status code is chosen to stay meaningful on its own.
enum class ErrorKind {
  kDimensionMismatch,  // kInvalidArgument
  kInvalidData,        // kOutOfRange: feature/label outside the domain
  kInvalidBudget,      // kInvalidArgument
  kNumericalFailure,   // kInternal
  kEmptySubsample,     // kFailedPrecondition
  kFileNotFound,       // kNotFound
  kMalformedCsv,       // kInvalidArgument
  kDegenerateColumn,   // kFailedPrecondition
  kEmptySplit,         // kInvalidArgument
  kPlanInvalid,        // kInvalidArgument
};

absl::string_view ErrorKindName(ErrorKind kind);

absl::Status MakeError(ErrorKind kind, absl::string_view message);

// Returns the category attached by MakeError, or nullopt for statuses that
// did not originate here (including OK).
std::optional<ErrorKind> GetErrorKind(const absl::Status& status);

inline bool IsErrorKind(const absl::Status& status, ErrorKind kind) {
  return GetErrorKind(status) == kind;
}

}  // namespace pdp_ridge

#define PDP_RETURN_IF_ERROR(expr)              \
  do {                                         \
    ::absl::Status pdp_status_ = (expr);       \
    if (!pdp_status_.ok()) return pdp_status_; \
  } while (false)

#define PDP_CONCAT_INNER_(a, b) a##b
#define PDP_CONCAT_(a, b) PDP_CONCAT_INNER_(a, b)

#define PDP_ASSIGN_OR_RETURN(lhs, rexpr) \
  PDP_ASSIGN_OR_RETURN_IMPL_(PDP_CONCAT_(pdp_statusor_, __LINE__), lhs, rexpr)

#define PDP_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                               \
  if (!statusor.ok()) return statusor.status();          \
  lhs = std::move(statusor).value()

#endif  // PDP_RIDGE_ERRORS_H_
