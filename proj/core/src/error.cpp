// Copyright 2026 The gfoart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gfoart/error.hpp"

namespace gfoart {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicatePredicate:
      return "DuplicatePredicate";
    case ErrorCode::kUnknownPredicate:
      return "UnknownPredicate";
    case ErrorCode::kArityMismatch:
      return "ArityMismatch";
    case ErrorCode::kInvalidIdentifier:
      return "InvalidIdentifier";
    case ErrorCode::kInstanceIdConflict:
      return "InstanceIdConflict";
    case ErrorCode::kUnboundVariable:
      return "UnboundVariable";
    case ErrorCode::kNotConstraintShape:
      return "NotConstraintShape";
    case ErrorCode::kUnknownProfile:
      return "UnknownProfile";
    case ErrorCode::kBoundTooLarge:
      return "BoundTooLarge";
    case ErrorCode::kParse:
      return "Parse";
  }
  return "Unknown";
}

}  // namespace gfoart
