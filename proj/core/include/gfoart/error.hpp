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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gfoart {

enum class ErrorCode {
  kDuplicatePredicate,
  kUnknownPredicate,
  kArityMismatch,
  kInvalidIdentifier,
  kInstanceIdConflict,
  kUnboundVariable,
  kNotConstraintShape,
  kUnknownProfile,
  kBoundTooLarge,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the engine carries one of the codes above so callers
// (the CLI in particular) can map it onto an exit status without string
// matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gfoart
