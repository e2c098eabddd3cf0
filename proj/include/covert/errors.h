// Copyright 2026 The Covert Cover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVERT_ERRORS_H_
#define COVERT_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace covert {

enum class ErrorCode {
  kInvalidArgument,
  kOutOfRange,
  // Some element lies in no set of the family.
  kUncoverable,
  // An exact (exponential) routine was asked to exceed its size cap.
  kCapExceeded,
  kDisconnected,
  kRetryExhausted,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. `code()` is stable and is
// what the CLI reports on standard error.
class CoverError : public std::runtime_error {
 public:
  CoverError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown for uncoverable instances; carries one witness element.
class UncoverableError : public CoverError {
 public:
  explicit UncoverableError(int element)
      : CoverError(ErrorCode::kUncoverable,
                   "element " + std::to_string(element) +
                       " is contained in no set"),
        element_(element) {}

  int element() const { return element_; }

 private:
  int element_;
};

}  // namespace covert

#endif  // COVERT_ERRORS_H_
