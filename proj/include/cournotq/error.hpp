// Copyright 2026 The cournotq Authors
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

#ifndef COURNOTQ_ERROR_HPP_
#define COURNOTQ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cournotq {

// Numeric values match cq_status in cournotq.h.
enum class ErrorCode {
  kInvalidParams = 1,
  kNegativeQuantity = 2,
  kNonInteriorEquilibrium = 3,
  kNonPositiveMargin = 4,
  kAsymmetricMargins = 5,
  kNegativeStrategy = 6,
  kOutOfRange = 7,
  kNonPositiveTolerance = 8,
  kMultipleRoots = 9,
  kEmptyInterval = 10,
  kNoConvergence = 11,
  kStepOutOfDomain = 12,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cournotq

#endif  // COURNOTQ_ERROR_HPP_
