/*
 * Copyright 2026 The latticelab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef LATTICELAB_ERROR_H_
#define LATTICELAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace latticelab {

enum class ErrorCode {
  kInvalidParams,
  kZeroInverse,
  kZeroElement,
  kParamMismatch,
  kLengthMismatch,
  kNonSquarefree,
  kNoConvergence,
  kNotSquarefree,
  kNTooSmall,
  kPreconditionFailed,
  kOrderTooLarge,
  kRejectionOverflow,
  kChainOverflow,
  kDecryptFail,
  kLevelExceeded,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported as Error; the code identifies the
// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latticelab

#endif  // LATTICELAB_ERROR_H_
